import math

import numpy as np
import pytest

from cheeger import convex, geom, spine, verify
from cheeger.errors import DomainError, EmptyRegion, ReachViolation
from cheeger.geom import Vec2


def test_rasterize_square_cell_count(unit_square):
    mask = verify.rasterize(unit_square, 0.01)
    assert mask.count == pytest.approx(10_000, rel=0.01)
    assert verify.grid_area(mask) == pytest.approx(1.0, rel=0.005)
    assert verify.grid_perimeter(mask) == pytest.approx(4.0, rel=0.02)


def test_rasterize_disk(unit_disk):
    mask = verify.rasterize(unit_disk, 0.005)
    assert verify.grid_area(mask) == pytest.approx(math.pi, rel=0.01)
    assert verify.grid_perimeter(mask) == pytest.approx(2.0 * math.pi, rel=0.02)


def test_rasterize_cell_precondition(unit_square):
    with pytest.raises(DomainError):
        verify.rasterize(unit_square, 0.1)


def test_sliver_produces_empty_mask():
    sliver = geom.polygon_from_points(
        [Vec2(0, 0), Vec2(10, 0), Vec2(10, 1e-5), Vec2(0, 1e-5)])
    mask = verify.rasterize(sliver, 0.05)
    assert mask.count == 0
    with pytest.raises(EmptyRegion):
        verify.grid_area(mask)
    with pytest.raises(EmptyRegion):
        verify.grid_perimeter(mask)


def test_single_cell_mask():
    mask = verify.GridMask(cell=0.1, origin=Vec2(0, 0),
                           bits=np.ones((1, 1), dtype=bool))
    assert verify.grid_area(mask) == pytest.approx(0.01, rel=1e-12)
    assert verify.grid_perimeter(mask) == pytest.approx(0.4, rel=1e-12)


def test_two_component_mask_perimeter():
    bits = np.zeros((9, 4), dtype=bool)
    bits[0:2, 0:2] = True   # 2x2 block: perimeter 8 cells
    bits[5:9, 0:3] = True   # 4x3 block: perimeter 14 cells
    mask = verify.GridMask(cell=1.0, origin=Vec2(0, 0), bits=bits)
    assert verify.grid_perimeter(mask) == pytest.approx(22.0, rel=1e-9)
    assert verify.grid_area(mask) == pytest.approx(16.0)


def test_minkowski_content_matches_perimeter(unit_square, unit_disk):
    for shape in (unit_square, unit_disk, verify.stadium(2.0, 1.0),
                  verify.notched_stadium()):
        est = verify.minkowski_content(shape)
        assert est == pytest.approx(shape.perimeter, rel=1e-6)


def test_minkowski_needs_reach():
    ell = geom.polygon_from_points(
        [Vec2(0, 0), Vec2(3, 0), Vec2(3, 1), Vec2(1, 1), Vec2(1, 3), Vec2(0, 3)])
    with pytest.raises(ReachViolation):
        verify.minkowski_content(ell)


def test_continuity_squares(unit_square_region):
    squares = [convex.convex_from_points(
        [Vec2(0, 0), Vec2(s, 0), Vec2(s, s), Vec2(0, s)])
        for s in (1.0 - 2.0 ** (-j) for j in range(1, 7))]
    rep = verify.continuity_test(unit_square_region, squares)
    assert rep.decreasing
    assert rep.liminf_ok
    assert rep.h_target == pytest.approx(2.0 + math.sqrt(math.pi), abs=1e-9)
    # inner approximations approach from above
    assert all(h >= rep.h_target - 1e-9 for h in rep.h_sequence)


def test_continuity_strips():
    target = spine.build_strip(spine.straight_spine(20.0), 1.0)
    ladder = [spine.build_strip(spine.straight_spine(20.0 * (1 + 2.0 ** (-j))), 1.0)
              for j in range(1, 6)]
    rep = verify.continuity_test(target, ladder)
    assert rep.decreasing


def test_continuity_constant_sequence(unit_square_region):
    rep = verify.continuity_test(unit_square_region,
                                 [unit_square_region, unit_square_region])
    assert max(rep.deviations) == 0.0
    assert rep.decreasing


def test_unknown_suite_rejected():
    with pytest.raises(DomainError):
        verify.run_suite("nonsense")


def test_steiner_suite_passes():
    checks = verify.run_suite("steiner")
    assert checks and all(c.passed for c in checks)


def test_gallery_suite_passes():
    checks = verify.run_suite("gallery")
    assert checks and all(c.passed for c in checks)


def test_continuity_suite_passes():
    checks = verify.run_suite("continuity")
    assert checks and all(c.passed for c in checks)

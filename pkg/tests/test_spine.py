import math

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from cheeger import geom, spine
from cheeger.errors import (BallNotContained, DomainError, InvalidGeometry,
                            NotADiffeomorphism, SelfIntersecting)
from cheeger.geom import Arc, Vec2


def test_straight_strip_is_rectangle():
    st_ = spine.build_strip(spine.straight_spine(10.0), 1.0)
    assert st_.boundary.area == pytest.approx(20.0, abs=1e-12)
    assert st_.boundary.perimeter == pytest.approx(24.0, abs=1e-12)
    assert spine.strip_measures(st_) == (20.0, 24.0)


def test_measures_depend_only_on_length():
    # width-2 strips measure (2L, 2L+4) whatever the spine shape
    L = 4.5 * math.pi
    area, perim = spine.strip_measures(
        spine.build_strip(spine.serpentine_spine(0.5, L), 1.0))
    assert area == pytest.approx(2.0 * L, abs=1e-12)
    assert perim == pytest.approx(2.0 * L + 4.0, abs=1e-12)
    area9, perim9 = spine.strip_measures(
        spine.build_strip(spine.straight_spine(L), 1.0))
    assert area9 == pytest.approx(area, rel=1e-14)
    assert perim9 == pytest.approx(perim, rel=1e-14)


def test_halfwidth_scaling_of_measures():
    st_ = spine.build_strip(spine.straight_spine(10.0), 0.5)
    assert spine.strip_measures(st_) == (10.0, 22.0)
    assert st_.boundary.area == pytest.approx(10.0, abs=1e-12)


def test_circular_spine_annular_sector():
    st_ = spine.build_strip(spine.circular_spine(0.5, math.pi), 1.0)
    assert st_.boundary.area == pytest.approx(2.0 * math.pi, abs=1e-12)
    assert st_.boundary.perimeter == pytest.approx(2.0 * math.pi + 4.0, abs=1e-12)
    radii = sorted(p.radius for p in st_.boundary.pieces if isinstance(p, Arc))
    assert radii == pytest.approx([1.0, 3.0], abs=1e-12)


def test_s_curve_strip():
    st_ = spine.build_strip(spine.s_curve_spine(0.5, 12.0), 1.0)
    assert st_.boundary.area == pytest.approx(24.0, rel=1e-12)
    assert st_.boundary.perimeter == pytest.approx(28.0, rel=1e-12)
    assert st_.validity.injective


def test_jacobian_values():
    st_ = spine.build_strip(spine.circular_spine(0.5, 10.0), 1.0)
    assert spine.jacobian(st_, 1.0, 0.6) == pytest.approx(0.7, abs=1e-15)
    assert spine.jacobian(st_, 3.0, 0.0) == 1.0
    st2 = spine.build_strip(spine.circular_spine(-1.0, 3.0), 0.95)
    assert spine.jacobian(st2, 1.0, 0.9) == pytest.approx(1.9, abs=1e-15)


def test_jacobian_domain_errors():
    st_ = spine.build_strip(spine.straight_spine(5.0), 1.0)
    with pytest.raises(DomainError):
        spine.jacobian(st_, -0.1, 0.0)
    with pytest.raises(DomainError):
        spine.jacobian(st_, 1.0, 1.5)


def test_sub_strip_measure():
    st_ = spine.build_strip(spine.straight_spine(10.0), 1.0)
    assert spine.sub_strip_measure(st_, [(0.0, 10.0)]) == pytest.approx(20.0)
    assert spine.sub_strip_measure(st_, [(2.0, 5.0)]) == pytest.approx(6.0)
    assert spine.sub_strip_measure(st_, []) == 0.0
    # overlapping intervals merge before measuring
    assert spine.sub_strip_measure(st_, [(1.0, 4.0), (3.0, 6.0)]) == \
        pytest.approx(10.0)
    assert spine.sub_strip_measure(st_, [(-5.0, 25.0)]) == pytest.approx(20.0)


def test_fold_over_rejected():
    with pytest.raises(NotADiffeomorphism):
        spine.build_strip(spine.circular_spine(1.0, 3.0), 1.0)


def test_overlapping_annulus_rejected():
    with pytest.raises(SelfIntersecting):
        spine.build_strip(spine.circular_spine(0.5, 20.0), 1.0)


def test_closed_spine_rejected():
    with pytest.raises((InvalidGeometry, SelfIntersecting)):
        spine.build_strip(spine.circular_spine(0.5, 4.0 * math.pi), 1.0)


def test_spine_curvature_limit():
    with pytest.raises(InvalidGeometry):
        spine.SpinePiece(1.0, 1.5)


def test_injectivity_certificate():
    st_ = spine.build_strip(spine.serpentine_spine(0.9, 40.0), 1.0)
    assert st_.validity.injective
    assert st_.validity.min_clearance > 0.0
    assert st_.validity.samples > 9000


def test_locate_roundtrip():
    st_ = spine.build_strip(spine.s_curve_spine(0.4, 10.0), 1.0)
    for t, rho in [(0.5, 0.0), (3.3, 0.7), (7.7, -0.9), (9.9, 0.2)]:
        tt, rr = st_.locate(st_.point(t, rho))
        assert tt == pytest.approx(t, abs=1e-9)
        assert rr == pytest.approx(rho, abs=1e-9)


# ---------------------------------------------------------------------------
# ball-to-ball paths


def test_straight_path_is_single_segment():
    st_ = spine.build_strip(spine.straight_spine(10.0), 1.0)
    path = spine.ball_to_ball_path(st_, 0.5, Vec2(1, 0), Vec2(9, 0))
    assert len(path) == 1 and path[0].kind == "segment"
    for q in spine.path_points(path, 1000):
        assert geom.distance_to_boundary(st_.boundary, q) >= 0.5 - 1e-9


def test_curved_path_three_pieces():
    st_ = spine.build_strip(spine.circular_spine(0.4, 8.0), 1.0)
    x0 = st_.point(2.0, 0.2)
    x1 = st_.point(6.0, -0.3)
    path = spine.ball_to_ball_path(st_, 0.6, x0, x1)
    assert len(path) == 3
    assert path[0].point_at(0.0).distance(x0) <= 1e-9
    assert path[-1].point_at(1.0).distance(x1) <= 1e-9
    for q in spine.path_points(path, 1000):
        assert geom.distance_to_boundary(st_.boundary, q) >= 0.6 - 1e-9
    assert spine.path_max_curvature(path) <= 1.0 / 0.6 + 1e-9


def test_identity_path_empty():
    st_ = spine.build_strip(spine.circular_spine(0.4, 8.0), 1.0)
    x = st_.point(3.0, 0.1)
    assert spine.ball_to_ball_path(st_, 0.6, x, x) == []


def test_ball_not_contained():
    st_ = spine.build_strip(spine.straight_spine(10.0), 1.0)
    with pytest.raises(BallNotContained):
        spine.ball_to_ball_path(st_, 0.5, Vec2(0.1, 0.8), Vec2(9, 0))


# ---------------------------------------------------------------------------
# property tests

piece_lists = st.lists(
    st.tuples(st.floats(min_value=0.8, max_value=4.0),
              st.floats(min_value=-0.55, max_value=0.55)),
    min_size=1, max_size=5)


def _try_strip(pieces):
    try:
        sp = spine.Spine(tuple(spine.SpinePiece(ell, k) for ell, k in pieces))
        return spine.build_strip(sp, 1.0)
    except (InvalidGeometry, SelfIntersecting, NotADiffeomorphism):
        return None


@given(piece_lists)
@settings(max_examples=30, deadline=None)
def test_random_spine_measures_shape_independent(pieces):
    st_ = _try_strip(pieces)
    assume(st_ is not None)
    L = st_.length
    assert abs(st_.boundary.area - 2.0 * L) <= 1e-9 * 2.0 * L
    assert abs(st_.boundary.perimeter - (2.0 * L + 4.0)) <= \
        1e-9 * (2.0 * L + 4.0)


@given(piece_lists, st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=-0.9, max_value=0.9),
       st.floats(min_value=-0.9, max_value=0.9))
@settings(max_examples=25, deadline=None,
          suppress_health_check=[HealthCheck.filter_too_much,
                                 HealthCheck.too_slow])
def test_random_ball_paths_keep_clearance(pieces, u0, u1, v0, v1):
    st_ = _try_strip(pieces)
    assume(st_ is not None and st_.length > 2.5)
    r = 0.45
    lo, hi = r + 0.2, st_.length - r - 0.2
    x0 = st_.point(lo + u0 * (hi - lo), v0 * (1.0 - r))
    x1 = st_.point(lo + u1 * (hi - lo), v1 * (1.0 - r))
    assume(geom.distance_to_boundary(st_.boundary, x0) >= r)
    assume(geom.distance_to_boundary(st_.boundary, x1) >= r)
    path = spine.ball_to_ball_path(st_, r, x0, x1)
    for q in spine.path_points(path, 400):
        assert geom.distance_to_boundary(st_.boundary, q) >= r - 1e-9
    assert spine.path_max_curvature(path) <= 1.0 / r + 1e-9


@given(piece_lists)
@settings(max_examples=20, deadline=None)
def test_random_strip_jacobian_positive(pieces):
    st_ = _try_strip(pieces)
    assume(st_ is not None)
    L = st_.length
    samples = [L * k / 23.0 for k in range(23)] + [L]
    worst = min(spine.jacobian(st_, t, rho)
                for t in samples
                for rho in (-1.0, -0.5, 0.0, 0.5, 1.0))
    assert worst > 0.0

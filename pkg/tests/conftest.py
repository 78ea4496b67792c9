import math

import pytest

from cheeger import convex, geom, solver, spine
from cheeger.geom import Vec2


@pytest.fixture(scope="session")
def unit_square():
    return geom.polygon_from_points(
        [Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)])


@pytest.fixture(scope="session")
def unit_disk():
    return geom.disk(Vec2(0, 0), 1.0)


@pytest.fixture(scope="session")
def equilateral_triangle():
    return geom.polygon_from_points(
        [Vec2(0, 0), Vec2(1, 0), Vec2(0.5, 0.5 * math.sqrt(3.0))])


@pytest.fixture(scope="session")
def filleted_square(unit_square):
    return geom.round_corners(unit_square, 0.25)


@pytest.fixture(scope="session")
def straight_strip_9pi2():
    return spine.build_strip(spine.straight_spine(4.5 * math.pi), 1.0)


@pytest.fixture(scope="session")
def straight_solution_9pi2(straight_strip_9pi2):
    return solver.solve_strip(straight_strip_9pi2)


def straight_strip_root(L: float) -> float:
    """Depth solving 2(1-r)(L-2r) = pi r^2 for the L x 2 rectangle strip,
    written as the quadratic (4-pi) r^2 - (2L+4) r + 2L = 0."""
    a = 4.0 - math.pi
    b = -(2.0 * L + 4.0)
    c = 2.0 * L
    return (-b - math.sqrt(b * b - 4.0 * a * c)) / (2.0 * a)


@pytest.fixture(scope="session")
def unit_square_region():
    return convex.convex_from_points(
        [Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)])

"""Cheeger constants and Cheeger sets of convex plane regions and curved strips.

The exact arc-polygon kernel lives in `geom`, strips and their spinal curves
in `spine`, the inner-Cheeger-formula solvers in `solver` (strips) and
`convex` (convex regions), the worked example families in `gallery`, the
independent raster/extrapolation oracles and check suites in `verify`, and
the command-line front end in `cli`.
"""

__version__ = "0.1.0"

from .errors import (BallNotContained, CheegerError, DegenerateInnerSet,
                     DomainError, EmptyInnerSet, EmptyRegion, InvalidGeometry,
                     NoRoot, NotADiffeomorphism, PropertyViolation,
                     ReachViolation, SelfIntersecting)
from .geom import (Arc, ArcPolygon, Point2, Segment, Vec2, area,
                   distance_to_boundary, disk, offset_outward_disk, perimeter,
                   polygon_from_points, reach_lower_bound, round_corners)
from .spine import (Spine, SpinePiece, Strip, ball_to_ball_path, build_strip,
                    circular_spine, jacobian, s_curve_spine, serpentine_spine,
                    straight_spine, strip_measures, sub_strip_measure)
from .solver import (CheegerSolution, StripBounds, check_free_boundary,
                     inner_area, inner_set, ratio_scan_oracle, solve_strip)
from .convex import (ConvexRegion, convex_disk, convex_from_points, inradius,
                     inner_parallel_body, solve_convex)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Cheeger constant and Cheeger set of a strip via the inner Cheeger formula.

The inner set at depth r is the part of the strip at distance at least r
from the boundary.  Its area is strictly decreasing in r while pi*r^2 is
increasing, so the inner Cheeger formula  area(E_r) = pi*r^2  has a unique
root; the Cheeger set is the outward offset E_r + B_r and h = 1/r.  An
independent grid scan of the Cheeger ratio over the same one-parameter
family serves as a cross-check oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from . import geom
from .errors import (DegenerateInnerSet, DomainError, EmptyInnerSet, NoRoot,
                     PropertyViolation)
from .geom import Arc, ArcPolygon, Segment, Vec2
from .reporting import Check
from .spine import Strip, chain_pieces, level_chain

DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 200
MIN_CERTIFIED_LENGTH = 4.5 * math.pi  # normalized spine length, 9*pi/2


@dataclass(frozen=True)
class StripBounds:
    krepra_lower: float
    krepra_upper: float
    asymptotic: float


@dataclass(frozen=True)
class CheegerSolution:
    r: float
    h: float
    inner_set: ArcPolygon
    cheeger_set: ArcPolygon
    residual: float
    iterations: int
    bounds: Optional[StripBounds] = None
    warnings: Tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# inner sets of strips


def _chain_line_crossings(chain, anchor: Vec2, normal: Vec2, offset: float
                          ) -> List[float]:
    """Spine parameters where a level chain crosses {(x-anchor).normal = offset}."""
    ts: List[float] = []
    target = anchor + offset * normal
    for piece, t0, t1 in chain:
        if isinstance(piece, Segment):
            f0 = (piece.start - anchor).dot(normal) - offset
            f1 = (piece.end - anchor).dot(normal) - offset
            if f0 == f1:
                continue
            u = f0 / (f0 - f1)
            if -1e-9 <= u <= 1.0 + 1e-9:
                ts.append(t0 + min(max(u, 0.0), 1.0) * (t1 - t0))
        else:
            for lam in geom._line_circle(target, normal.perp(),
                                         piece.center, piece.radius):
                pt = target + normal.perp() * lam
                phi = (pt - piece.center).angle()
                off = piece.angle_offset(phi)
                if off <= piece.sweep + 1e-9:
                    u = min(off / piece.sweep, 1.0)
                    ts.append(t0 + u * (t1 - t0))
                elif off >= geom.TAU - 1e-9:
                    ts.append(t0)
    return ts


def inner_set(st: Strip, r: float) -> ArcPolygon:
    """Region of the strip at distance >= r from its boundary.

    Bounded by the two parallel curves at levels +-(s-r) and two trim
    segments parallel to the end segments at depth r.
    """
    s = st.halfwidth
    if r >= s:
        raise EmptyInnerSet(f"depth {r} is not below the halfwidth {s}")
    if r <= 0.0:
        raise DomainError("depth must be positive")
    spine = st.spine
    L = spine.length
    lo_chain = level_chain(spine, -(s - r))
    hi_chain = level_chain(spine, s - r)
    u_left = spine.direction(0.0)
    a_left = spine.point(0.0)
    u_right = -spine.direction(L)
    a_right = spine.point(L)

    def first_cross(chain) -> float:
        ts = _chain_line_crossings(chain, a_left, u_left, r)
        if not ts:
            raise DegenerateInnerSet("no left trim crossing at this depth")
        return min(ts)

    def last_cross(chain) -> float:
        ts = _chain_line_crossings(chain, a_right, u_right, r)
        if not ts:
            raise DegenerateInnerSet("no right trim crossing at this depth")
        return max(ts)

    tl_lo, tr_lo = first_cross(lo_chain), last_cross(lo_chain)
    tl_hi, tr_hi = first_cross(hi_chain), last_cross(hi_chain)
    if tl_lo >= tr_lo or tl_hi >= tr_hi:
        raise DegenerateInnerSet(
            f"end trims cross at depth {r} (strip too short)")
    bottom = chain_pieces(lo_chain, tl_lo, tr_lo)
    top = chain_pieces(hi_chain, tl_hi, tr_hi, reverse=True)
    p_br = bottom[-1].end
    p_tr = top[0].start
    p_tl = top[-1].end
    p_bl = bottom[0].start
    min_len = 1e-12 * max(L, 1.0)
    if p_br.distance(p_tr) <= min_len or p_tl.distance(p_bl) <= min_len:
        raise DegenerateInnerSet(f"trim segment degenerates at depth {r}")
    return ArcPolygon(bottom + [Segment(p_br, p_tr)] + top
                      + [Segment(p_tl, p_bl)])


def inner_area(st: Strip, r: float) -> float:
    """Area of the inner set; strictly decreasing in r."""
    return inner_set(st, r).area


# ---------------------------------------------------------------------------
# root solve


def _bisect_inner_root(measure: Callable[[float], Optional[float]],
                       lo: float, hi: float, tol: float
                       ) -> Tuple[float, int]:
    """Root of measure(r) - pi*r^2 with infeasible depths counted negative."""

    def f(r: float) -> float:
        a = measure(r)
        if a is None:
            return -math.inf
        return a - math.pi * r * r

    f_lo = f(lo)
    f_hi = f(hi)
    if not (f_lo > 0.0 and f_hi < 0.0):
        raise NoRoot(
            f"no sign change on ({lo}, {hi}): f={f_lo:.3e}, {f_hi:.3e}")
    iterations = 0
    mid = 0.5 * (lo + hi)
    while iterations < MAX_ITERATIONS:
        mid = 0.5 * (lo + hi)
        val = f(mid)
        iterations += 1
        if val > 0.0:
            lo = mid
        else:
            hi = mid
        small = hi - lo <= 1e-13 * max(hi, 1.0)
        converged = math.isfinite(val) and abs(val) <= tol * math.pi * mid * mid
        if converged and hi - lo <= 1e-12 * max(hi, 1.0):
            break
        if small:
            break
    return mid, iterations


def solve_strip(st: Strip, allow_short: bool = False,
                tol: float = DEFAULT_TOL) -> CheegerSolution:
    """Cheeger constant, inner set and Cheeger set of a strip.

    The certified regime needs normalized length L/s >= 9*pi/2; shorter
    strips are solved only with `allow_short` and the solution carries an
    'uncertified' warning.
    """
    s = st.halfwidth
    L_norm = st.length / s
    warnings: List[str] = []
    if L_norm < MIN_CERTIFIED_LENGTH * (1.0 - 1e-12):
        if not allow_short:
            raise DomainError(
                f"normalized strip length {L_norm:.4f} is below 9*pi/2; "
                "pass allow_short=True to solve anyway")
        warnings.append(
            "uncertified: normalized length below 9*pi/2, the four-arc "
            "structure and uniqueness are not guaranteed")

    def measure(r: float) -> Optional[float]:
        try:
            return inner_area(st, r)
        except (DegenerateInnerSet, EmptyInnerSet):
            return None

    r, iterations = _bisect_inner_root(measure, 1e-9 * s, s * (1.0 - 1e-9), tol)
    e_r = inner_set(st, r)
    residual = abs(e_r.area - math.pi * r * r)
    cheeger = geom.offset_outward_disk(e_r, r)
    bounds = StripBounds(krepra_lower=(1.0 + 1.0 / (400.0 * L_norm)) / s,
                         krepra_upper=(1.0 + 2.0 / L_norm) / s,
                         asymptotic=(1.0 + math.pi / (2.0 * L_norm)) / s)
    return CheegerSolution(r=r, h=1.0 / r, inner_set=e_r, cheeger_set=cheeger,
                           residual=residual, iterations=iterations,
                           bounds=bounds, warnings=tuple(warnings))


# ---------------------------------------------------------------------------
# independent ratio-scan oracle


def _strip_inner_measures(st: Strip, r: float) -> Optional[Tuple[float, float]]:
    try:
        e = inner_set(st, r)
    except (DegenerateInnerSet, EmptyInnerSet):
        return None
    return e.area, e.perimeter


def ratio_scan_oracle(domain, grid: int = 100) -> Tuple[float, float]:
    """Minimize the Cheeger ratio of the inner-offset family on an r grid.

    The family member at depth r is E_r + B_r; its measures come from the
    Steiner identities applied to the inner set, so this path never touches
    the root solver.  The grid is refined twice around the minimum.
    Accepts a Strip or a ConvexRegion.
    """
    if grid < 100:
        raise DomainError("grid must have at least 100 points")
    from .convex import ConvexRegion, inner_parallel_body

    if isinstance(domain, Strip):
        hi = domain.halfwidth * (1.0 - 1e-9)

        def measures(r: float) -> Optional[Tuple[float, float]]:
            return _strip_inner_measures(domain, r)
    elif isinstance(domain, ConvexRegion):
        hi = math.sqrt(domain.region.area / math.pi)

        def measures(r: float) -> Optional[Tuple[float, float]]:
            try:
                e = inner_parallel_body(domain, r)
            except EmptyInnerSet:
                return None
            return e.region.area, e.region.perimeter
    else:
        raise DomainError(f"cannot scan a {type(domain).__name__}")

    def q(r: float) -> float:
        m = measures(r)
        if m is None:
            return math.inf
        a, p = m
        return (p + 2.0 * math.pi * r) / (a + r * p + math.pi * r * r)

    lo = hi * 1e-6
    best_r, best_q = hi, math.inf
    for _ in range(3):
        step = (hi - lo) / grid
        values = [(q(lo + i * step), lo + i * step) for i in range(1, grid)]
        best_q, best_r = min(values)
        lo = max(best_r - step, lo)
        hi = min(best_r + step, hi)
    return best_r, best_q


# ---------------------------------------------------------------------------
# structural checks on the solved Cheeger set


@dataclass(frozen=True)
class FreeArc:
    arc: Arc
    corner: Vec2


@dataclass(frozen=True)
class FreeBoundaryReport:
    arcs: Tuple[FreeArc, ...]
    checks: Tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _inner_corner_vertices(e_r: ArcPolygon) -> List[Vec2]:
    turns = geom.junction_turns(e_r)
    n = len(e_r.pieces)
    return [e_r.pieces[(i + 1) % n].start
            for i in range(n) if abs(turns[i]) > 1e-6]


def check_free_boundary(sol: CheegerSolution, st: Strip,
                        ball_samples: int = 64) -> FreeBoundaryReport:
    """Verify the free-boundary structure of a solved strip.

    The free arcs are the corner arcs created by offsetting the inner set:
    radius r, sweep at most a half circle, osculating ball inside the strip,
    tangential contact with the strip boundary, exactly one per corner.
    Raises PropertyViolation on the first failing arc.
    """
    r = sol.r
    scale = max(st.boundary.diameter, 1.0)
    corners = _inner_corner_vertices(sol.inner_set)
    free: List[FreeArc] = []
    for piece in sol.cheeger_set.pieces:
        if not isinstance(piece, Arc):
            continue
        for c in corners:
            if piece.center.distance(c) <= 1e-9 * scale:
                free.append(FreeArc(arc=piece, corner=c))
                break
    checks: List[Check] = []

    def record(name: str, passed: bool, detail: str, arc: Optional[FreeArc]) -> None:
        checks.append(Check(name, passed, detail))
        if not passed:
            where = "" if arc is None else (
                f" at corner ({arc.corner.x:.6g}, {arc.corner.y:.6g})")
            raise PropertyViolation(f"{name}{where}: {detail}")

    record("free_arc_count", len(free) == 4,
           f"found {len(free)} free arcs, expected 4 (one per strip corner)",
           None)
    for fa in free:
        a = fa.arc
        record("free_arc_radius", abs(a.radius - r) <= 1e-9 * max(1.0, r),
               f"radius {a.radius!r} vs r {r!r}", fa)
        record("free_arc_sweep", a.sweep <= math.pi + 1e-9,
               f"sweep {a.sweep} exceeds pi", fa)
        center_depth = geom.distance_to_boundary(st.boundary, a.center)
        ball_ok = center_depth >= r - 1e-9
        if ball_ok:
            for k in range(ball_samples):
                phi = geom.TAU * k / ball_samples
                pt = a.center + r * geom.unit_from_angle(phi)
                if geom.distance_to_boundary(st.boundary, pt) < -1e-9:
                    ball_ok = False
                    break
        record("free_arc_ball_inside", ball_ok,
               f"osculating ball of radius {r} leaves the strip", fa)
        idx = sol.cheeger_set.pieces.index(a)
        n = len(sol.cheeger_set.pieces)
        prev = sol.cheeger_set.pieces[idx - 1]
        nxt = sol.cheeger_set.pieces[(idx + 1) % n]
        d_in = _tangent_gap(prev.tangent_at_end(), a.tangent_at_start())
        d_out = _tangent_gap(a.tangent_at_end(), nxt.tangent_at_start())
        record("free_arc_tangency", max(d_in, d_out) <= 1e-9,
               f"tangent jump {max(d_in, d_out):.3e} rad at contact", fa)
    return FreeBoundaryReport(arcs=tuple(free), checks=tuple(checks))


def _tangent_gap(u: Vec2, v: Vec2) -> float:
    return abs(math.atan2(u.cross(v), u.dot(v)))

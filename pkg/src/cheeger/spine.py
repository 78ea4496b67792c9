"""Spinal curves and the curved strips they generate.

A spine is an arc-length parametrized curve of piecewise-constant signed
curvature, so it is C^{1,1} and all of its parallel curves are again exact
chains of segments and circular arcs.  A strip is the union of the open
transversal segments of half-width s centered on the spine; its boundary is
assembled from the two parallel curves at levels +s and -s plus the two end
segments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import geom
from .errors import (BallNotContained, DomainError, InvalidGeometry,
                     NotADiffeomorphism, SelfIntersecting)
from .geom import Arc, ArcPolygon, BoundaryPiece, Segment, Vec2, unit_from_angle

INJECTIVITY_SAMPLES = 10_000
PATH_CLEARANCE_SAMPLES = 1000


@dataclass(frozen=True)
class SpinePiece:
    length: float
    curvature: float

    def __post_init__(self) -> None:
        if not (self.length > 0.0 and math.isfinite(self.length)):
            raise InvalidGeometry(f"piece length must be positive, got {self.length}")
        if abs(self.curvature) > 1.0 + 1e-12:
            raise InvalidGeometry(
                f"|curvature| must not exceed 1, got {self.curvature}")


@dataclass(frozen=True)
class Spine:
    """Arc-length parametrized piecewise-circular curve."""

    pieces: Tuple[SpinePiece, ...]
    start_point: Vec2 = Vec2(0.0, 0.0)
    start_direction: Vec2 = Vec2(1.0, 0.0)
    _states: tuple = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self) -> None:
        if not self.pieces:
            raise InvalidGeometry("spine needs at least one piece")
        d = self.start_direction
        if abs(d.norm() - 1.0) > 1e-9:
            object.__setattr__(self, "start_direction", d.unit())
        # cumulative (t, point, direction angle) at the start of each piece
        states = []
        t = 0.0
        p = self.start_point
        theta = self.start_direction.angle()
        for piece in self.pieces:
            states.append((t, p, theta))
            p, theta = _advance(p, theta, piece.curvature, piece.length)
            t += piece.length
        states.append((t, p, theta))
        object.__setattr__(self, "_states", tuple(states))
        if self.point(0.0).distance(self.point(self.length)) \
                <= 1e-9 * max(self.length, 1.0):
            raise InvalidGeometry("closed spines (annuli) are not supported")

    @property
    def length(self) -> float:
        return self._states[-1][0]

    @property
    def max_curvature(self) -> float:
        return max(abs(p.curvature) for p in self.pieces)

    def _locate(self, t: float) -> Tuple[int, float]:
        if t < -1e-12 or t > self.length * (1.0 + 1e-12):
            raise DomainError(f"arclength {t} outside [0, {self.length}]")
        t = min(max(t, 0.0), self.length)
        lo, hi = 0, len(self.pieces) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._states[mid][0] <= t:
                lo = mid
            else:
                hi = mid - 1
        return lo, t - self._states[lo][0]

    def curvature_at(self, t: float) -> float:
        i, _ = self._locate(t)
        return self.pieces[i].curvature

    def point(self, t: float) -> Vec2:
        i, dt = self._locate(t)
        _, p, theta = self._states[i]
        q, _ = _advance(p, theta, self.pieces[i].curvature, dt)
        return q

    def direction_angle(self, t: float) -> float:
        i, dt = self._locate(t)
        return self._states[i][2] + self.pieces[i].curvature * dt

    def direction(self, t: float) -> Vec2:
        return unit_from_angle(self.direction_angle(t))

    def normal(self, t: float) -> Vec2:
        """Left normal: the direction rotated by +90 degrees."""
        return self.direction(t).perp()

    def scaled(self, k: float) -> "Spine":
        return Spine(tuple(SpinePiece(p.length * k, p.curvature / k)
                           for p in self.pieces),
                     self.start_point * k, self.start_direction)


def _advance(p: Vec2, theta: float, kappa: float, ds: float) -> Tuple[Vec2, float]:
    if ds == 0.0:
        return p, theta
    if kappa == 0.0:
        return p + ds * unit_from_angle(theta), theta
    r = 1.0 / kappa
    center = p + r * unit_from_angle(theta).perp()
    theta2 = theta + kappa * ds
    q = center - r * unit_from_angle(theta2).perp()
    return q, theta2


def _sample_points(spine: "Spine", ts: np.ndarray, rhos: np.ndarray):
    """Vectorized evaluation of gamma(t) + rho*normal(t)."""
    t0s = np.array([s[0] for s in spine._states])
    px = np.array([s[1].x for s in spine._states[:-1]])
    py = np.array([s[1].y for s in spine._states[:-1]])
    th0 = np.array([s[2] for s in spine._states[:-1]])
    kap = np.array([p.curvature for p in spine.pieces])
    idx = np.clip(np.searchsorted(t0s[1:-1], ts, side="right"), 0,
                  len(spine.pieces) - 1)
    dt = ts - t0s[idx]
    k = kap[idx]
    th = th0[idx] + k * dt
    straight = k == 0.0
    x = np.empty_like(ts)
    y = np.empty_like(ts)
    x[straight] = px[idx][straight] + dt[straight] * np.cos(th0[idx][straight])
    y[straight] = py[idx][straight] + dt[straight] * np.sin(th0[idx][straight])
    curved = ~straight
    kc = k[curved]
    cx = px[idx][curved] - np.sin(th0[idx][curved]) / kc
    cy = py[idx][curved] + np.cos(th0[idx][curved]) / kc
    x[curved] = cx + np.sin(th[curved]) / kc
    y[curved] = cy - np.cos(th[curved]) / kc
    return x - rhos * np.sin(th), y + rhos * np.cos(th)


# spine builders ------------------------------------------------------------


def straight_spine(length: float, start: Vec2 = Vec2(0.0, 0.0),
                   direction: Vec2 = Vec2(1.0, 0.0)) -> Spine:
    return Spine((SpinePiece(length, 0.0),), start, direction)


def circular_spine(curvature: float, length: float) -> Spine:
    return Spine((SpinePiece(length, curvature),))


def s_curve_spine(curvature: float, length: float) -> Spine:
    return Spine((SpinePiece(0.5 * length, curvature),
                  SpinePiece(0.5 * length, -curvature)))


def serpentine_spine(curvature: float, length: float,
                     piece_turn: float = 0.7) -> Spine:
    """Wiggly spine of alternating signed curvature with pieces turning by
    about `piece_turn` radians each.  The piece count is even and divides
    the length exactly, so strips of different lengths end in congruent
    wiggle phases; the direction oscillates inside a fixed cone, keeping
    the spine valid at any length."""
    if curvature <= 0.0:
        raise InvalidGeometry("serpentine curvature must be positive")
    n = max(2, 2 * round(length * curvature / (2.0 * piece_turn)))
    ell = length / n
    pieces = [SpinePiece(ell, curvature if i % 2 == 0 else -curvature)
              for i in range(n)]
    return Spine(tuple(pieces))


# strips ---------------------------------------------------------------------


@dataclass(frozen=True)
class StripCertificate:
    injective: bool
    min_clearance: float
    samples: int


@dataclass(frozen=True)
class Strip:
    spine: Spine
    halfwidth: float
    boundary: ArcPolygon
    validity: StripCertificate

    @property
    def length(self) -> float:
        return self.spine.length

    def point(self, t: float, rho: float) -> Vec2:
        return self.spine.point(t) + rho * self.spine.normal(t)

    def locate(self, x: Vec2) -> Tuple[float, float]:
        """Invert the strip parametrization: x = gamma(t) + rho*normal(t)."""
        best: Optional[Tuple[float, float]] = None
        spine = self.spine
        for i, piece in enumerate(spine.pieces):
            t0, p0, theta0 = spine._states[i]
            if piece.curvature == 0.0:
                d = unit_from_angle(theta0)
                u = (x - p0).dot(d)
                if -1e-9 <= u <= piece.length + 1e-9:
                    t = t0 + min(max(u, 0.0), piece.length)
                    rho = (x - spine.point(t)).dot(spine.normal(t))
                    if abs(rho) <= self.halfwidth * (1.0 + 1e-9):
                        if best is None or abs(rho) < abs(best[1]):
                            best = (t, rho)
            else:
                k = piece.curvature
                center = p0 + (1.0 / k) * unit_from_angle(theta0).perp()
                v = x - center
                if v.norm() < 1e-300:
                    continue
                # angle of the radial vector advances at rate k along the piece
                a_start = (p0 - center).angle()
                off = ((v.angle() - a_start) % geom.TAU) * (1.0 if k > 0 else -1.0)
                if k < 0:
                    off = off % geom.TAU
                dt = off / abs(k)
                for cand in (dt, dt - geom.TAU / abs(k)):
                    if -1e-9 <= cand <= piece.length + 1e-9:
                        t = t0 + min(max(cand, 0.0), piece.length)
                        rho = (x - spine.point(t)).dot(spine.normal(t))
                        if abs(rho) <= self.halfwidth * (1.0 + 1e-9):
                            if best is None or abs(rho) < abs(best[1]):
                                best = (t, rho)
        if best is None:
            raise DomainError(f"point ({x.x}, {x.y}) is not inside the strip")
        return best

    def scaled(self, k: float) -> "Strip":
        return build_strip(self.spine.scaled(k), self.halfwidth * k)


def level_chain(spine: Spine, level: float) -> List[Tuple[BoundaryPiece, float, float]]:
    """Parallel curve at signed offset `level`, as (piece, t0, t1) entries.

    Traversal follows increasing spine parameter; each entry covers the
    spine interval [t0, t1].
    """
    out: List[Tuple[BoundaryPiece, float, float]] = []
    for i, piece in enumerate(spine.pieces):
        t0, p0, theta0 = spine._states[i]
        t1 = t0 + piece.length
        start = p0 + level * unit_from_angle(theta0).perp()
        if piece.curvature == 0.0:
            end = start + piece.length * unit_from_angle(theta0)
            out.append((Segment(start, end), t0, t1))
        else:
            k = piece.curvature
            if abs(k) * piece.length >= geom.TAU:
                raise SelfIntersecting(
                    f"spine piece {i} turns by {abs(k) * piece.length:.3f} rad "
                    ">= 2*pi; the strip overlaps itself")
            center = p0 + (1.0 / k) * unit_from_angle(theta0).perp()
            radius = abs(1.0 / k - level)
            if radius <= 1e-12:
                raise NotADiffeomorphism(
                    f"parallel curve at level {level} collapses on piece {i}")
            a0 = (start - center).angle()
            out.append((Arc.from_angles(center, radius, a0, k * piece.length),
                        t0, t1))
    return out


def chain_pieces(chain: Sequence[Tuple[BoundaryPiece, float, float]],
                 t_from: float, t_to: float,
                 reverse: bool = False) -> List[BoundaryPiece]:
    """Extract the sub-chain covering [t_from, t_to], optionally reversed."""
    if not t_from < t_to:
        raise DomainError("empty parameter range")
    pieces: List[BoundaryPiece] = []
    for piece, t0, t1 in chain:
        lo = max(t0, t_from)
        hi = min(t1, t_to)
        if hi - lo <= 1e-12 * (t1 - t0):
            continue
        u0 = (lo - t0) / (t1 - t0)
        u1 = (hi - t0) / (t1 - t0)
        sub = piece.subpiece(max(u0, 0.0), min(u1, 1.0))
        pieces.append(sub)
    if reverse:
        pieces = [q.reversed() for q in reversed(pieces)]
    return pieces


def build_strip(spine: Spine, halfwidth: float,
                injectivity_samples: int = INJECTIVITY_SAMPLES) -> Strip:
    """Assemble and validate the strip of half-width s around a spine.

    The Jacobian of the parametrization is 1 - rho*kappa(t), so the map is
    a local diffeomorphism iff s*max|kappa| < 1; global injectivity is then
    certified by a boundary intersection scan plus randomized sampling.
    """
    s = halfwidth
    if not (s > 0.0 and math.isfinite(s)):
        raise InvalidGeometry(f"halfwidth must be positive, got {s}")
    if s * spine.max_curvature >= 1.0:
        raise NotADiffeomorphism(
            f"halfwidth*|curvature| = {s * spine.max_curvature} >= 1; "
            "the strip parametrization folds over")
    L = spine.length
    bottom = [piece for piece, _, _ in level_chain(spine, -s)]
    top_rev = [piece.reversed() for piece, _, _
               in reversed(level_chain(spine, s))]
    right = Segment(spine.point(L) - s * spine.normal(L),
                    spine.point(L) + s * spine.normal(L))
    left = Segment(spine.point(0.0) + s * spine.normal(0.0),
                   spine.point(0.0) - s * spine.normal(0.0))
    boundary = ArcPolygon(bottom + [right] + top_rev + [left])
    geom.assert_simple(boundary, tol=1e-9 * max(L, 1.0))

    rng = np.random.default_rng(20_260_101)
    ts = rng.uniform(0.0, L, size=(injectivity_samples, 2))
    keep = np.abs(ts[:, 0] - ts[:, 1]) >= 0.01 * L
    ts = ts[keep]
    rhos = rng.uniform(-s, s, size=ts.shape)
    xa, ya = _sample_points(spine, ts[:, 0], rhos[:, 0])
    xb, yb = _sample_points(spine, ts[:, 1], rhos[:, 1])
    gaps = np.hypot(xa - xb, ya - yb)
    min_clear = float(gaps.min()) if len(gaps) else math.inf
    cert = StripCertificate(injective=min_clear > 0.0,
                            min_clearance=min_clear, samples=len(ts))
    if not cert.injective:
        raise SelfIntersecting("sampled parametrization points coincide")
    strip = Strip(spine=spine, halfwidth=s, boundary=boundary, validity=cert)
    a, p = strip_measures(strip)
    if abs(boundary.area - a) > 1e-9 * a or abs(boundary.perimeter - p) > 1e-9 * p:
        raise InvalidGeometry(
            "assembled boundary measures disagree with 2sL and 2L+4s")
    return strip


def strip_measures(st: Strip) -> Tuple[float, float]:
    """(area, perimeter) of the strip; both depend only on the spine length."""
    L, s = st.spine.length, st.halfwidth
    return 2.0 * s * L, 2.0 * L + 4.0 * s


def jacobian(st: Strip, t: float, rho: float) -> float:
    """Jacobian 1 - rho*kappa(t) of the strip parametrization."""
    if not 0.0 <= t <= st.length:
        raise DomainError(f"arclength {t} outside [0, {st.length}]")
    if abs(rho) > st.halfwidth:
        raise DomainError(f"|rho| = {abs(rho)} exceeds halfwidth {st.halfwidth}")
    return 1.0 - rho * st.spine.curvature_at(t)


def sub_strip_measure(st: Strip, intervals: Sequence[Tuple[float, float]]) -> float:
    """Area of the union of transversal segments over spine intervals.

    Equals 2s times the total length of the intervals, independent of the
    spine's shape.
    """
    clipped = []
    for a, b in intervals:
        a = max(min(a, b), 0.0)
        b = min(max(a, b), st.length)
        if b > a:
            clipped.append((a, b))
    clipped.sort()
    total = 0.0
    cur_a: Optional[float] = None
    cur_b = 0.0
    for a, b in clipped:
        if cur_a is None:
            cur_a, cur_b = a, b
        elif a <= cur_b:
            cur_b = max(cur_b, b)
        else:
            total += cur_b - cur_a
            cur_a, cur_b = a, b
    if cur_a is not None:
        total += cur_b - cur_a
    return 2.0 * st.halfwidth * total


# ball-to-ball paths ---------------------------------------------------------


def _level_tangency_parameter(st: Strip, rho: float, r: float,
                              t_hint: float) -> float:
    """Smallest t at which the ball of radius r centered on the level-rho
    curve is still inside the strip; at the returned t it touches the left
    end segment."""
    def clear(t: float) -> float:
        return geom.distance_to_boundary(st.boundary, st.point(t, rho)) - r

    if clear(t_hint) < -1e-9:
        raise BallNotContained("hint center lost containment")
    lo = t_hint
    step = max(t_hint / 8.0, 1e-3 * st.length)
    while lo > 1e-12 * st.length and clear(lo) >= 0.0:
        lo = max(lo - step, 0.0)
        step *= 2.0
        if lo == 0.0:
            break
    if clear(lo) >= 0.0:
        return lo
    hi = t_hint
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if clear(mid) >= 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-12 * max(st.length, 1.0):
            break
    return hi


def ball_to_ball_path(st: Strip, r: float, x0: Vec2, x1: Vec2
                      ) -> List[BoundaryPiece]:
    """Piecewise path along which a ball of radius r rolls from x0 to x1.

    Each endpoint is first slid at constant transversal level until its ball
    touches the left end segment, then the two tangent positions are joined
    by a straight segment parallel to that end.  Every piece has curvature
    at most 1/r and the rolling ball stays inside the strip throughout.
    """
    if r > st.halfwidth * (1.0 + 1e-12):
        raise BallNotContained(f"ball radius {r} exceeds halfwidth {st.halfwidth}")
    for x in (x0, x1):
        if geom.distance_to_boundary(st.boundary, x) < r * (1.0 - 1e-9):
            raise BallNotContained(
                f"ball of radius {r} at ({x.x}, {x.y}) is not inside the strip")
    if x0.distance(x1) <= 1e-12 * max(st.length, 1.0):
        return []
    t0, rho0 = st.locate(x0)
    t1, rho1 = st.locate(x1)
    chain0 = level_chain(st.spine, rho0)
    if abs(rho0 - rho1) <= 1e-12 * st.halfwidth:
        lo, hi = min(t0, t1), max(t0, t1)
        pieces = chain_pieces(chain0, lo, hi, reverse=(t0 > t1))
        return pieces
    ta = _level_tangency_parameter(st, rho0, r, t0)
    tb = _level_tangency_parameter(st, rho1, r, t1)
    pieces: List[BoundaryPiece] = []
    if t0 - ta > 1e-12 * st.length:
        pieces += chain_pieces(chain0, ta, t0, reverse=True)
    pa = st.point(ta, rho0)
    pb = st.point(tb, rho1)
    if pa.distance(pb) > 1e-12 * max(st.length, 1.0):
        pieces.append(Segment(pa, pb))
    if t1 - tb > 1e-12 * st.length:
        chain1 = level_chain(st.spine, rho1)
        pieces += chain_pieces(chain1, tb, t1)
    return pieces


def path_points(pieces: Sequence[BoundaryPiece], n: int = PATH_CLEARANCE_SAMPLES
                ) -> List[Vec2]:
    """n points spread along a piecewise path, proportionally to length."""
    if not pieces:
        return []
    total = sum(p.length for p in pieces)
    pts: List[Vec2] = []
    for piece in pieces:
        m = max(2, int(round(n * piece.length / total)))
        for k in range(m + 1):
            pts.append(piece.point_at(k / m))
    return pts


def path_max_curvature(pieces: Sequence[BoundaryPiece]) -> float:
    out = 0.0
    for p in pieces:
        if isinstance(p, Arc):
            out = max(out, 1.0 / p.radius)
    return out

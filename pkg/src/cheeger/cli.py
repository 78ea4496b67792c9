"""Command-line front end: solve domain files, run check suites, render SVG.

Domain files are JSON objects (see `parse_domain`); reports are machine
readable JSON on stdout with a human log on stderr.  Exit codes: 0 success,
1 input error, 2 failed property or check.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import __version__, geom
from .convex import convex_from_points, solve_convex
from .errors import CheegerError, PropertyViolation
from .gallery import (bowtie_cheeger_candidate, build_bowtie, make_pinocchio,
                      pinocchio_g, pinocchio_measures, solve_pinocchio_theta,
                      two_balls_example, two_ears_measures, two_ears_region,
                      two_ears_theta)
from .geom import Arc, ArcPolygon, Segment, Vec2
from .reporting import Check
from .solver import (DEFAULT_TOL, CheegerSolution, check_free_boundary,
                     solve_strip)
from .spine import Spine, SpinePiece, build_strip
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2


class SpecError(ValueError):
    """Domain file fails schema validation."""


@dataclass
class Outcome:
    h: Optional[float] = None
    r: Optional[float] = None
    residual: Optional[float] = None
    iterations: Optional[int] = None
    bounds: Optional[dict] = None
    checks: List[Check] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    regions: List[ArcPolygon] = field(default_factory=list)
    inner: Optional[ArcPolygon] = None
    cheeger: Optional[ArcPolygon] = None
    balls: List[Tuple[Vec2, float]] = field(default_factory=list)


def _tolerance() -> float:
    raw = os.environ.get("CHEEGER_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError as exc:
        raise SpecError(f"CHEEGER_TOL is not a number: {raw!r}") from exc
    if not 0.0 < tol < 1.0:
        raise SpecError(f"CHEEGER_TOL out of range (0, 1): {tol}")
    return tol


def _require_number(obj: dict, key: str, where: str) -> float:
    if key not in obj:
        raise SpecError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, (int, float)) or isinstance(val, bool) \
            or not math.isfinite(float(val)):
        raise SpecError(f"{where}: field {key!r} must be a finite number")
    return float(val)


def parse_spine(items, halfwidth: float) -> Spine:
    if not isinstance(items, list) or not items:
        raise SpecError("'spine': expected a nonempty list of pieces")
    pieces = []
    for i, item in enumerate(items):
        where = f"spine[{i}]"
        if not isinstance(item, dict):
            raise SpecError(f"{where}: expected an object")
        kind = item.get("kind")
        if kind not in ("line", "arc"):
            raise SpecError(f"{where}: 'kind' must be 'line' or 'arc'")
        length = _require_number(item, "length", where)
        if length <= 0.0:
            raise SpecError(f"{where}: 'length' must be positive")
        if kind == "line":
            kappa = float(item.get("curvature", 0.0) or 0.0)
            if kappa != 0.0:
                raise SpecError(f"{where}: a line piece cannot carry curvature")
        else:
            kappa = _require_number(item, "curvature", where)
            if kappa == 0.0:
                raise SpecError(f"{where}: an arc piece needs nonzero curvature")
        if abs(kappa) * halfwidth >= 1.0:
            raise SpecError(
                f"{where}: |curvature|*halfwidth = {abs(kappa) * halfwidth} "
                "must stay below 1")
        pieces.append(SpinePiece(length, kappa))
    return Spine(tuple(pieces))


def _ratio_check(sol: CheegerSolution) -> Check:
    ratio = sol.cheeger_set.perimeter / sol.cheeger_set.area
    err = abs(ratio - sol.h) / sol.h
    return Check("cheeger_ratio_identity", err <= 1e-8,
                 f"perimeter/area vs h relative gap {err:.3e}")


def solve_domain(spec: dict, allow_short: bool = False) -> Outcome:
    if not isinstance(spec, dict):
        raise SpecError("domain file must hold a JSON object")
    kind = spec.get("type")
    tol = _tolerance()
    if kind == "strip":
        hw = _require_number(spec, "halfwidth", "strip")
        if hw <= 0.0:
            raise SpecError("strip: 'halfwidth' must be positive")
        spine = parse_spine(spec.get("spine"), hw)
        strip = build_strip(spine, hw)
        sol = solve_strip(strip, allow_short=allow_short, tol=tol)
        out = Outcome(h=sol.h, r=sol.r, residual=sol.residual,
                      iterations=sol.iterations,
                      bounds={"krepra_lower": sol.bounds.krepra_lower,
                              "krepra_upper": sol.bounds.krepra_upper,
                              "asymptotic": sol.bounds.asymptotic},
                      warnings=list(sol.warnings),
                      regions=[strip.boundary], inner=sol.inner_set,
                      cheeger=sol.cheeger_set)
        out.checks.append(Check(
            "inner_cheeger_residual",
            sol.residual <= 1e-10 * math.pi * sol.r ** 2,
            f"|area(E_r) - pi r^2| = {sol.residual:.3e}"))
        out.checks.append(_ratio_check(sol))
        if not sol.warnings:
            out.checks.append(Check(
                "strip_bounds",
                sol.bounds.krepra_lower <= sol.h <= sol.bounds.krepra_upper,
                f"h = {sol.h:.8f}"))
        try:
            report = check_free_boundary(sol, strip)
            out.checks.append(Check("free_boundary", report.passed,
                                    f"{len(report.arcs)} free arcs verified"))
            out.balls = [(fa.arc.center, sol.r) for fa in report.arcs]
        except PropertyViolation as exc:
            out.checks.append(Check("free_boundary", False, str(exc)))
        return out
    if kind == "convex_polygon":
        verts = spec.get("vertices")
        if not isinstance(verts, list) or len(verts) < 3:
            raise SpecError("convex_polygon: 'vertices' needs >= 3 entries")
        pts = []
        for i, xy in enumerate(verts):
            if (not isinstance(xy, (list, tuple)) or len(xy) != 2
                    or not all(isinstance(v, (int, float))
                               and not isinstance(v, bool)
                               and math.isfinite(float(v)) for v in xy)):
                raise SpecError(f"vertices[{i}]: expected [x, y] numbers")
            pts.append(Vec2(float(xy[0]), float(xy[1])))
        try:
            region = convex_from_points(pts)
        except CheegerError as exc:
            raise SpecError(f"convex_polygon: {exc}") from exc
        sol = solve_convex(region, tol=tol)
        out = Outcome(h=sol.h, r=sol.r, residual=sol.residual,
                      iterations=sol.iterations, regions=[region.region],
                      inner=sol.inner_set, cheeger=sol.cheeger_set)
        out.checks.append(Check(
            "inner_cheeger_residual",
            sol.residual <= 1e-10 * math.pi * sol.r ** 2,
            f"|area(E_r) - pi r^2| = {sol.residual:.3e}"))
        out.checks.append(_ratio_check(sol))
        out.checks.append(Check("cheeger_set_contained", True,
                                "sampled containment verified during solve"))
        return out
    if kind == "pinocchio":
        theta_raw = spec.get("theta", "auto")
        alpha = float(spec.get("alpha", 0.0) or 0.0)
        nose = float(spec.get("nose", 0.0) or 0.0)
        warnings: List[str] = []
        if theta_raw == "auto":
            theta = solve_pinocchio_theta()
        else:
            if not isinstance(theta_raw, (int, float)) or isinstance(theta_raw, bool):
                raise SpecError("pinocchio: 'theta' must be a number or 'auto'")
            theta = float(theta_raw)
            if not 0.0 < theta < 0.5 * math.pi:
                raise SpecError("pinocchio: 'theta' must lie in (0, pi/2)")
            g_val = pinocchio_g(theta)
            if abs(g_val) > 1e-6:
                warnings.append(
                    f"theta is not the self-Cheeger root: g(theta) = {g_val:.3e}")
        if alpha < 0.0 or alpha > 0.5 * math.pi - theta + 1e-12:
            raise SpecError("pinocchio: 'alpha' must lie in [0, pi/2 - theta]")
        if nose < 0.0:
            raise SpecError("pinocchio: 'nose' must be nonnegative")
        if nose > 0.0 and alpha != 0.0:
            raise SpecError("pinocchio: nose extension requires alpha = 0")
        shape = make_pinocchio(theta, alpha, nose)
        perim, area = pinocchio_measures(theta, alpha)
        perim += 2.0 * nose
        area += 2.0 * shape.nose_radius * nose
        h = perim / area
        if alpha > 0.0:
            warnings.append("alpha > 0 truncates the nose; the reported h is "
                            "the region's own ratio")
        out = Outcome(h=h, r=1.0 / h, residual=0.0, iterations=0,
                      warnings=warnings, regions=[shape.region],
                      cheeger=shape.region)
        geo_gap = max(abs(shape.region.perimeter - perim) / perim,
                      abs(shape.region.area - area) / area)
        out.checks.append(Check("formula_geometry_agreement", geo_gap <= 1e-9,
                                f"relative gap {geo_gap:.3e}"))
        if theta_raw == "auto" and alpha == 0.0:
            out.checks.append(Check(
                "self_cheeger_identity",
                abs(h - 1.0 / math.sin(theta)) <= 1e-9 * h,
                f"h = {h!r} vs 1/sin(theta0)"))
            tau = min(nose, 1.0)
            out.balls = [(Vec2(math.cos(theta) + t, 0.0), shape.nose_radius)
                         for t in (0.0, 0.5 * tau, tau)] if nose > 0 else \
                        [(Vec2(math.cos(theta), 0.0), shape.nose_radius)]
        return out
    if kind == "two_ears":
        theta_raw = spec.get("theta", "auto")
        warnings = []
        if theta_raw == "auto":
            theta = two_ears_theta()
        else:
            if not isinstance(theta_raw, (int, float)) or isinstance(theta_raw, bool):
                raise SpecError("two_ears: 'theta' must be a number or 'auto'")
            theta = float(theta_raw)
            if not 0.0 < theta < 0.5 * math.pi:
                raise SpecError("two_ears: 'theta' must lie in (0, pi/2)")
            p, a = two_ears_measures(theta)
            if abs(p * math.sin(theta) - a) > 1e-6:
                warnings.append("theta is not the self-Cheeger root")
        region = two_ears_region(theta)
        perim, area = two_ears_measures(theta)
        h = perim / area
        out = Outcome(h=h, r=1.0 / h, residual=0.0, iterations=0,
                      warnings=warnings, regions=[region], cheeger=region)
        geo_gap = max(abs(region.perimeter - perim) / perim,
                      abs(region.area - area) / area)
        out.checks.append(Check("formula_geometry_agreement", geo_gap <= 1e-9,
                                f"relative gap {geo_gap:.3e}"))
        out.balls = [(Vec2(math.cos(theta), 0.0), math.sin(theta)),
                     (Vec2(-math.cos(theta), 0.0), math.sin(theta))]
        return out
    if kind == "bowtie":
        gap = float(spec.get("gap", 0.0) or 0.0)
        if gap < 0.0:
            raise SpecError("bowtie: 'gap' must be nonnegative")
        bt = build_bowtie(gap)
        out = Outcome(regions=[bt.region])
        if gap == 0.0:
            cand = bowtie_cheeger_candidate(bt)
            out.h = cand.ratio
            out.r = cand.radius
            out.residual = abs(cand.ratio - 1.0 / cand.radius)
            out.iterations = 0
            out.cheeger = cand.region
            out.warnings.append(
                "candidate ratio from the four-arc construction; global "
                "optimality is not certified")
            radii = {round(a.radius, 12) for a in cand.corner_arcs}
            out.checks.append(Check(
                "bowtie_four_congruent_arcs",
                len(cand.corner_arcs) == 4 and len(radii) == 1,
                f"arc radii {radii}"))
            out.balls = [(a.center, cand.radius) for a in cand.corner_arcs]
        else:
            out.h = bt.region.perimeter / bt.region.area
            out.r = 1.0 / out.h
            out.residual = 0.0
            out.iterations = 0
            out.warnings.append(
                "loose bow-tie: reported h is the domain's own ratio, an "
                "upper bound only; the inner Cheeger formula fails here")
            out.checks.append(Check(
                "loose_bowtie_waist_angle", bt.alpha_corner > 0.5 * math.pi,
                f"alpha = {bt.alpha_corner:.6f}"))
        return out
    if kind == "two_balls":
        rep = two_balls_example()
        out = Outcome(h=rep.h, r=1.0 / rep.h, residual=0.0, iterations=0,
                      regions=list(rep.components),
                      cheeger=rep.components[0])
        out.checks.extend(rep.checks)
        return out
    raise SpecError(f"unknown domain type {spec.get('type')!r}")


# ---------------------------------------------------------------------------
# report assembly


def build_report(out: Outcome) -> dict:
    return {
        "version": __version__,
        "h": out.h,
        "r": out.r,
        "residual": out.residual,
        "iterations": out.iterations,
        "bounds": out.bounds,
        "checks": [c.as_dict() for c in out.checks],
        "warnings": list(out.warnings),
    }


def _emit(report: dict, log_lines: Sequence[str]) -> None:
    for line in log_lines:
        print(line, file=sys.stderr)
    print(json.dumps(report, sort_keys=True, indent=2))


# ---------------------------------------------------------------------------
# SVG emission


def _svg_path(p: ArcPolygon) -> str:
    cmds = [f"M {p.pieces[0].start.x:.9g} {-p.pieces[0].start.y:.9g}"]
    for piece in p.pieces:
        e = piece.end
        if isinstance(piece, Segment):
            cmds.append(f"L {e.x:.9g} {-e.y:.9g}")
        else:
            large = 1 if piece.sweep > math.pi else 0
            sweep = 0 if piece.ccw else 1
            cmds.append(f"A {piece.radius:.9g} {piece.radius:.9g} 0 "
                        f"{large} {sweep} {e.x:.9g} {-e.y:.9g}")
    cmds.append("Z")
    return " ".join(cmds)


def render_svg(out: Outcome, path: str, show_inner: bool,
               show_cheeger: bool, show_balls: bool) -> None:
    xs, ys = [], []
    for region in out.regions:
        x0, y0, x1, y1 = region.bounding_box
        xs += [x0, x1]
        ys += [y0, y1]
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys))
    vx, vy = min(xs) - pad, -(max(ys) + pad)
    vw, vh = (max(xs) - min(xs)) + 2 * pad, (max(ys) - min(ys)) + 2 * pad
    stroke = max(vw, vh) / 400.0
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'viewBox="{vx:.6g} {vy:.6g} {vw:.6g} {vh:.6g}" '
             f'width="640" height="{640.0 * vh / vw:.6g}">']
    for region in out.regions:
        parts.append(f'<path d="{_svg_path(region)}" fill="white" '
                     f'stroke="black" stroke-width="{2 * stroke:.6g}"/>')
    if show_cheeger and out.cheeger is not None:
        parts.append(f'<path d="{_svg_path(out.cheeger)}" fill="#c8c8c8" '
                     f'stroke="none"/>')
    if show_inner and out.inner is not None:
        parts.append(f'<path d="{_svg_path(out.inner)}" fill="#606060" '
                     f'stroke="none"/>')
    if show_balls:
        for center, radius in out.balls:
            parts.append(
                f'<circle cx="{center.x:.9g}" cy="{-center.y:.9g}" '
                f'r="{radius:.9g}" fill="none" stroke="#b03030" '
                f'stroke-width="{stroke:.6g}" '
                f'stroke-dasharray="{4 * stroke:.6g} {4 * stroke:.6g}"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(parts) + "\n")


# ---------------------------------------------------------------------------
# commands


def _load_spec(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        spec = _load_spec(args.file)
        out = solve_domain(spec, allow_short=args.allow_short_strip)
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (SpecError, CheegerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    log = [f"h = {out.h!r}, r = {out.r!r}"]
    log += [f"warning: {w}" for w in out.warnings]
    if args.svg:
        try:
            render_svg(out, args.svg, show_inner=True, show_cheeger=True,
                       show_balls=False)
            log.append(f"figure written to {args.svg}")
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    _emit(build_report(out), log)
    return EXIT_OK if all(c.passed for c in out.checks) else EXIT_VIOLATION


def cmd_verify(args: argparse.Namespace) -> int:
    name = args.suite
    if name not in SUITES:
        print(f"error: unknown suite {name!r}; choose from "
              f"{', '.join(sorted(SUITES))}", file=sys.stderr)
        return EXIT_INPUT
    checks = run_suite(name)
    report = {
        "version": __version__,
        "suite": name,
        "passed": all(c.passed for c in checks),
        "checks": [c.as_dict() for c in checks],
    }
    log = [f"suite {name}: {sum(c.passed for c in checks)}/{len(checks)} "
           "checks passed"]
    log += [f"FAIL {c.name}: {c.detail}" for c in checks if not c.passed]
    _emit(report, log)
    return EXIT_OK if report["passed"] else EXIT_VIOLATION


def cmd_render(args: argparse.Namespace) -> int:
    try:
        spec = _load_spec(args.file)
        out = solve_domain(spec, allow_short=args.allow_short_strip)
        render_svg(out, args.out, show_inner=args.show_inner,
                   show_cheeger=args.show_cheeger, show_balls=args.show_balls)
    except (SpecError, CheegerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"figure written to {args.out}", file=sys.stderr)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="cheeger",
        description="Cheeger constants and Cheeger sets of convex regions "
                    "and curved strips")
    sub = parser.add_subparsers(dest="command", required=True)
    p_solve = sub.add_parser("solve", help="solve a domain file")
    p_solve.add_argument("file")
    p_solve.add_argument("--svg", metavar="OUT.SVG", default=None)
    p_solve.add_argument("--allow-short-strip", action="store_true")
    p_solve.set_defaults(func=cmd_solve)
    p_verify = sub.add_parser("verify", help="run a named check suite")
    p_verify.add_argument("suite")
    p_verify.set_defaults(func=cmd_verify)
    p_render = sub.add_parser("render", help="render a domain to SVG")
    p_render.add_argument("file")
    p_render.add_argument("out")
    p_render.add_argument("--show-inner", action="store_true")
    p_render.add_argument("--show-cheeger", action="store_true")
    p_render.add_argument("--show-balls", action="store_true")
    p_render.add_argument("--allow-short-strip", action="store_true")
    p_render.set_defaults(func=cmd_render)
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

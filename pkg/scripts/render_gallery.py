#!/usr/bin/env python3
"""Render the example gallery and a solved strip decomposition to SVG."""
import os
import sys

from cheeger.cli import render_svg, solve_domain

FIGURES = {
    "strip_decomposition.svg": (
        {"type": "strip", "halfwidth": 1.0,
         "spine": [{"kind": "arc", "length": 8.0, "curvature": 0.25},
                   {"kind": "line", "length": 4.0},
                   {"kind": "arc", "length": 8.0, "curvature": -0.25}]},
        dict(show_inner=True, show_cheeger=True, show_balls=True)),
    "pinocchio.svg": (
        {"type": "pinocchio", "theta": "auto", "alpha": 0.0, "nose": 2.0},
        dict(show_inner=False, show_cheeger=False, show_balls=True)),
    "two_ears.svg": (
        {"type": "two_ears", "theta": "auto"},
        dict(show_inner=False, show_cheeger=False, show_balls=True)),
    "bowtie.svg": (
        {"type": "bowtie", "gap": 0},
        dict(show_inner=False, show_cheeger=True, show_balls=False)),
    "two_balls.svg": (
        {"type": "two_balls"},
        dict(show_inner=False, show_cheeger=True, show_balls=False)),
}


def main(out_dir: str = "out") -> None:
    os.makedirs(out_dir, exist_ok=True)
    for name, (spec, flags) in FIGURES.items():
        outcome = solve_domain(spec)
        path = os.path.join(out_dir, name)
        render_svg(outcome, path, **flags)
        print(f"{path}: h = {outcome.h:.6f}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "out")

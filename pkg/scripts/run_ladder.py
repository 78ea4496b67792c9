#!/usr/bin/env python3
"""Sweep the strip families over the length ladder and tabulate the Cheeger
constants against the two-sided bounds and the second-order asymptotic."""
import math
import time

from cheeger import verify


def main() -> None:
    t0 = time.time()
    sols = verify.ladder_solutions()
    print(f"{'family':16s} {'L':>9s} {'h':>12s} {'lower':>10s} {'upper':>10s}"
          f" {'L^2 dev':>9s}")
    for name in verify.strip_families():
        devs = []
        for L in verify.LADDER_LENGTHS:
            sol = sols[(name, L)][1]
            dev = sol.h - 1.0 - math.pi / (2.0 * L)
            devs.append(dev)
            print(f"{name:16s} {L:9.4f} {sol.h:12.8f} "
                  f"{sol.bounds.krepra_lower:10.6f} "
                  f"{sol.bounds.krepra_upper:10.6f} {L * L * abs(dev):9.4f}")
        orders = [math.log(abs(devs[i] / devs[i + 1]))
                  / math.log(verify.LADDER_LENGTHS[i + 1] / verify.LADDER_LENGTHS[i])
                  for i in range(len(devs) - 1)]
        print(f"{'':16s} observed orders: "
              + ", ".join(f"{o:.3f}" for o in orders))
    print(f"\n{len(sols)} strips solved in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()

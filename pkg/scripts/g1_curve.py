#!/usr/bin/env python3
"""Write the Cesaro defining function g1 on a midpoint grid of (0, 1) as CSV.

Optionally draws the curve when matplotlib is available (``--png``).
"""
import argparse
import sys

from bohr_radii import OperatorSpec, defining_equation, solve_radius
from bohr_radii.radius import scan_values


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    ap.add_argument("--png", help="optional image path (needs matplotlib)")
    args = ap.parse_args(argv)

    problem = defining_equation(OperatorSpec.cesaro())
    root = solve_radius(problem).root
    r, g = scan_values(problem, args.samples)
    text = f"# root={root:.15g}\nr,g1\n" + "".join(f"{a:.15g},{b:.15g}\n" for a, b in zip(r, g))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)

    if args.png:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(5, 3.5))
        ax.plot(r, g)
        ax.axhline(0.0, color="0.6", lw=0.8)
        ax.axvline(root, color="C3", ls="--", lw=0.8)
        ax.set_xlabel("r")
        ax.set_ylabel("g1(r)")
        fig.tight_layout()
        fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()

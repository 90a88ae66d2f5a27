#!/usr/bin/env python3
"""Tabulate Bohr radii of the beta-Cesaro and Bernardi families over beta."""
import argparse

from bohr_radii import OperatorSpec, radius_sweep

DEFAULT_BETAS = [0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e6]


def table(template, betas):
    rows = []
    for entry in radius_sweep(template, betas):
        radius = entry.result.root if entry.result else float("nan")
        rows.append((entry.beta, radius, entry.error or ""))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--betas", type=float, nargs="*", default=DEFAULT_BETAS)
    ap.add_argument("--m", type=int, nargs="*", default=[0, 1, 2])
    args = ap.parse_args(argv)

    print("family,m,beta,radius")
    for beta, radius, note in table(OperatorSpec.beta_cesaro(1.0), args.betas):
        print(f"beta-cesaro,,{beta:.15g},{radius:.15g}{',' + note if note else ''}")
    for m in args.m:
        for beta, radius, note in table(OperatorSpec.bernardi(1.0, m), args.betas):
            print(f"bernardi,{m},{beta:.15g},{radius:.15g}{',' + note if note else ''}")
    # the beta = 1/2 and beta = 2 cases reduce to quadratics
    print(f"# checks: |R(0.5)-5/9|={abs(table(OperatorSpec.beta_cesaro(1.0), [0.5])[0][1] - 5 / 9):.1e}",
          f"|R(2)-1/2|={abs(table(OperatorSpec.beta_cesaro(1.0), [2.0])[0][1] - 0.5):.1e}")


if __name__ == "__main__":
    main()

"""Acceptance gate. Each criterion prints one ``ACCEPTANCE n PASS/FAIL`` line."""
import time

import numpy as np
import pytest

from bohr_radii import OperatorSpec, convolution_identity_error, defining_equation, extremal_majorant, solve_radius
from bohr_radii.cli import main
from bohr_radii.majorants import cesaro_extremal_closed_form, dft_extremal_closed_form
from bohr_radii.radius import bohr_radius, count_sign_changes
from bohr_radii.sharpness import residual_slope, sharpness_scan
from bohr_radii.verify import default_operators, monotonicity_suite, schwarz_pick_suite


@pytest.fixture
def report(capsys):
    def _report(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return _report


def test_01_cesaro_radius(report):
    t0 = time.perf_counter()
    root = solve_radius(defining_equation(OperatorSpec.cesaro())).root
    dt = time.perf_counter() - t0
    report(1, abs(root - 0.533589) <= 1e-5 and dt < 1.0, f"R={root:.12f} time={dt:.3f}s")


def test_02_dft_radius(report):
    root = bohr_radius(OperatorSpec.dft())
    report(2, abs(root - 1 / 3) <= 1e-12, f"|R-1/3|={abs(root - 1 / 3):.2e}")


def test_03_beta_cesaro_spot_checks(report):
    r2 = bohr_radius(OperatorSpec.beta_cesaro(2.0))
    rh = bohr_radius(OperatorSpec.beta_cesaro(0.5))
    ok = abs(r2 - 0.5) <= 1e-10 and abs(rh - 5 / 9) <= 1e-10
    report(3, ok, f"|R_2-1/2|={abs(r2 - 0.5):.2e} |R_1/2-5/9|={abs(rh - 5 / 9):.2e}")


def test_04_removable_singularity(report):
    base = bohr_radius(OperatorSpec.cesaro())
    gaps = [abs(bohr_radius(OperatorSpec.beta_cesaro(b)) - base) for b in (1 - 1e-4, 1 + 1e-4)]
    report(4, max(gaps) <= 1e-3, f"max gap={max(gaps):.2e}")


def test_05_bernardi_large_beta(report):
    root = bohr_radius(OperatorSpec.bernardi(1e6, 0))
    report(5, abs(root - 1 / 3) <= 1e-4, f"|R-1/3|={abs(root - 1 / 3):.2e}")


def test_06_two_sided_certification(report):
    t0 = time.perf_counter()
    ok, parts = True, []
    for op in default_operators():
        R = bohr_radius(op)
        below = sharpness_scan(op, R - 0.01)
        above = sharpness_scan(op, R + 0.01)
        i = above.lambda_schedule.index(above.violated_at) if above.violated_at is not None else None
        certified = i is not None and above.margins[i] > above.tail_bounds[i] >= 0
        ok &= below.holds and not above.holds and certified
        parts.append(f"{op.kind.value}:{'ok' if below.holds and certified else 'bad'}")
    dt = time.perf_counter() - t0
    report(6, ok and dt < 10.0, " ".join(parts) + f" time={dt:.2f}s")


def test_07_identity_suite(report):
    err = max(convolution_identity_error(b, 200) for b in (0.5, 1.0, 2.7, 10.0))
    report(7, err <= 1e-12, f"max rel err={err:.2e}")


def test_08_series_closed_form(report):
    grid_l = np.linspace(0.05, 0.95, 10)
    grid_r = np.linspace(0.05, 0.95, 10)
    worst_c = worst_d = 0.0
    for lam in grid_l:
        for r in grid_r:
            worst_c = max(worst_c, abs(extremal_majorant(OperatorSpec.cesaro(), lam, r).value
                                       - cesaro_extremal_closed_form(lam, r)))
            worst_d = max(worst_d, abs(extremal_majorant(OperatorSpec.dft(), lam, r).value
                                       - dft_extremal_closed_form(lam, r)))
    report(8, max(worst_c, worst_d) <= 1e-10, f"cesaro={worst_c:.2e} dft={worst_d:.2e}")


def test_09_monotonicity(report):
    checks = monotonicity_suite()
    bad = [c.name for c in checks if not c.passed]
    report(9, not bad, f"{len(checks)} checks, failing: {bad}")


def test_10_figure_one(report, capsys):
    code = main(["plot", "--samples", "1000"])
    text = capsys.readouterr().out
    root = float(text.splitlines()[0].split("=")[1])
    rows = [ln.split(",") for ln in text.splitlines()[2:]]
    r = np.array([float(a) for a, _ in rows])
    g = np.array([float(b) for _, b in rows])
    changes = count_sign_changes(g)
    i = int(np.nonzero(np.sign(g[:-1]) != np.sign(g[1:]))[0][0])
    near = r[i] - 1e-3 <= root <= r[i + 1] + 1e-3
    report(10, code == 0 and changes == 1 and near, f"sign changes={changes} between {r[i]} and {r[i + 1]}")


def test_11_schwarz_pick(report):
    (check,) = schwarz_pick_suite(samples=500, seed=0, n_max=20)
    report(11, check.passed, f"max violation={check.value:.2e}")


def test_12_asymptotic_order(report):
    slopes = {op.kind.value: residual_slope(op, 0.4, range(4, 13)) for op in default_operators()}
    ok = all(1.7 <= s <= 2.3 for s in slopes.values())
    report(12, ok, " ".join(f"{k}={v:.3f}" for k, v in slopes.items()))

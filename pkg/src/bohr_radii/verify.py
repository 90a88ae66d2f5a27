"""Property suites driven by ``bohr-radii verify``."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gamma_kernels import convolution_identity_error, gamma_ratio_seq
from .majorants import d2_majorant_dx2, d_majorant_dx, worst_case_majorant
from .operators import OperatorSpec, beta_cesaro_transform, bound_function
from .radius import bohr_radius
from .series import CoefficientSeq, blaschke_coeffs
from .sharpness import random_blaschke_zeros, residual_slope, schwarz_pick_check, sharpness_scan

SUITES = ("identities", "monotonicity", "sharpness", "schwarz-pick")
IDENTITY_BETAS = (0.5, 1.0, 2.7, 10.0)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    value: float
    limit: float


def default_operators():
    return [
        OperatorSpec.cesaro(),
        OperatorSpec.bernardi(1.0, 0),
        OperatorSpec.beta_cesaro(2.0),
        OperatorSpec.dft(),
    ]


def identities_suite(n_max: int = 200):
    out = []
    for beta in IDENTITY_BETAS:
        err = convolution_identity_error(beta, n_max)
        out.append(Check("identities", f"kernel-sum beta={beta:g}", err <= 1e-12, err, 1e-12))
    # beta-Cesaro images of 1 and of 1/(1-t)
    for beta in IDENTITY_BETAS:
        n = np.arange(n_max + 1)
        one = np.zeros(n_max + 1)
        one[0] = 1.0
        b1 = beta_cesaro_transform(CoefficientSeq(0, one), beta).values
        e1 = gamma_ratio_seq(beta, n_max).values / (n + 1)
        b2 = beta_cesaro_transform(CoefficientSeq(0, np.ones(n_max + 1)), beta).values
        e2 = gamma_ratio_seq(beta + 1, n_max).values / (n + 1)
        err = float(max(np.max(np.abs(b1 / e1 - 1)), np.max(np.abs(b2 / e2 - 1))))
        out.append(Check("identities", f"beta-cesaro images beta={beta:g}", err <= 1e-12, err, 1e-12))
    return out


def monotonicity_suite(ops=None, x_points: int = 50, r_points: int = 10, slack: float = 1e-12):
    out = []
    xs = np.linspace(0.0, 1.0, x_points)
    for op in ops or default_operators():
        R = bohr_radius(op)
        worst_dec = worst_conc = worst_attain = worst_deriv = 0.0
        for r in R * np.arange(1, r_points + 1) / r_points:
            g = np.array([worst_case_majorant(op, x, r) for x in xs])
            worst_dec = max(worst_dec, float(np.max(-np.diff(g))))
            worst_conc = max(worst_conc, float(np.max(np.diff(g, 2))))
            worst_attain = max(worst_attain, abs(g[-1] - bound_function(op, r)))
            # analytic derivatives against central differences
            h = 1e-4
            for x in (0.25, 0.5, 0.75):
                fd1 = (worst_case_majorant(op, x + h, r) - worst_case_majorant(op, x - h, r)) / (2 * h)
                fd2 = (worst_case_majorant(op, x + h, r) - 2 * worst_case_majorant(op, x, r)
                       + worst_case_majorant(op, x - h, r)) / (h * h)
                scale = max(1.0, abs(d2_majorant_dx2(op, x, r)))
                worst_deriv = max(worst_deriv, abs(fd1 - d_majorant_dx(op, x, r)),
                                  abs(fd2 - d2_majorant_dx2(op, x, r)) / scale)
        out += [
            Check("monotonicity", f"{op.label} non-decreasing in x", worst_dec <= slack, worst_dec, slack),
            Check("monotonicity", f"{op.label} concave in x", worst_conc <= slack, worst_conc, slack),
            Check("monotonicity", f"{op.label} bound attained at x=1", worst_attain <= 1e-14, worst_attain, 1e-14),
            Check("monotonicity", f"{op.label} analytic x-derivatives", worst_deriv <= 1e-6, worst_deriv, 1e-6),
        ]
    return out


def sharpness_suite(ops=None, offset: float = 0.01, residual_r: float = 0.4, k_max: int = 40):
    out = []
    for op in ops or default_operators():
        R = bohr_radius(op)
        below = sharpness_scan(op, R - offset, k_max)
        above = sharpness_scan(op, R + offset, k_max)
        out.append(Check("sharpness", f"{op.label} holds at r=R-{offset:g}", below.holds, below.max_margin, 0.0))
        out.append(Check("sharpness", f"{op.label} violated at r=R+{offset:g}", not above.holds, above.max_margin, 0.0))
        slope = residual_slope(op, residual_r)
        out.append(Check("sharpness", f"{op.label} residual order at r={residual_r:g}",
                         1.7 <= slope <= 2.3, slope, 2.0))
    return out


def schwarz_pick_suite(samples: int = 500, seed: int = 0, n_max: int = 20, limit: float = 1e-9):
    rng = np.random.default_rng(seed)
    worst = -np.inf
    for _ in range(samples):
        seq = blaschke_coeffs(random_blaschke_zeros(rng), n_max)
        worst = max(worst, schwarz_pick_check(seq, n_max))
    return [Check("schwarz-pick", f"{samples} random Blaschke products, n<={n_max}", worst <= limit, worst, limit)]


def run_suite(name: str, ops=None, offset: float = 0.01, residual_r: float = 0.4, seed: int = 0):
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, ops, offset, residual_r, seed)]
    if name == "identities":
        return identities_suite()
    if name == "monotonicity":
        return monotonicity_suite(ops)
    if name == "sharpness":
        return sharpness_suite(ops, offset, residual_r)
    if name == "schwarz-pick":
        return schwarz_pick_suite(seed=seed)
    raise ValueError(f"unknown suite {name!r}")

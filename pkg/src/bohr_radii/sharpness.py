"""Two-sided certification of the Bohr radii.

Below the radius the inequality must hold for every member of the extremal
family; above it some member close to lam = 1 must violate it. Expanding
the extremal majorant around lam = 1 gives

    majorant(lam) = bound - (1 - lam) * edge_slope(r) + O((1 - lam)^2),

where edge_slope is the x -> 1 limit of dG/dx. Its sign flips at the radius.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .majorants import DEFAULT_TOL, edge_slope, extremal_majorant
from .operators import OperatorSpec, bound_function
from .series import CoefficientSeq

K_MAX_LIMIT = 48
_EPS = np.finfo(float).eps


class Verdict(str, enum.Enum):
    HOLDS_EVERYWHERE = "holds-everywhere"
    VIOLATED = "violated"


@dataclass(frozen=True)
class SharpnessReport:
    op: OperatorSpec
    r: float
    lambda_schedule: tuple[float, ...]
    margins: tuple[float, ...]
    tail_bounds: tuple[float, ...]
    verdict: Verdict
    violated_at: float | None
    max_margin: float

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS_EVERYWHERE


def lambda_schedule(k_max: int) -> np.ndarray:
    """lam_k = 1 - 2^-k for k = 1..k_max."""
    if not 1 <= k_max <= K_MAX_LIMIT:
        raise DomainError(f"k_max must lie in [1, {K_MAX_LIMIT}], got {k_max}")
    return 1.0 - 2.0 ** -np.arange(1, k_max + 1, dtype=float)


def sharpness_scan(op: OperatorSpec, r: float, k_max: int = 40, tol: float = DEFAULT_TOL) -> SharpnessReport:
    """Compare the extremal majorant with the bound along the lambda schedule.

    A violation is only declared when the lower edge of the majorant's
    enclosure (tail and rounding bound, plus the bound's own rounding)
    still exceeds the right-hand side.
    """
    lams = lambda_schedule(k_max)
    bound = bound_function(op, r)
    bound_err = 8 * _EPS * abs(bound)
    tol = tol * min(1.0, abs(bound))
    margins, tails = [], []
    violated_at = None
    for lam in lams:
        cv = extremal_majorant(op, float(lam), r, tol)
        margin = cv.value - bound
        margins.append(margin)
        tails.append(cv.tail_bound + bound_err)
        if violated_at is None and margin > cv.tail_bound + bound_err:
            violated_at = float(lam)
    verdict = Verdict.HOLDS_EVERYWHERE if violated_at is None else Verdict.VIOLATED
    return SharpnessReport(
        op, float(r), tuple(map(float, lams)), tuple(margins), tuple(tails),
        verdict, violated_at, float(max(margins)),
    )


def asymptotic_residual(op: OperatorSpec, r: float, lam: float, tol: float = 1e-15) -> float:
    """Extremal majorant minus its first-order expansion about lam = 1.

    Second order in (1 - lam) for all four operators.
    """
    cv = extremal_majorant(op, lam, r, tol)
    return cv.value - bound_function(op, r) + (1.0 - lam) * edge_slope(op, r)


def dft_remainder_closed_form(lam: float, r: float) -> float:
    """(1-lam) r/(1-r) (lam + 3 lam r - 2)/(1 - lam r).

    Equals the DFT extremal majorant minus 1/(1-r) - (1-lam)(1-3r)/(1-r).
    That linear coefficient is not the exact derivative, so this remainder
    is only first order in (1 - lam); see ``asymptotic_residual`` for the
    second-order one.
    """
    return (1 - lam) * r / (1 - r) * (lam + 3 * lam * r - 2) / (1 - lam * r)


def residual_slope(op: OperatorSpec, r: float, ks=range(4, 13)) -> float:
    """Least-squares slope of -log2|residual| against k, lam = 1 - 2^-k."""
    ks = np.asarray(list(ks), dtype=float)
    res = np.array([asymptotic_residual(op, r, 1.0 - 2.0 ** -k) for k in ks])
    y = np.log2(np.abs(res))
    return -float(np.polyfit(ks, y, 1)[0])


def schwarz_pick_check(seq: CoefficientSeq, n_max: int | None = None) -> float:
    """max_{1<=n<=n_max} |a_n| - (1 - |a_0|^2), with a_0 the leading stored value.

    For a series starting at degree m this checks f / t^m.
    """
    vals = np.asarray(seq.values)
    if n_max is None:
        n_max = len(vals) - 1
    n_max = min(n_max, len(vals) - 1)
    if n_max < 1:
        return -np.inf
    head = abs(vals[0])
    return float(np.max(np.abs(vals[1 : n_max + 1])) - (1.0 - head * head))


def random_blaschke_zeros(rng: np.random.Generator, max_degree: int = 6, max_modulus: float = 0.99):
    """Zeros drawn uniformly (by area) from the disk of radius max_modulus."""
    deg = int(rng.integers(1, max_degree + 1))
    rad = max_modulus * np.sqrt(rng.random(deg))
    ang = 2 * np.pi * rng.random(deg)
    return list(rad * np.exp(1j * ang))

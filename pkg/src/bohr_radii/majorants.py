"""Majorant series of the four operators.

A slice function is described by its head norm x (|a_0|, or |a_m| for the
Bernardi operator) and the norms p_1, p_2, ... of the later coefficients.
The coefficient bound p_s <= 1 - x^2 turns every majorant into a closed
form in (x, r); substituting the extremal family gives the values that
decide sharpness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError, PreconditionError, TruncationCapError
from .gamma_kernels import gamma_ratio_seq
from .operators import (
    Kind,
    OperatorSpec,
    bound_function,
    check_open_radius,
    log1r,
    power_integral,
    prefix_sums,
)
from .series import TRUNCATION_CAP, CertifiedValue, CoefficientSeq, eval_adaptive, extremal_coeffs

DEFAULT_TOL = 1e-12
_EPS = np.finfo(float).eps


def _check_head(x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"head norm must lie in [0, 1], got {x}")
    return x


def bernardi_series(gamma0: float, r: float, q: float = 1.0, tol: float = 1e-15) -> CertifiedValue:
    """sum_{j>=1} q^(j-1) r^j / (gamma0 + j), certified to ``tol``.

    Consecutive terms shrink by at least q r, which is the tail rule.
    """
    if gamma0 <= 0:
        raise DomainError(f"beta + m must be > 0, got {gamma0}")

    def coeffs(n):
        return CoefficientSeq(1, q ** np.arange(n + 1, dtype=float))

    return eval_adaptive(coeffs, r, lambda s: 1.0 / (gamma0 + s), rho=q, abs_tol=tol)


def growth_integral(r: float, beta: float) -> float:
    """((1 - r)^(-beta) - 1) / beta = int_0^r (1 - t)^(-beta-1) dt."""
    return math.expm1(beta * log1r(r)) / beta


def _cesaro_pair(r):
    L = log1r(r)
    return L / r, 1.0 / (1.0 - r) - L / r


def _closed_parts(op: OperatorSpec, r: float, tol: float):
    """Split G(x, r) = x * head_part + (1 - x^2) * tail_part (beta-Cesaro aside)."""
    if op.kind is Kind.CESARO or op.cesaro_limit:
        return _cesaro_pair(r)
    if op.kind is Kind.BERNARDI:
        g0 = op.beta + op.m
        rm = r ** op.m
        return rm / g0, rm * bernardi_series(g0, r, tol=tol).value
    if op.kind is Kind.DFT:
        return 1.0 / (1.0 - r), r / (1.0 - r) ** 2
    raise AssertionError("beta-Cesaro has its own layout")


def worst_case_majorant(op: OperatorSpec, x: float, r: float, tol: float = 1e-15) -> float:
    """Majorant with every later coefficient norm at its ceiling 1 - x^2."""
    x = _check_head(x)
    r = check_open_radius(r)
    if op.kind is Kind.BETA_CESARO and not op.cesaro_limit:
        A = power_integral(r, op.beta)
        B = growth_integral(r, op.beta)
        return ((x * x + x - 1.0) * A + (1.0 - x * x) * B) / r
    head, tail = _closed_parts(op, r, tol)
    return x * head + (1.0 - x * x) * tail


def d_majorant_dx(op: OperatorSpec, x: float, r: float, tol: float = 1e-15) -> float:
    """Analytic partial derivative of the worst-case majorant in x."""
    x = _check_head(x)
    r = check_open_radius(r)
    if op.kind is Kind.BETA_CESARO and not op.cesaro_limit:
        A = power_integral(r, op.beta)
        B = growth_integral(r, op.beta)
        return ((2 * x + 1) * A - 2 * x * B) / r
    head, tail = _closed_parts(op, r, tol)
    return head - 2 * x * tail


def d2_majorant_dx2(op: OperatorSpec, x: float, r: float, tol: float = 1e-15) -> float:
    """Second partial in x; constant in x for all four operators."""
    _check_head(x)
    r = check_open_radius(r)
    if op.kind is Kind.BETA_CESARO and not op.cesaro_limit:
        return 2.0 * (power_integral(r, op.beta) - growth_integral(r, op.beta)) / r
    return -2.0 * _closed_parts(op, r, tol)[1]


def edge_slope(op: OperatorSpec, r: float) -> float:
    """lim_{x -> 1-} dG/dx. Nonnegative exactly for r up to the Bohr radius."""
    return d_majorant_dx(op, 1.0, r)


# ---- general majorant series -------------------------------------------------

def _abs_sequence(head, tail, n, tail_ratio):
    a = np.zeros(n + 1)
    a[0] = head
    k = min(len(tail), n)
    a[1 : k + 1] = tail[:k]
    if tail_ratio is not None and len(tail) and n > len(tail):
        extra = np.arange(1, n - len(tail) + 1, dtype=float)
        a[len(tail) + 1 :] = tail[-1] * tail_ratio ** extra
    return a


def _series_terms(op: OperatorSpec, a: np.ndarray, r: float) -> np.ndarray:
    """Terms of the majorant series for the (nonnegative) norm sequence a."""
    n = np.arange(len(a), dtype=float)
    if op.kind is Kind.CESARO:
        b = prefix_sums(a) / (n + 1)
    elif op.kind is Kind.DFT:
        b = prefix_sums(a)
    elif op.kind is Kind.BETA_CESARO:
        c = gamma_ratio_seq(op.beta, len(a) - 1).values
        b = np.convolve(c, a)[: len(a)] / (n + 1)
    else:
        # (1 + beta) is common to both sides of the inequality and is dropped
        b = a / (op.beta + op.m + n)
        return b * r ** (n + op.m)
    return b * r ** n


def _tail_bound(op: OperatorSpec, bound: float, r: float, n: int) -> float:
    """Bound on terms of index > n, valid whenever every norm is <= ``bound``."""
    if bound == 0.0:
        return 0.0
    rn1 = r ** (n + 1)
    if op.kind is Kind.CESARO:
        return bound * rn1 / (1 - r)
    if op.kind is Kind.DFT:
        return bound * rn1 * ((n + 2) / (1 - r) + r / (1 - r) ** 2)
    if op.kind is Kind.BERNARDI:
        return bound * r ** op.m * rn1 / ((op.beta + op.m + n + 1) * (1 - r))
    # b_j <= bound * c_j(beta+1)/(j+1) = bound * c_{j+1}(beta)/beta and the
    # ratio c_{j+2}/c_{j+1} is at most rho for j > n
    beta = op.beta
    rho = max(1.0, (n + 2 + beta) / (n + 3))
    if rho * r >= 1.0:
        return math.inf
    c_next = gamma_ratio_seq(beta, n + 2).values[-1]
    return bound * c_next * rn1 / (beta * (1 - rho * r))


def _rounding_allowance(terms: np.ndarray) -> float:
    return 4.0 * len(terms) * _EPS * float(np.sum(np.abs(terms)))


def vector_majorant(
    op: OperatorSpec,
    head: float,
    tail_norms,
    r: float,
    tol: float = DEFAULT_TOL,
    tail_ratio: float | None = None,
) -> CertifiedValue:
    """Majorant series for explicit coefficient norms.

    ``tail_norms`` are p_1, p_2, ... (for the Bernardi operator the norms of
    degrees m+1, m+2, ...). Past the explicit window the norms are zero, or
    continue geometrically as p_N q^j when ``tail_ratio`` q in [0, 1] is
    given. Every norm must satisfy p_s <= 1 - head^2.
    """
    head = _check_head(head)
    r = check_open_radius(r)
    if isinstance(tail_norms, CoefficientSeq):
        tail = np.asarray(tail_norms.values, dtype=float)
    else:
        tail = np.asarray(tail_norms, dtype=float).ravel()
    if np.any(tail < 0):
        raise DomainError("coefficient norms must be nonnegative")
    ceiling = 1.0 - head * head
    if len(tail) and tail.max() > ceiling * (1 + 4 * _EPS) + 4 * _EPS:
        raise PreconditionError(
            f"coefficient norm {tail.max():.17g} exceeds 1 - head^2 = {ceiling:.17g}"
        )
    if tail_ratio is not None and not 0.0 <= tail_ratio <= 1.0:
        raise DomainError(f"tail_ratio must lie in [0, 1], got {tail_ratio}")
    bound = max(head, float(tail.max()) if len(tail) else 0.0)

    n = max(64, len(tail))
    while True:
        n = min(n, TRUNCATION_CAP)
        tb = _tail_bound(op, bound, r, n)
        if tb <= tol or n >= TRUNCATION_CAP:
            break
        n *= 2
    a = _abs_sequence(head, tail, n, tail_ratio)
    terms = _series_terms(op, a, r)
    value = float(np.sum(terms))
    cv = CertifiedValue(value, tb + _rounding_allowance(terms))
    if tb > tol:
        raise TruncationCapError(f"tail bound {tb:.3e} above {tol:.3e} at {n} terms", partial=cv)
    return cv


def cesaro_extremal_closed_form(lam: float, r: float) -> float:
    L = log1r(r)
    return L / r + 2 * lam * L / r - (1 + lam) / (lam * r) * log1r(lam * r)


def dft_extremal_closed_form(lam: float, r: float) -> float:
    return lam / (1 - r) + (1 + lam) * (r / (1 - r) - lam * r / (1 - lam * r))


def extremal_majorant(op: OperatorSpec, lam: float, r: float, tol: float = DEFAULT_TOL) -> CertifiedValue:
    """Majorant of t^m (lam - t)/(1 - lam t): head lam, later norms lam^(s-1)(1 - lam^2)."""
    coeffs = extremal_coeffs(lam, op.m, 64)
    norms = np.abs(coeffs.values)
    cv = vector_majorant(op, norms[0], norms[1:], r, tol, tail_ratio=lam)
    if op.kind is Kind.CESARO or op.cesaro_limit:
        closed = cesaro_extremal_closed_form(lam, r)
        gap = abs(cv.value - closed)
        if gap > tol + cv.tail_bound + 64 * _EPS * abs(closed):
            raise ConsistencyError(
                f"Cesaro extremal series {cv.value!r} vs closed form {closed!r} (gap {gap:.2e})"
            )
    return cv


@dataclass(frozen=True)
class MajorantProfile:
    """Head norm plus either the worst-case tail or explicit tail norms."""

    op: OperatorSpec
    x: float
    tail: CoefficientSeq | None = None
    tail_ratio: float | None = None

    def __post_init__(self):
        _check_head(self.x)
        if self.tail is not None:
            ceiling = 1.0 - self.x ** 2
            vals = np.asarray(self.tail.values, dtype=float)
            if len(vals) and vals.max() > ceiling * (1 + 4 * _EPS) + 4 * _EPS:
                raise PreconditionError("tail norms exceed 1 - x^2")

    @property
    def worst_case(self) -> bool:
        return self.tail is None

    def evaluate(self, r: float, tol: float = DEFAULT_TOL) -> float:
        if self.worst_case:
            return worst_case_majorant(self.op, self.x, r)
        return vector_majorant(self.op, self.x, self.tail, r, tol, self.tail_ratio).value

    def margin(self, r: float, tol: float = DEFAULT_TOL) -> float:
        """Majorant minus the inequality's right-hand side (<= 0 when it holds)."""
        return self.evaluate(r, tol) - bound_function(self.op, r)

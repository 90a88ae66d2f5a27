"""Truncated coefficient sequences and certified evaluation on [0, 1).

Values are plain doubles; the only certification is an analytic bound on
the omitted tail of a series whose terms decay at least geometrically.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DivergentTailError, DomainError, TruncationCapError

TRUNCATION_CAP = 100_000
BLASCHKE_GUARD = 16


@dataclass(frozen=True)
class CoefficientSeq:
    """Coefficients a_m, ..., a_{m+N} of a power series starting at degree m."""

    offset: int
    values: np.ndarray

    def __post_init__(self):
        if self.offset < 0:
            raise DomainError(f"offset must be >= 0, got {self.offset}")
        vals = np.asarray(self.values)
        if vals.ndim != 1:
            raise DomainError("coefficient values must be one-dimensional")
        if not np.iscomplexobj(vals):
            vals = vals.astype(float)
        object.__setattr__(self, "values", vals)

    @property
    def truncation(self) -> int:
        return len(self.values) - 1

    @property
    def degrees(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + len(self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, degree: int):
        """Coefficient of t**degree (zero outside the stored window)."""
        i = degree - self.offset
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0.0


@dataclass(frozen=True)
class CertifiedValue:
    """A partial sum with a rigorous bound on the omitted remainder."""

    value: float
    tail_bound: float

    @property
    def lower(self) -> float:
        return self.value - self.tail_bound

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= x <= self.upper + slack


def _check_radius(r: float) -> float:
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    return r


def eval_truncated(seq: CoefficientSeq, r: float, weights=None, rho: float = 1.0) -> CertifiedValue:
    """Evaluate sum_n w_n a_n r^n over the stored window, with a geometric tail.

    ``rho`` must dominate the ratio of consecutive coefficients w_n a_n for
    every index past the window; the omitted terms are then bounded by
    (last term) * rho r / (1 - rho r).
    """
    r = _check_radius(r)
    if rho * r >= 1.0:
        raise DivergentTailError(f"tail ratio rho*r = {rho * r} >= 1")
    a = np.asarray(seq.values, dtype=float)
    w = np.ones_like(a) if weights is None else np.asarray(weights, dtype=float)
    if w.shape != a.shape:
        raise DomainError("weights must match the coefficient window")
    if np.any(a < 0) or np.any(w < 0):
        raise DomainError("eval_truncated expects nonnegative coefficients and weights")
    if len(a) == 0:
        return CertifiedValue(0.0, 0.0)
    terms = w * a * r ** seq.degrees.astype(float)
    value = float(np.sum(terms))
    q = rho * r
    tail = float(terms[-1]) * q / (1.0 - q)
    return CertifiedValue(value, tail)


def eval_adaptive(
    coeffs: Callable[[int], CoefficientSeq],
    r: float,
    weights: Callable[[np.ndarray], np.ndarray] | None = None,
    rho: float = 1.0,
    *,
    abs_tol: float | None = None,
    rel_tol: float = 1e-13,
    n_start: int = 64,
    cap: int = TRUNCATION_CAP,
) -> CertifiedValue:
    """Grow the truncation until the tail bound meets the requested accuracy.

    ``coeffs(N)`` must return a window of N + 1 coefficients; ``weights``
    maps the window's degree array to the weights. The target is
    ``abs_tol`` when given, otherwise ``rel_tol * value``.
    """
    n = n_start
    while True:
        n = min(n, cap)
        seq = coeffs(n)
        w = None if weights is None else weights(seq.degrees.astype(float))
        cv = eval_truncated(seq, r, w, rho)
        target = abs_tol if abs_tol is not None else rel_tol * abs(cv.value)
        if cv.tail_bound <= target:
            return cv
        if n >= cap:
            raise TruncationCapError(
                f"tail bound {cv.tail_bound:.3e} above target {target:.3e} at {cap} terms",
                partial=cv,
            )
        n *= 2


def choose_truncation(r: float, rho: float = 1.0, rel_tol: float = 1e-13, cap: int = TRUNCATION_CAP) -> int:
    """Smallest N with (rho r)^N * rho r / (1 - rho r) <= rel_tol.

    Appropriate when the leading term is of the same size as the sum.
    """
    r = _check_radius(r)
    q = rho * r
    if q >= 1.0:
        raise DivergentTailError(f"tail ratio rho*r = {q} >= 1")
    if q == 0.0:
        return 0
    n = int(np.ceil(np.log(rel_tol * (1.0 - q) / q) / np.log(q)))
    n = max(n, 0)
    if n > cap:
        raise TruncationCapError(f"{n} terms needed, cap is {cap}")
    return n


def extremal_coeffs(lam: float, m: int, n_max: int) -> CoefficientSeq:
    """Taylor coefficients of t^m (lam - t) / (1 - lam t), degrees m..m+n_max."""
    if not 0.0 < lam < 1.0:
        raise DomainError(f"lambda must lie in (0, 1), got {lam}")
    s = np.arange(n_max, dtype=float)
    vals = np.empty(n_max + 1)
    vals[0] = lam
    vals[1:] = lam ** s * (lam * lam - 1.0)
    return CoefficientSeq(m, vals)


def blaschke_coeffs(zeros: Sequence[complex], n_max: int) -> CoefficientSeq:
    """Taylor coefficients of prod_j (alpha_j - t) / (1 - conj(alpha_j) t).

    Each factor is expanded as (alpha - t) * sum_k (conj(alpha) t)^k and the
    product is accumulated by truncated convolution.
    """
    zeros = [complex(z) for z in zeros]
    if len(zeros) > 8:
        raise DomainError("at most 8 zeros are supported")
    for z in zeros:
        if abs(z) >= 1.0:
            raise DomainError(f"zero {z} is not inside the unit disk")
    length = n_max + 1 + BLASCHKE_GUARD
    prod = np.zeros(length, dtype=complex)
    prod[0] = 1.0
    k = np.arange(length)
    for alpha in zeros:
        geo = np.conj(alpha) ** k
        factor = alpha * geo
        factor[1:] -= geo[:-1]
        prod = np.convolve(prod, factor)[:length]
    vals = prod[: n_max + 1]
    if all(z.imag == 0 for z in zeros):
        vals = vals.real.copy()
    return CoefficientSeq(0, vals)

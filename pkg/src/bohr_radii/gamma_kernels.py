"""Gamma-ratio kernel c_k(beta) = Gamma(k + beta) / (Gamma(k + 1) Gamma(beta)).

These are the Taylor coefficients of (1 - t)^(-beta). They are generated by
the multiplicative recurrence c_k = c_{k-1} (k - 1 + beta) / k so that no
Gamma function is ever evaluated at a large argument.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class GammaRatioSeq:
    beta: float
    values: np.ndarray

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError(f"beta must be finite and > 0, got {beta!r}")
    return beta


def gamma_ratio_seq(beta: float, n_max: int) -> GammaRatioSeq:
    """Return c_0(beta), ..., c_{n_max}(beta)."""
    beta = _check_beta(beta)
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    k = np.arange(1, n_max + 1, dtype=float)
    ratios = (k - 1.0 + beta) / k
    values = np.empty(n_max + 1)
    values[0] = 1.0
    values[1:] = np.cumprod(ratios)
    values.setflags(write=False)
    return GammaRatioSeq(beta, values)


def convolution_identity_error(beta: float, n_max: int) -> float:
    """Max relative error of sum_{k<=n} c_k(beta) = c_n(beta + 1) over n <= n_max.

    The right-hand side comes from a separate recurrence with parameter
    beta + 1, so the two sides share no intermediate values.
    """
    beta = _check_beta(beta)
    lhs = np.cumsum(gamma_ratio_seq(beta, n_max).values)
    rhs = gamma_ratio_seq(beta + 1.0, n_max).values
    return float(np.max(np.abs(lhs - rhs) / rhs))

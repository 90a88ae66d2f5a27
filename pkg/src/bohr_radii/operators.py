"""Coefficient actions of the Cesaro, Bernardi, beta-Cesaro and DFT-majorant
operators, plus the right-hand sides of their Bohr-type inequalities."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .gamma_kernels import gamma_ratio_seq
from .series import CoefficientSeq

# |beta - 1| below this is treated as the Cesaro limit
BETA_ONE_WINDOW = 1e-8
COMPENSATED_THRESHOLD = 1000


class Kind(str, enum.Enum):
    CESARO = "cesaro"
    BERNARDI = "bernardi"
    BETA_CESARO = "beta-cesaro"
    DFT = "dft"


@dataclass(frozen=True)
class OperatorSpec:
    kind: Kind
    beta: float | None = None
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.BERNARDI:
            if self.beta is None or not math.isfinite(self.beta):
                raise DomainError("Bernardi operator needs a finite beta")
            if self.m < 0:
                raise DomainError(f"m must be >= 0, got {self.m}")
            if self.beta <= -self.m:
                raise DomainError(f"Bernardi needs beta > -m, got beta={self.beta}, m={self.m}")
        elif self.kind is Kind.BETA_CESARO:
            if self.beta is None or not math.isfinite(self.beta) or self.beta <= 0:
                raise DomainError(f"beta-Cesaro needs beta > 0, got {self.beta!r}")
            if self.m != 0:
                raise DomainError("m is only meaningful for the Bernardi operator")
        else:
            if self.beta is not None:
                raise DomainError(f"{self.kind.value} takes no beta parameter")
            if self.m != 0:
                raise DomainError("m is only meaningful for the Bernardi operator")

    @classmethod
    def cesaro(cls):
        return cls(Kind.CESARO)

    @classmethod
    def bernardi(cls, beta, m=0):
        return cls(Kind.BERNARDI, float(beta), int(m))

    @classmethod
    def beta_cesaro(cls, beta):
        return cls(Kind.BETA_CESARO, float(beta))

    @classmethod
    def dft(cls):
        return cls(Kind.DFT)

    @property
    def cesaro_limit(self) -> bool:
        """True for beta-Cesaro close enough to beta = 1 to use the log forms."""
        return self.kind is Kind.BETA_CESARO and abs(self.beta - 1.0) < BETA_ONE_WINDOW

    @property
    def label(self) -> str:
        if self.kind is Kind.BERNARDI:
            return f"bernardi(beta={self.beta:.15g},m={self.m})"
        if self.kind is Kind.BETA_CESARO:
            return f"beta-cesaro(beta={self.beta:.15g})"
        return self.kind.value


def prefix_sums(values) -> np.ndarray:
    """Running sums; Neumaier-compensated for long inputs."""
    a = np.asarray(values)
    if len(a) <= COMPENSATED_THRESHOLD:
        return np.cumsum(a)
    out = np.empty_like(a)
    s = a.dtype.type(0)
    c = a.dtype.type(0)
    for i, x in enumerate(a):
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
        out[i] = s + c
    return out


def _require_offset_zero(seq: CoefficientSeq, name: str):
    if seq.offset != 0:
        raise DomainError(f"{name} expects a series starting at degree 0, got offset {seq.offset}")


def cesaro_transform(seq: CoefficientSeq) -> CoefficientSeq:
    _require_offset_zero(seq, "cesaro_transform")
    n = np.arange(1, len(seq) + 1)
    return CoefficientSeq(0, prefix_sums(seq.values) / n)


def bernardi_transform(seq: CoefficientSeq, beta: float) -> CoefficientSeq:
    """b_s = (1 + beta) a_s / (beta + s) for s >= m (the m of ``seq.offset``)."""
    if beta <= -seq.offset:
        raise DomainError(f"Bernardi needs beta > -m, got beta={beta}, m={seq.offset}")
    s = seq.degrees.astype(float)
    return CoefficientSeq(seq.offset, (1.0 + beta) * seq.values / (beta + s))


def beta_cesaro_transform(seq: CoefficientSeq, beta: float) -> CoefficientSeq:
    """b_n = (1/(n+1)) sum_k c_{n-k}(beta) a_k."""
    _require_offset_zero(seq, "beta_cesaro_transform")
    c = gamma_ratio_seq(beta, seq.truncation).values
    conv = np.convolve(c, seq.values)[: len(seq)]
    return CoefficientSeq(0, conv / np.arange(1, len(seq) + 1))


def dft_majorant_transform(seq: CoefficientSeq) -> CoefficientSeq:
    _require_offset_zero(seq, "dft_majorant_transform")
    return CoefficientSeq(0, prefix_sums(np.abs(seq.values).astype(float)))


def transform(op: OperatorSpec, seq: CoefficientSeq) -> CoefficientSeq:
    if op.kind is Kind.CESARO:
        return cesaro_transform(seq)
    if op.kind is Kind.BERNARDI:
        return bernardi_transform(seq, op.beta)
    if op.kind is Kind.BETA_CESARO:
        return beta_cesaro_transform(seq, op.beta)
    return dft_majorant_transform(seq)


def log1r(r: float) -> float:
    """log(1 / (1 - r))."""
    return -math.log1p(-r)


def power_integral(r: float, beta: float) -> float:
    """int_0^r (1 - t)^(-beta) dt = (1 - (1 - r)^(1 - beta)) / (1 - beta)."""
    if abs(beta - 1.0) < BETA_ONE_WINDOW:
        return log1r(r)
    return -math.expm1((1.0 - beta) * math.log1p(-r)) / (1.0 - beta)


def check_open_radius(r: float) -> float:
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {r}")
    return r


def bound_function(op: OperatorSpec, r: float) -> float:
    """Right-hand side of the operator's Bohr-type inequality at radius r."""
    r = check_open_radius(r)
    if op.kind is Kind.CESARO or op.cesaro_limit:
        return log1r(r) / r
    if op.kind is Kind.BERNARDI:
        return r ** op.m / (op.m + op.beta)
    if op.kind is Kind.DFT:
        return 1.0 / (1.0 - r)
    return power_integral(r, op.beta) / r

"""Defining equations of the Bohr radii and a bracketed root finder."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .errors import DomainError, NoRootError, TruncationCapError
from .majorants import bernardi_series, growth_integral
from .operators import Kind, OperatorSpec, log1r, power_integral

DEFAULT_TOL = 1e-12
SCAN_LO = 1e-6
SCAN_HI = 1.0 - 1e-6


def cesaro_g1(r: float) -> float:
    """3 (1 - r) log(1/(1 - r)) - 2 r."""
    return 3.0 * (1.0 - r) * log1r(r) - 2.0 * r


_EXP_LIMIT = 700.0


def beta_cesaro_phi(r: float, beta: float) -> float:
    """3 A - 2 B with A = int_0^r (1-t)^-beta dt and B = int_0^r (1-t)^(-beta-1) dt.

    When (1 - r)^-beta would overflow the expression is divided by B > 0,
    which keeps sign and roots: 3 A/B - 2 with A/B written via expm1.
    """
    L = log1r(r)
    if beta * L < _EXP_LIMIT:
        return 3.0 * power_integral(r, beta) - 2.0 * growth_integral(r, beta)
    ratio = beta / (beta - 1.0) * math.exp(-L) * math.expm1(-(beta - 1.0) * L) / math.expm1(-beta * L)
    return 3.0 * ratio - 2.0


def dft_phi(r: float) -> float:
    return 1.0 - 3.0 * r


def bernardi_phi(r: float, beta: float, m: int, tol: float = DEFAULT_TOL) -> float:
    """1/(beta+m) - 2 sum_{s>m} r^(s-m)/(beta+s), series tail below tol/10.

    Close to r = 1 the series may need more terms than the cap allows. The
    partial sum is then still a certified lower bound for the series, so
    when it already makes the expression negative that upper bound is
    returned; it carries the correct sign, which is all a grid scan uses.
    """
    g0 = beta + m
    try:
        s = bernardi_series(g0, r, tol=tol / 20.0)
    except TruncationCapError as exc:
        upper = 1.0 / g0 - 2.0 * exc.partial.value
        if upper < 0:
            return upper
        raise
    return 1.0 / g0 - 2.0 * s.value


@dataclass(frozen=True)
class RadiusProblem:
    op: OperatorSpec
    phi: Callable[[float], float]
    equation_id: str
    scan_grid: int = 256
    tol: float = DEFAULT_TOL
    interval: tuple[float, float] = (SCAN_LO, SCAN_HI)

    def __post_init__(self):
        if not 0.0 < self.tol < 1e-3:
            raise DomainError(f"tol must lie in (0, 1e-3), got {self.tol}")
        if self.scan_grid < 2:
            raise DomainError("scan_grid must be >= 2")


@dataclass(frozen=True)
class RadiusResult:
    root: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    equation_id: str
    warnings: tuple[str, ...] = field(default=())


def defining_equation(op: OperatorSpec, tol: float = DEFAULT_TOL, scan_grid: int = 256) -> RadiusProblem:
    """The function whose interior zero is the operator's Bohr radius."""
    if op.kind is Kind.CESARO or op.cesaro_limit:
        phi, eq = cesaro_g1, "cesaro"
        if op.cesaro_limit:
            eq = f"{op.label}->cesaro"
    elif op.kind is Kind.DFT:
        phi, eq = dft_phi, "dft"
    elif op.kind is Kind.BETA_CESARO:
        beta = op.beta
        phi, eq = (lambda r: beta_cesaro_phi(r, beta)), op.label
    else:
        beta, m = op.beta, op.m
        phi, eq = (lambda r: bernardi_phi(r, beta, m, tol)), op.label
    return RadiusProblem(op, phi, eq, scan_grid=scan_grid, tol=tol)


def _bisect(phi, lo, hi, flo, fhi, tol):
    it = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = phi(mid)
        it += 1
        if fm > 0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return lo, hi, flo, fhi, it


def solve_radius(problem: RadiusProblem, polish_steps: int = 3) -> RadiusResult:
    """Locate the last +/- sign change on the scan grid, bisect, then polish.

    The defining functions of the Cesaro-type equations vanish at r = 0 and
    are positive just to its right, so the interior zero is isolated as the
    final crossing from positive to nonpositive values.
    """
    phi = problem.phi
    grid = np.linspace(*problem.interval, problem.scan_grid)
    vals = np.array([phi(float(r)) for r in grid])
    crossings = np.nonzero((vals[:-1] > 0) & (vals[1:] <= 0))[0]
    if len(crossings) == 0:
        raise NoRootError(
            f"{problem.equation_id}: no sign change on the scan grid "
            f"(min {vals.min():.3e}, max {vals.max():.3e})",
            grid_min=float(vals.min()),
            grid_max=float(vals.max()),
        )
    warnings = ()
    if len(crossings) > 1:
        pts = ", ".join(f"{grid[i]:.6g}" for i in crossings)
        warnings = (f"multiple +/- crossings at r ~ {pts}; using the last",)
    i = int(crossings[-1])
    lo, hi = float(grid[i]), float(grid[i + 1])
    flo, fhi = float(vals[i]), float(vals[i + 1])
    lo, hi, flo, fhi, iterations = _bisect(phi, lo, hi, flo, fhi, problem.tol)

    root, froot = (hi, fhi) if fhi == 0 else (0.5 * (lo + hi), None)
    for _ in range(polish_steps):
        if fhi == 0 or fhi == flo:
            break
        x = hi - fhi * (hi - lo) / (fhi - flo)
        if not lo < x < hi:
            break
        fx = phi(x)
        iterations += 1
        root, froot = x, fx
        if fx > 0:
            lo, flo = x, fx
        elif fx < 0:
            hi, fhi = x, fx
        else:
            break
    if froot is None:
        froot = phi(root)
        iterations += 1
    return RadiusResult(root, (lo, hi), abs(froot), iterations, problem.equation_id, warnings)


def bohr_radius(op: OperatorSpec, tol: float = DEFAULT_TOL) -> float:
    return solve_radius(defining_equation(op, tol)).root


@dataclass(frozen=True)
class SweepEntry:
    beta: float
    result: RadiusResult | None
    error: str | None = None


def thread_count() -> int:
    """Worker cap from BOHR_RADII_THREADS (0 or unset means automatic)."""
    try:
        n = int(os.environ.get("BOHR_RADII_THREADS", "0"))
    except ValueError:
        n = 0
    return n if n > 0 else min(8, os.cpu_count() or 1)


def radius_sweep(template: OperatorSpec, beta_values, tol: float = DEFAULT_TOL) -> list[SweepEntry]:
    """Solve for each beta in order; a failing entry does not stop the sweep."""

    def one(beta):
        beta = float(beta)
        try:
            if template.kind is Kind.BERNARDI:
                op = OperatorSpec.bernardi(beta, template.m)
            else:
                op = replace(template, beta=beta)
            return SweepEntry(beta, solve_radius(defining_equation(op, tol)))
        except (DomainError, NoRootError, TruncationCapError) as exc:
            return SweepEntry(beta, None, f"{type(exc).__name__}: {exc}")

    betas = list(beta_values)
    if not betas:
        return []
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        return list(pool.map(one, betas))


def scan_values(problem: RadiusProblem, samples: int):
    """Midpoint grid of (0, 1) and the defining function on it."""
    r = (np.arange(samples) + 0.5) / samples
    return r, np.array([problem.phi(float(x)) for x in r])


def count_sign_changes(values) -> int:
    s = np.sign(np.asarray(values))
    s = s[s != 0]
    return int(np.sum(s[1:] != s[:-1]))


def is_strictly_decreasing(values) -> bool:
    v = np.asarray(values)
    return bool(np.all(np.diff(v) < 0))


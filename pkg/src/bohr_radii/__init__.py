"""Bohr radii for the Cesaro, Bernardi, beta-Cesaro and DFT-majorant operators."""
from .errors import (
    ConsistencyError,
    DivergentTailError,
    DomainError,
    NoRootError,
    PreconditionError,
    TruncationCapError,
)
from .gamma_kernels import GammaRatioSeq, convolution_identity_error, gamma_ratio_seq
from .majorants import (
    MajorantProfile,
    extremal_majorant,
    vector_majorant,
    worst_case_majorant,
)
from .operators import (
    Kind,
    OperatorSpec,
    bernardi_transform,
    beta_cesaro_transform,
    bound_function,
    cesaro_transform,
    dft_majorant_transform,
)
from .radius import RadiusProblem, RadiusResult, bohr_radius, defining_equation, radius_sweep, solve_radius
from .series import CertifiedValue, CoefficientSeq, blaschke_coeffs, eval_truncated, extremal_coeffs
from .sharpness import SharpnessReport, Verdict, asymptotic_residual, schwarz_pick_check, sharpness_scan

__version__ = "0.1.0"

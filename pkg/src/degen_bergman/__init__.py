"""Bergman kernels of degenerating hyperelliptic curves.

Period matrices are computed from segment integrals along a cutting chain
of branch points.  The kernel densities they give can then be compared
with closed-form predictors for nodal and cuspidal degenerations.
"""
__version__ = "0.1.0"

from .algebra import RootPoly, format_complex, parse_complex, poly_from_roots
from .asymptotics import genus2_constants
from .harness import SweepConfig, acceptance_run, lambda_grid, run_sweep
from .kernel import intrinsic_kernel_at, jacobian_density, kernel_at, kernel_generic
from .periods import PeriodData, compute_periods
from .quadrature import QuadratureConfig, SegmentIntegral, segment_period
from .surface import (FamilyKind, generic_curve, make_family, normalization_curve,
                      chain_basis, symplectic_basis)

__all__ = [
    "RootPoly", "format_complex", "parse_complex", "poly_from_roots",
    "genus2_constants", "SweepConfig", "acceptance_run", "lambda_grid",
    "run_sweep", "intrinsic_kernel_at", "jacobian_density", "kernel_at",
    "kernel_generic", "PeriodData", "compute_periods", "QuadratureConfig",
    "SegmentIntegral", "segment_period", "FamilyKind", "generic_curve",
    "make_family", "normalization_curve", "chain_basis", "symplectic_basis",
]

"""Period matrices of hyperelliptic curves from chain segment integrals.

For ``omega_i = x^(i-1) dx / y`` the elementary period of ``c_k`` is twice
the segment integral from ``e_k`` to ``e_{k+1}`` on the branch of ``y``
continued along the cutting chain.  With a homology basis given by integer
vectors over the elementary cycles,

    A_ij = oint_{delta_j} omega_i,    B_ij = oint_{gamma_j} omega_i,

and ``Z = A^{-1} B`` is symmetric with positive definite imaginary part.
The continuation fixes every sign up to one global choice of sheet, which is
settled by requiring ``Im Z > 0``.
"""
import json
from dataclasses import dataclass, field

import numpy as np

from .algebra import chain_arguments
from .quadrature import (QuadratureConfig, SegmentIntegral, adaptive_oracle,
                         integrate_segment)
from .surface import chain_points, chain_basis

__all__ = [
    "PeriodData", "PeriodsError", "Diagnostics", "compute_periods",
    "elementary_periods", "validate_periods", "det_im_Z",
    "SYMMETRY_TOL", "COND_LIMIT",
]

SYMMETRY_TOL = 1e-6
COND_LIMIT = 1e12


class PeriodsError(ArithmeticError):
    """Period computation or validation failure."""


@dataclass(frozen=True)
class Diagnostics:
    sym_defect: float
    min_eig: float
    cond_A: float
    passed: bool


@dataclass(frozen=True)
class PeriodData:
    """A- and B-periods with the normalized period matrix and diagnostics."""

    A: np.ndarray
    B: np.ndarray
    Z: np.ndarray
    imZ: np.ndarray
    sym_defect: float
    min_eig: float
    cond_A: float
    flipped: bool = False
    extra: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_matrices(cls, A, B, orient=True):
        """Assemble from ``A`` and ``B``; optionally fix the sheet choice."""
        A = np.atleast_2d(np.asarray(A, dtype=complex))
        B = np.atleast_2d(np.asarray(B, dtype=complex))
        Z = np.linalg.solve(A, B)
        flipped = False
        if orient:
            w = np.linalg.eigvalsh(0.5 * (Z.imag + Z.imag.T))
            if np.all(w < 0):
                B, Z, flipped = -B, -Z, True
        imZ = Z.imag.copy()
        sym = float(np.max(np.abs(Z - Z.T))) if Z.size else 0.0
        min_eig = float(np.linalg.eigvalsh(0.5 * (imZ + imZ.T)).min())
        cond = float(np.linalg.cond(A))
        return cls(A, B, Z, imZ, sym, min_eig, cond, flipped)

    @property
    def genus(self):
        return self.Z.shape[0]

    def to_dict(self):
        def cm(M):
            return [[[float(v.real), float(v.imag)] for v in row] for row in M]
        return {"A": cm(self.A), "B": cm(self.B), "Z": cm(self.Z),
                "sym_defect": self.sym_defect, "min_eig": self.min_eig}

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def elementary_periods(spec, cfg=None, oracle=False, chain=None):
    """Matrix ``C[i, k] = oint_{c_k} x^i dx / y`` for ``i < g``, ``k < 2g``.

    Parameters
    ----------
    oracle : bool
        Evaluate the segments with :func:`adaptive_oracle` instead of the
        Chebyshev rule (independent check route).
    chain : sequence of complex, optional
        Override the chain order (defaults to :func:`chain_points`).
    """
    cfg = cfg or QuadratureConfig()
    e = np.asarray(chain if chain is not None else chain_points(spec), dtype=complex)
    g = spec.genus
    args = chain_arguments(e)
    C = np.empty((g, 2 * g), dtype=complex)
    info = []
    for s in range(2 * g):
        others = [j for j in range(e.size) if j not in (s, s + 1)]
        for i in range(g):
            si = SegmentIntegral(
                i, e[s], e[s + 1], tuple(e[others]),
                tuple(args[s, others]), args[s, s], args[s, s + 1])
            if oracle:
                C[i, s] = 2.0 * adaptive_oracle(si)
            else:
                res = integrate_segment(si, cfg)
                C[i, s] = 2.0 * res.value
                info.append((s, i, res.method, res.order, res.error))
    return C / np.sqrt(complex(spec.lead)), info


def compute_periods(spec, basis=None, cfg=None, tol=SYMMETRY_TOL, oracle=False,
                    validate=True):
    """Period data of `spec` in `basis` (default: the chain basis).

    Raises
    ------
    PeriodsError
        If ``A`` is numerically singular, or, with `validate`, if the
        symmetry defect exceeds `tol` or ``Im Z`` is not positive definite.
    """
    basis = basis or chain_basis(spec)
    if basis.genus != spec.genus:
        raise PeriodsError("basis genus does not match the curve")
    C, info = elementary_periods(spec, cfg, oracle=oracle)
    A = C @ basis.deltas.T.astype(float)
    B = C @ basis.gammas.T.astype(float)
    if np.linalg.cond(A) > COND_LIMIT:
        raise PeriodsError(f"A-period matrix is singular (cond {np.linalg.cond(A):.3g})")
    pd = PeriodData.from_matrices(A, B)
    pd.extra["segments"] = info
    if validate:
        d = validate_periods(pd, tol)
        if not d.passed:
            raise PeriodsError(
                f"period validation failed: sym_defect={d.sym_defect:.3g}, "
                f"min_eig={d.min_eig:.3g}")
    return pd


def validate_periods(pd, tol=SYMMETRY_TOL):
    """Symmetry defect, smallest eigenvalue of ``Im Z`` and ``cond(A)``."""
    passed = bool(pd.sym_defect <= tol and pd.min_eig > 0)
    return Diagnostics(pd.sym_defect, pd.min_eig, pd.cond_A, passed)


def det_im_Z(pd):
    """Determinant of ``Im Z`` (positive for validated data)."""
    Y = 0.5 * (pd.imZ + pd.imZ.T)
    d = float(np.linalg.det(Y))
    if not d > 0:
        raise PeriodsError("Im Z has non-positive determinant")
    return d

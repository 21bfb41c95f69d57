"""Kernel densities in the chart ``z = sqrt(x)`` and the Jacobian density.

With ``x = z^2`` the differentials ``omega_i = x^(i-1) dx / y`` become
``2 z^(2i-1) dz / sqrt(f(z^2))`` and the kernel density is

    k(z) = 4 sum_ij M_ij z^(2i) conj(z)^(2j) / (|z|^2 |f(z^2)|),

with ``M = (Im Z)^{-1}``.  For the three families the denominator
``|z|^2 |f(z^2)|`` is written out explicitly (:func:`kernel_at`).
:func:`kernel_generic` assembles the same number from the one-form values
and serves as a cross-check.

The weight ``M = (Im Z)^{-1}`` pairs with the *normalized* differentials
``A^{-1} omega``.  Used with the raw ``omega_i``, as in the family formulas,
the result depends on the choice of homology basis.
:func:`intrinsic_kernel_at` inserts the normalization and returns the
basis-independent density.
"""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .algebra import as_complex
from .surface import FamilyKind

__all__ = [
    "KernelSample", "KernelError", "kernel_at", "kernel_generic",
    "kernel_x", "intrinsic_kernel_at", "normalization_kernel",
    "jacobian_density", "inverse_imZ", "family_denominator",
    "normalization_denominator", "DENOMINATOR_FLOOR",
]

DENOMINATOR_FLOOR = 1e-300


class KernelError(ArithmeticError):
    """Evaluation point at a branch point preimage or invalid input."""


@dataclass(frozen=True)
class KernelSample:
    lam: complex
    z: complex
    k_lambda: float
    k0: float
    psi: float
    mu_lambda: float


def inverse_imZ(pd):
    """``(Im Z)^{-1}`` by a Cholesky solve of the symmetrized ``Im Z``."""
    Y = 0.5 * (pd.imZ + pd.imZ.T)
    try:
        c = cho_factor(Y)
    except np.linalg.LinAlgError as exc:
        raise KernelError("Im Z is not positive definite") from exc
    M = cho_solve(c, np.eye(Y.shape[0]))
    return 0.5 * (M + M.T)


def _powers(z, g):
    return np.array([z ** (2 * i) for i in range(1, g + 1)], dtype=complex)


def _hermitian(M, u, v=None):
    v = u if v is None else v
    return float(np.real(u @ M @ np.conj(v)))


def family_denominator(spec, z):
    """``|z|^2 |f(z^2)|`` written out per family."""
    z = complex(z)
    w = z * z
    P = spec.P
    if spec.kind is FamilyKind.NODE:
        d = z ** 4 * (w - spec.lam) * (w - 1.0) * P(w)
    elif spec.kind is FamilyKind.CUSP_I:
        d = z ** 4 * (w * w - spec.lam) * P(w)
    elif spec.kind is FamilyKind.CUSP_II:
        lam = spec.lam
        d = z ** 4 * (w - lam) * (w - lam * lam) * P(w)
    else:
        d = w * spec.f(w)
    return abs(complex(d))


def normalization_denominator(spec, z):
    """Denominator of the normalization kernel in the ``z`` chart."""
    z = complex(z)
    w = z * z
    if spec.kind is FamilyKind.NODE:
        return abs(complex(z * z * (w - 1.0) * spec.P(w)))
    if spec.kind in (FamilyKind.CUSP_I, FamilyKind.CUSP_II):
        return abs(complex(z ** 4 * spec.P(w)))
    raise KernelError("normalization kernel needs a family member")


def _guard(den):
    if not den > DENOMINATOR_FLOOR:
        raise KernelError("z is at (or numerically on) a branch point preimage")
    return den


def kernel_at(spec, pd, z):
    """Kernel density ``k_lambda(z)`` from the explicit family formula."""
    z = as_complex(z)
    if z == 0:
        raise KernelError("z must be nonzero")
    if pd.genus != spec.genus:
        raise KernelError("period data genus does not match the curve")
    den = _guard(family_denominator(spec, z))
    return 4.0 * _hermitian(inverse_imZ(pd), _powers(z, spec.genus)) / den


def _one_forms(spec, z):
    """Values ``w_i(z) = 2 z^(2i-1) / sqrt(f(z^2))`` (common branch)."""
    z = as_complex(z)
    fz = complex(spec.f(z * z))
    if not abs(fz) > DENOMINATOR_FLOOR:
        raise KernelError("z is at a branch point preimage")
    root = np.sqrt(fz)
    return np.array([2 * z ** (2 * i - 1) / root for i in range(1, spec.genus + 1)])


def kernel_generic(spec, pd, z):
    """Same density assembled from the one-form values (cross-check)."""
    if pd.genus != spec.genus:
        raise KernelError("period data genus does not match the curve")
    w = _one_forms(spec, z)
    return _hermitian(inverse_imZ(pd), w)


def kernel_x(spec, pd, x):
    """Density in the ``x`` chart, ``sum M_ij x^(i-1) conj(x)^(j-1) / |f(x)|``."""
    x = as_complex(x)
    fx = abs(complex(spec.f(x)))
    _guard(fx)
    u = np.array([x ** i for i in range(spec.genus)], dtype=complex)
    return _hermitian(inverse_imZ(pd), u) / fx


def intrinsic_kernel_at(spec, pd, z):
    """Basis-independent density with normalized differentials ``A^{-1} omega``."""
    z = as_complex(z)
    if z == 0:
        raise KernelError("z must be nonzero")
    den = _guard(family_denominator(spec, z))
    u = np.linalg.solve(pd.A, _powers(z, spec.genus))
    return 4.0 * _hermitian(inverse_imZ(pd), u) / den


def normalization_kernel(spec, pd0, z):
    """Density ``k_0(z)`` of the normalization curve in the ``z`` chart."""
    z = as_complex(z)
    if z == 0:
        raise KernelError("z must be nonzero")
    if pd0.genus != spec.genus - 1:
        raise KernelError("normalization period data must have genus g - 1")
    den = _guard(normalization_denominator(spec, z))
    return 4.0 * _hermitian(inverse_imZ(pd0), _powers(z, pd0.genus)) / den


def jacobian_density(pd):
    """Flat density ``1 / det(Im Z)`` of the Jacobian in normalized coordinates."""
    Y = 0.5 * (pd.imZ + pd.imZ.T)
    d = float(np.linalg.det(Y))
    if not d > 0:
        raise KernelError("Im Z is not positive definite")
    return 1.0 / d

"""Closed-form predictors for the degenerating families.

Genus-2 constants are evaluated with the same segment quadrature and the
same chain branch convention as the periods, so each constant carries the
sign that the corresponding period has in this package.  Formulas that
involve ``sqrt(P(0))`` or powers of ``lam`` use principal branches.
"""
import math
from dataclasses import dataclass, fields

import numpy as np
from scipy import integrate

from .algebra import RootPoly, as_complex, chain_arguments
from .kernel import inverse_imZ, normalization_kernel
from .periods import det_im_Z
from .quadrature import QuadratureConfig, SegmentIntegral, segment_period
from .surface import FamilyKind

__all__ = [
    "Genus2Constants", "star_vector", "cuspI_vectors", "heart_vector",
    "genus2_constants", "node_prediction", "node_prediction_genus2",
    "cuspI_limit", "cuspII_prediction", "jacobian_prediction",
    "reference_asymptotes", "reference_closed_form", "chain_segment",
]


def _sqrt(x):
    # adding +0j clears a negative zero so -lam for real lam > 0 sits on +i
    return complex(np.sqrt(complex(x) + 0j))


def _P0(P):
    if not isinstance(P, RootPoly):
        P = RootPoly(tuple(P))
    p0 = complex(P(0.0))
    if p0 == 0:
        raise ZeroDivisionError("P(0) = 0")
    return p0


def chain_segment(points, s, k, cfg=None):
    """``int_{e_s}^{e_{s+1}} x^k dx / sqrt(prod (x - e_j))`` on the chain branch."""
    e = np.asarray(points, dtype=complex)
    args = chain_arguments(e)
    o = [j for j in range(e.size) if j not in (s, s + 1)]
    si = SegmentIntegral(k, e[s], e[s + 1], tuple(e[o]), tuple(args[s, o]),
                         args[s, s], args[s, s + 1])
    return segment_period(si, cfg)


def star_vector(g, P):
    """``g - 1`` copies of ``-2i / sqrt(P(0))``."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    return np.full(g - 1, -2j / _sqrt(_P0(P)))


def _u_integral(i, cfg=None):
    """``int_0^1 (u - 1)^(i-1) du / sqrt(u (u-1) (u-2))`` on the chain branch."""
    tot = 0j
    for j in range(i):
        coef = math.comb(i - 1, j) * (-1) ** (i - 1 - j)
        tot += coef * chain_segment([0, 1, 2], 0, j, cfg)
    return tot


def cuspI_vectors(g, P, lam, cfg=None):
    """Entries ``i = 2..g`` of the first-cusp column vector and its partner.

    ``star_i = -2 lam^((2i-3)/4) / sqrt(P(0)) * int_0^1 (u-1)^(i-1) du /
    sqrt(u(u-1)(u-2))`` and ``diamond_i = (-1)^(i-1) i star_i``.
    """
    lam = as_complex(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    sp0 = _sqrt(_P0(P))
    star = np.array([-2 * lam ** ((2 * i - 3) / 4) / sp0 * _u_integral(i, cfg)
                     for i in range(2, g + 1)], dtype=complex)
    diamond = np.array([(-1) ** (i - 1) * 1j * star[i - 2]
                        for i in range(2, g + 1)], dtype=complex)
    return star, diamond


def heart_vector(g, P, lam):
    """Entries ``-2 lam^(i-2) sqrt(-lam) / sqrt(P(0))`` for ``i = 2..g``."""
    lam = as_complex(lam)
    sp0 = _sqrt(_P0(P))
    return np.array([-2 * lam ** (i - 2) * _sqrt(-lam) / sp0
                     for i in range(2, g + 1)], dtype=complex)


@dataclass(frozen=True)
class Genus2Constants:
    c: complex
    tau: complex
    c1: complex
    c2: complex
    c3: complex
    c4: complex
    c5: complex
    c6: complex
    c7: complex
    d1: complex
    d2: complex
    d3: complex
    d4: complex

    def to_dict(self):
        return {f.name: [float(getattr(self, f.name).real),
                         float(getattr(self, f.name).imag)] for f in fields(self)}


def _ratio(points, cfg):
    r = chain_segment(points, 1, 0, cfg) / chain_segment(points, 0, 0, cfg)
    return -r if r.imag < 0 else r


def genus2_constants(a, b, cfg=None):
    """Genus-2 constants for ``P = (x - a)(x - b)``.

    Node normalization chain ``1 -> a -> b``, cusp normalization chain
    ``0 -> a -> b``:

    * ``c``, ``tau``: ratio of the (a, b) integral to the first one, oriented
      so that the imaginary part is positive;
    * ``c1 = sqrt(ab) int_1^a``, ``c3 = sqrt(ab) int_0^a``;
    * ``c2``: the limit of ``A_12`` around the node, i.e. the pole
      contribution at ``x = 0`` plus twice ``int_1^a dx/(x y_0)``;
    * ``c4, c5``: ``-2 int_0^1 (u - 1)^m du / sqrt(u(u-1)(u-2))`` for
      ``m = 1, 0``;
    * ``c6 = (2 / ab) int_0^a x dx / y_0`` (equal to the cycle integral of
      ``dx / (x y_0)`` since ``d(y_0/x) = (x - ab/x) dx / (2 y_0)``);
    * ``c7 = -(2/sqrt(ab)) int_0^1 sqrt(1/v - 1) dv``;
    * ``d1..d4 = -2 int_a^b`` of ``dx/(x y_0)`` and ``dx/y_0`` on the two
      normalization curves.
    """
    a, b = as_complex(a), as_complex(b)
    cfg = cfg or QuadratureConfig()
    node = [1.0 + 0j, a, b]
    cusp = [0j, a, b]
    sab = _sqrt(a * b)
    f0 = _sqrt(-1.0) * _sqrt(-a) * _sqrt(-b)  # tracked sqrt of (0-1)(0-a)(0-b)
    unit = [0j, 1.0 + 0j]
    return Genus2Constants(
        c=_ratio(node, cfg),
        tau=_ratio(cusp, cfg),
        c1=sab * chain_segment(node, 0, 0, cfg),
        c2=-2j * math.pi / f0 + 2 * chain_segment(node, 0, -1, cfg),
        c3=sab * chain_segment(cusp, 0, 0, cfg),
        c4=-2 * (chain_segment([0, 1, 2], 0, 1, cfg) - chain_segment([0, 1, 2], 0, 0, cfg)),
        c5=-2 * chain_segment([0, 1, 2], 0, 0, cfg),
        c6=2 / (a * b) * chain_segment(cusp, 0, 1, cfg),
        c7=-2 / sab * 1j * (chain_segment(unit, 0, 0, cfg) - chain_segment(unit, 0, 1, cfg)),
        d1=-2 * chain_segment(node, 1, -1, cfg),
        d2=-2 * chain_segment(node, 1, 0, cfg),
        d3=-2 * chain_segment(cusp, 1, -1, cfg),
        d4=-2 * chain_segment(cusp, 1, 0, cfg),
    )


def _z_powers(z, n):
    return np.array([z ** (2 * i) for i in range(1, n + 1)], dtype=complex)


def node_prediction(z, pd0, star):
    """Predicted limit of ``(psi - log k_0)(-log|lam|)/pi`` for the node.

    ``(1 - 2 Re sum_i (S Im(A_0^{-1} star))_i z^(2i)) / sum_ij S_ij z^(2i)
    conj(z)^(2j)`` with ``S = (Im Z_0)^{-1}``.
    """
    z = as_complex(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    S = inverse_imZ(pd0)
    v = S @ np.imag(np.linalg.solve(pd0.A, np.asarray(star, dtype=complex)))
    u = _z_powers(z, S.shape[0])
    num = 1.0 - 2.0 * float(np.real(v @ u))
    den = float(np.real(u @ S @ np.conj(u)))
    if not den > 0:
        raise ValueError("degenerate denominator")
    return num / den


def node_prediction_genus2(z, c, c1):
    """Genus-2 form ``(Im c + (z^2 + conj(z)^2) Re(1/c1)) / |z|^4``."""
    z = as_complex(z)
    return (complex(c).imag + 2 * (z * z).real * (1 / complex(c1)).real) / abs(z) ** 4


def cuspI_limit(z, spec, pd0):
    """Limit ``k_0(z) + 4 / |z^4 P(z^2)|`` of the first-cusp kernel."""
    z = as_complex(z)
    k0 = normalization_kernel(spec, pd0, z)
    return k0 + 4.0 / abs(complex(z ** 4 * spec.P(z * z)))


def cuspII_prediction(z, spec, pd0):
    """Predicted limit ``4 pi / (k_0 |z^4 P(z^2)|)`` of ``(psi - log k_0)(-log|lam|)``."""
    z = as_complex(z)
    k0 = normalization_kernel(spec, pd0, z)
    return 4.0 * math.pi / (k0 * abs(complex(z ** 4 * spec.P(z * z))))


def jacobian_prediction(kind, pd0, lam):
    """Predicted ``log mu_lambda``."""
    kind = FamilyKind(kind)
    d0 = det_im_Z(pd0)
    if kind is FamilyKind.CUSP_I:
        return -math.log(d0)
    L = -math.log(abs(as_complex(lam)))
    if not L > 0:
        raise ValueError("|lambda| must be below 1")
    return -math.log(L) + math.log(math.pi / d0)


_EXPONENT = {"I": 1.0, "II": 2.0}


def _real_integral(beta, t):
    """``int_1^t ds / (s^beta sqrt(t - s))`` for ``t > 1`` (real, positive)."""
    mid = 0.5 * (1.0 + t)

    def near_one(w):  # s = exp(w)
        s = math.exp(w)
        return s ** (1.0 - beta) / math.sqrt(t - s)

    def near_t(v):  # s = t - v^2, sqrt(t - s) = v
        return 2.0 / (t - v * v) ** beta

    i1, _ = integrate.quad(near_one, 0.0, math.log(mid), epsabs=0, epsrel=1e-13, limit=400)
    i2, _ = integrate.quad(near_t, 0.0, math.sqrt(t - mid), epsabs=0, epsrel=1e-13, limit=400)
    return i1 + i2


def reference_asymptotes(t, which, alpha=2.0):
    """``(lhs, rhs)`` for the large-``t`` integrals ``int_1^t ds/(s^beta sqrt(s - t))``.

    ``which`` is ``"I"`` (``beta = 1``), ``"II"`` (``beta = 2``) or
    ``"alpha"`` (``beta = alpha + 1``).  The left side is computed by
    adaptive quadrature, the right side is the leading asymptote
    ``i log(t)/sqrt(t)``, ``-i/sqrt(t)`` or ``-i/(alpha sqrt(t))``.

    The closed form behind ``"I"`` takes ``sqrt(s - t) = -i sqrt(t - s)``
    while the other two take the principal ``+i sqrt(t - s)``; each side is
    evaluated on the branch its own asymptote refers to.
    """
    t = float(t)
    if not t >= 10:
        raise ValueError("t must be at least 10")
    if which == "I":
        beta, sign, rhs = 1.0, -1.0, 1j * math.log(t) / math.sqrt(t)
    elif which == "II":
        beta, sign, rhs = 2.0, 1.0, -1j / math.sqrt(t)
    elif which == "alpha":
        alpha = float(alpha)
        if alpha < 1:
            raise ValueError("alpha must be at least 1")
        beta, sign, rhs = alpha + 1.0, 1.0, -1j / (alpha * math.sqrt(t))
    else:
        raise ValueError(f"unknown asymptote {which!r}")
    lhs = _real_integral(beta, t) / (sign * 1j)
    return complex(lhs), complex(rhs)


def reference_closed_form(t, which):
    """Exact values of the first two integrals (independent of quadrature)."""
    t = float(t)
    J1 = 2.0 / math.sqrt(t) * math.acosh(math.sqrt(t))
    if which == "I":
        return 1j * J1
    if which == "II":
        # int_1^t ds/(s^2 sqrt(t-s)) = sqrt(t-1)/t + J1/(2t)
        return -1j * (math.sqrt(t - 1.0) / t + J1 / (2.0 * t))
    raise ValueError(f"no closed form for {which!r}")

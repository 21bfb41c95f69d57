"""Segment integrals ``int_p^q x^k dx / sqrt((x-p)(x-q) prod(x-r_j))``.

With ``x = m + h cos(theta)``, ``m = (p+q)/2`` and ``h = (q-p)/2``, the two
endpoint singularities cancel against ``dx`` and the integral becomes

    (h/|h|) exp(-i Phi) * int_0^pi G(theta) dtheta,
    G(theta) = x^k / prod_j sqrt(x - r_j),

where ``Phi`` is the mean argument of the two endpoint factors.  Plain
Gauss-Chebyshev quadrature of the first kind is the midpoint rule in theta,
which converges geometrically at a rate fixed by the distance of the
nearest singularity of ``G`` from the real theta axis.  When another root
sits close to the segment (as happens for clustered branch points of a
degenerating curve) that rate collapses, and the same theta integral is
then evaluated by composite Gauss-Legendre on a mesh graded geometrically
toward the real part of the offending singularity.

An independent check is provided by :func:`adaptive_oracle`, which removes
the endpoint singularities by a quadratic substitution and hands the smooth
remainder to QUADPACK.
"""
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate

from .algebra import AlgebraError, TUBE_FRACTION, as_complex, _check_tube

__all__ = [
    "QuadratureConfig", "SegmentIntegral", "QuadratureResult",
    "QuadratureError", "segment_period", "integrate_segment",
    "adaptive_oracle", "singularity_angles",
]


class QuadratureError(ArithmeticError):
    """Quadrature failed to reach the requested tolerance."""

    def __init__(self, msg, last=None, previous=None):
        super().__init__(msg)
        self.last = last
        self.previous = previous


@dataclass(frozen=True)
class QuadratureConfig:
    """Order control for :func:`segment_period`.

    ``order`` is the starting number of Chebyshev nodes.  It is doubled
    until two successive values agree to `rel_tol` or `max_order` is passed.
    """

    order: int = 256
    max_order: int = 8192
    rel_tol: float = 1e-12

    def __post_init__(self):
        if int(self.order) < 8:
            raise ValueError("order must be at least 8")
        if int(self.max_order) < int(self.order):
            raise ValueError("max_order must be >= order")
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")


@dataclass(frozen=True)
class SegmentIntegral:
    """One instance of the segment integrand.

    Parameters
    ----------
    k : int
        Power of ``x`` in the numerator.  Negative powers are allowed as
        long as ``x = 0`` is off the closed segment.
    p, q : complex
        Endpoints, both simple zeros of the radicand.
    other_roots : tuple of complex
        Remaining zeros of the radicand.
    other_args : tuple of float, optional
        Argument of ``p - r_j`` for each other root, already continued to
        ``p``.  Defaults to the principal arguments.
    p_arg, q_arg : float, optional
        Constant arguments of ``x - p`` and ``x - q`` along the open
        segment.  Default to ``Arg(q - p)`` and ``Arg(p - q)``.
    """

    k: int
    p: complex
    q: complex
    other_roots: tuple = ()
    other_args: tuple = None
    p_arg: float = None
    q_arg: float = None

    def __post_init__(self):
        p, q = as_complex(self.p), as_complex(self.q)
        if p == q:
            raise AlgebraError("segment endpoints coincide")
        roots = tuple(as_complex(r) for r in self.other_roots)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "other_roots", roots)
        object.__setattr__(self, "k", int(self.k))
        if self.other_args is None:
            args = tuple(math.atan2((p - r).imag, (p - r).real) for r in roots)
        else:
            args = tuple(float(a) for a in self.other_args)
            if len(args) != len(roots):
                raise AlgebraError("one argument per other root is required")
        object.__setattr__(self, "other_args", args)
        if self.p_arg is None:
            object.__setattr__(self, "p_arg", float(np.angle(q - p)))
        if self.q_arg is None:
            object.__setattr__(self, "q_arg", float(np.angle(p - q)))
        for r in roots:
            _check_tube(p, q, r)
        if self.k < 0:
            _check_tube(p, q, 0j)

    @property
    def prefactor(self):
        h = 0.5 * (self.q - self.p)
        phase = 0.5 * (self.p_arg + self.q_arg)
        return h / abs(h) * complex(math.cos(phase), -math.sin(phase))


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    order: int
    error: float
    method: str
    diagnostics: dict = field(default_factory=dict)


def _offset(theta, p, h, r):
    """``x(theta) - r`` anchored at the endpoint nearer to `r`."""
    if abs(r - p) <= abs(r - (p + 2 * h)):
        return (p - r) + 2 * h * np.cos(0.5 * theta) ** 2
    return (p + 2 * h - r) - 2 * h * np.sin(0.5 * theta) ** 2


def _integrand(si):
    p = si.p
    h = 0.5 * (si.q - si.p)
    roots = si.other_roots
    bases = [p - r for r in roots]

    def g(theta):
        val = np.ones_like(theta, dtype=complex)
        if si.k:
            val = _offset(theta, p, h, 0j) ** si.k
        for r, base, arg0 in zip(roots, bases, si.other_args):
            d = _offset(theta, p, h, r)
            ang = arg0 + np.angle(d / base)
            val = val / (np.sqrt(np.abs(d)) * np.exp(0.5j * ang))
        return val
    return g


def singularity_angles(si):
    """Complex theta preimages of the singular points of the integrand.

    Each other root ``r`` (and the origin when ``k < 0``) corresponds to a
    theta with ``x(theta) = r``.  The imaginary part of that theta sets the
    geometric convergence rate of the midpoint rule.
    """
    p, q = si.p, si.q
    h = 0.5 * (q - p)
    pts = list(si.other_roots)
    if si.k < 0:
        pts.append(0j)
    out = []
    for r in pts:
        # Stable arcsine forms; arccos((r - m)/h) loses everything when r
        # hugs an endpoint.
        if abs(r - p) <= abs(r - q):
            th = np.pi - 2 * np.arcsin(np.sqrt((r - p) / (2 * h) + 0j))
        else:
            th = 2 * np.arcsin(np.sqrt((q - r) / (2 * h) + 0j))
        out.append(complex(th))
    return out


def _chebyshev(g, n):
    theta = (np.arange(n) + 0.5) * (np.pi / n)
    return g(theta).sum() * (np.pi / n)


def _graded_breaks(angles, grading_floor=0.5):
    breaks = {0.0, np.pi}
    for th in angles:
        a, b = th.real, max(abs(th.imag), 1e-300)
        if b >= grading_floor:
            continue
        if 0.0 < a < np.pi:
            breaks.add(a)
        d = b
        while d < np.pi:
            for c in (a - d, a + d):
                if 0.0 < c < np.pi:
                    breaks.add(c)
            d *= 2.0
    return np.array(sorted(breaks))


def _composite_gl(g, breaks, n):
    x, w = leggauss(n)
    lo, hi = breaks[:-1], breaks[1:]
    half = 0.5 * (hi - lo)
    theta = half[:, None] * x[None, :] + (0.5 * (hi + lo))[:, None]
    return (g(theta) * w[None, :] * half[:, None]).sum()


def integrate_segment(si, cfg=None):
    """Evaluate `si` and report order, error estimate and method.

    The midpoint (Chebyshev) rule is used whenever the singularity angles
    predict convergence to ``cfg.rel_tol`` within ``cfg.max_order`` nodes;
    otherwise the graded composite Gauss-Legendre rule is used.  Both
    compare an ``n``-node result with a ``2n``-node result.
    """
    cfg = cfg or QuadratureConfig()
    g = _integrand(si)
    angles = singularity_angles(si)
    bmin = min((abs(t.imag) for t in angles), default=np.inf)
    # midpoint-rule error ~ exp(-2 n b); ask for headroom below rel_tol
    needed = math.log(1e3 / cfg.rel_tol) / (2 * bmin) if bmin > 0 else np.inf
    pref = si.prefactor
    if needed <= cfg.max_order:
        n = cfg.order
        prev = _chebyshev(g, n)
        scale = None
        while n < cfg.max_order:
            n *= 2
            cur = _chebyshev(g, n)
            if scale is None:
                scale = np.abs(g((np.arange(n) + 0.5) * (np.pi / n))).sum() * (np.pi / n)
            err = abs(cur - prev) / max(abs(cur), 1e-300)
            if abs(cur - prev) <= cfg.rel_tol * max(abs(cur), 1e-16 * scale):
                return QuadratureResult(pref * cur, n, err, "chebyshev")
            prev = cur
        # fall through to the graded rule on non-convergence
    breaks = _graded_breaks(angles)
    n = 20
    prev = _composite_gl(g, breaks, n)
    while n <= 160:
        cur = _composite_gl(g, breaks, 2 * n)
        err = abs(cur - prev) / max(abs(cur), 1e-300)
        if err <= cfg.rel_tol:
            return QuadratureResult(pref * cur, 2 * n, err, "graded",
                                    {"panels": breaks.size - 1})
        prev, n = cur, 2 * n
    raise QuadratureError(
        f"segment {si.p}->{si.q} did not converge (rel. change {err:.2e})",
        last=pref * cur, previous=pref * prev)


def segment_period(si, cfg=None):
    """Value of the segment integral described by `si`.

    Examples
    --------
    >>> v = segment_period(SegmentIntegral(0, 0, 1))
    >>> bool(abs(abs(v) - np.pi) < 1e-12)
    True
    """
    return integrate_segment(si, cfg).value


def _quad(f, a, b, epsrel, points=None):
    val, err = integrate.quad(f, a, b, epsabs=0.0, epsrel=epsrel, limit=400,
                              complex_func=True, points=points)
    return val, err


def adaptive_oracle(si, epsrel=1e-11):
    """Independent evaluation of `si` by adaptive Gauss-Kronrod quadrature.

    The segment is split at its midpoint.  On the half touching ``p`` the
    substitution ``x = p + u**2 (m - p)`` removes the inverse square root
    singularity, and symmetrically at ``q``.  Each smooth half-integral is
    then passed to QUADPACK's adaptive Gauss-Kronrod routine.  Factor
    arguments follow the same continuation convention as
    :func:`segment_period` but are computed pointwise from ``x`` itself.
    """
    p, q = si.p, si.q
    m = 0.5 * (p + q)
    rp, rq = math.sqrt(abs(m - p)), math.sqrt(abs(q - m))
    ep = complex(math.cos(0.5 * si.p_arg), math.sin(0.5 * si.p_arg))
    eq = complex(math.cos(0.5 * si.q_arg), math.sin(0.5 * si.q_arg))

    def others(x):
        val = 1.0 + 0j
        for r, a0 in zip(si.other_roots, si.other_args):
            d = x - r
            ang = a0 + np.angle(d / (p - r))
            val /= math.sqrt(abs(d)) * complex(math.cos(0.5 * ang), math.sin(0.5 * ang))
        return val

    def sq_q(x):
        return math.sqrt(abs(x - q)) * eq

    def sq_p(x):
        return math.sqrt(abs(x - p)) * ep

    def left(u):  # x = p + u^2 (m - p), sqrt(x - p) = u * rp * ep
        x = p + u * u * (m - p)
        return 2.0 * (m - p) * x ** si.k * others(x) / (rp * ep * sq_q(x))

    def right(u):  # x = q - u^2 (q - m), sqrt(x - q) = u * rq * eq
        x = q - u * u * (q - m)
        return 2.0 * (q - m) * x ** si.k * others(x) / (rq * eq * sq_p(x))

    # breakpoints in u near roots that hug an endpoint help QUADPACK
    def hints(a, span):
        pts = []
        for r in si.other_roots:
            t = ((r - a) / span)
            if 0 < t.real < 1 and abs(t) < 0.25:
                pts.append(math.sqrt(abs(t)))
        return sorted(set(pts)) or None

    lv, _ = _quad(left, 0.0, 1.0, epsrel, hints(p, m - p))
    rv, _ = _quad(right, 0.0, 1.0, epsrel, hints(q, m - q))
    return lv + rv


# Re-exported for callers that build tubes themselves.
EXCLUSION_FRACTION = TUBE_FRACTION

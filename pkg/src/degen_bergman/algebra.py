"""Complex scalars, root-form polynomials and continued square roots.

Polynomials are kept as a leading coefficient times a product of linear
factors and are never expanded into monomial coefficients.  Every integrand
handled by the package is such a product, and the root form keeps the small
differences ``x - r`` free of cancellation.

Square roots of a product are taken factor by factor.  The argument of each
factor ``x - r`` is continued along a polyline, which fixes one branch of
``1/y`` along a chain of segments.
"""
import math
import re
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AlgebraError", "ExclusionTubeError", "RootPoly", "as_complex",
    "parse_complex", "format_complex", "poly_from_roots", "poly_eval",
    "continued_sqrt_factor", "continued_argument", "chain_arguments",
    "TUBE_FRACTION",
]

#: Fraction of the local segment length within which a root may not
#: approach a path.
TUBE_FRACTION = 1e-3


class AlgebraError(ValueError):
    """Invalid scalar or polynomial input."""


class ExclusionTubeError(AlgebraError):
    """A path passes too close to a root of the integrand."""


def as_complex(x):
    """Coerce `x` to a finite Python complex.

    Raises
    ------
    AlgebraError
        If `x` is not a number or is NaN/infinite.
    """
    try:
        c = complex(x)
    except (TypeError, ValueError) as exc:
        raise AlgebraError(f"not a complex number: {x!r}") from exc
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise AlgebraError(f"non-finite complex value: {x!r}")
    return c


_FLOAT = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?:(?P<re>{_FLOAT})(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    rf"(?P<isuf>[ij])?|(?P<sign>[+-]?)(?P<unit>[ij]))\s*$")


def parse_complex(text):
    """Parse a complex literal such as ``"2"``, ``"1e-4-3i"`` or ``"-2.5i"``.

    The accepted grammar is ``RE``, ``IMi``, ``RE+IMi`` or ``RE-IMi`` where
    each part is a decimal float with optional exponent; ``j`` is accepted
    in place of ``i``.
    """
    if isinstance(text, (int, float, complex)) and not isinstance(text, bool):
        return as_complex(text)
    m = _COMPLEX_RE.match(str(text))
    if m is None:
        raise AlgebraError(f"cannot parse complex literal {text!r}")
    if m.group("unit"):
        return complex(0.0, -1.0 if m.group("sign") == "-" else 1.0)
    first, second, isuf = m.group("re"), m.group("im"), m.group("isuf")
    if second is not None:
        if not isuf:
            raise AlgebraError(f"imaginary part needs an 'i' suffix: {text!r}")
        return as_complex(complex(float(first), float(second)))
    if isuf:
        return complex(0.0, float(first))
    return complex(float(first), 0.0)


def format_complex(z):
    """Inverse of :func:`parse_complex` with round-trip float precision."""
    z = complex(z)
    if z.imag == 0.0 and math.copysign(1.0, z.imag) > 0:
        return repr(z.real)
    im = repr(abs(z.imag))
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{im}i"


@dataclass(frozen=True)
class RootPoly:
    """Polynomial ``leading * prod(x - r)`` held in root form."""

    roots: tuple
    leading: complex = 1.0 + 0j

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(as_complex(r) for r in self.roots))
        lead = as_complex(self.leading)
        if lead == 0:
            raise AlgebraError("leading coefficient must be nonzero")
        object.__setattr__(self, "leading", lead)

    @property
    def degree(self):
        return len(self.roots)

    def __call__(self, x):
        return poly_eval(self, x)

    def coefficients(self):
        """Monomial coefficients, highest degree first (for checks only)."""
        return self.leading * np.poly(np.asarray(self.roots, dtype=complex)) \
            if self.roots else np.array([self.leading])


def poly_from_roots(roots, leading=1.0):
    """Build the root-form polynomial ``leading * prod(x - r)``."""
    return RootPoly(tuple(roots), leading)


def poly_eval(p, x):
    """Evaluate `p` at `x` (scalar or array) as a product of linear factors."""
    x = np.asarray(x, dtype=complex)
    val = np.full(x.shape, p.leading, dtype=complex)
    for r in p.roots:
        val = val * (x - r)
    return val[()] if val.ndim == 0 else val


def _check_tube(a, b, root, fraction=TUBE_FRACTION):
    """Reject a root lying beside the open segment ``a -> b`` within the tube.

    Only roots whose orthogonal projection falls inside the segment and
    which are at least twice as close to the segment as to both endpoints
    count.  A root
    beyond or next to an endpoint (a cluster of branch points collapsing onto
    the chain, as in every degenerating family) is a near-endpoint
    singularity that the quadrature resolves by grading.
    """
    length = abs(b - a)
    if length == 0.0:
        return
    t = ((root - a) * np.conj(b - a)).real / length ** 2
    if not 0.0 < t < 1.0:
        if root in (a, b):
            raise ExclusionTubeError(f"root {root} is a segment endpoint")
        return
    dist = abs(a + t * (b - a) - root)
    near_end = min(abs(root - a), abs(root - b))
    if dist <= fraction * length and near_end > 2.0 * dist:
        raise ExclusionTubeError(
            f"path segment {a}->{b} passes within {dist:.3g} of root {root}")


def continued_argument(root, path, x):
    """Continuous argument of ``x - root`` along a polyline.

    The argument starts at its principal value at ``path[0]``, is carried
    along the straight pieces ``path[0] -> path[1] -> ...`` and then to `x`,
    which must lie on the last piece or beyond the last waypoint along a
    straight continuation.  Along a straight piece that avoids the root the
    argument changes by exactly ``Arg((b - root) / (a - root))``, which is
    the limit of any step-wise unwinding whose steps turn by less than pi/4.
    """
    root = as_complex(root)
    pts = [as_complex(w) for w in path] + [as_complex(x)]
    if pts[0] == root:
        raise ExclusionTubeError("path starts on the root")
    arg = math.atan2((pts[0] - root).imag, (pts[0] - root).real)
    for a, b in zip(pts[:-1], pts[1:]):
        if a == b:
            continue
        _check_tube(a, b, root)
        arg += np.angle((b - root) / (a - root))
    return float(arg)


def continued_sqrt_factor(root, path, x):
    """``(x - root)**0.5`` on the branch continued along `path`.

    Examples
    --------
    Half a turn around the origin lands on ``+i`` rather than on the
    principal ``sqrt(-1)`` reached from the other side:

    >>> w = continued_sqrt_factor(0, [1, 1j, -1], -1)
    >>> abs(w - 1j) < 1e-15
    True
    """
    arg = continued_argument(root, path, x)
    r = abs(as_complex(x) - as_complex(root))
    return math.sqrt(r) * complex(math.cos(0.5 * arg), math.sin(0.5 * arg))


def chain_arguments(points):
    """Continued arguments of every factor at the start of each chain segment.

    The chain runs ``e_0 -> e_1 -> ... -> e_{n-1}``.  For segment ``s`` the
    returned row ``args[s]`` holds, for every factor ``x - e_j``, its
    argument at the start of the segment:

    * factors of roots off the segment are continued from their principal
      value at ``e_0`` along the chain;
    * the factor of the starting endpoint holds the constant argument it has
      along the open segment;
    * the factor of the far endpoint is continued like the others and is
      constant along the segment as well.

    At an interior vertex ``v`` the path sidesteps the vertex on a small arc
    keeping the vertex on its right, so the argument of ``x - v`` turns
    clockwise from the incoming to the outgoing direction.
    """
    e = np.asarray(points, dtype=complex)
    n = e.size
    if n < 2:
        raise AlgebraError("a chain needs at least two points")
    phi = np.angle(e[0] - e)
    dep = float(np.angle(e[1] - e[0]))
    args = np.empty((n - 1, n))
    for s in range(n - 1):
        row = phi.copy()
        row[s] = dep
        args[s] = row
        a, b = e[s], e[s + 1]
        for j in range(n):
            if j in (s, s + 1):
                continue
            _check_tube(a, b, e[j])
            phi[j] += np.angle((b - e[j]) / (a - e[j]))
        phi[s] = dep
        if s + 1 < n - 1:
            v = e[s + 1]
            turn = (np.angle(a - v) - np.angle(e[s + 2] - v)) % (2 * np.pi)
            dep = float(phi[s + 1] - turn)
    return args

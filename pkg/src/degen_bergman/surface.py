"""Degenerating hyperelliptic families, branch points and homology bases.

A curve ``y^2 = f(x)`` of genus ``g`` with ``2g + 1`` finite branch points
``e_1, ..., e_{2g+1}`` (the point at infinity is the last branch point) is
cut along a chain of straight segments ``e_1 -> e_2 -> ...``.  The
elementary cycle ``c_k`` encircles the consecutive pair ``(e_k, e_{k+1})``;
adjacent elementary cycles meet once, with ``c_k . c_{k+1} = +1``.  A
homology basis is stored as integer coefficient vectors over
``c_1, ..., c_{2g}``.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraError, RootPoly, as_complex

__all__ = [
    "FamilyKind", "CurveSpec", "HomologyBasis", "SurfaceError",
    "make_family", "generic_curve", "branch_points", "chain_points",
    "chain_basis", "symplectic_basis", "normalization_curve",
    "elementary_intersection", "symplectic_form", "transform_basis",
    "MAX_GENUS",
]

MAX_GENUS = 6


class SurfaceError(ValueError):
    """Invalid curve specification or degenerate basis."""


class FamilyKind(str, enum.Enum):
    NODE = "node"
    CUSP_I = "cusp1"
    CUSP_II = "cusp2"
    GENERIC = "custom"


@dataclass(frozen=True)
class CurveSpec:
    """A member of one of the families, or a generic hyperelliptic curve.

    Families (``P`` has degree ``2g - 2``):

    * node: ``y^2 = x (x - lam) (x - 1) P(x)``
    * cusp1: ``y^2 = x (x^2 - lam) P(x)``
    * cusp2: ``y^2 = x (x - lam) (x - lam^2) P(x)``

    A generic curve is ``y^2 = leading * prod(x - r)`` over
    `explicit_roots`, with ``2g + 1`` roots.
    """

    kind: FamilyKind
    genus: int
    P: RootPoly = None
    lam: complex = None
    explicit_roots: tuple = None
    leading: complex = 1.0 + 0j

    @property
    def roots(self):
        """Finite roots of ``f`` in defining order."""
        if self.kind is FamilyKind.GENERIC:
            return tuple(self.explicit_roots)
        lam = self.lam
        if self.kind is FamilyKind.NODE:
            head = (0j, lam, 1.0 + 0j)
        elif self.kind is FamilyKind.CUSP_I:
            s = complex(np.sqrt(lam))
            head = (0j, s, -s)
        else:
            head = (0j, lam, lam * lam)
        return head + tuple(self.P.roots)

    @property
    def lead(self):
        """Leading coefficient of ``f``."""
        if self.kind is FamilyKind.GENERIC:
            return self.leading
        return self.P.leading

    def f(self, x):
        """Evaluate the defining polynomial in root form."""
        x = np.asarray(x, dtype=complex)
        val = np.full(x.shape, self.lead, dtype=complex)
        for r in self.roots:
            val = val * (x - r)
        return val[()] if val.ndim == 0 else val

    def with_lambda(self, lam):
        """Same family and ``P`` at another parameter value."""
        return make_family(self.kind, self.genus, self.P, lam)


def _distinct(roots, what):
    pts = list(roots)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise SurfaceError(f"{what}: coincident roots {pts[i]}")


def make_family(kind, genus, P=None, lam=None, a=None, b=None):
    """Validated member of a degeneration family.

    Parameters
    ----------
    kind : FamilyKind or str
        ``"node"``, ``"cusp1"`` or ``"cusp2"``.
    genus : int
        Genus of the smooth members, ``2 <= genus <= 6``.
    P : RootPoly or sequence, optional
        Polynomial of degree ``2 genus - 2`` (or its roots).
    lam : complex
        Family parameter, nonzero.
    a, b : complex, optional
        Genus-2 shorthand for ``P = (x - a)(x - b)``.
    """
    kind = FamilyKind(kind)
    if kind is FamilyKind.GENERIC:
        raise SurfaceError("use generic_curve for explicit root lists")
    genus = int(genus)
    if not 1 <= genus <= MAX_GENUS:
        raise SurfaceError(f"genus must be in 1..{MAX_GENUS}")
    if P is None:
        if a is None or b is None:
            raise SurfaceError("either P or both a and b are required")
        P = RootPoly((a, b))
    elif not isinstance(P, RootPoly):
        P = RootPoly(tuple(P))
    if P.degree != 2 * genus - 2:
        raise SurfaceError(f"P must have degree {2 * genus - 2}, got {P.degree}")
    if lam is None:
        raise SurfaceError("lambda is required")
    lam = as_complex(lam)
    if lam == 0:
        raise SurfaceError("lambda must be nonzero")
    mods = [abs(r) for r in P.roots]
    if any(m2 <= m1 for m1, m2 in zip(mods, mods[1:])):
        raise SurfaceError("roots of P must have strictly increasing moduli")
    if kind is FamilyKind.NODE:
        if mods and mods[0] <= 1.0:
            raise SurfaceError("node family needs 1 < |a_1|")
    elif mods and abs(lam) >= mods[0]:
        raise SurfaceError("cusp families need |lambda| < |a_1|")
    spec = CurveSpec(kind, genus, P, lam)
    _distinct(spec.roots, "family")
    return spec


def generic_curve(roots, leading=1.0):
    """Generic curve ``y^2 = leading * prod(x - r)`` with an odd root count."""
    roots = tuple(as_complex(r) for r in roots)
    if len(roots) < 3 or len(roots) % 2 == 0:
        raise SurfaceError("a generic curve needs 2g + 1 >= 3 finite roots")
    genus = (len(roots) - 1) // 2
    if genus > MAX_GENUS:
        raise SurfaceError(f"genus above {MAX_GENUS} is out of scope")
    lead = as_complex(leading)
    if lead == 0:
        raise SurfaceError("leading coefficient must be nonzero")
    _distinct(roots, "generic curve")
    return CurveSpec(FamilyKind.GENERIC, genus, None, None, roots, lead)


def _sort_key(r):
    arg = math.atan2(r.imag, r.real)
    if arg >= math.pi:  # ties use arguments in [-pi, pi)
        arg -= 2 * math.pi
    return (abs(r), arg)


def branch_points(spec):
    """Finite branch points sorted by modulus, ties by argument in [-pi, pi)."""
    return sorted(spec.roots, key=_sort_key)


def chain_points(spec):
    """Order in which the branch points are joined by the cutting chain.

    This is :func:`branch_points` except for the first cusp family, whose
    three small roots ``-s, 0, s`` (``s^2 = lam``) share or nearly share a
    modulus.  There the chain runs ``-s -> 0 -> s`` so that no segment
    passes through the origin, with ``s`` the square root nearer to the
    next branch point.
    """
    pts = branch_points(spec)
    if spec.kind is not FamilyKind.CUSP_I:
        return pts
    s = complex(np.sqrt(spec.lam))
    rest = [r for r in pts if r not in (0j, s, -s)]
    if rest and abs(-s - rest[0]) < abs(s - rest[0]):
        s = -s
    return [-s, 0j, s] + rest


def elementary_intersection(n):
    """Intersection matrix of ``n`` elementary cycles along a chain."""
    K = np.zeros((n, n), dtype=np.int64)
    for k in range(n - 1):
        K[k, k + 1] = 1
        K[k + 1, k] = -1
    return K


def symplectic_form(g):
    """Standard form ``J`` with ``delta_i . gamma_j = delta_ij``."""
    J = np.zeros((2 * g, 2 * g), dtype=np.int64)
    J[:g, g:] = np.eye(g, dtype=np.int64)
    J[g:, :g] = -np.eye(g, dtype=np.int64)
    return J


@dataclass(frozen=True)
class HomologyBasis:
    """Cycles as integer combinations of elementary cycles.

    ``deltas`` and ``gammas`` are ``(g, 2g)`` integer arrays whose rows are
    coefficient vectors over ``c_1, ..., c_{2g}``.
    """

    deltas: np.ndarray
    gammas: np.ndarray

    @property
    def genus(self):
        return self.deltas.shape[0]

    @property
    def matrix(self):
        """``(2g, 2g)`` matrix stacking the delta rows over the gamma rows."""
        return np.vstack([self.deltas, self.gammas])

    def intersection(self):
        M = self.matrix
        return M @ elementary_intersection(M.shape[1]) @ M.T

    def is_symplectic(self):
        return np.array_equal(self.intersection(), symplectic_form(self.genus))


def _check(basis):
    if not basis.is_symplectic():
        raise SurfaceError("homology basis fails the intersection check")
    return basis


def chain_basis(spec_or_genus):
    """Basis with ``delta_j = c_1 + c_3 + ... + c_{2j-1}`` and ``gamma_j = c_{2j}``.

    ``delta_j`` encircles ``e_1 .. e_{2j}`` and ``gamma_j`` encircles
    ``e_{2j}, e_{2j+1}``.
    """
    g = spec_or_genus if isinstance(spec_or_genus, (int, np.integer)) \
        else spec_or_genus.genus
    D = np.zeros((g, 2 * g), dtype=np.int64)
    G = np.zeros((g, 2 * g), dtype=np.int64)
    for j in range(g):
        D[j, 0:2 * j + 1:2] = 1
        G[j, 2 * j + 1] = 1
    return _check(HomologyBasis(D, G))


def _reduce_skew(K):
    """Integer symplectic reduction of a unimodular skew form.

    Returns an integer matrix ``T`` whose rows are new cycles with
    ``T K T^T = J``.  Rows are processed greedily: pick the first remaining
    vector ``v`` with a nonzero pairing, produce a partner ``w`` with
    ``K(v, w) = 1`` by Euclidean reduction over the remaining vectors, then
    project every other vector off the hyperbolic pair ``(v, w)``.
    """
    n = K.shape[0]
    pool = [np.eye(n, dtype=np.int64)[i] for i in range(n)]
    pairs = []

    def form(x, y):
        return int(x @ K @ y)

    while pool:
        v = pool.pop(0)
        vals = [form(v, u) for u in pool]
        if not any(vals):
            raise SurfaceError("skew form is degenerate (reduction failure)")
        # Euclid on the pairings: combine pool vectors until one pairs to +-1
        while True:
            nz = [i for i, x in enumerate(vals) if x]
            i0 = min(nz, key=lambda i: abs(vals[i]))
            if abs(vals[i0]) == 1:
                break
            for i in nz:
                if i != i0:
                    qt = vals[i] // vals[i0]
                    pool[i] = pool[i] - qt * pool[i0]
                    vals[i] -= qt * vals[i0]
            if sum(1 for x in vals if x) == 1 and abs(vals[i0]) != 1:
                raise SurfaceError("non-unimodular intermediate in reduction")
        w = pool.pop(i0) * vals[i0]  # now K(v, w) = +1
        rest = []
        for u in pool:
            u = u - form(u, w) * v + form(u, v) * w
            rest.append(u)
        pool = rest
        pairs.append((v, w))
    g = len(pairs)
    T = np.array([p[0] for p in pairs] + [p[1] for p in pairs], dtype=np.int64)
    if not np.array_equal(T @ K @ T.T, symplectic_form(g)):
        raise SurfaceError("symplectic reduction produced a wrong form")
    return T


def symplectic_basis(spec_or_genus):
    """Symplectic basis from the integer reduction of the elementary form."""
    g = spec_or_genus if isinstance(spec_or_genus, (int, np.integer)) \
        else spec_or_genus.genus
    T = _reduce_skew(elementary_intersection(2 * g))
    return _check(HomologyBasis(T[:g], T[g:]))


def transform_basis(basis, S):
    """Apply an integer symplectic matrix to the stacked (delta; gamma) rows."""
    S = np.asarray(S, dtype=np.int64)
    g = basis.genus
    if not np.array_equal(S @ symplectic_form(g) @ S.T, symplectic_form(g)):
        raise SurfaceError("transformation is not symplectic")
    M = S @ basis.matrix
    return _check(HomologyBasis(M[:g], M[g:]))


def normalization_curve(spec):
    """Smooth genus ``g - 1`` curve resolving the singular member.

    Node: ``y^2 = (x - 1) P(x)``.  Both cusp families: ``y^2 = x P(x)``.
    """
    if spec.kind is not FamilyKind.GENERIC and spec.genus < 2:
        raise SurfaceError("the normalization of a genus-1 member has genus 0")
    if spec.kind is FamilyKind.NODE:
        roots = (1.0 + 0j,) + tuple(spec.P.roots)
    elif spec.kind in (FamilyKind.CUSP_I, FamilyKind.CUSP_II):
        roots = (0j,) + tuple(spec.P.roots)
    else:
        raise SurfaceError("normalization is defined for the three families")
    return generic_curve(roots, spec.P.leading)

import numpy as np
import pytest
from hypothesis import given, strategies as st

from degen_bergman.surface import (FamilyKind, SurfaceError, branch_points, chain_points,
                                   generic_curve, make_family, normalization_curve,
                                   chain_basis, symplectic_basis, symplectic_form,
                                   transform_basis)

from conftest import G2, G3


def test_make_family_examples():
    s = make_family("node", 2, a=2, b=3, lam=1e-4)
    assert sorted(s.roots, key=abs) == [0, 1e-4, 1, 2, 3]
    c = make_family("cusp1", 2, a=2, b=3, lam=1e-8)
    assert set(np.round(np.array(c.roots), 12)) == {0, 1e-4, -1e-4, 2, 3}
    with pytest.raises(SurfaceError):
        make_family("node", 2, a=2, b=3, lam=1)


@pytest.mark.parametrize("kwargs", [
    dict(kind="node", genus=2, P=G2, lam=0),
    dict(kind="node", genus=2, P=(3, 2), lam=1e-3),      # moduli not increasing
    dict(kind="node", genus=2, P=(0.5, 3), lam=1e-3),    # |a1| <= 1
    dict(kind="cusp1", genus=2, P=G2, lam=4.0),          # |lam| >= |a1|
    dict(kind="node", genus=3, P=G2, lam=1e-3),          # wrong degree
    dict(kind="node", genus=7, P=G2, lam=1e-3),
    dict(kind="custom", genus=2, P=G2, lam=1e-3),
])
def test_make_family_errors(kwargs):
    with pytest.raises(SurfaceError):
        make_family(**kwargs)


def test_branch_point_examples():
    assert branch_points(make_family("node", 2, G2, 1e-4)) == [0, 1e-4, 1, 2, 3]
    pts = branch_points(make_family("cusp2", 2, G2, 0.01))
    assert np.allclose(pts, [0, 1e-4, 1e-2, 2, 3])
    pts = branch_points(make_family("cusp1", 2, G2, 1e-8))
    assert np.allclose(pts[:3], [0, -1e-4, 1e-4], atol=1e-18)


def test_cusp1_chain_avoids_origin():
    pts = chain_points(make_family("cusp1", 2, G2, 1e-8))
    assert np.allclose(pts[:3], [-1e-4, 0, 1e-4], atol=1e-18)


@given(st.sampled_from(["node", "cusp1", "cusp2"]),
       st.floats(-12, -2), st.floats(-np.pi, np.pi))
def test_branch_points_permute_roots(kind, e, phase):
    spec = make_family(kind, 3, G3, 10 ** e * np.exp(1j * phase))
    pts = branch_points(spec)
    assert sorted(pts, key=lambda z: (z.real, z.imag)) == \
        sorted(spec.roots, key=lambda z: (z.real, z.imag))
    assert pts == branch_points(spec)
    mods = [abs(p) for p in pts]
    assert mods == sorted(mods)


@pytest.mark.parametrize("kind", ["node", "cusp1", "cusp2"])
@pytest.mark.parametrize("proots", [G2, G3])
def test_chain_basis_symplectic(kind, proots):
    spec = make_family(kind, len(proots) // 2 + 1, proots, 1e-4)
    for s in (spec, normalization_curve(spec)):
        B = chain_basis(s)
        assert np.array_equal(B.intersection(), symplectic_form(s.genus))


def test_chain_basis_cycles_genus2():
    B = chain_basis(2)
    assert B.deltas.tolist() == [[1, 0, 0, 0], [1, 0, 1, 0]]
    assert B.gammas.tolist() == [[0, 1, 0, 0], [0, 0, 0, 1]]
    B1 = chain_basis(1)
    assert B1.deltas.tolist() == [[1, 0]] and B1.gammas.tolist() == [[0, 1]]


@pytest.mark.parametrize("g", range(1, 7))
def test_symplectic_basis(g):
    B = symplectic_basis(g)
    assert np.array_equal(B.intersection(), symplectic_form(g))
    assert abs(round(np.linalg.det(B.matrix))) == 1


def test_symplectic_basis_genus1_matches_chain_basis_up_to_sign():
    a, b = symplectic_basis(1).matrix, chain_basis(1).matrix
    assert np.array_equal(np.abs(a), np.abs(b))


def test_transform_basis_rejects_non_symplectic():
    with pytest.raises(SurfaceError):
        transform_basis(chain_basis(2), 2 * np.eye(4, dtype=int))


def test_normalization_curves():
    n = normalization_curve(make_family("node", 2, G2, 1e-4))
    assert n.kind is FamilyKind.GENERIC and n.genus == 1
    assert sorted(n.roots, key=abs) == [1, 2, 3]
    c = normalization_curve(make_family("cusp1", 2, G2, 1e-8))
    assert sorted(c.roots, key=abs) == [0, 2, 3]
    n3 = normalization_curve(make_family("node", 3, G3, 1e-4))
    assert n3.genus == 2 and sorted(n3.roots, key=abs) == [1, 2, 3, 4, 5]
    c2 = normalization_curve(make_family("cusp2", 3, G3, 1e-4))
    assert len(c2.roots) == 2 * (3 - 1) + 1


def test_generic_curve_validation():
    assert generic_curve([0, 1, 4]).genus == 1
    with pytest.raises(SurfaceError):
        generic_curve([0, 1, 1])
    with pytest.raises(SurfaceError):
        generic_curve([0, 1, 2, 3])

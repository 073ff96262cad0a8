"""Constructor and root-decomposition checks for the four families.

Dimension and signature oracles are classical closed forms (evaluated
independently below); subspace facts are re-derived through a second route
(matrix commutators in the defining representation) wherever feasible.
"""

import numpy as np
import pytest

from rank1lie.errors import UnsupportedParameters
from rank1lie.liealg import (LieAlgebraQ, bracket_identities, build_algebra,
                             int_coords, pairwise_brackets_int,
                             parse_algebra_label, root_decomposition,
                             span_of_brackets)
from rank1lie.linalg import Mat, Q, QuadForm
from rank1lie.structure import basis_to_int, exact_int_matmul


def test_parse_labels():
    assert parse_algebra_label("so(1,4)") == ("so", 4)
    assert parse_algebra_label("sp(1, 2)") == ("sp", 2)
    assert parse_algebra_label("f4") == ("f4", None)
    for bad in ("so(2,3)", "su(1,1)", "e8", "so(1,x)"):
        with pytest.raises(UnsupportedParameters):
            parse_algebra_label(bad)


def test_unsupported_parameters():
    with pytest.raises(UnsupportedParameters):
        build_algebra("su", 1)
    with pytest.raises(UnsupportedParameters):
        build_algebra("sl", 3)
    with pytest.raises(UnsupportedParameters):
        build_algebra("so", None)


# dim g, dim p = dim of the symmetric space, Killing signature = (dim p, dim k)
DIMS = {
    ("so", 2): (3, 2), ("so", 3): (6, 3), ("so", 4): (10, 4),
    ("su", 2): (8, 4), ("su", 3): (15, 6), ("su", 4): (24, 8),
    ("sp", 2): (21, 8), ("sp", 3): (36, 12), ("sp", 4): (55, 16),
}


@pytest.mark.parametrize("fam,k", sorted(DIMS))
def test_matrix_family_construction(fam, k):
    g = build_algebra(fam, k)
    dim, dim_p = DIMS[(fam, k)]
    assert g.dim == dim
    assert g.p_part.dim == dim_p
    assert g.k_part.dim == dim - dim_p
    assert g.killing.sig == (dim_p, dim - dim_p, 0)
    assert g.btheta.is_positive_definite()
    assert len(g.basis_labels) == dim
    # every realization matrix is skew for the ambient form
    gm = g.ambient_gram
    for a in range(dim):
        x = g.realization[a]
        assert (gm @ x + x.transpose() @ gm).is_zero()


def test_su_realization_commutes_with_complex_structure():
    g = build_algebra("su", 2)
    n = g.nside
    j = Mat.zeros(n, n).copy_rows()
    for t in range(n // 2):
        j[2 * t][2 * t + 1] = Q(-1)
        j[2 * t + 1][2 * t] = Q(1)
    jm = Mat(j)
    for x in g.realization:
        assert (x @ jm - jm @ x).is_zero()
    # imaginary part of the trace vanishes
    for x in g.realization:
        assert sum((x[2 * t + 1, 2 * t] for t in range(n // 2)), Q(0)) == 0


def test_bracket_matches_realization_commutator():
    g = build_algebra("sp", 2)
    rng_coords = [([1, -2, 0, 3] + [0] * 17), ([0] * 10 + [2, 1, -1] + [0] * 8)]
    x, y = rng_coords
    w = g.bracket(x, y)
    xm, ym = g.realize(x), g.realize(y)
    assert g.realize(w) == xm @ ym - ym @ xm


def test_theta_is_negative_transpose_on_realization():
    for fam, k in (("so", 3), ("su", 2), ("sp", 2)):
        g = build_algebra(fam, k)
        for a in range(g.dim):
            img = g.theta_vec([Q(1 if i == a else 0) for i in range(g.dim)])
            assert g.realize(img) == -(g.realization[a].transpose())


ROOT_DIMS = {
    # family, k: (g_a, g_2a, m, m1, m2)
    ("so", 2): (1, 0, 0, 0, 0),
    ("so", 3): (2, 0, 1, 0, 1),
    ("so", 4): (3, 0, 3, 0, 3),
    ("su", 2): (2, 1, 1, 1, 0),
    ("su", 3): (4, 1, 4, 1, 3),
    ("su", 4): (6, 1, 9, 1, 8),
    ("sp", 2): (4, 3, 6, 3, 3),
    ("sp", 3): (8, 3, 13, 3, 10),
    ("sp", 4): (12, 3, 24, 3, 21),
}


@pytest.mark.parametrize("fam,k", sorted(ROOT_DIMS))
def test_root_decomposition_dims(fam, k):
    g = build_algebra(fam, k)
    rd = root_decomposition(g)
    ga, g2a, m, m1, m2 = ROOT_DIMS[(fam, k)]
    assert rd.dims() == {"a": 1, "m": m, "m1": m1, "m2": m2,
                         "g_plus_a": ga, "g_minus_a": ga,
                         "g_plus_2a": g2a, "g_minus_2a": g2a}
    # H acts as +1 on g_plus_a: check one basis vector directly
    v = rd.g_plus_a.basis[0]
    assert g.bracket(rd.H, v) == list(v)
    # the decomposition exhausts the algebra
    total = rd.a
    for s in (rd.m, rd.g_plus_a, rd.g_minus_a, rd.g_plus_2a, rd.g_minus_2a):
        total = total.sum_(s)
    assert total.dim == g.dim


def test_bracket_identity_catalog_all_pass():
    for fam, k in (("so", 4), ("su", 2), ("su", 3), ("sp", 2), ("sp", 3)):
        rd = root_decomposition(build_algebra(fam, k))
        rep = bracket_identities(rd)
        assert rep["passes"] == rep["trials"], rep["failures"]
        assert rep["failures"] == []


def test_su_extreme_bracket_is_exactly_a():
    """[g_2a, g_-2a] equals the Cartan line itself in the unitary family,
    with no compact component; the compact ideal m1 is the centralizer's
    center instead."""
    for k in (2, 3):
        rd = root_decomposition(build_algebra("su", k))
        g = rd.alg
        br = span_of_brackets(g.struct, rd.g_plus_2a, rd.g_minus_2a)
        assert br == rd.a
        lit = g.k_part.intersect(br)
        assert lit.dim == 0
        assert rd.m1.dim == 1


def test_sp_literal_m1_formula():
    """In the quaternionic family m1 really is k intersected with the span
    of extreme brackets (and similarly for the exceptional algebra)."""
    rd = root_decomposition(build_algebra("sp", 2))
    g = rd.alg
    lit = g.k_part.intersect(
        span_of_brackets(g.struct, rd.g_plus_2a, rd.g_minus_2a))
    assert lit == rd.m1
    assert rd.a.sum_(rd.m1) == span_of_brackets(g.struct, rd.g_plus_2a,
                                                rd.g_minus_2a)


def test_m2_centralizer_cross_route():
    """For sp, m2 coincides with the centralizer of m1 in m (second route);
    for su the centralizer route degenerates (m is the centralizer of its
    own center), which is why m2 is defined as the Killing complement."""
    from rank1lie.linalg import Subspace, kernel
    for fam, k in (("sp", 2), ("sp", 3)):
        rd = root_decomposition(build_algebra(fam, k))
        g = rd.alg
        n = g.dim
        b1, _ = basis_to_int(rd.m1.basis)
        bm, _ = basis_to_int(rd.m.basis)
        w = pairwise_brackets_int(g.struct, bm, b1)
        d, d1 = rd.m.dim, rd.m1.dim
        warr = w.reshape(d, d1, n)
        rows = []
        for b in range(d1):
            for c in range(n):
                col = [Q(int(warr[a, b, c])) for a in range(d)]
                if any(col):
                    rows.append(col)
        coeff = kernel(Mat(rows))
        basis_mat = rd.m.basis_mat().transpose()
        vecs = [basis_mat.matvec(t) for t in coeff.basis]
        zc = Subspace.from_vectors(n, vecs) if vecs else Subspace.zero(n)
        assert zc == rd.m2


def test_su_centralizer_of_m1_is_all_of_m():
    """The degenerate case that forces the Killing-complement definition."""
    rd = root_decomposition(build_algebra("su", 3))
    g = rd.alg
    b1, _ = basis_to_int(rd.m1.basis)
    bm, _ = basis_to_int(rd.m.basis)
    assert not np.any(pairwise_brackets_int(g.struct, bm, b1))


def test_f4_construction_and_decomposition():
    g = build_algebra("f4")
    assert g.dim == 52
    assert g.killing.sig == (16, 36, 0)
    assert g.btheta.is_positive_definite()
    assert (g.k_part.dim, g.p_part.dim) == (36, 16)
    rd = root_decomposition(g)
    assert rd.dims() == {"a": 1, "m": 21, "m1": 21, "m2": 0,
                         "g_plus_a": 8, "g_minus_a": 8,
                         "g_plus_2a": 7, "g_minus_2a": 7}
    rep = bracket_identities(rd)
    assert rep["failures"] == []
    # the realization matrices are skew for the 26-dim invariant form
    gm = g.ambient_gram
    for a in (0, 17, 51):
        x = g.realization[a]
        assert (gm @ x + x.transpose() @ gm).is_zero()


def test_f4_theta_eigenvalue_normalization():
    """ad(H) eigenvalue +1 on g_plus_a, +2 on g_plus_2a, exactly."""
    g = build_algebra("f4")
    rd = root_decomposition(g)
    v = rd.g_plus_2a.basis[0]
    assert g.bracket(rd.H, v) == [2 * x for x in v]
    w = rd.g_minus_a.basis[0]
    assert g.bracket(rd.H, w) == [-x for x in w]


def test_theta_exchanges_root_spaces():
    for fam, k in (("su", 2), ("sp", 2)):
        g = build_algebra(fam, k)
        rd = root_decomposition(g)
        from rank1lie.linalg import Subspace
        img = [g.theta_vec(b) for b in rd.g_plus_a.basis]
        assert Subspace.from_vectors(g.dim, img) == rd.g_minus_a
        img2 = [g.theta_vec(b) for b in rd.g_plus_2a.basis]
        assert Subspace.from_vectors(g.dim, img2) == rd.g_minus_2a


def test_killing_restricted_signs():
    """Killing is negative definite on m, positive on a + root-space pairs."""
    g = build_algebra("sp", 2)
    rd = root_decomposition(g)
    km = g.killing.restrict(rd.m)
    assert km.sig == (0, rd.m.dim, 0)
    ka = g.killing.restrict(rd.a)
    assert ka.sig == (1, 0, 0)

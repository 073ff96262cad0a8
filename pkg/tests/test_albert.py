"""The 27-dimensional Jordan algebra and its 52-dimensional derivation algebra.

Leibniz spot-checks below evaluate D(x*y) = Dx*y + x*Dy through the Jordan
product itself, independently of the constraint rows the solver consumed, so
solver and algebra validate each other.
"""

import numpy as np
import pytest

from rank1lie import albert
from rank1lie.albert import (AlbertElement, DIM_J, derivation_algebra,
                             jordan_product, trace_form, traceless_restriction,
                             traceless_subspace)
from rank1lie.linalg import Mat, Q, QuadForm, signature
from rank1lie.rng import SplitMix64


def rand_elt(rng: SplitMix64) -> AlbertElement:
    return AlbertElement([Q(c) for c in rng.coords(DIM_J)])


def test_product_is_commutative():
    rng = SplitMix64(11)
    for _ in range(25):
        x, y = rand_elt(rng), rand_elt(rng)
        assert jordan_product(x, y) == jordan_product(y, x)


def test_identity_element():
    rng = SplitMix64(12)
    ident = AlbertElement.identity()
    for _ in range(10):
        x = rand_elt(rng)
        assert jordan_product(ident, x) == x


def test_product_is_not_associative():
    basis = albert.jordan_basis()
    found = False
    for i in (0, 3, 11, 19):
        for j in (3, 11, 19):
            for k in (4, 12, 20):
                lhs = jordan_product(jordan_product(basis[i], basis[j]), basis[k])
                rhs = jordan_product(basis[i], jordan_product(basis[j], basis[k]))
                if lhs != rhs:
                    found = True
    assert found


def test_jordan_identity():
    # (x*y)*(x*x) = x*(y*(x*x)), the defining weak-associativity law
    rng = SplitMix64(13)
    for _ in range(10):
        x, y = rand_elt(rng), rand_elt(rng)
        xx = jordan_product(x, x)
        assert jordan_product(jordan_product(x, y), xx) == \
            jordan_product(x, jordan_product(y, xx))


def test_trace_form_is_associative():
    # q(x*y, z) = q(x, y*z); this is what makes derivations q-skew
    rng = SplitMix64(14)
    for _ in range(10):
        x, y, z = rand_elt(rng), rand_elt(rng), rand_elt(rng)
        assert trace_form(jordan_product(x, y), z) == \
            trace_form(x, jordan_product(y, z))


def test_trace_gram_signature():
    g = albert.trace_gram()
    assert g.is_symmetric()
    assert signature(g) == (11, 16, 0)


def test_traceless_subspace_signature():
    j0 = traceless_subspace()
    assert j0.dim == 26
    assert QuadForm(albert.trace_gram()).restrict(j0).sig == (10, 16, 0)


def test_gram_matches_trace_form_values():
    g = albert.trace_gram()
    basis = albert.jordan_basis()
    for i in (0, 1, 5, 13, 26):
        for j in (0, 2, 5, 20):
            assert g[i, j] == trace_form(basis[i], basis[j])


def test_derivation_dimension():
    assert derivation_algebra().dim == 52


def test_derivation_killing_signature():
    alg = derivation_algebra()
    k = alg.struct.killing_mat()
    assert signature(k) == (16, 36, 0)


def test_structure_constants_are_a_lie_algebra():
    s = derivation_algebra().struct
    assert s.antisymmetric()
    assert s.jacobi_holds()


def test_derivations_satisfy_leibniz_independently():
    """Random derivations on random elements, via the Jordan product itself."""
    alg = derivation_algebra()
    rng = SplitMix64(15)
    for _ in range(6):
        coeffs = np.array(rng.coords(alg.dim), dtype=np.int64)
        dmat = alg.element_matrix_int(coeffs)    # scale alg.den
        x, y = rand_elt(rng), rand_elt(rng)

        def apply(v):
            img = [sum((Q(int(dmat[r, s]), alg.den) * v.co[s]
                        for s in range(DIM_J)), Q(0)) for r in range(DIM_J)]
            return AlbertElement(img)

        lhs = apply(jordan_product(x, y))
        rhs = jordan_product(apply(x), y) + jordan_product(x, apply(y))
        assert lhs == rhs


def test_derivations_kill_identity_and_trace():
    alg = derivation_algebra()
    ident = AlbertElement.identity()
    rng = SplitMix64(16)
    for a in (0, 17, 51):
        m = alg.matrix(a)
        assert not any(m.matvec(ident.co))
        x = rand_elt(rng)
        assert AlbertElement(m.matvec(x.co)).trace() == 0


def test_derivations_are_skew_for_trace_form():
    alg = derivation_algebra()
    rng = SplitMix64(17)
    for a in (3, 29):
        m = alg.matrix(a)
        for _ in range(5):
            x, y = rand_elt(rng), rand_elt(rng)
            dx = AlbertElement(m.matvec(x.co))
            dy = AlbertElement(m.matvec(y.co))
            assert trace_form(dx, y) + trace_form(x, dy) == 0


def test_involution_is_an_automorphism():
    theta = albert.THETA_DIAG
    rng = SplitMix64(18)
    for _ in range(10):
        x, y = rand_elt(rng), rand_elt(rng)
        tx = AlbertElement([s * c for s, c in zip(theta, x.co)])
        ty = AlbertElement([s * c for s, c in zip(theta, y.co)])
        txy = jordan_product(tx, ty)
        xy = jordan_product(x, y)
        assert txy == AlbertElement([s * c for s, c in zip(theta, xy.co)])


def test_involution_conjugate_of_derivation_is_derivation():
    alg = derivation_algebra()
    t = np.array(albert.THETA_DIAG, dtype=np.int64)
    for a in (0, 9, 44):
        m = alg.mats_int[a]
        conj = (t[:, None] * m) * t[None, :]
        coords = alg.coordinates_of_int(conj, alg.den)
        assert coords is not None


def test_coordinates_of_int_rejects_nonmember():
    alg = derivation_algebra()
    bad = np.zeros((DIM_J, DIM_J), dtype=np.int64)
    bad[0, 0] = 1        # no derivation moves the identity component this way
    assert alg.coordinates_of_int(bad, 1) is None


def test_restriction_is_faithful_and_irreducible():
    r = traceless_restriction()
    assert r.faithful()
    assert r.commutant_dimension() == 1
    assert r.invariant_form_dimension() == 1
    assert QuadForm(r.gram26).sig == (10, 16, 0)


def test_matrix_form_roundtrip():
    x = AlbertElement([Q(n, 3) for n in range(-13, 14)])
    assert AlbertElement.from_matrix(x.to_matrix()) == x

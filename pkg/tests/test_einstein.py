"""Null-cone models: ambient signatures, stabilizer shape, induced form."""

import pytest

from rank1lie.einstein import (build_embedding, null_isotropy,
                               orbit_dimension_table,
                               report_embedding_signature,
                               report_null_isotropy, _basepoint_candidates)
from rank1lie.liealg import build_algebra, root_decomposition
from rank1lie.linalg import Mat, Q

EMBED_SIGS = [
    ("so", 2, (1, 2, 0)),
    ("so", 3, (1, 3, 0)),
    ("so", 4, (1, 4, 0)),
    ("su", 2, (2, 4, 0)),
    ("su", 3, (2, 6, 0)),
    ("su", 4, (2, 8, 0)),
    ("sp", 2, (4, 8, 0)),
    ("sp", 3, (4, 12, 0)),
    ("sp", 4, (4, 16, 0)),
    ("f4", 1, (10, 16, 0)),
]


def _model(family, k):
    g = build_algebra(family, k)
    rd = root_decomposition(g)
    e = build_embedding(g)
    return g, rd, e


@pytest.mark.parametrize("family,k,sig", EMBED_SIGS,
                         ids=[f"{f}(1,{k})" for f, k, _ in EMBED_SIGS])
def test_embedding_signature(family, k, sig):
    g, _rd, e = _model(family, k)
    assert e.ambient_form.sig == sig
    assert e.ambient_form.dim == g.nside
    assert len(e.images) == g.dim
    # spot-check skewness through the public matrix interface
    gm = e.ambient_form.gram
    for img in e.images[:3]:
        assert (gm @ img + img.transpose() @ gm).is_zero()


def test_embedding_report_clean():
    for family, k in [("so", 2), ("su", 2), ("sp", 2)]:
        rep = report_embedding_signature(build_algebra(family, k))
        assert rep["failures"] == []
        assert rep["parameters"]["signature"] == list(
            dict(((f, kk), s) for f, kk, s in EMBED_SIGS)[(family, k)])


ISOTROPY_CASES = [
    # family, k, orbit dim, quotient signature
    ("so", 4, 3, (3, 0, 0)),
    ("su", 2, 4, (3, 1, 0)),
    ("su", 3, 6, (5, 1, 0)),
    ("sp", 2, 10, (7, 3, 0)),
    ("sp", 3, 14, (11, 3, 0)),
]


@pytest.mark.parametrize("family,k,orbit,quot", ISOTROPY_CASES,
                         ids=[f"{f}(1,{k})" for f, k, _, _ in ISOTROPY_CASES])
def test_null_isotropy_structure(family, k, orbit, quot):
    g, rd, e = _model(family, k)
    rep = null_isotropy(e, rd)
    assert rep.orbit_dim == orbit
    assert tuple(rep.block_signatures["total"]) == quot
    assert rep.kernel_dim == 0
    assert rep.induced_form.sig == quot
    # basepoint is null and the stabilizer is the full line stabilizer
    v = rep.null_vector
    assert e.ambient_form.value(v, v) == 0
    # stabilizer shape: a + (m cap g_x) + g_a + g_2a, with the codimension
    # of the m-part equal to dim g_2a
    shape = rd.a.sum_(rep.m_cap_gx).sum_(rd.g_plus_a).sum_(rd.g_plus_2a)
    assert shape == rep.stabilizer
    assert rd.m.dim - rep.m_cap_gx.dim == rd.g_plus_2a.dim
    assert rep.stabilizer.dim + rep.orbit_dim == g.dim


@pytest.mark.parametrize("family,k", [("su", 2), ("sp", 2)])
def test_stabilizer_members_fix_the_line(family, k):
    """Independent replay: realized matrices of stabilizer members map the
    basepoint into its own line; a non-member does not."""
    g, rd, e = _model(family, k)
    rep = null_isotropy(e, rd)
    v = rep.null_vector
    vsub_rows = [v]
    from rank1lie.linalg import Subspace
    line = Subspace.from_vectors(g.nside, vsub_rows)
    for x in rep.stabilizer.basis[:6]:
        w = g.realize(x).matvec(v)
        assert line.contains_vector(w) or not any(w)
    for x in rd.g_minus_a.basis[:2]:
        w = g.realize(x).matvec(v)
        assert not line.contains_vector(w) and any(w)


def test_su2_m_part_disappears():
    g, rd, e = _model("su", 2)
    rep = null_isotropy(e, rd)
    assert rep.m_cap_gx.dim == 0


@pytest.mark.parametrize("family,k", [("su", 3), ("su", 4),
                                      ("sp", 3), ("sp", 4)])
def test_m_cap_stabilizer_is_m2_for_larger_k(family, k):
    g, rd, e = _model(family, k)
    rep = null_isotropy(e, rd)
    assert rep.m_cap_gx_equals_m2
    assert rep.m_cap_gx == rd.m2


def test_sp2_block_pattern():
    g, rd, e = _model("sp", 2)
    rep = null_isotropy(e, rd)
    bs = rep.block_signatures
    assert bs["minus_2a"] == {"dim": 3, "isotropic": True}
    assert bs["minus_a"]["sig"] == [4, 0, 0]
    assert bs["minus_a"]["positive_definite"]
    assert bs["m"]["isotropic"] and bs["m"]["dim"] == 6
    assert bs["minus_2a_perp_minus_a"] and bs["minus_a_perp_m"]
    assert bs["pairing_rank"] == 3


def test_so_models_are_round_spheres():
    for k in (2, 3, 4):
        g, rd, e = _model("so", k)
        rep = null_isotropy(e, rd)
        assert rep.orbit_dim == k - 1
        assert rep.induced_form.is_positive_definite()
        # stabilizer is a + m + g_a (all of m stabilizes)
        assert rep.stabilizer == rd.a.sum_(rd.m).sum_(rd.g_plus_a)


def test_m_image_matches_m1_image():
    for family, k in [("su", 2), ("su", 3), ("sp", 2), ("sp", 3)]:
        g, rd, e = _model(family, k)
        rep = null_isotropy(e, rd)
        assert rep.m_image_equals_m1_image


def test_f4_recorded_facts():
    g, rd, e = _model("f4", 1)
    rep = null_isotropy(e, rd)
    assert rep.orbit_dim == 15
    assert rep.stabilizer.dim == 37
    # all of m kills the basepoint line, and the quotient form degenerates
    assert rep.m_cap_gx == rd.m
    assert rep.stabilizer.contains(rd.a.sum_(rd.m).sum_(rd.g_plus_a)
                                   .sum_(rd.g_plus_2a))
    assert rep.kernel_dim == 8
    assert tuple(rep.block_signatures["total"]) == (7, 0, 8)
    assert not rep.block_signatures["minus_2a"]["isotropic"]


ORBIT_TABLE = [("so", 2, 1), ("so", 3, 2), ("so", 4, 3),
               ("su", 2, 4), ("su", 3, 6), ("su", 4, 8),
               ("sp", 2, 10), ("sp", 3, 14), ("sp", 4, 18),
               ("f4", 1, 15)]


@pytest.mark.parametrize("family,k,dim", ORBIT_TABLE,
                         ids=[f"{f}(1,{k})" for f, k, _ in ORBIT_TABLE])
def test_orbit_dimension_table(family, k, dim):
    g = build_algebra(family, k)
    rd = root_decomposition(g)
    tab = orbit_dimension_table(g, rd)
    assert tab["failures"] == []
    assert tab["parameters"]["orbit_dim"] == dim


def test_isotropy_report_producer():
    g = build_algebra("sp", 2)
    rd = root_decomposition(g)
    rep = report_null_isotropy(g, rd)
    assert rep["failures"] == []
    assert rep["parameters"]["orbit_dim"] == 10
    assert rep["parameters"]["kernel_dim"] == 0
    assert rep["parameters"]["m_cap_gx_equals_m2"]


def test_basepoint_fallback_scan_yields_null_eigendirections():
    g, rd, e = _model("su", 2)
    seen = 0
    for v in _basepoint_candidates(e, rd):
        assert e.ambient_form.value(v, v) == 0
        seen += 1
        if seen >= 4:
            break
    assert seen >= 4

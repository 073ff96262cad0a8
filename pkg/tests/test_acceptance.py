"""Acceptance gate: one test per advertised guarantee of the package.

Every check is exact — integer dimensions, rational arithmetic with no
tolerances, byte-identical serialized output.  Two literal targets that the
computation refutes (the quaternionic abelian witness dimension and the
double-root bracket identity for the complex family) are kept as strict
xfail tests right next to tests pinning the honest computed outcome, so a
behaviour change in either direction turns the suite red.

Build results are shared through module-level caches; criterion 1 clears
the octonion-side cache first so its timing covers a genuinely cold
construction.
"""

import functools
import json
import subprocess
import sys
import time

import numpy as np
import pytest

from rank1lie import (Q, QuadForm, albert, build_algebra, build_embedding,
                      lemmas, null_isotropy, root_decomposition)
from rank1lie.cli import LEMMA_IDS

CATALOG = [("so", 2), ("so", 3), ("so", 4),
           ("su", 2), ("su", 3), ("su", 4),
           ("sp", 2), ("sp", 3), ("sp", 4),
           ("f4", None)]

DOUBLE_ROOT_CATALOG = [case for case in CATALOG if case[0] != "so"]


@functools.lru_cache(maxsize=None)
def alg(family, k=None):
    return build_algebra(family, k)


@functools.lru_cache(maxsize=None)
def decomp(family, k=None):
    return root_decomposition(alg(family, k))


@functools.lru_cache(maxsize=None)
def embedding(family, k=None):
    return build_embedding(alg(family, k))


def test_criterion_01_exceptional_algebra_from_octonions_under_two_minutes():
    albert._cache.clear()
    start = time.perf_counter()
    der = albert.derivation_algebra()
    albert.traceless_restriction()
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    assert der.dim == 52

    gram = albert.trace_gram()
    gn = np.array([[gram[i, j] for j in range(27)] for i in range(27)],
                  dtype=object)
    trace_row = np.array([1, 1, 1] + [0] * 24, dtype=object)
    j0_basis = np.array([[x for x in row]
                         for row in albert.traceless_subspace().basis],
                        dtype=object)
    for a in range(der.dim):
        d = der.mats_int[a]
        gd = gn.dot(d)
        assert not (gd + gd.T).any()                 # exactly trace-form skew
        assert not j0_basis.dot(d.T.dot(trace_row)).any()  # preserves traces=0
    assert der.struct.jacobi_holds()


def test_criterion_02_invariant_form_signatures_and_definiteness():
    tr = albert.traceless_restriction()
    assert QuadForm(tr.gram26).sig == (10, 16, 0)

    expected_ambient = {"su": lambda k: (2, 2 * k, 0),
                        "sp": lambda k: (4, 4 * k, 0),
                        "f4": lambda k: (10, 16, 0)}
    for family, k in DOUBLE_ROOT_CATALOG:
        emb = embedding(family, k)
        assert emb.ambient_form.sig == expected_ambient[family](k)

    for family, k in CATALOG:
        g = alg(family, k)
        assert g.btheta.is_positive_definite()
        assert g.killing.sig == (g.p_part.dim, g.k_part.dim, 0)


def test_criterion_03_restricted_root_dimension_tables():
    expected_mults = {"su": lambda k: (2 * (k - 1), 1),
                      "sp": lambda k: (4 * (k - 1), 3),
                      "f4": lambda k: (8, 7)}
    for family, k in DOUBLE_ROOT_CATALOG:
        g, rd = alg(family, k), decomp(family, k)
        report = lemmas.report_root_table(g, rd)
        assert report["failures"] == []
        short, double = expected_mults[family](k)
        assert rd.g_plus_a.dim == short
        assert rd.g_plus_2a.dim == double
        if family in ("su", "sp"):
            assert rd.m1.dim == rd.g_plus_2a.dim
        else:
            assert rd.m.dim == 21


def test_criterion_04_randomized_identity_suites_have_zero_failures():
    for family, k in CATALOG:
        report = lemmas.verify_transversality_formula(
            alg(family, k), decomp(family, k), trials=100, seed=0)
        assert report["passes"] == 100
        assert report["failures"] == []
    for family in ("su", "sp"):
        for k in (2, 3, 4):
            report = lemmas.verify_m1_identity(
                alg(family, k), decomp(family, k), trials=100, seed=0)
            assert report["passes"] == 100
            assert report["failures"] == []
    for family, k in [("sp", 2), ("sp", 3), ("sp", 4), ("f4", None)]:
        report = lemmas.verify_bracket_identities(alg(family, k),
                                                  decomp(family, k))
        assert report["failures"] == []


@pytest.mark.xfail(
    strict=True,
    reason="the catalogued identity demands [g_2a, g_-2a] = a + m1 for the "
           "complex family, but the computed span is the one-dimensional "
           "split part alone")
def test_criterion_04_complex_family_double_bracket_identity_literal():
    report = lemmas.verify_bracket_identities(alg("su", 2), decomp("su", 2))
    assert report["failures"] == []


def test_criterion_04_complex_family_double_bracket_honest_outcome():
    for k in (2, 3, 4):
        report = lemmas.verify_bracket_identities(alg("su", k),
                                                  decomp("su", k))
        assert [f["check"] for f in report["failures"]] == [
            "double-bracket-is-a-plus-m1"]
        assert report["failures"][0]["computed"] == {"span_dim": 1,
                                                     "a_plus_m1_dim": 2}
        assert report["parameters"]["m1_action_span_dim"] == 0
        assert report["parameters"]["m1_action_asserted"] is False


def test_criterion_05_abelian_witnesses_and_rank_obstructions():
    for family in ("so", "su"):
        for k in (2, 3, 4):
            report = lemmas.verify_abelian_bounds(
                alg(family, k), decomp(family, k), seed=0, samples=50)
            assert report["failures"] == []
            assert report["parameters"]["witness_dim"] == k - 1
            if family == "su":
                assert report["parameters"]["pairing_ranks"] == [2 * (k - 1)]
    for k in (2, 3, 4):
        report = lemmas.verify_abelian_bounds(
            alg("sp", k), decomp("sp", k), seed=0, samples=50)
        assert report["parameters"]["pairing_ranks"] == [4 * (k - 1)] * 3
    report = lemmas.verify_abelian_bounds(alg("f4"), decomp("f4"),
                                          seed=0, samples=50)
    assert report["failures"] == []
    assert report["parameters"]["witness_dim"] == 1
    assert report["parameters"]["kernel_samples"] == 50


@pytest.mark.xfail(
    strict=True,
    reason="the quaternionic witness target 2(k-1) exceeds the true maximum "
           "k-1: an abelian subspace of the short negative root space must "
           "be totally real, and the full-rank bracket pairings enforce it")
def test_criterion_05_quaternionic_witness_target_literal():
    report = lemmas.verify_abelian_bounds(alg("sp", 2), decomp("sp", 2),
                                          seed=0, samples=50)
    assert report["failures"] == []


def test_criterion_05_quaternionic_witness_honest_outcome():
    for k in (2, 3, 4):
        report = lemmas.verify_abelian_bounds(alg("sp", k), decomp("sp", k),
                                              seed=0, samples=50)
        assert [f["check"] for f in report["failures"]] == [
            "witness-dim-target"]
        assert report["failures"][0]["computed"] == {"found": k - 1,
                                                     "target": 2 * (k - 1)}
        assert report["parameters"]["witness_dim"] == k - 1


def test_criterion_06_exceptional_module_schur_facts():
    report = lemmas.verify_standard_rep_facts(alg("f4"), decomp("f4"))
    assert report["failures"] == []
    params = report["parameters"]
    assert params["stabilizer_short"] == 14
    assert params["stabilizer_double"] == 15
    assert params["commutant_module26"] == 1


def test_criterion_07_null_isotropy_structure_and_orbit_dimensions():
    cases = [("so", 4, 3), ("su", 2, 4), ("su", 3, 6),
             ("sp", 2, 10), ("sp", 3, 14)]
    for family, k, orbit in cases:
        g, rd = alg(family, k), decomp(family, k)
        rep = null_isotropy(embedding(family, k), rd)
        assert rep.orbit_dim == orbit
        assert rep.kernel_dim == 0
        assert rep.induced_form.radical().dim == 0
        shape = rd.a.sum_(rep.m_cap_gx).sum_(rd.g_plus_a).sum_(rd.g_plus_2a)
        assert shape == rep.stabilizer
        assert rd.m.dim - rep.m_cap_gx.dim == rd.g_plus_2a.dim
        block = rep.block_signatures
        assert block["minus_a"]["positive_definite"]
        assert block["minus_2a"]["isotropic"]
        assert block["m"]["isotropic"]
        assert block["minus_2a_perp_minus_a"]
        assert block["minus_a_perp_m"]
        assert block["pairing_rank"] == rd.g_plus_2a.dim


def test_criterion_08_hyperbolic_normal_form_recovery():
    for p, q in ((1, 1), (2, 3), (3, 5)):
        report = lemmas.verify_hyperbolic_normal_form(p, q, Q(1),
                                                      seed=0, trials=20)
        assert report["passes"] == 20
        assert report["failures"] == []


def test_criterion_09_two_distribution_curvature_rigidity():
    for p, q in ((1, 2), (2, 2)):
        report = lemmas.verify_two_distributions(p, q)
        assert report["failures"] == []
        assert report["parameters"]["solution_dim"] == 0
        assert report["parameters"]["control_dim"] > 0


def test_criterion_10_cli_verification_is_byte_deterministic():
    cmd = [sys.executable, "-m", "rank1lie.cli", "verify",
           "--algebra", "sp(1,2)", "--lemma", "all", "--seed", "7"]
    runs = [subprocess.run(cmd, capture_output=True, timeout=580)
            for _ in range(2)]
    assert runs[0].stdout
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].returncode == runs[1].returncode
    payload = json.loads(runs[0].stdout)
    assert payload["schema"] == 1
    assert payload["algebra"] == "sp(1,2)"
    assert payload["seed"] == 7
    assert [r["lemma_id"] for r in payload["lemmas"]] == list(LEMMA_IDS)

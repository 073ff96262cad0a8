"""Commutants and invariant symmetric forms of sets of integer matrices.

Both computations are exact kernels of integer linear systems.  A kernel taken
over a *subset* of the generators always contains the space cut out by all of
them, so a subset kernel of dimension 1 that contains a known nonzero member
(the identity for commutants, a given invariant form for form spaces) proves
the full space equals the span of that member.  The helpers below exploit
this: they try growing generator prefixes and only fall back to the full
generator list when the cheap certificate does not close.

Matrix scale factors (common denominators) are irrelevant here because
kernels are invariant under row scaling, so all inputs are plain integer
numpy arrays.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .linalg import Mat, Q, Subspace
from .modsolve import SparseRows, certified_kernel


def _commutant_rows(mats: Sequence[np.ndarray], n: int) -> SparseRows:
    """Rows of the system [A, M] = 0 for all M; unknown A[u][v] at n*u + v."""
    rows = SparseRows(n * n)
    for m in mats:
        for r in range(n):
            for s in range(n):
                d: dict[int, int] = {}
                for u in range(n):
                    v = int(m[r, u])
                    if v:
                        k = n * u + s
                        d[k] = d.get(k, 0) + v
                for v_ in range(n):
                    w = int(m[v_, s])
                    if w:
                        k = n * r + v_
                        d[k] = d.get(k, 0) - w
                if any(d.values()):
                    rows.add_row(d)
    return rows


def _form_rows(mats: Sequence[np.ndarray], n: int,
               pair_index: dict) -> SparseRows:
    """Rows of M^T S + S M = 0 with S symmetric, unknowns on pairs u <= v."""
    rows = SparseRows(len(pair_index))
    for m in mats:
        for r in range(n):
            for s in range(r, n):
                d: dict[int, int] = {}
                for u in range(n):
                    v = int(m[u, r])
                    if v:
                        k = pair_index[(min(u, s), max(u, s))]
                        d[k] = d.get(k, 0) + v
                for v_ in range(n):
                    w = int(m[v_, s])
                    if w:
                        k = pair_index[(min(r, v_), max(r, v_))]
                        d[k] = d.get(k, 0) + w
                if any(d.values()):
                    rows.add_row(d)
    return rows


def sym_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u, n)]


def tri_vector_of_gram(g: Mat) -> list:
    """Upper-triangle coordinates of a symmetric matrix, in sym_pairs order."""
    return [g.data[u][v] for (u, v) in sym_pairs(g.m)]


def gram_of_tri_vector(vec, n: int) -> Mat:
    g = Mat.zeros(n, n)
    for (u, v), x in zip(sym_pairs(n), vec):
        g.data[u][v] = Q(x)
        g.data[v][u] = Q(x)
    return g


_PREFIXES = (2, 4, 8)


def commutant_dim(mats: Sequence[np.ndarray]) -> tuple[int, Subspace]:
    """Dimension of {A : [A, M] = 0 for all M} plus its basis.

    Dimension 1 results are certified via a generator prefix (the identity is
    always in the space); otherwise the full system is solved.
    """
    n = mats[0].shape[0]
    ident = [Q(int(r == s)) for r in range(n) for s in range(n)]
    for size in _PREFIXES:
        if size >= len(mats):
            break
        sub = Subspace.from_vectors(
            n * n, certified_kernel(_commutant_rows(mats[:size], n)))
        if sub.dim == 1:
            assert sub.contains_vector(ident)
            return 1, sub
    sub = Subspace.from_vectors(
        n * n, certified_kernel(_commutant_rows(mats, n)))
    assert sub.contains_vector(ident)
    return sub.dim, sub


def invariant_form_dim(mats: Sequence[np.ndarray],
                       known: Mat | None = None) -> tuple[int, list[Mat]]:
    """Dimension of the space of symmetric forms S with M^T S + S M = 0.

    If `known` is supplied it must lie in the space (asserted exactly), which
    certifies dimension-1 answers obtained from a generator prefix.
    """
    n = mats[0].shape[0]
    pairs = sym_pairs(n)
    pair_index = {p: i for i, p in enumerate(pairs)}
    known_vec = tri_vector_of_gram(known) if known is not None else None
    for size in _PREFIXES:
        if size >= len(mats):
            break
        sub = Subspace.from_vectors(
            len(pairs), certified_kernel(_form_rows(mats[:size], n, pair_index)))
        if sub.dim == 1 and known_vec is not None:
            assert sub.contains_vector(known_vec)
            return 1, [gram_of_tri_vector(sub.basis[0], n)]
    sub = Subspace.from_vectors(
        len(pairs), certified_kernel(_form_rows(mats, n, pair_index)))
    if known_vec is not None:
        assert sub.contains_vector(known_vec)
    return sub.dim, [gram_of_tri_vector(b, n) for b in sub.basis]

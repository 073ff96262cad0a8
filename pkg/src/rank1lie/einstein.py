"""Flat conformal models: each rank-one algebra embedded in the
pseudo-orthogonal algebra of its invariant form, together with the
stabilizer of a highest-weight null line and the quadratic form induced on
the orbit model.

The ambient invariant form is presented index-first (the smaller definite
part positive), matching the usual labels so(2,2k), so(4,4k), so(10,16).
The form induced on g/g_x is taken with respect to the opposite generator
of the same one-dimensional space of invariant forms, which is the choice
that makes the short-root block positive definite; the two choices differ
only by an overall sign.
"""

from __future__ import annotations

import numpy as np

from .errors import BadBasepoint, SolverInconsistency
from .liealg import (LieAlgebraQ, RootDecomposition, int_coords,
                     pairwise_brackets_int, rows_in_span_int)
from .linalg import Mat, Q, QuadForm, Subspace, kernel, qstr, rank
from .structure import basis_to_int, exact_int_matmul

_EMBED_SIG = {
    "so": lambda k: (1, k, 0),
    "su": lambda k: (2, 2 * k, 0),
    "sp": lambda k: (4, 4 * k, 0),
    "f4": lambda k: (10, 16, 0),
}

_ORBIT_DIM = {
    "so": lambda k: k - 1,
    "su": lambda k: 2 * k,
    "sp": lambda k: 4 * k + 2,
    "f4": lambda k: 15,
}


class ConformalEmbedding:
    """The defining realization viewed as a map into the skew algebra of the
    ambient invariant form, with the homomorphism property, injectivity and
    skewness re-verified from scratch on integer matrices."""

    __slots__ = ("alg", "ambient_form", "form_int", "form_den",
                 "quot_int", "quot_den")

    def __init__(self, alg: LieAlgebraQ):
        self.alg = alg
        sign = 1 if alg.family == "f4" else -1
        gram = alg.ambient_gram.scale(sign)
        self.ambient_form = QuadForm(gram)
        expected = _EMBED_SIG[alg.family](alg.k)
        if self.ambient_form.sig != expected:
            raise SolverInconsistency(
                f"invariant form has signature {self.ambient_form.sig}, "
                f"expected {expected}")
        rows, den = gram.to_int_rows()
        self.form_int = np.array(rows, dtype=np.int64)
        self.form_den = den
        # opposite generator: the sign making short-root images spacelike
        self.quot_int = -self.form_int
        self.quot_den = den
        self._verify_skewness()
        self._verify_homomorphism()
        self._verify_injectivity()

    @property
    def images(self) -> list[Mat]:  # type: ignore[override]
        return self.alg.realization

    def _verify_skewness(self):
        g = self.alg
        gi = self.form_int
        for a in range(g.dim):
            m = g.b_int[a].reshape(g.nside, g.nside)
            if np.any(exact_int_matmul(gi, m) + exact_int_matmul(m.T, gi)):
                raise SolverInconsistency("image is not skew for the form")

    def _verify_homomorphism(self):
        """[rho_a, rho_b] = sum_m c_abm rho_m, all pairs, exactly."""
        g = self.alg
        n, ns = g.dim, g.nside
        r3 = g.b_int.reshape(n, ns, ns)
        left = r3.reshape(n * ns, ns)
        right = np.ascontiguousarray(r3.transpose(1, 0, 2)).reshape(
            ns, n * ns)
        prod = exact_int_matmul(left, right).reshape(n, ns, n, ns)
        prod = prod.transpose(0, 2, 1, 3)
        comm = prod - prod.transpose(1, 0, 2, 3)
        combo = exact_int_matmul(g.struct.num.reshape(n * n, n),
                                 g.b_int).reshape(n, n, ns, ns)
        lhs = comm.astype(object) * int(g.struct.den)
        rhs = combo.astype(object) * int(g.bden)
        if np.any(lhs != rhs):
            raise SolverInconsistency("realization is not a homomorphism")

    def _verify_injectivity(self):
        g = self.alg
        rows = [[Q(int(x), g.bden) for x in r] for r in g.b_int]
        if Subspace.from_vectors(g.nside * g.nside, rows).dim != g.dim:
            raise SolverInconsistency("realization is not injective")


def build_embedding(g: LieAlgebraQ) -> ConformalEmbedding:
    return ConformalEmbedding(g)


class IsotropyReport:
    """Stabilizer of the chosen null line and the induced structure."""

    __slots__ = ("null_vector", "stabilizer", "induced_form",
                 "quotient_basis", "block_signatures", "kernel_dim",
                 "orbit_dim", "m_cap_gx", "m_image_equals_m1_image",
                 "m_cap_gx_equals_m2", "full_gram")

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])


def _hw_null_vector(e: ConformalEmbedding, rd: RootDecomposition) -> list:
    """The highest-weight null direction: inside the joint kernel of the
    positive root spaces (automatically H-invariant), scan for a null
    H-eigenvector."""
    g = e.alg
    ns = g.nside
    stacks = []
    for space in (rd.g_plus_a, rd.g_plus_2a):
        if space.dim == 0:
            continue
        bi, _ = basis_to_int(space.basis)
        imgs = exact_int_matmul(bi, g.b_int)
        stacks.extend(imgs.reshape(space.dim * ns, ns))
    joint = kernel(Mat([[Q(int(x)) for x in row] for row in stacks]))
    if joint.dim == 0:
        raise BadBasepoint("positive root spaces have no joint kernel")
    hi, hd = int_coords(rd.H)
    hm = exact_int_matmul(hi.reshape(1, -1), g.b_int)[0].reshape(ns, ns)
    hmat = Mat([[Q(int(hm[i][j]), hd * g.bden) for j in range(ns)]
                for i in range(ns)])
    # restrict H to the joint kernel and require a scalar action there
    imgs = [hmat.matvec(b) for b in joint.basis]
    coords = [joint.coordinates(w) for w in imgs]
    if any(c is None for c in coords):
        raise BadBasepoint("H does not preserve the joint kernel")
    small = Mat(coords).transpose()
    mu = small[0, 0]
    if small != Mat.identity(joint.dim).scale(mu):
        raise BadBasepoint("H is not scalar on the joint kernel")
    form = e.ambient_form
    candidates = [list(b) for b in joint.basis]
    for i in range(joint.dim):
        for j in range(i + 1, joint.dim):
            for s in (1, -1):
                candidates.append([a + s * b for a, b in
                                   zip(joint.basis[i], joint.basis[j])])
    for v in candidates:
        if form.value(v, v) == 0 and any(v):
            return v
    raise BadBasepoint("no null direction in the joint kernel")


def null_isotropy(e: ConformalEmbedding,
                  rd: RootDecomposition) -> IsotropyReport:
    g = e.alg
    last = None
    for v in _basepoint_candidates(e, rd):
        try:
            return _isotropy_at(e, rd, v)
        except BadBasepoint as exc:
            last = exc
    raise BadBasepoint(f"all basepoint candidates failed: {last}")


def _basepoint_candidates(e, rd):
    yield _hw_null_vector(e, rd)
    # fallback: every null H-eigendirection read from eigen-kernels
    g = e.alg
    ns = g.nside
    hi, hd = int_coords(rd.H)
    hm = exact_int_matmul(hi.reshape(1, -1), g.b_int)[0]
    hmat = Mat([[Q(int(x), hd * g.bden) for x in row]
                for row in hm.reshape(ns, ns)])
    seen = 0
    for num, den in ((2, 1), (1, 1), (1, 2), (0, 1), (-1, 2), (-1, 1),
                     (-2, 1)):
        eig = kernel(hmat.scale(den) - Mat.identity(ns).scale(num))
        for b in eig.basis:
            if e.ambient_form.value(b, b) == 0 and any(b):
                seen += 1
                yield list(b)
        if seen > 12:
            return


def _isotropy_at(e: ConformalEmbedding, rd: RootDecomposition,
                 v: list) -> IsotropyReport:
    g = e.alg
    ns, n = g.nside, g.dim
    vi, _vd = int_coords(v)
    if e.ambient_form.value(v, v) != 0:
        raise BadBasepoint("basepoint is not null")
    w = exact_int_matmul(g.b_int.reshape(n * ns, ns),
                         vi.reshape(-1, 1)).reshape(n, ns)
    # <Xv, v> = 0 for every X: the induced form descends to g/g_x
    gv = exact_int_matmul(e.form_int, vi.reshape(-1, 1)).reshape(-1)
    if np.any(exact_int_matmul(w, gv.reshape(-1, 1))):
        raise SolverInconsistency("orbit directions are not orthogonal to v")
    # stabilizer: rho(X) v proportional to v, as exact 2x2 minors
    j0 = next(i for i in range(ns) if vi[i])
    rows = []
    for i in range(ns):
        if i == j0:
            continue
        rows.append([Q(int(w[a][i]) * int(vi[j0])
                       - int(w[a][j0]) * int(vi[i])) for a in range(n)])
    gx = kernel(Mat(rows))
    # induced gram on all of g, with respect to the opposite generator
    gw = exact_int_matmul(w, e.quot_int)
    gx_gram_int = exact_int_matmul(gw, w.T)
    full_gram = Mat([[Q(int(x), 1) for x in row] for row in gx_gram_int])
    qf = QuadForm(full_gram)
    rad = qf.radical()
    if not rad.contains(gx):
        raise SolverInconsistency("stabilizer is not in the form's radical")
    kernel_dim = rad.dim - gx.dim
    # rescaling v by c multiplies the gram by c^2 (c = 2, 3)
    for c in (2, 3):
        wc = exact_int_matmul(g.b_int.reshape(n * ns, ns),
                              (c * vi).reshape(-1, 1)).reshape(n, ns)
        gc = exact_int_matmul(exact_int_matmul(wc, e.quot_int), wc.T)
        if np.any(gc != c * c * gx_gram_int):
            raise SolverInconsistency("form does not rescale by c^2")
    # ad(s)-invariance of the stabilizer
    s_sub = rd.a.sum_(rd.g_plus_a).sum_(rd.g_plus_2a)
    if gx.dim and s_sub.dim:
        bs, _ = basis_to_int(s_sub.basis)
        bx, _ = basis_to_int(gx.basis)
        if not rows_in_span_int(gx, pairwise_brackets_int(g.struct, bs, bx)):
            raise BadBasepoint("stabilizer is not ad(s)-invariant")
    m_cap_gx = rd.m.intersect(gx)
    shape = rd.a.sum_(m_cap_gx).sum_(rd.g_plus_a).sum_(rd.g_plus_2a)
    block = _block_signatures(e, rd, qf, w, gx)
    m_img_eq = _image_span(g, w, rd.m) == _image_span(g, w, rd.m1)
    m2_eq = m_cap_gx == rd.m2
    if g.family in ("so", "su", "sp"):
        if shape != gx:
            raise BadBasepoint("stabilizer does not split along root spaces")
        if rd.m.dim - m_cap_gx.dim != rd.g_plus_2a.dim:
            raise BadBasepoint("wrong codimension of m in the stabilizer")
        if kernel_dim != 0:
            raise BadBasepoint("induced form is degenerate on the quotient")
        if not block["minus_a"]["positive_definite"]:
            raise BadBasepoint("short root block is not positive definite")
        if not (block["minus_2a"]["isotropic"] and block["m"]["isotropic"]):
            raise BadBasepoint("extreme blocks are not isotropic")
        if not (block["minus_2a_perp_minus_a"] and block["minus_a_perp_m"]):
            raise BadBasepoint("blocks are not orthogonal")
        if block["pairing_rank"] != rd.g_plus_2a.dim:
            raise BadBasepoint("isotropic blocks do not pair fully")
        if g.family in ("su", "sp"):
            if not m_img_eq:
                raise BadBasepoint("m and m1 have different images")
            if g.k in (3, 4) and not m2_eq:
                raise BadBasepoint("m cap g_x differs from m2")
        else:
            if not rd.m.contains(m_cap_gx) or m_cap_gx != rd.m:
                raise BadBasepoint("m does not stabilize the null line")
    quotient_basis = _complement_basis(g, gx, rd)
    cb = Mat(quotient_basis)
    induced = QuadForm(cb @ full_gram @ cb.transpose())
    if induced.dim != n - gx.dim:
        raise SolverInconsistency("quotient basis has the wrong size")
    if induced.radical().dim != kernel_dim:
        raise SolverInconsistency("quotient radical mismatch")
    block["total"] = list(induced.sig)
    return IsotropyReport(
        null_vector=[Q(int(x)) for x in vi], stabilizer=gx,
        induced_form=induced, quotient_basis=quotient_basis,
        block_signatures=block, kernel_dim=kernel_dim,
        orbit_dim=n - gx.dim, m_cap_gx=m_cap_gx,
        m_image_equals_m1_image=m_img_eq, m_cap_gx_equals_m2=m2_eq,
        full_gram=full_gram)


def _image_span(g, w, sub: Subspace) -> Subspace:
    if sub.dim == 0:
        return Subspace.zero(g.nside)
    bi, _ = basis_to_int(sub.basis)
    imgs = exact_int_matmul(bi, w)
    return Subspace.from_vectors(g.nside,
                                 [[Q(int(x)) for x in r] for r in imgs])


def _block_signatures(e, rd, qf: QuadForm, w, gx) -> dict:
    g = e.alg

    def cross_zero(s1: Subspace, s2: Subspace) -> bool:
        if s1.dim == 0 or s2.dim == 0:
            return True
        return (s1.basis_mat() @ qf.gram @ s2.basis_mat().transpose()
                ).is_zero()

    def cross_rank(s1: Subspace, s2: Subspace) -> int:
        if s1.dim == 0 or s2.dim == 0:
            return 0
        return rank(s1.basis_mat() @ qf.gram @ s2.basis_mat().transpose())

    out = {
        "minus_2a": {"dim": rd.g_minus_2a.dim,
                     "isotropic": cross_zero(rd.g_minus_2a, rd.g_minus_2a)},
        "m": {"dim": rd.m.dim, "isotropic": cross_zero(rd.m, rd.m)},
        "minus_2a_perp_minus_a": cross_zero(rd.g_minus_2a, rd.g_minus_a),
        "minus_a_perp_m": cross_zero(rd.g_minus_a, rd.m),
        "pairing_rank": cross_rank(rd.g_minus_2a, rd.m),
    }
    if rd.g_minus_a.dim:
        sub = qf.restrict(rd.g_minus_a)
        out["minus_a"] = {"dim": rd.g_minus_a.dim, "sig": list(sub.sig),
                          "positive_definite": sub.is_positive_definite()}
    else:
        out["minus_a"] = {"dim": 0, "sig": [0, 0, 0],
                          "positive_definite": True}
    return out


def _complement_basis(g, gx: Subspace, rd: RootDecomposition) -> list:
    """A basis of a complement of the stabilizer, preferring negative root
    vectors first so the block structure is visible in the quotient gram."""
    current = gx
    out = []
    for space in (rd.g_minus_2a, rd.g_minus_a, rd.m, rd.a, rd.g_plus_a,
                  rd.g_plus_2a):
        for b in space.basis:
            if current.dim == g.dim:
                return out
            if not current.contains_vector(b):
                out.append(list(b))
                current = current.sum_(Subspace.from_vectors(g.dim, [b]))
    return out


def orbit_dimension_table(g: LieAlgebraQ, rd: RootDecomposition,
                          report: IsotropyReport | None = None) -> dict:
    """Orbit dimension dim g - dim g_x against the closed forms."""
    if report is None:
        report = null_isotropy(build_embedding(g), rd)
    expected = _ORBIT_DIM[g.family](g.k)
    entries = [("orbit-dim", report.orbit_dim == expected,
                {"dim": report.orbit_dim, "expected": expected}),
               ("stabilizer-dim", g.dim - report.orbit_dim
                == report.stabilizer.dim, {"dim": report.stabilizer.dim})]
    failures = [{"check": c, "computed": comp}
                for c, ok, comp in entries if not ok]
    params = {"orbit_dim": report.orbit_dim,
              "stabilizer_dim": report.stabilizer.dim,
              "kernel_dim": report.kernel_dim}
    return {"lemma_id": "orbit-dims", "family": g.name, "parameters": params,
            "trials": len(entries), "passes": len(entries) - len(failures),
            "failures": failures}


def report_embedding_signature(g: LieAlgebraQ) -> dict:
    """The construction re-runs all embedding invariants; reaching the
    report at all certifies skewness, homomorphism and injectivity."""
    try:
        e = build_embedding(g)
        sig = list(e.ambient_form.sig)
        expected = list(_EMBED_SIG[g.family](g.k))
        entries = [("ambient-signature", sig == expected,
                    {"sig": sig, "expected": expected}),
                   ("skew-homomorphism-injective", True, {})]
        failures = []
        params = {"signature": sig, "ambient_dim": g.nside}
    except SolverInconsistency as exc:
        entries = [("embedding-invariants", False, {})]
        failures = [{"check": "embedding-invariants", "detail": str(exc)}]
        params = {}
    return {"lemma_id": "embedding-signature", "family": g.name,
            "parameters": params, "trials": len(entries),
            "passes": len(entries) - len(failures), "failures": failures}


def report_null_isotropy(g: LieAlgebraQ, rd: RootDecomposition) -> dict:
    """Summary of the stabilizer computation; the family-specific block
    asserts run inside null_isotropy and convert to a single failure entry
    when violated."""
    try:
        rep = null_isotropy(build_embedding(g), rd)
        params = {
            "orbit_dim": rep.orbit_dim,
            "stabilizer_dim": rep.stabilizer.dim,
            "kernel_dim": rep.kernel_dim,
            "block_signatures": rep.block_signatures,
            "m_cap_gx_dim": rep.m_cap_gx.dim,
            "m_image_equals_m1_image": rep.m_image_equals_m1_image,
            "m_cap_gx_equals_m2": rep.m_cap_gx_equals_m2,
            "null_vector": [qstr(x) for x in rep.null_vector],
        }
        asserted = g.family != "f4"
        entries = [("stabilizer-and-blocks", True,
                    {"asserted": asserted})]
        failures = []
    except (BadBasepoint, SolverInconsistency) as exc:
        params = {}
        entries = [("stabilizer-and-blocks", False, {})]
        failures = [{"check": "stabilizer-and-blocks", "detail": str(exc)}]
    return {"lemma_id": "null-isotropy", "family": g.name,
            "parameters": params, "trials": len(entries),
            "passes": len(entries) - len(failures), "failures": failures}

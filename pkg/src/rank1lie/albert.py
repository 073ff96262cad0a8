"""The 27-dimensional exceptional Jordan algebra over an indefinite form,
and its derivation algebra.

Elements are 3x3 octonionic matrices x satisfying x = p x* p with
p = diag(-1, 1, 1), parametrized as

    [[ xi1,        c1,        c3  ],
     [ -conj(c1),  xi2,       c2  ],
     [ -conj(c3),  conj(c2),  xi3 ]]

with real xi_i and octonion c_i.  The product is x * y = (xy + yx)/2.
Coordinates: (xi1, xi2, xi3) then c1, c2, c3 in octonion basis order (27 total).

The derivation algebra (the rank-one real form of the exceptional 52-dim
simple algebra) is computed as the exact kernel of the Leibniz equations
D(b_i * b_j) = D(b_i) * b_j + b_i * D(b_j) over all basis pairs: 10206
equations in the 729 entries of D.
"""

from __future__ import annotations

import numpy as np

from .composition import Octonion
from .errors import SolverInconsistency
from .invariants import commutant_dim, invariant_form_dim
from .linalg import Mat, Q, Subspace, kernel, qstr
from .modsolve import SparseRows, certified_kernel
from .structure import (StructureData, basis_to_int, exact_int_matmul,
                        structure_from_realization)

DIM_J = 27
DIM_DERIVATIONS = 52

# sign pattern of the algebra automorphism x -> p x p (conjugation by the
# form matrix): it fixes the diagonal and the c2 block and negates c1, c3;
# conjugating derivations by it realizes the Cartan involution downstream
THETA_DIAG = (1, 1, 1) + (-1,) * 8 + (1,) * 8 + (-1,) * 8


class AlbertElement:
    """Element of the Jordan algebra, stored as its 27 rational coordinates."""

    __slots__ = ("co",)

    def __init__(self, coords):
        co = tuple(Q(x) for x in coords)
        assert len(co) == DIM_J
        self.co = co

    @classmethod
    def unit(cls, i: int) -> "AlbertElement":
        return cls(tuple(int(j == i) for j in range(DIM_J)))

    @classmethod
    def identity(cls) -> "AlbertElement":
        return cls((1, 1, 1) + (0,) * 24)

    def octonion_part(self, i: int) -> Octonion:
        return Octonion(self.co[3 + 8 * i: 11 + 8 * i])

    def __add__(self, o):
        return AlbertElement(tuple(a + b for a, b in zip(self.co, o.co)))

    def __sub__(self, o):
        return AlbertElement(tuple(a - b for a, b in zip(self.co, o.co)))

    def scale(self, c):
        c = Q(c)
        return AlbertElement(tuple(c * a for a in self.co))

    def __eq__(self, o):
        return isinstance(o, AlbertElement) and self.co == o.co

    def trace(self):
        return self.co[0] + self.co[1] + self.co[2]

    def to_matrix(self):
        c1, c2, c3 = (self.octonion_part(i) for i in range(3))
        r = Octonion.from_real
        return [[r(self.co[0]), c1, c3],
                [-c1.conj(), r(self.co[1]), c2],
                [-c3.conj(), c2.conj(), r(self.co[2])]]

    @classmethod
    def from_matrix(cls, m) -> "AlbertElement":
        for i in range(3):
            assert not any(m[i][i].co[1:]), "diagonal not real"
        assert m[1][0] == -m[0][1].conj(), "(2,1) block violates the form"
        assert m[2][0] == -m[0][2].conj(), "(3,1) block violates the form"
        assert m[2][1] == m[1][2].conj(), "(3,2) block violates the form"
        return cls((m[0][0].real(), m[1][1].real(), m[2][2].real())
                   + m[0][1].co + m[1][2].co + m[0][2].co)

    def __repr__(self):
        return "AlbertElement(" + ", ".join(str(x) for x in self.co) + ")"


def _matmul3(a, b):
    """Octonionic 3x3 matrix product (order of factors matters)."""
    return [[sum((a[i][m] * b[m][l] for m in range(1, 3)),
                 a[i][0] * b[0][l]) for l in range(3)] for i in range(3)]


def jordan_product(x: AlbertElement, y: AlbertElement) -> AlbertElement:
    """x * y = (xy + yx)/2; commutative, not associative."""
    ma, mb = x.to_matrix(), y.to_matrix()
    ab, ba = _matmul3(ma, mb), _matmul3(mb, ma)
    half = Q(1, 2)
    s = [[(ab[i][l] + ba[i][l]).scale(half) for l in range(3)] for i in range(3)]
    return AlbertElement.from_matrix(s)


def trace_form(x: AlbertElement, y: AlbertElement):
    """q(x, y) = Tr(x * y); the invariant trace form."""
    return jordan_product(x, y).trace()


_cache: dict = {}


def jordan_basis() -> list[AlbertElement]:
    if "basis" not in _cache:
        _cache["basis"] = [AlbertElement.unit(i) for i in range(DIM_J)]
    return _cache["basis"]


def jordan_structure() -> list[list[tuple]]:
    """S[i][j] = coordinates of b_i * b_j (symmetric in i, j)."""
    if "structure" not in _cache:
        basis = jordan_basis()
        s: list[list] = [[None] * DIM_J for _ in range(DIM_J)]
        for i in range(DIM_J):
            for j in range(i, DIM_J):
                co = jordan_product(basis[i], basis[j]).co
                s[i][j] = co
                s[j][i] = co
        _cache["structure"] = s
    return _cache["structure"]


def trace_gram() -> Mat:
    """Gram matrix of q on the 27 coordinates; signature (11, 16, 0)."""
    if "gram" not in _cache:
        s = jordan_structure()
        _cache["gram"] = Mat([[s[i][j][0] + s[i][j][1] + s[i][j][2]
                               for j in range(DIM_J)] for i in range(DIM_J)])
    return _cache["gram"]


def traceless_subspace() -> Subspace:
    """J_0: the 26-dimensional trace-zero subspace."""
    if "j0" not in _cache:
        _cache["j0"] = kernel(Mat([[1, 1, 1] + [0] * 24]))
    return _cache["j0"]


def _doubled_structure_int() -> list[list[list[int]]]:
    """2 * S with integer entries (unit products have half-integer coords)."""
    s = jordan_structure()
    out = []
    for i in range(DIM_J):
        row = []
        for j in range(DIM_J):
            vals = []
            for x in s[i][j]:
                v = 2 * x
                assert int(v.denominator) == 1
                vals.append(int(v.numerator))
            row.append(vals)
        out.append(row)
    return out


def _derivation_rows() -> SparseRows:
    """Leibniz constraints as sparse integer rows over the 729 entries of D.

    Unknown index 27*r + s holds D[r][s]; for each basis pair i <= j and each
    output coordinate r the equation is
    sum_s S[i][j][s] D[r][s] - sum_u S[u][j][r] D[u][i] - sum_u S[u][i][r] D[u][j] = 0.
    """
    s2 = _doubled_structure_int()
    # tnz[j][r] = nonzero (u, S2[u][j][r]) pairs: the left-multiplication data
    tnz: list[list[list[tuple[int, int]]]] = [
        [[] for _ in range(DIM_J)] for _ in range(DIM_J)]
    for u in range(DIM_J):
        for j in range(DIM_J):
            col = s2[u][j]
            for r in range(DIM_J):
                if col[r]:
                    tnz[j][r].append((u, col[r]))
    rows = SparseRows(DIM_J * DIM_J)
    for i in range(DIM_J):
        for j in range(i, DIM_J):
            sij = s2[i][j]
            for r in range(DIM_J):
                d: dict[int, int] = {}
                for s_idx, v in enumerate(sij):
                    if v:
                        k = DIM_J * r + s_idx
                        d[k] = d.get(k, 0) + v
                for u, v in tnz[j][r]:
                    k = DIM_J * u + i
                    d[k] = d.get(k, 0) - v
                for u, v in tnz[i][r]:
                    k = DIM_J * u + j
                    d[k] = d.get(k, 0) - v
                if any(d.values()):
                    rows.add_row(d)
    return rows


class DerivationAlgebra:
    """The 52-dimensional derivation algebra with verified structure constants."""

    def __init__(self, basis_rows: list[list], pivots: list[int]):
        self.dim = len(basis_rows)
        self.basis_rows = basis_rows          # RREF rows over 729 coordinates
        self.pivots = pivots
        self.b_int, self.den = basis_to_int(basis_rows)
        self.mats_int = [self.b_int[m].reshape(DIM_J, DIM_J)
                         for m in range(self.dim)]
        self.struct: StructureData = structure_from_realization(
            basis_rows, pivots, DIM_J)

    def matrix(self, a: int) -> Mat:
        return Mat([[Q(int(self.mats_int[a][r, s]), self.den)
                     for s in range(DIM_J)] for r in range(DIM_J)])

    def element_matrix_int(self, coords_int: np.ndarray) -> np.ndarray:
        """sum coords[a] * (den * D_a) as an int64 27x27 matrix."""
        flat = exact_int_matmul(coords_int.reshape(1, -1), self.b_int)[0]
        return flat.reshape(DIM_J, DIM_J)

    def coordinates_of_int(self, mat_int: np.ndarray, mden: int) -> list | None:
        """Coordinates of mat_int/mden in the derivation basis, or None.

        Candidate coefficients come from pivot reads; the exact residual check
        below makes the answer a proof of membership (or of non-membership).
        """
        flat = mat_int.reshape(DIM_J * DIM_J)
        coeffs = [Q(int(flat[c]), mden) for c in self.pivots]
        resid = [Q(int(v), mden) for v in flat]
        for coef, row in zip(coeffs, self.basis_rows):
            if coef:
                for jj, x in enumerate(row):
                    if x:
                        resid[jj] -= coef * x
        if any(resid):
            return None
        return coeffs

    def to_jsonable(self) -> dict:
        n = self.dim
        return {
            "dim": n,
            "basis_labels": [f"D{a:02d}" for a in range(n)],
            "structure_constants": [
                [[qstr(self.struct.c(a, b, m)) for m in range(n)]
                 for b in range(n)] for a in range(n)],
        }


def derivation_algebra() -> DerivationAlgebra:
    """Solve the Leibniz system exactly; cached after the first call."""
    if "derivations" not in _cache:
        rows = _derivation_rows()
        basis = certified_kernel(rows)
        sub = Subspace.from_vectors(DIM_J * DIM_J, basis)
        alg = DerivationAlgebra([list(r) for r in sub.basis], sub.pivots)
        _check_derivations(alg)
        _cache["derivations"] = alg
    return _cache["derivations"]


def _check_derivations(alg: DerivationAlgebra):
    if alg.dim != DIM_DERIVATIONS:
        raise SolverInconsistency(
            f"derivation algebra has dimension {alg.dim}, expected 52")
    gram_int, _gden = trace_gram().to_int_rows()
    g = np.array(gram_int, dtype=np.int64)
    tracevec = np.array([[1, 1, 1] + [0] * 24], dtype=np.int64)
    ident = tracevec.T
    for m in alg.mats_int:
        if np.any(exact_int_matmul(g, m) + exact_int_matmul(m.T, g)):
            raise SolverInconsistency("derivation is not skew for the trace form")
        if np.any(exact_int_matmul(m, ident)):
            raise SolverInconsistency("derivation does not kill the identity")
        if np.any(exact_int_matmul(tracevec, m)):
            raise SolverInconsistency("derivation does not preserve J_0")
    if not alg.struct.antisymmetric():
        raise SolverInconsistency("structure constants not antisymmetric")
    if not alg.struct.jacobi_holds():
        raise SolverInconsistency("structure constants violate Jacobi")


class TracelessRestriction:
    """The faithful degree-26 restriction of the derivation algebra to J_0."""

    def __init__(self):
        alg = derivation_algebra()
        j0 = traceless_subspace()
        self.j0 = j0
        k_int, kden = basis_to_int([list(r) for r in j0.basis])
        self.k_int, self.kden = k_int, kden
        # rho(D) columns: coordinates of D(w_s) for J_0 basis vectors w_s
        self.rho_int: list[np.ndarray] = []
        self.rden = alg.den * kden
        for m in alg.mats_int:
            img = exact_int_matmul(m, k_int.T)        # 27 x 26, scale den*kden
            coords = img[list(j0.pivots), :]          # pivot reads
            if np.any(exact_int_matmul(k_int.T, coords) != kden * img):
                raise SolverInconsistency("derivation image left J_0")
            self.rho_int.append(coords)
        self.alg = alg
        gram_int, gden = trace_gram().to_int_rows()
        g = np.array(gram_int, dtype=np.int64)
        g26 = exact_int_matmul(exact_int_matmul(k_int, g), k_int.T)
        self.gram26_int = g26
        self.gram26 = Mat([[Q(int(g26[i, j]), gden * kden * kden)
                            for j in range(26)] for i in range(26)])
        self._verify_homomorphism()
        self._verify_form_invariance()

    def rho_mat(self, a: int) -> Mat:
        r = self.rho_int[a]
        return Mat([[Q(int(r[i, j]), self.rden) for j in range(26)]
                    for i in range(26)])

    def _verify_homomorphism(self):
        """[rho_a, rho_b] must equal sum_m c_abm rho_m, exactly (all pairs)."""
        n = self.alg.dim
        c = self.alg.struct
        r3 = np.stack(self.rho_int)                   # (n, 26, 26)
        left = r3.reshape(n * 26, 26)
        right = r3.transpose(1, 0, 2).reshape(26, n * 26)
        prod = exact_int_matmul(left, right).reshape(n, 26, n, 26)
        prod = prod.transpose(0, 2, 1, 3)             # (a, b, i, j)
        comm = prod - prod.transpose(1, 0, 2, 3)
        rflat = r3.reshape(n, 26 * 26)
        combo = exact_int_matmul(c.num.reshape(n * n, n), rflat)
        lhs = int(c.den) * comm.reshape(n * n, 26 * 26).astype(object)
        rhs = int(self.rden) * combo.astype(object)
        if np.any(lhs != rhs):
            raise SolverInconsistency("restriction is not a homomorphism")

    def _verify_form_invariance(self):
        """Each rho must be skew for the restricted trace form."""
        g = self.gram26_int
        for r in self.rho_int:
            if np.any(exact_int_matmul(g, r) + exact_int_matmul(r.T, g)):
                raise SolverInconsistency(
                    "restricted form is not derivation-invariant")

    def faithful(self) -> bool:
        rows = [[Q(int(x), self.rden) for x in r.reshape(26 * 26)]
                for r in self.rho_int]
        return Subspace.from_vectors(26 * 26, rows).dim == self.alg.dim

    def commutant_dimension(self) -> int:
        dim, _ = commutant_dim(self.rho_int)
        return dim

    def invariant_form_dimension(self) -> int:
        """Dimension of the invariant symmetric forms; the restricted trace
        form generates it when the answer is 1."""
        dim, _ = invariant_form_dim(self.rho_int, known=self.gram26)
        return dim


def traceless_restriction() -> TracelessRestriction:
    if "restriction" not in _cache:
        _cache["restriction"] = TracelessRestriction()
    return _cache["restriction"]

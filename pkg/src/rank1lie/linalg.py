"""Exact linear algebra over the rationals.

All arithmetic uses arbitrary-precision rationals (gmpy2.mpq, falling back to
fractions.Fraction), so every rank, kernel, signature and subspace identity in
the package is decided exactly; there are no tolerances anywhere.

Subspaces are stored as reduced-row-echelon bases, which are canonical: two
subspaces are equal iff their stored bases compare entrywise equal.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import DegenerateInput, DimensionMismatch, NonSymmetric

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

QZERO = Q(0)
QONE = Q(1)


def qstr(x) -> str:
    """Serialize a rational as "n/d" (always with an explicit denominator)."""
    x = Q(x)
    return f"{int(x.numerator)}/{int(x.denominator)}"


def as_q(x) -> Q:
    return x if type(x) is type(QZERO) else Q(x)


class Mat:
    """Dense rational matrix.  Treated as immutable after construction."""

    __slots__ = ("m", "n", "data")

    def __init__(self, data: Sequence[Sequence]):
        self.data = [[as_q(x) for x in row] for row in data]
        self.m = len(self.data)
        self.n = len(self.data[0]) if self.m else 0
        for row in self.data:
            if len(row) != self.n:
                raise DimensionMismatch("ragged rows")

    @classmethod
    def zeros(cls, m: int, n: int) -> "Mat":
        return cls([[QZERO] * n for _ in range(m)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        out = [[QZERO] * n for _ in range(n)]
        for i in range(n):
            out[i][i] = QONE
        return cls(out)

    @classmethod
    def diag(cls, entries: Sequence) -> "Mat":
        n = len(entries)
        out = [[QZERO] * n for _ in range(n)]
        for i, e in enumerate(entries):
            out[i][i] = as_q(e)
        return cls(out)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i) -> list:
        return list(self.data[i])

    def col(self, j) -> list:
        return [r[j] for r in self.data]

    def __eq__(self, other):
        return isinstance(other, Mat) and self.data == other.data

    def __add__(self, other: "Mat") -> "Mat":
        if (self.m, self.n) != (other.m, other.n):
            raise DimensionMismatch("add")
        return Mat([[a + b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.m, self.n) != (other.m, other.n):
            raise DimensionMismatch("sub")
        return Mat([[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.data])

    def scale(self, c) -> "Mat":
        c = as_q(c)
        return Mat([[c * a for a in r] for r in self.data])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.n != other.m:
            raise DimensionMismatch("matmul")
        bt = list(zip(*other.data))
        out = []
        for r in self.data:
            nz = [(j, v) for j, v in enumerate(r) if v]
            out.append([sum((v * bc[j] for j, v in nz), QZERO) for bc in bt])
        return Mat(out)

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.n:
            raise DimensionMismatch("matvec")
        return [sum((a * x for a, x in zip(r, v) if a), QZERO) for r in self.data]

    def transpose(self) -> "Mat":
        return Mat([list(c) for c in zip(*self.data)]) if self.m else Mat([[]])

    def trace(self) -> Q:
        return sum((self.data[i][i] for i in range(min(self.m, self.n))), QZERO)

    def is_symmetric(self) -> bool:
        return self.m == self.n and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.m) for j in range(i + 1, self.n))

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def copy_rows(self) -> list:
        return [list(r) for r in self.data]

    def to_int_rows(self) -> tuple[list[list[int]], int]:
        """Scale entries by the common denominator; returns (int rows, denominator)."""
        den = 1
        for r in self.data:
            for x in r:
                den = math.lcm(den, int(x.denominator))
        rows = [[int(x.numerator) * (den // int(x.denominator)) for x in r]
                for r in self.data]
        return rows, den

    def __repr__(self):
        return f"Mat({self.m}x{self.n})"


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form.  Returns (nonzero rows, pivot columns).

    Row operations iterate over the pivot row's nonzero tail only, so sparse
    systems (the defining equations of the matrix algebras) reduce cheaply.
    """
    pivots: list[int] = []
    pr = 0
    nrows = len(rows)
    for c in range(ncols):
        pi = -1
        for r in range(pr, nrows):
            if rows[r][c]:
                pi = r
                break
        if pi < 0:
            continue
        rows[pr], rows[pi] = rows[pi], rows[pr]
        prow = rows[pr]
        pv = prow[c]
        if pv != 1:
            inv = 1 / pv
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(c, ncols) if prow[j]]
        for r in range(nrows):
            if r == pr:
                continue
            rr = rows[r]
            f = rr[c]
            if f:
                for j in nz:
                    rr[j] -= f * prow[j]
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return rows[:pr], pivots


def rref(mat: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows, pivots = _rref_rows(mat.copy_rows(), mat.n)
    return Mat(rows) if rows else Mat.zeros(0, mat.n), pivots


def rank(mat: Mat) -> int:
    return len(rref(mat)[1])


def _kernel_rows(rows: list[list], ncols: int) -> list[list]:
    red, pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [QZERO] * ncols
        v[f] = QONE
        for ri, pc in enumerate(pivots):
            if red[ri][f]:
                v[pc] = -red[ri][f]
        basis.append(v)
    return basis


def kernel(mat: Mat) -> "Subspace":
    """Right null space {v : mat @ v = 0} as a canonical Subspace."""
    return Subspace.from_vectors(mat.n, _kernel_rows(mat.copy_rows(), mat.n))


def coords_against_rref(red_rows: list[list], pivots: list[int],
                        v: Sequence) -> list | None:
    """Coordinates of v in the row space spanned by an RREF basis, or None.

    Because the basis is reduced, the candidate coordinates are just the
    entries of v at the pivot columns; membership is then verified exactly.
    """
    coeffs = [as_q(v[c]) for c in pivots]
    resid = [as_q(x) for x in v]
    for coef, row in zip(coeffs, red_rows):
        if coef:
            for j, x in enumerate(row):
                if x:
                    resid[j] -= coef * x
    if any(resid):
        return None
    return coeffs


class Subspace:
    """Linear subspace of Q^ambient with a canonical (RREF) basis.

    Equality of subspaces is literal equality of stored bases.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis_rows: list[list], pivots: list[int]):
        self.ambient = ambient
        self.basis = basis_rows          # list of rows, already reduced
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [[as_q(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatch("spanning vector has wrong length")
        red, pivots = _rref_rows(rows, ambient)
        return cls(ambient, red, pivots)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, [], [])

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.from_vectors(ambient, Mat.identity(ambient).data)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_mat(self) -> Mat:
        return Mat(self.basis) if self.basis else Mat.zeros(0, self.ambient)

    def contains_vector(self, v: Sequence) -> bool:
        return coords_against_rref(self.basis, self.pivots, v) is not None

    def coordinates(self, v: Sequence) -> list | None:
        return coords_against_rref(self.basis, self.pivots, v)

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(b) for b in other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def sum_(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(self.ambient, self.basis + other.basis)

    def constraints(self) -> Mat:
        """Matrix whose kernel is this subspace (annihilator under the dot pairing)."""
        rows = _kernel_rows([list(r) for r in self.basis], self.ambient)
        return Mat(rows) if rows else Mat.zeros(0, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        stacked = self.constraints().data + other.constraints().data
        if not stacked:
            return Subspace.full(self.ambient)
        return kernel(Mat(stacked))

    def ortho_complement(self, gram: Mat) -> "Subspace":
        """{x : b.G.x = 0 for all basis b} with respect to a bilinear form."""
        if gram.m != self.ambient or gram.n != self.ambient:
            raise DimensionMismatch("gram")
        if self.dim == 0:
            return Subspace.full(self.ambient)
        return kernel(self.basis_mat() @ gram)

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimensions differ")

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def signature(gram: Mat) -> tuple[int, int, int]:
    """Signature (n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Symmetric Lagrange diagonalization with simultaneous row/column operations.
    Zero-pivot rule: if the diagonal pivot q_ii is zero but some off-diagonal
    q_ij is nonzero, replace e_i <- e_i + e_j (smallest such j) and retry; at
    most two applications are needed before the pivot becomes nonzero.
    """
    if not gram.is_symmetric():
        raise NonSymmetric("signature needs a symmetric matrix")
    n = gram.n
    a = gram.copy_rows()
    n_plus = n_minus = n_zero = 0
    for i in range(n):
        if not a[i][i]:
            guard = 0
            while not a[i][i]:
                j = next((j for j in range(i + 1, n) if a[i][j]), -1)
                if j < 0:
                    break
                # congruence e_i <- e_i + e_j: row_i += row_j, col_i += col_j
                for c in range(i, n):
                    a[i][c] += a[j][c]
                for r in range(i, n):
                    a[r][i] += a[r][j]
                guard += 1
                assert guard <= 3, "zero-pivot rule failed to terminate"
        piv = a[i][i]
        if not piv:
            n_zero += 1
            continue
        if piv > 0:
            n_plus += 1
        else:
            n_minus += 1
        inv = 1 / piv
        for r in range(i + 1, n):
            f = a[r][i] * inv
            if f:
                # congruence e_r <- e_r - f e_i: row op, then the matching column op
                for c in range(i, n):
                    if a[i][c]:
                        a[r][c] -= f * a[i][c]
                for s in range(i, n):
                    if a[s][i]:
                        a[s][r] -= f * a[s][i]
    return n_plus, n_minus, n_zero


class QuadForm:
    """Symmetric bilinear form on Q^dim, with exact signature."""

    __slots__ = ("dim", "gram", "_sig")

    def __init__(self, gram: Mat):
        if not gram.is_symmetric():
            raise NonSymmetric("QuadForm needs a symmetric Gram matrix")
        self.gram = gram
        self.dim = gram.n
        self._sig = None

    @property
    def sig(self) -> tuple[int, int, int]:
        if self._sig is None:
            self._sig = signature(self.gram)
        return self._sig

    def value(self, u: Sequence, v: Sequence) -> Q:
        return sum((x * y for x, y in zip(self.gram.matvec(v), u)), QZERO)

    def restrict(self, sub: Subspace) -> "QuadForm":
        if sub.ambient != self.dim:
            raise DimensionMismatch("restrict")
        b = sub.basis_mat()
        return QuadForm(b @ self.gram @ b.transpose())

    def is_positive_definite(self) -> bool:
        return self.sig == (self.dim, 0, 0)

    def is_definite(self) -> bool:
        return self.sig in ((self.dim, 0, 0), (0, self.dim, 0))

    def radical(self) -> Subspace:
        return kernel(self.gram)


def solve_in_span(vectors: list[Sequence], target: Sequence) -> list | None:
    """Coefficients expressing target in the given (not necessarily reduced)
    spanning set, or None.  Used where pivoted reads are not available."""
    if not vectors:
        return [] if not any(target) else None
    amb = len(target)
    # augment each generator with an indicator tail to recover coefficients
    k = len(vectors)
    rows = []
    for i, v in enumerate(vectors):
        if len(v) != amb:
            raise DimensionMismatch("solve_in_span")
        tail = [QZERO] * k
        tail[i] = QONE
        rows.append([as_q(x) for x in v] + tail)
    red, pivots = _rref_rows(rows, amb + k)
    resid = [as_q(x) for x in target] + [QZERO] * k
    for row, pc in zip(red, pivots):
        if pc >= amb:
            break
        f = resid[pc]
        if f:
            for j in range(pc, amb + k):
                if row[j]:
                    resid[j] -= f * row[j]
    if any(resid[:amb]):
        return None
    return [-x for x in resid[amb:]]


def hyperbolic_pair_basis(gram: Mat, iso: Sequence) -> list:
    """Given an isotropic vector, return a partner w with <iso,w> = 1, <w,w> = 0."""
    q = QuadForm(gram)
    pairing = gram.matvec(iso)
    j = next((j for j, x in enumerate(pairing) if x), -1)
    if j < 0:
        raise DegenerateInput("isotropic vector lies in the radical")
    e = [QZERO] * gram.n
    e[j] = 1 / pairing[j]
    # subtract half the self-pairing along iso to make the partner null
    c = q.value(e, e)
    return [x - c / 2 * y for x, y in zip(e, iso)]

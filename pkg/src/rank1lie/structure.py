"""Structure constants extracted exactly from a faithful matrix realization.

A basis arrives as reduced-echelon coordinate rows (entries rational, common
denominator cleared to integers).  Commutators are computed in integer
arithmetic, coordinates are read off the pivot columns, and the expansion
[X_a, X_b] = sum_m c_abm X_m is re-verified entrywise, so the returned tensor
is exact.  Integer matrix products run through float64 BLAS only when a
proven magnitude bound keeps every intermediate below 2^53.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import SolverInconsistency
from .linalg import Mat, Q

_F64_EXACT = 2 ** 53 - 1
_I64_SAFE = 2 ** 62


def exact_int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product with exactness guaranteed by magnitude bounds."""
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    amax = int(np.max(np.abs(a)))
    bmax = int(np.max(np.abs(b)))
    bound = amax * bmax * a.shape[1]
    if bound <= _F64_EXACT:
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    if bound < _I64_SAFE:
        return a.astype(np.int64) @ b.astype(np.int64)
    return (a.astype(object) @ b.astype(object))


def basis_to_int(basis_rows: list[list]) -> tuple[np.ndarray, int]:
    """Clear denominators of rational basis rows: (int64 array, denominator)."""
    den = 1
    for row in basis_rows:
        for x in row:
            den = math.lcm(den, int(x.denominator))
    arr = np.array([[int(x.numerator) * (den // int(x.denominator)) for x in row]
                    for row in basis_rows], dtype=np.int64)
    return arr, den


class StructureData:
    """Verified structure constants c[a][b][m] = num[a,b,m] / den."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: np.ndarray, den: int):
        self.n = n
        self.num = num
        self.den = den

    def c(self, a: int, b: int, m: int) -> Q:
        return Q(int(self.num[a, b, m]), self.den)

    def bracket_int(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """[u, v] for integer coordinate vectors; result scaled by self.den.

        Returned vector w satisfies: exact bracket = w / den (given u, v are
        exact integer coordinates).  Magnitudes are asserted safe.
        """
        n = self.n
        cmax = int(np.max(np.abs(self.num))) if self.num.size else 0
        umax = max(1, int(np.max(np.abs(u))))
        vmax = max(1, int(np.max(np.abs(v))))
        assert cmax * umax * vmax * n * n < _I64_SAFE, "bracket bound exceeded"
        # contract a then b
        t = np.tensordot(u.astype(np.int64), self.num, axes=(0, 0))
        return np.tensordot(v.astype(np.int64), t, axes=(0, 0))

    def ad(self, a: int) -> np.ndarray:
        """ad(X_a) acting on coordinates, scaled by den: columns are brackets."""
        return self.num[a].T.copy()

    def killing_num(self) -> tuple[np.ndarray, int]:
        """Killing form numerators: B = num_out / den_out, exact."""
        n = self.n
        m1 = self.num.reshape(n, n * n)
        m2 = np.swapaxes(self.num, 1, 2).reshape(n, n * n)
        out = exact_int_matmul(m1, m2.T)
        return out, self.den * self.den

    def killing_mat(self) -> Mat:
        num, den = self.killing_num()
        return Mat([[Q(int(num[i, j]), den) for j in range(self.n)]
                    for i in range(self.n)])

    def jacobi_holds(self) -> bool:
        """Exact Jacobi check over all basis triples."""
        n = self.n
        t = exact_int_matmul(self.num.reshape(n * n, n), self.num.reshape(n, n * n))
        t4 = t.reshape(n, n, n, n)
        cyc = t4 + np.transpose(t4, (1, 2, 0, 3)) + np.transpose(t4, (2, 0, 1, 3))
        return not np.any(cyc)

    def antisymmetric(self) -> bool:
        return not np.any(self.num + np.transpose(self.num, (1, 0, 2)))


def structure_from_realization(basis_rows: list[list], pivots: list[int],
                               nside: int) -> StructureData:
    """Structure constants of a matrix Lie algebra given by vectorized basis rows.

    basis_rows: RREF rows over nside*nside coordinates (row-major matrices).
    Verifies closure exactly; raises SolverInconsistency otherwise.
    """
    n = len(basis_rows)
    ncols = nside * nside
    b_int, den = basis_to_int(basis_rows)
    mats = [b_int[m].reshape(nside, nside) for m in range(n)]
    num = np.zeros((n, n, n), dtype=np.int64)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chunk = max(1, (1 << 25) // max(1, ncols))
    for lo in range(0, len(pairs), chunk):
        block = pairs[lo:min(len(pairs), lo + chunk)]
        kflat = np.zeros((len(block), ncols), dtype=np.int64)
        for idx, (a, b) in enumerate(block):
            k = (exact_int_matmul(mats[a], mats[b])
                 - exact_int_matmul(mats[b], mats[a]))
            kflat[idx] = k.reshape(ncols)
        p = kflat[:, pivots]                      # coordinate numerators
        rhs = exact_int_matmul(p, b_int)          # verify den*K == P @ B_int
        if np.any(den * kflat != rhs):
            raise SolverInconsistency("bracket left the span of the basis")
        for idx, (a, b) in enumerate(block):
            num[a, b, :] = p[idx]
            num[b, a, :] = -p[idx]
    return StructureData(n, num, den * den)

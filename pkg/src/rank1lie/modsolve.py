"""Exact kernels of large sparse integer systems.

The10000-row systems in this package (derivation equations, commutant
equations) are too large for naive rational elimination, so kernels are found
with a mod-p sketch and then certified exactly:

  1. rank lower bound: rows of S@A are integer combinations of rows of A, so
     rank_Q(A) >= rank_{F_p}(S@A); finding r pivots mod p proves
     dim ker_Q(A) <= ncols - r;
  2. candidate basis: the mod-p kernel in reduced echelon form is lifted to
     rationals by rational reconstruction (with a CRT ladder over several
     primes if entries are large);
  3. exact check: every lifted vector is verified against every original row
     in integer arithmetic, which proves dim ker_Q(A) >= the candidate count.

When both bounds meet, the lifted basis is the exact kernel.  Nothing
returned by this module depends on unverified modular arithmetic.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import SolverInconsistency
from .linalg import Q, Subspace

# primes just under 2^15.6 so float64 BLAS products of sketch entries with
# small coefficients stay exact integers (< 2^53)
_PRIMES = (46337, 46327, 46309, 46307, 46301, 46279, 46273, 46271)


class SparseRows:
    """Integer constraint rows stored as (column indices, values) pairs."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.cols: list[np.ndarray] = []
        self.vals: list[np.ndarray] = []

    def add_row(self, entries: dict[int, int]):
        items = sorted((c, v) for c, v in entries.items() if v)
        self.cols.append(np.array([c for c, _ in items], dtype=np.int64))
        self.vals.append(np.array([v for _, v in items], dtype=np.int64))

    def __len__(self):
        return len(self.cols)

    def max_abs(self) -> int:
        return max((int(np.max(np.abs(v))) for v in self.vals if len(v)), default=0)

    def dense_float(self) -> np.ndarray:
        a = np.zeros((len(self.cols), self.ncols), dtype=np.float64)
        for i, (c, v) in enumerate(zip(self.cols, self.vals)):
            a[i, c] = v
        return a


def _rref_mod_p(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """In-place reduced row echelon form over F_p (int64 matrix)."""
    nrows, ncols = m.shape
    pivots: list[int] = []
    pr = 0
    for c in range(ncols):
        col = m[pr:, c] % p
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            continue
        r = pr + int(nz[0])
        if r != pr:
            m[[pr, r]] = m[[r, pr]]
        inv = pow(int(m[pr, c]) % p, -1, p)
        m[pr] = (m[pr] * inv) % p
        coef = m[:, c] % p
        coef[pr] = 0
        rows = np.nonzero(coef)[0]
        if len(rows):
            m[rows] = (m[rows] - np.outer(coef[rows], m[pr])) % p
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return m, pivots


def _kernel_mod_p(red: np.ndarray, pivots: list[int], ncols: int,
                  p: int) -> np.ndarray:
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for ri, pc in enumerate(pivots):
            out[i, pc] = (-int(red[ri, f])) % p
    return out


def _rat_reconstruct(r: int, m: int):
    """Rational n/d with |n|, d <= sqrt(m/2) congruent to r mod m, or None."""
    bound = math.isqrt(m // 2)
    a0, a1 = m, r % m
    t0, t1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(a1, abs(t1)) != 1:
        return None
    if t1 < 0:
        return Q(-a1, -t1)
    return Q(a1, t1)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    g, inv = m1, pow(m1 % m2, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


def certified_kernel(rows: SparseRows, max_primes: int = 6) -> list[list]:
    """Exact rational kernel basis of the stacked rows (list of Q-rows).

    Raises SolverInconsistency when no certification succeeds.
    """
    ncols = rows.ncols
    if len(rows) == 0:
        return [[Q(int(i == j)) for j in range(ncols)] for i in range(ncols)]

    maxval = rows.max_abs()
    residues = None   # accumulated CRT residues of the kernel, and modulus
    modulus = 1
    free_ref: list[int] | None = None
    dense = rows.dense_float()
    nrows = len(rows)

    for attempt, p in enumerate(_PRIMES[:max_primes]):
        # sketch: S@A keeps the kernel while shrinking to ~ncols rows
        assert maxval * p * nrows < 2 ** 53, "sketch product would lose exactness"
        nsketch = ncols + 64
        rng = np.random.default_rng(0xC0FFEE + attempt)
        sk = rng.integers(0, p, size=(nsketch, nrows)).astype(np.float64)
        sa = np.rint(sk @ dense).astype(np.int64) % p

        red, pivots = _rref_mod_p(sa, p)
        r_p = len(pivots)
        kdim = ncols - r_p                       # certified upper bound
        kerp = _kernel_mod_p(red, pivots, ncols, p)

        free_cols = sorted(set(range(ncols)) - set(pivots))
        if free_ref is None or free_ref != free_cols or residues is None:
            free_ref, residues, modulus = free_cols, kerp.astype(object), p
        else:
            lifted = np.empty_like(residues)
            for i in range(residues.shape[0]):
                for j in range(ncols):
                    lifted[i, j], _ = _crt_pair(int(residues[i, j]), modulus,
                                                int(kerp[i, j]), p)
            residues, modulus = lifted, modulus * p

        basis = []
        ok = True
        for i in range(residues.shape[0]):
            vec = []
            for j in range(ncols):
                q = _rat_reconstruct(int(residues[i, j]), modulus)
                if q is None:
                    ok = False
                    break
                vec.append(q)
            if not ok:
                break
            basis.append(vec)
        if not ok:
            continue

        if _verify_kernel(rows, basis) and len(basis) == kdim:
            # canonical form; dimension is preserved, as verified below
            sub = Subspace.from_vectors(ncols, basis)
            if sub.dim != kdim:
                raise SolverInconsistency("lifted kernel basis is dependent")
            return [list(r) for r in sub.basis]

    raise SolverInconsistency("kernel could not be certified exactly")


def _verify_kernel(rows: SparseRows, basis: list[list]) -> bool:
    """Exact integer check that every candidate vector kills every row."""
    if not basis:
        return True
    den = 1
    for v in basis:
        for x in v:
            den = math.lcm(den, int(x.denominator))
    ints = np.array([[int(x.numerator) * (den // int(x.denominator)) for x in v]
                     for v in basis], dtype=object)
    for cols, vals in zip(rows.cols, rows.vals):
        if len(cols) == 0:
            continue
        dots = ints[:, cols] @ vals.astype(object)
        if np.any(dots != 0):
            return False
    return True

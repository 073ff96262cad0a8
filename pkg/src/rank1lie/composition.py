"""Quaternions and octonions over the rationals.

The octonion product is generated at import time by the Cayley-Dickson
doubling of the quaternions,

    (a, b) * (c, d) = (a c - conj(d) b,  d a + b conj(c)),

with the doubling unit e4, so e1 = i, e2 = j, e3 = k, e5 = e1*e4,
e6 = e2*e4, e7 = e3*e4.  Both basis products are single signed basis
elements, so multiplication is table-driven.
"""

from __future__ import annotations

from .linalg import Q, QZERO, as_q

# quaternion basis products: QUAT_TABLE[i][j] = (index, sign) for q_i q_j
_QUNITS = ("1", "i", "j", "k")
QUAT_TABLE = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, -1), (3, 1), (2, -1)),
    ((2, 1), (3, -1), (0, -1), (1, 1)),
    ((3, 1), (2, 1), (1, -1), (0, -1)),
)


class Quaternion:
    """Rational quaternion a + bi + cj + dk."""

    __slots__ = ("co",)

    def __init__(self, coords):
        co = tuple(as_q(x) for x in coords)
        assert len(co) == 4
        self.co = co

    @classmethod
    def unit(cls, i: int) -> "Quaternion":
        return cls(tuple(int(j == i) for j in range(4)))

    @classmethod
    def zero(cls) -> "Quaternion":
        return cls((0, 0, 0, 0))

    def __add__(self, o):
        return Quaternion(tuple(a + b for a, b in zip(self.co, o.co)))

    def __sub__(self, o):
        return Quaternion(tuple(a - b for a, b in zip(self.co, o.co)))

    def __neg__(self):
        return Quaternion(tuple(-a for a in self.co))

    def __mul__(self, o):
        out = [QZERO] * 4
        for i, a in enumerate(self.co):
            if not a:
                continue
            for j, b in enumerate(o.co):
                if b:
                    k, s = QUAT_TABLE[i][j]
                    out[k] += a * b if s > 0 else -(a * b)
        return Quaternion(out)

    def conj(self):
        a, b, c, d = self.co
        return Quaternion((a, -b, -c, -d))

    def norm(self):
        return sum((x * x for x in self.co), QZERO)

    def __eq__(self, o):
        return isinstance(o, Quaternion) and self.co == o.co

    def __repr__(self):
        return "Quat(" + ", ".join(str(x) for x in self.co) + ")"


def _build_octonion_table():
    """Octonion basis products from the Cayley-Dickson double of QUAT_TABLE."""
    def halves(i):              # e_i as a quaternion pair (a, b)
        a = Quaternion.unit(i) if i < 4 else Quaternion.zero()
        b = Quaternion.unit(i - 4) if i >= 4 else Quaternion.zero()
        return a, b

    table = []
    for i in range(8):
        a, b = halves(i)
        rowtab = []
        for j in range(8):
            c, d = halves(j)
            first = a * c - d.conj() * b
            second = d * a + b * c.conj()
            coords = first.co + second.co
            nz = [(k, v) for k, v in enumerate(coords) if v]
            assert len(nz) == 1 and abs(nz[0][1]) == 1
            rowtab.append((nz[0][0], 1 if nz[0][1] > 0 else -1))
        table.append(tuple(rowtab))
    return tuple(table)


OCT_TABLE = _build_octonion_table()


class Octonion:
    """Rational octonion with coordinates over (1, e1, ..., e7)."""

    __slots__ = ("co",)

    def __init__(self, coords):
        co = tuple(as_q(x) for x in coords)
        assert len(co) == 8
        self.co = co

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        return cls(tuple(int(j == i) for j in range(8)))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def from_real(cls, x) -> "Octonion":
        return cls((x, 0, 0, 0, 0, 0, 0, 0))

    def __add__(self, o):
        return Octonion(tuple(a + b for a, b in zip(self.co, o.co)))

    def __sub__(self, o):
        return Octonion(tuple(a - b for a, b in zip(self.co, o.co)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.co))

    def __mul__(self, o):
        out = [QZERO] * 8
        for i, a in enumerate(self.co):
            if not a:
                continue
            row = OCT_TABLE[i]
            for j, b in enumerate(o.co):
                if b:
                    k, s = row[j]
                    out[k] += a * b if s > 0 else -(a * b)
        return Octonion(out)

    def scale(self, c):
        c = as_q(c)
        return Octonion(tuple(c * a for a in self.co))

    def conj(self):
        return Octonion((self.co[0],) + tuple(-a for a in self.co[1:]))

    def real(self):
        return self.co[0]

    def norm(self):
        """Squared norm; multiplicative: N(xy) = N(x)N(y)."""
        return sum((x * x for x in self.co), QZERO)

    def is_zero(self):
        return not any(self.co)

    def is_imaginary(self):
        return not self.co[0]

    def __eq__(self, o):
        return isinstance(o, Octonion) and self.co == o.co

    def __repr__(self):
        return "Oct(" + ", ".join(str(x) for x in self.co) + ")"


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """(xy)z - x(yz); alternativity means it vanishes when two slots agree."""
    return (x * y) * z - x * (y * z)


def bracket_form(x1: Octonion, x2: Octonion) -> Octonion:
    """Antisymmetric pairing x1 conj(x2) - x2 conj(x1); purely imaginary."""
    return x1 * x2.conj() - x2 * x1.conj()

"""
Exact determinants of small rational matrices.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .core import as_rational


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("expected %d entries, got %d"
                             % (self.rows * self.cols, len(self.entries)))

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        flat = tuple(as_rational(x) for r in rows for x in r)
        return cls(len(rows), ncols, flat)

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]


def _bareiss(M):
    "Fraction-free elimination on a square list-of-lists of ints (destroyed)."
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            a = rowi[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                rowi[j] = (pivot * rowi[j] - a * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def determinant(m):
    """
    Exact determinant of a square matrix.

    Accepts a RationalMatrix or a list of rows. Each row is scaled to
    integers by the lcm of its denominators, Bareiss runs on the integer
    lift, and the scaling is divided back out.
    """
    if isinstance(m, RationalMatrix):
        if m.rows != m.cols:
            raise ValueError("determinant of a non-square %dx%d matrix" % (m.rows, m.cols))
        rows = m.tolist()
    else:
        rows = [list(r) for r in m]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("determinant of a non-square matrix")
    if not rows:
        return 1
    scale = 1
    lifted = []
    for r in rows:
        if all(isinstance(x, int) for x in r):
            lifted.append(list(r))
            continue
        r = [as_rational(x) for x in r]
        d = lcm(*(x.denominator for x in r))
        scale *= d
        lifted.append([(x * d).numerator for x in r])
    det = _bareiss(lifted)
    if scale == 1:
        return det
    return Fraction(det, scale)

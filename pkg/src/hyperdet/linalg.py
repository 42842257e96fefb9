"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` throughout; rank, kernel and
determinant are computed by fraction-free (Bareiss) elimination on integer
rows, so intermediate values stay bounded by minors of the input.
"""

from fractions import Fraction
from math import lcm

from . import kernels as _k

#: Exact scalar type used across the package.
Rational = Fraction


def rational_to_str(q):
    """Canonical string form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s):
    """Parse ``"p/q"`` or ``"p"`` (base 10) into a Fraction."""
    if isinstance(s, float):
        raise ValueError(f"refusing inexact float value {s!r}")
    return Fraction(str(s).strip())


def _as_fraction(x):
    if isinstance(x, float):
        raise ValueError(f"refusing inexact float value {x!r}")
    return Fraction(x)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(_as_fraction(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(
                f"matrix shape {rows}x{cols} needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def stack(self, other):
        """Vertical concatenation."""
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def mul_vector(self, v):
        v = [_as_fraction(x) for x in v]
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append(sum((self.entries[base + j] * v[j] for j in range(self.cols)), Fraction(0)))
        return tuple(out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in product")
            ent = []
            for i in range(self.rows):
                for j in range(other.cols):
                    s = Fraction(0)
                    for k in range(self.cols):
                        s += self[i, k] * other[k, j]
                    ent.append(s)
            return Matrix(self.rows, other.cols, ent)
        c = _as_fraction(other)
        return Matrix(self.rows, self.cols, [c * x for x in self.entries])

    __rmul__ = __mul__

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in sum")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-1) * other

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(rational_to_str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- exact elimination ------------------------------------------------

    def _int_rows(self):
        """Clear denominators row by row; returns (int rows, row scale factors)."""
        out = []
        scales = []
        for i in range(self.rows):
            row = self.row(i)
            mult = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * mult) for x in row])
            scales.append(mult)
        return out, scales

    def rank(self):
        rows, _ = self._int_rows()
        _, pivots, _ = _k.ff_echelon(rows)
        return len(pivots)

    def det(self):
        """Exact determinant; raises ValueError on non-square input."""
        if self.rows != self.cols:
            raise ValueError(f"determinant of non-square {self.rows}x{self.cols} matrix")
        if self.rows == 0:
            return Fraction(1)
        rows, scales = self._int_rows()
        ech, pivots, sign = _k.ff_echelon(rows)
        if len(pivots) < self.rows:
            return Fraction(0)
        d = Fraction(sign * ech[self.rows - 1][self.cols - 1])
        for s in scales:
            d /= s
        return d

    def right_kernel(self):
        """Basis of the right kernel, each vector scaled so its first nonzero
        coordinate is 1.  Empty exactly when the rank equals the column count."""
        rows, _ = self._int_rows()
        ech, pivots, _ = _k.ff_echelon(rows)
        rank = len(pivots)
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r in range(rank - 1, -1, -1):
                p = pivots[r]
                s = Fraction(0)
                for j in range(p + 1, self.cols):
                    if v[j]:
                        s += ech[r][j] * v[j]
                v[p] = -s / ech[r][p]
            for x in v:
                if x:
                    v = [y / x for y in v]
                    break
            basis.append(tuple(v))
        return basis

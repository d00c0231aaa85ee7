"""Exact rational scalars and dense exact linear algebra.

Scalars are ``fractions.Fraction`` throughout: always in canonical reduced
form, with the sign carried on the numerator.  They serialize as the string
``"p/q"`` (or just ``"p"`` when the denominator is 1).

Matrices are immutable tuples of tuples of Fractions.  Determinants and
linear solves go through fraction-free (Bareiss) elimination on an integer
clearing of the input, which keeps intermediate entries polynomially bounded
instead of letting naive elimination blow up.
"""

from fractions import Fraction
from math import lcm


class SingularMatrixError(ValueError):
    """Raised when elimination hits a zero pivot column.

    ``stage`` is the 0-based elimination step at which every candidate
    pivot vanished.
    """

    def __init__(self, stage):
        self.stage = stage
        super().__init__("singular matrix: no pivot at elimination stage %d" % stage)


def scalar(x):
    """Coerce ints, strings like "p/q", and Fractions to a canonical Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; got %r" % x)
    return Fraction(x)


def scalar_str(x):
    """Serialize a Fraction as "p/q", or "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


class Mat:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(scalar(x) for x in row) for row in entries)
        if not entries:
            raise ValueError("empty matrix")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged rows")
        self.entries = entries
        self.rows = len(entries)
        self.cols = cols

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, Mat) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Mat(%r)" % [[scalar_str(x) for x in row] for row in self.entries]

    @property
    def is_square(self):
        return self.rows == self.cols

    def row(self, i):
        return self.entries[i]

    def transpose(self):
        return Mat(tuple(zip(*self.entries)))

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ValueError("shape mismatch: %dx%d * %dx%d"
                                 % (self.rows, self.cols, other.rows, other.cols))
            bt = other.transpose().entries
            return Mat([[sum(a * b for a, b in zip(row, col)) for col in bt]
                        for row in self.entries])
        return NotImplemented

    def scale_row(self, i, factor):
        factor = scalar(factor)
        rows = [list(r) for r in self.entries]
        rows[i] = [factor * x for x in rows[i]]
        return Mat(rows)

    def add_multiple_of_row(self, dst, src, factor):
        """Row operation dst += factor * src (returns a new Mat)."""
        factor = scalar(factor)
        rows = [list(r) for r in self.entries]
        rows[dst] = [a + factor * b for a, b in zip(rows[dst], rows[src])]
        return Mat(rows)

    def det(self):
        return det(self)

    def inverse(self):
        return inverse(self)

    def inverse_transpose(self):
        return inverse_transpose(self)


def _integer_clearing(m):
    """Scale each row of ``m`` to integers; return (int rows, product of scales)."""
    int_rows = []
    scale = 1
    for row in m.entries:
        d = lcm(*(x.denominator for x in row)) if row else 1
        int_rows.append([int(x * d) for x in row])
        scale *= d
    return int_rows, scale


def _bareiss(rows, ncols_reduce):
    """Fraction-free elimination on integer ``rows`` in place.

    Reduces the first ``ncols_reduce`` columns.  Returns the sign from row
    swaps and the list of pivot positions.  Raises SingularMatrixError when
    some stage has no pivot.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(ncols_reduce):
        piv = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError(k)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, len(rows[i])):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign


def det(m):
    """Exact determinant by fraction-free Bareiss elimination."""
    if not m.is_square:
        raise ValueError("determinant of non-square %dx%d matrix" % (m.rows, m.cols))
    rows, scale = _integer_clearing(m)
    n = len(rows)
    try:
        sign = _bareiss(rows, n - 1)
    except SingularMatrixError:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1], scale)


def solve(a, b):
    """Solve a*x = b exactly; ``b`` is a sequence of scalars.

    Raises SingularMatrixError (with the vanishing pivot stage) when ``a``
    is singular.
    """
    if not a.is_square:
        raise ValueError("solve needs a square matrix")
    if len(b) != a.rows:
        raise ValueError("right-hand side length %d != %d" % (len(b), a.rows))
    aug = Mat([list(row) + [scalar(x)] for row, x in zip(a.entries, b)])
    rows, _ = _integer_clearing(aug)
    n = a.rows
    _bareiss(rows, n)
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(rows[i][n])
        for j in range(i + 1, n):
            s -= rows[i][j] * x[j]
        x[i] = s / rows[i][i]
    return tuple(x)


def inverse(a):
    """Exact inverse via column-wise solves."""
    n = a.rows
    cols = [solve(a, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return Mat(cols).transpose()


def inverse_transpose(a):
    """(a^-1)^T exactly; det of the result is 1/det(a)."""
    return inverse(a).transpose()

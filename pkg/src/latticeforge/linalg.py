"""Exact integer and rational matrix kernel.

Everything here works over Python ints and fractions.Fraction; no floating
point enters any computation.  Sizes stay small (rank <= 26 throughout the
package), so classical algorithms are used: Bareiss for determinants, SNF by
elimination with smallest-pivot selection, row-style HNF, and symmetric
congruence diagonalization over the rationals for signatures.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateForm, DimensionMismatch


class Matrix:
    """Immutable dense matrix with exact entries (int or Fraction)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise DimensionMismatch("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, r, c):
        return cls(tuple((0,) * c for _ in range(r)))

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(%r)" % (self.rows,)

    def transpose(self):
        return Matrix(tuple(zip(*self.rows))) if self.rows else Matrix(())

    @property
    def T(self):
        return self.transpose()

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("add %s vs %s" % (self.shape, other.shape))
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, k):
        return Matrix(tuple(tuple(k * a for a in r) for r in self.rows))

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch("matmul %s vs %s" % (self.shape, other.shape))
        cols = other.transpose().rows
        return Matrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def apply(self, vec):
        """Matrix-times-column-vector, vec given as a sequence."""
        if self.ncols != len(vec):
            raise DimensionMismatch("apply %s to length %d" % (self.shape, len(vec)))
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.rows)

    def is_symmetric(self):
        return self.rows == self.transpose().rows

    def is_integral(self):
        return all(Fraction(a).denominator == 1 for r in self.rows for a in r)

    def to_int(self):
        """Cast all entries to int; entries must be integral."""
        out = []
        for r in self.rows:
            row = []
            for a in r:
                f = Fraction(a)
                if f.denominator != 1:
                    raise ValueError("non-integral entry %s" % (a,))
                row.append(int(f))
            out.append(tuple(row))
        return Matrix(tuple(out))

    def to_fraction(self):
        return Matrix(tuple(tuple(Fraction(a) for a in r) for r in self.rows))


def block_diag(mats):
    """Block-diagonal sum of square matrices."""
    n = sum(m.nrows for m in mats)
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append((0,) * off + tuple(r) + (0,) * (n - off - m.ncols))
        off += m.ncols
    return Matrix(tuple(rows))


def stack(mats):
    """Vertical concatenation of matrices with equal column count."""
    rows = []
    for m in mats:
        rows.extend(m.rows)
    return Matrix(tuple(rows))


def bareiss_det(m):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatch("determinant of non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det(m):
    """Determinant for matrices with int or Fraction entries."""
    if m.is_integral():
        return bareiss_det(m.to_int())
    n = m.nrows
    a = [[Fraction(x) for x in r] for r in m.rows]
    d = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            d = -d
        d *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return d


def inverse(m):
    """Exact inverse over the rationals."""
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatch("inverse of non-square matrix")
    a = [[Fraction(x) for x in r] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, r in enumerate(m.rows)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k] != 0:
                piv = i
                break
        if piv is None:
            raise DegenerateForm("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return Matrix(tuple(tuple(r[n:]) for r in a))


@dataclass(frozen=True)
class SnfResult:
    """u @ m @ v == d with d diagonal, d1 | d2 | ..., |det u| = |det v| = 1."""

    d: Matrix
    u: Matrix
    v: Matrix

    @property
    def divisors(self):
        return tuple(self.d[i, i] for i in range(min(self.d.nrows, self.d.ncols)))


def smith_normal_form(m):
    """Smith normal form with unimodular transforms, pivoting on the smallest
    nonzero entry to keep coefficient growth down."""
    r, c = m.nrows, m.ncols
    a = [list(row) for row in m.rows]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(r, c):
        # locate smallest nonzero entry in the trailing block
        piv = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = False
        for i in range(t + 1, r):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, c):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        bad = None
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if a[i][j] % a[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)
            continue
        t += 1
    for i in range(min(r, c)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return SnfResult(Matrix(a), Matrix(u), Matrix(v))


def hermite_normal_form(m):
    """Row-style HNF: returns (h, u) with u @ m = h, u unimodular.

    Pivots are positive, entries below a pivot are zero and entries above are
    reduced into [0, pivot).  Zero rows sink to the bottom.
    """
    r, c = m.nrows, m.ncols
    a = [list(row) for row in m.rows]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    piv_row = 0
    for j in range(c):
        # gcd out column j below piv_row
        k = None
        for i in range(piv_row, r):
            if a[i][j]:
                k = i
                break
        if k is None:
            continue
        a[piv_row], a[k] = a[k], a[piv_row]
        u[piv_row], u[k] = u[k], u[piv_row]
        changed = True
        while changed:
            changed = False
            for i in range(piv_row + 1, r):
                if a[i][j]:
                    if abs(a[i][j]) < abs(a[piv_row][j]):
                        a[piv_row], a[i] = a[i], a[piv_row]
                        u[piv_row], u[i] = u[i], u[piv_row]
                    q = a[i][j] // a[piv_row][j]
                    a[i] = [x - q * y for x, y in zip(a[i], a[piv_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
                    if a[i][j]:
                        changed = True
        if a[piv_row][j] < 0:
            a[piv_row] = [-x for x in a[piv_row]]
            u[piv_row] = [-x for x in u[piv_row]]
        for i in range(piv_row):
            q = a[i][j] // a[piv_row][j]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[piv_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
        piv_row += 1
        if piv_row == r:
            break
    return Matrix(a), Matrix(u)


def integer_kernel(m):
    """Basis (rows) of the saturated left kernel {x in Z^r : x @ m = 0}."""
    h, u = hermite_normal_form(m)
    rows = [u.row(i) for i in range(m.nrows) if all(x == 0 for x in h.row(i))]
    return Matrix(tuple(rows)) if rows else Matrix(())


def rational_signature(g):
    """Signature (n_plus, n_minus) of a nondegenerate symmetric matrix, by
    exact congruence diagonalization over the rationals."""
    if not g.is_symmetric():
        raise DegenerateForm("matrix not symmetric")
    n = g.nrows
    if n == 0:
        return (0, 0)
    if det(g) == 0:
        raise DegenerateForm("degenerate form")
    a = [[Fraction(x) for x in r] for r in g.rows]

    def sym_row_col(i, j, f):  # row_i += f*row_j and col_i += f*col_j
        a[i] = [x + f * y for x, y in zip(a[i], a[j])]
        for row in a:
            row[i] += f * row[j]

    n_plus = n_minus = 0
    for k in range(n):
        if a[k][k] == 0:
            fixed = False
            for j in range(k + 1, n):
                if a[j][j] != 0:
                    a[k], a[j] = a[j], a[k]
                    for row in a:
                        row[k], row[j] = row[j], row[k]
                    fixed = True
                    break
            if not fixed:
                for j in range(k + 1, n):
                    if a[k][j] != 0:
                        sym_row_col(k, j, Fraction(1))
                        fixed = True
                        break
            if not fixed:
                raise DegenerateForm("degenerate form")
        piv = a[k][k]
        if piv > 0:
            n_plus += 1
        else:
            n_minus += 1
        for i in range(k + 1, n):
            if a[i][k]:
                f = -a[i][k] / piv
                sym_row_col(i, k, f)
    return (n_plus, n_minus)

# exactmath/linalg.py
from fractions import Fraction
from math import gcd

from core.errors import DimensionMismatchError
from .rational import to_rat, format_rat


class RatVec:
    """Immutable vector of exact rationals with an explicit dimension."""

    __slots__ = ("_entries",)

    def __init__(self, entries, dim=None):
        entries = tuple(to_rat(e) for e in entries)
        if dim is not None and len(entries) != dim:
            raise DimensionMismatchError(f"Expected {dim} entries, got {len(entries)}.")
        object.__setattr__(self, "_entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RatVec is immutable.")

    @classmethod
    def zero(cls, dim):
        return cls([0] * dim)

    @classmethod
    def unit(cls, dim, index):
        return cls([1 if i == index else 0 for i in range(dim)])

    @property
    def dim(self):
        return len(self._entries)

    @property
    def entries(self):
        return self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, index):
        return self._entries[index]

    def __eq__(self, other):
        if not isinstance(other, RatVec):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(("RatVec", self._entries))

    def __repr__(self):
        return f"RatVec([{', '.join(format_rat(e) for e in self._entries)}])"

    def _check_dim(self, other):
        if self.dim != other.dim:
            raise DimensionMismatchError(f"Vector dimensions differ: {self.dim} vs {other.dim}.")

    def __add__(self, other):
        self._check_dim(other)
        return RatVec(a + b for a, b in zip(self._entries, other._entries))

    def __sub__(self, other):
        self._check_dim(other)
        return RatVec(a - b for a, b in zip(self._entries, other._entries))

    def __neg__(self):
        return RatVec(-a for a in self._entries)

    def scale(self, factor):
        factor = to_rat(factor)
        return RatVec(factor * a for a in self._entries)

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def dot(self, other):
        self._check_dim(other)
        return sum((a * b for a, b in zip(self._entries, other._entries)), Fraction(0))

    def is_zero(self):
        return all(e == 0 for e in self._entries)

    def primitive(self):
        """Positive multiple with coprime integer entries; the zero vector is returned unchanged."""
        if self.is_zero():
            return self
        lcm_den = 1
        for e in self._entries:
            lcm_den = lcm_den * e.denominator // gcd(lcm_den, e.denominator)
        ints = [int(e * lcm_den) for e in self._entries]
        common = 0
        for v in ints:
            common = gcd(common, abs(v))
        return RatVec(v // common for v in ints)

    def to_strings(self):
        return [format_rat(e) for e in self._entries]


class RatMat:
    """Immutable dense matrix of exact rationals stored row-major."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(to_rat(e) for e in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatchError(f"Ragged matrix: expected {ncols} columns, got {len(row)}.")
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("RatMat is immutable.")

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [list(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatchError(f"Column of length {len(col)} in a {nrows}-row matrix.")
        return cls([[col[i] for col in columns] for i in range(nrows)], ncols=len(columns))

    @property
    def nrows(self):
        return len(self._rows)

    @property
    def ncols(self):
        return self._ncols

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def row(self, i):
        return RatVec(self._rows[i])

    def rows(self):
        return [RatVec(r) for r in self._rows]

    def column(self, j):
        return RatVec(r[j] for r in self._rows)

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(("RatMat", self._ncols, self._rows))

    def __repr__(self):
        body = "; ".join(", ".join(format_rat(e) for e in row) for row in self._rows)
        return f"RatMat[{self.nrows}x{self.ncols}]({body})"

    def transpose(self):
        return RatMat([[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], ncols=self.nrows)

    def apply(self, vec):
        if vec.dim != self.ncols:
            raise DimensionMismatchError(f"Cannot apply a {self.nrows}x{self.ncols} matrix to a vector of dim {vec.dim}.")
        return RatVec(sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self._rows)

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}.")
        cols = [other.column(j) for j in range(other.ncols)]
        return RatMat([[RatVec(row).dot(c) for c in cols] for row in self._rows], ncols=other.ncols)


def identity(n):
    return RatMat([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)


def _row_reduce(rows, ncols):
    """Reduced row echelon form in place. Returns the pivot columns."""
    pivots = []
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(rows):
            break
        found = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pivot = rows[pivot_row][col]
        rows[pivot_row] = [e / pivot for e in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return pivots


def rank(matrix):
    rows = [list(r) for r in matrix.rows()]
    return len(_row_reduce(rows, matrix.ncols))


def solve(matrix, rhs):
    """
    Exact solution of matrix · x = rhs.
    Returns None when the system is inconsistent or the solution is not unique.
    """
    if rhs.dim != matrix.nrows:
        raise DimensionMismatchError(f"Right-hand side has dim {rhs.dim}, matrix has {matrix.nrows} rows.")
    n = matrix.ncols
    augmented = [list(row) + [b] for row, b in zip(matrix.rows(), rhs)]
    pivots = _row_reduce(augmented, n + 1)
    if n in pivots or len(pivots) < n:
        return None
    solution = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        solution[col] = augmented[r][n]
    return RatVec(solution)


def null_space(matrix):
    """Basis of {x : matrix · x = 0} as a list of RatVec."""
    n = matrix.ncols
    rows = [list(r) for r in matrix.rows()]
    pivots = _row_reduce(rows, n)
    free_cols = [c for c in range(n) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -rows[r][free]
        basis.append(RatVec(vec))
    return basis

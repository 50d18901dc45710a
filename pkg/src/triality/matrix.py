"""Dense square matrices over Q(i, sqrt2, sqrt3).

Dimensions stay tiny (at most 28), so everything is dense and pure Python.
All predicates are exact: a matrix either is Hermitian or it is not, with
no tolerance anywhere.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .field import ZERO, ONE, ExactScalar, scalar


class Matrix:
    """Immutable square matrix of ExactScalar entries."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = tuple(tuple(scalar(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix must be square")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls(tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n))
                         for i in range(n)))

    @classmethod
    def diag(cls, entries) -> "Matrix":
        entries = [scalar(e) for e in entries]
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else ZERO for j in range(n))
                         for i in range(n)))

    @classmethod
    def from_entries(cls, n: int, entries) -> "Matrix":
        """Build an n x n matrix from {(i, j): value} (absent entries zero)."""
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i][j] = scalar(v)
        return cls(rows)

    @classmethod
    def block2(cls, tl: "Matrix", tr: "Matrix", bl: "Matrix", br: "Matrix") -> "Matrix":
        """Assemble a 2x2 block matrix from four equal-size blocks."""
        m = tl.n
        rows = [tl.rows[i] + tr.rows[i] for i in range(m)]
        rows += [bl.rows[i] + br.rows[i] for i in range(m)]
        return cls(rows)

    # -- accessors ---------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def block(self, i0: int, j0: int, size: int) -> "Matrix":
        return Matrix(tuple(row[j0:j0 + size]
                            for row in self.rows[i0:i0 + size]))

    def flat(self):
        """Entries in row-major order."""
        for row in self.rows:
            yield from row

    # -- algebra -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")
        return Matrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")
        return Matrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix(tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(tuple(tuple(c * a for a in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return NotImplemented
        return self.scale(other)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")
        n = self.n
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [ZERO] * n
            for k in range(n):
                a = arow[k]
                if not a._nz:
                    continue
                for j, b in enumerate(brows[k]):
                    if b._nz:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(out)

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conj(self) -> "Matrix":
        return Matrix(tuple(tuple(a.conj() for a in row) for row in self.rows))

    def dagger(self) -> "Matrix":
        """Conjugate transpose."""
        return self.conj().transpose()

    @property
    def H(self) -> "Matrix":
        return self.dagger()

    def trace(self) -> ExactScalar:
        out = ZERO
        for i in range(self.n):
            out = out + self.rows[i][i]
        return out

    # -- exact predicates ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return all(not a._nz for a in self.flat())

    @property
    def is_real(self) -> bool:
        return all(a.is_real for a in self.flat())

    @property
    def is_symmetric(self) -> bool:
        return self == self.transpose()

    @property
    def is_antisymmetric(self) -> bool:
        return (self + self.transpose()).is_zero

    @property
    def is_hermitian(self) -> bool:
        return self == self.dagger()

    @property
    def is_antihermitian(self) -> bool:
        return (self + self.dagger()).is_zero

    @property
    def is_unitary(self) -> bool:
        return (self @ self.dagger()) == Matrix.identity(self.n)

    @property
    def is_orthogonal(self) -> bool:
        return self.is_real and (self @ self.transpose()) == Matrix.identity(self.n)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({self.n}x{self.n})"

    def __str__(self):
        cells = [[str(a) for a in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]"
                         for row in cells)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """The Lie bracket [a, b] = ab - ba, exact."""
    return (a @ b) - (b @ a)


def anticommutator(a: Matrix, b: Matrix) -> Matrix:
    return (a @ b) + (b @ a)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; result dimension is a.n * b.n."""
    m, n = a.n, b.n
    rows = []
    for i in range(m):
        for k in range(n):
            row = []
            for j in range(m):
                aij = a.rows[i][j]
                if aij._nz:
                    row.extend(aij * x for x in b.rows[k])
                else:
                    row.extend([ZERO] * n)
            rows.append(row)
    return Matrix(rows)

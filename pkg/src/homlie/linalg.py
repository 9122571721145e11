"""Exact linear algebra over the rationals.

Every computation in this package runs on fractions.Fraction, never on
floats.  A vector is a tuple of Fractions and a matrix is an immutable
Matrix wrapping a tuple of row tuples.  Elimination always picks the
first nonzero entry of the current column as pivot, so ranks, kernel
bases, solutions and inverses are deterministic functions of the input.

Scalars serialize as "p" or "p/q" with the sign on the numerator, which
is exactly what Fraction's constructor and str() produce once the value
is in lowest terms with a positive denominator (Fraction normalizes on
construction, so no extra canonicalization step is needed).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Q = Fraction

Scalar = Fraction
Vector = tuple
ScalarLike = Union[Fraction, int, str]


def scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, string or Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    return Fraction(value)


def parse_scalar(text: str) -> Fraction:
    """Parse "p" or "p/q" with integer p, q and q > 0 after reduction."""
    if not isinstance(text, str):
        raise ValueError(f"rational expected as string, got {text!r}")
    body = text.strip()
    parts = body.split("/")
    if len(parts) == 1:
        num, den = parts[0], "1"
    elif len(parts) == 2:
        num, den = parts
    else:
        raise ValueError(f"malformed rational {text!r}")
    try:
        value = Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc
    return value


def format_scalar(value: Fraction) -> str:
    """Render a rational as "p" or "p/q" in lowest terms."""
    return str(Fraction(value))


def vector(entries: Iterable[ScalarLike]) -> Vector:
    return tuple(scalar(e) for e in entries)


def vzero(n: int) -> Vector:
    return (Q(0),) * n


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vscale(c: ScalarLike, u: Vector) -> Vector:
    c = scalar(c)
    return tuple(c * a for a in u)


def is_zero_vector(u: Vector) -> bool:
    return all(a == 0 for a in u)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Q(1) if k == i else Q(0) for k in range(n))


class Matrix:
    """Immutable exact matrix.

    Rows are stored as a tuple of tuples of Fractions.  The column count
    is kept explicitly so zero-row matrices (which show up as boundary
    maps out of a zero-dimensional cochain space) still know their shape.
    """

    __slots__ = ("rows", "_ncols")

    def __init__(self, rows: Sequence[Sequence[ScalarLike]], ncols: int | None = None):
        self.rows = tuple(tuple(scalar(e) for e in row) for row in rows)
        if self.rows:
            widths = {len(row) for row in self.rows}
            if len(widths) != 1:
                raise ValueError("rows of unequal length")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row length")
            self._ncols = width
        else:
            if ncols is None:
                raise ValueError("a matrix with no rows needs an explicit ncols")
            self._ncols = ncols

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(((Q(0),) * ncols,) * nrows, ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(basis_vector(n, i) for i in range(n)), ncols=n)

    @classmethod
    def diagonal(cls, entries: Iterable[ScalarLike]) -> "Matrix":
        diag = [scalar(e) for e in entries]
        n = len(diag)
        return cls(
            tuple(
                tuple(diag[i] if i == j else Q(0) for j in range(n))
                for i in range(n)
            ),
            ncols=n,
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], nrows: int | None = None) -> "Matrix":
        if not columns:
            if nrows is None:
                raise ValueError("a matrix with no columns needs an explicit nrows")
            return cls.zero(nrows, 0)
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise ValueError("columns of unequal length")
        return cls(
            tuple(tuple(scalar(c[i]) for c in columns) for i in range(height)),
            ncols=len(columns),
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple:
        return (self.nrows, self._ncols)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self._ncols)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self._ncols == other._ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self._ncols))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_scalar(e) for e in row) for row in self.rows
        )
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            tuple(vadd(r, s) for r, s in zip(self.rows, other.rows)),
            ncols=self._ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            tuple(vsub(r, s) for r, s in zip(self.rows, other.rows)),
            ncols=self._ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(vneg(r) for r in self.rows), ncols=self._ncols)

    def scale(self, c: ScalarLike) -> "Matrix":
        c = scalar(c)
        return Matrix(tuple(vscale(c, r) for r in self.rows), ncols=self._ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self._ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other._ncols
        out = []
        for row in self.rows:
            out.append(
                tuple(
                    sum((row[k] * other.rows[k][j] for k in range(self._ncols)), Q(0))
                    for j in range(cols)
                )
            )
        return Matrix(tuple(out), ncols=cols)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self._ncols:
            raise ValueError(f"shape mismatch {self.shape} applied to len {len(v)}")
        return tuple(
            sum((row[k] * v[k] for k in range(self._ncols)), Q(0))
            for row in self.rows
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            tuple(self.column(j) for j in range(self._ncols)), ncols=self.nrows
        )

    def is_zero(self) -> bool:
        return all(is_zero_vector(r) for r in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self._ncols

    def power(self, k: int) -> "Matrix":
        """Matrix power; negative exponents use the exact inverse."""
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        base = self if k >= 0 else self.inverse()
        result = Matrix.identity(self.nrows)
        for _ in range(abs(k)):
            result = result @ base
        return result

    def _require_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def _eliminated(self) -> tuple:
        """Row echelon form data: (rows as lists, pivot columns)."""
        work = [list(row) for row in self.rows]
        pivots = []
        piv_row = 0
        for col in range(self._ncols):
            found = None
            for r in range(piv_row, len(work)):
                if work[r][col] != 0:
                    found = r
                    break
            if found is None:
                continue
            if found != piv_row:
                work[piv_row], work[found] = work[found], work[piv_row]
            pivot = work[piv_row][col]
            work[piv_row] = [e / pivot for e in work[piv_row]]
            for r in range(len(work)):
                if r != piv_row and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [
                        e - factor * p for e, p in zip(work[r], work[piv_row])
                    ]
            pivots.append(col)
            piv_row += 1
            if piv_row == len(work):
                break
        return work, tuple(pivots)

    def rref(self) -> tuple:
        """Reduced row echelon form and the tuple of pivot columns."""
        work, pivots = self._eliminated()
        return Matrix(tuple(tuple(r) for r in work), ncols=self._ncols), pivots

    def rank(self) -> int:
        return len(self._eliminated()[1])

    def kernel_basis(self) -> list:
        """Basis of the right kernel, one vector per free column.

        The free columns are visited in increasing order and each basis
        vector has a 1 in its free position, so the result is canonical.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self._ncols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [Q(0)] * self._ncols
            v[f] = Q(1)
            for r, p in enumerate(pivots):
                v[p] = -reduced.rows[r][f]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Vector) -> Vector | None:
        """One exact solution of self @ x = b, or None if inconsistent.

        Free variables are set to zero, so the solution is deterministic.
        """
        if len(b) != self.nrows:
            raise ValueError("right-hand side has the wrong length")
        augmented = Matrix(
            tuple(row + (b[i],) for i, row in enumerate(self.rows)),
            ncols=self._ncols + 1,
        )
        reduced, pivots = augmented.rref()
        if self._ncols in pivots:
            return None
        x = [Q(0)] * self._ncols
        for r, p in enumerate(pivots):
            x[p] = reduced.rows[r][self._ncols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        augmented = Matrix(
            tuple(
                self.rows[i] + basis_vector(n, i) for i in range(n)
            ),
            ncols=2 * n,
        )
        reduced, pivots = augmented.rref()
        if tuple(pivots) != tuple(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(
            tuple(row[n:] for row in reduced.rows), ncols=n
        )

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def det(self) -> Fraction:
        """Exact determinant by fraction-preserving elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        work = [list(row) for row in self.rows]
        result = Q(1)
        for col in range(n):
            found = None
            for r in range(col, n):
                if work[r][col] != 0:
                    found = r
                    break
            if found is None:
                return Q(0)
            if found != col:
                work[col], work[found] = work[found], work[col]
                result = -result
            pivot = work[col][col]
            result *= pivot
            for r in range(col + 1, n):
                if work[r][col] != 0:
                    factor = work[r][col] / pivot
                    work[r] = [
                        e - factor * p for e, p in zip(work[r], work[col])
                    ]
        return result


def matrix(rows: Sequence[Sequence[ScalarLike]], ncols: int | None = None) -> Matrix:
    return Matrix(rows, ncols=ncols)


def block_diag(top: Matrix, bottom: Matrix) -> Matrix:
    """The block-diagonal sum, e.g. the twist of a direct sum space."""
    rows = [row + vzero(bottom.ncols) for row in top.rows]
    rows += [vzero(top.ncols) + row for row in bottom.rows]
    return Matrix(tuple(rows), ncols=top.ncols + bottom.ncols)


def hstack(left: Matrix, right: Matrix) -> Matrix:
    if left.nrows != right.nrows:
        raise ValueError("hstack needs equal row counts")
    return Matrix(
        tuple(l + r for l, r in zip(left.rows, right.rows)),
        ncols=left.ncols + right.ncols,
    )


def solve_in_span(columns: Sequence[Vector], target: Vector) -> Vector | None:
    """Coordinates of target in the span of the given columns, or None."""
    if not columns:
        return () if is_zero_vector(target) else None
    return Matrix.from_columns(columns).solve(target)

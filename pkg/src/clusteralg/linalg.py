"""Exact rational scalars, dense matrices and order-3 tensors.

Everything in this package is computed over the rational field with
``fractions.Fraction``; there is no floating point anywhere, so every
identity check reduces to an exact zero test.  Dimensions are desk-scale
(a handful of basis vectors), which makes dense storage and plain loops
the right tool.

Square systems are solved by fraction-free (Bareiss) Gaussian
elimination on an integer-cleared augmented matrix, which keeps the
intermediate entries polynomially bounded.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Iterator, Sequence

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Singular(ArithmeticError):
    """Raised when an exact solve meets a rank-deficient square matrix."""


class DimensionMismatch(ValueError):
    """Operands whose shapes cannot be combined."""


def rat(value) -> Fraction:
    """Coerce an int, string ("p" or "p/q") or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" with integer p, q and q > 0 after reduction."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as "p" when the denominator is 1, else "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# vectors (plain tuples of Fractions)

def vec_zero(n: int) -> tuple[Fraction, ...]:
    return (_ZERO,) * n


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(c * a for a in u)


def vec_is_zero(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(_ONE if k == i else _ZERO for k in range(n))


class Matrix:
    """Immutable dense matrix over Q, stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "_r")

    def __init__(self, entries: Iterable[Iterable]):
        r = tuple(tuple(rat(x) for x in row) for row in entries)
        if r and any(len(row) != len(r[0]) for row in r):
            raise DimensionMismatch("ragged rows")
        self._r = r
        self.rows = len(r)
        self.cols = len(r[0]) if r else 0

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[Fraction]]) -> "Matrix":
        if not cols:
            return cls([])
        return cls([[col[i] for col in cols] for i in range(len(cols[0]))])

    # -- access --------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._r[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._r[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._r)

    def nonzero(self) -> Iterator[tuple[int, int, Fraction]]:
        for i, row in enumerate(self._r):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def is_zero(self) -> bool:
        return all(v == 0 for row in self._r for v in row)

    # -- algebra --------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(vec_add(a, b) for a, b in zip(self._r, other._r))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(vec_sub(a, b) for a, b in zip(self._r, other._r))

    def __neg__(self) -> "Matrix":
        return Matrix(vec_scale(Fraction(-1), row) for row in self._r)

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix(vec_scale(c, row) for row in self._r)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        return Matrix(
            [sum((a * b for a, b in zip(row, col)), _ZERO) for col in cols]
            for row in self._r
        )

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._r)) if self._r else Matrix([])

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape}")
        return tuple(sum((a * b for a, b in zip(row, vec)), _ZERO) for row in self._r)

    # -- misc ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._r == other._r

    def __hash__(self):
        return hash(self._r)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(v) for v in row) for row in self._r)
        return f"Matrix[{body}]"

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        return self.solve(Matrix.identity(self.rows))

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Solve self @ X = rhs for square self; raises Singular."""
        if self.rows != self.cols:
            raise DimensionMismatch("solve needs a square coefficient matrix")
        if rhs.rows != self.rows:
            raise DimensionMismatch("right-hand side has wrong height")
        return _bareiss_solve(self, rhs)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_inverse(m: Matrix) -> Matrix:
    return m.inverse()


def _bareiss_solve(a: Matrix, rhs: Matrix) -> Matrix:
    """Fraction-free forward elimination, Fraction back substitution."""
    n, k = a.rows, rhs.cols
    # clear denominators row by row; row scaling preserves the solution set
    m: list[list[int]] = []
    for i in range(n):
        row = list(a.row(i)) + list(rhs.row(i))
        mult = lcm(*(x.denominator for x in row)) if row else 1
        m.append([int(x * mult) for x in row])
    prev = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        for r in range(col + 1, n):
            for c in range(col + 1, n + k):
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    sol: list[list[Fraction]] = [[_ZERO] * k for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(k):
            s = Fraction(m[i][n + j])
            for c in range(i + 1, n):
                s -= m[i][c] * sol[c][j]
            sol[i][j] = s / m[i][i]
    return Matrix(sol)


def row_echelon_pivots(a: Matrix) -> tuple[int, ...]:
    """Pivot column indices of a row-echelon reduction (rank profile)."""
    work = [list(a.row(i)) for i in range(a.rows)]
    pivots = []
    r = 0
    for c in range(a.cols):
        piv = next((i for i in range(r, a.rows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, a.rows):
            f = work[i][c] / work[r][c]
            if f:
                for j in range(c, a.cols):
                    work[i][j] -= f * work[r][j]
        pivots.append(c)
        r += 1
    return tuple(pivots)


def solve_consistent(a: Matrix, b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """One exact solution of a @ x = b (free variables set to 0).

    Works for rectangular or rank-deficient systems; raises Singular when
    the system is inconsistent.
    """
    work = [list(a.row(i)) + [rat(b[i])] for i in range(a.rows)]
    n, cols = a.rows, a.cols
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, n) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(n):
            if i != r and work[i][c]:
                f = work[i][c] / work[r][c]
                for j in range(c, cols + 1):
                    work[i][j] -= f * work[r][j]
        pivots.append((r, c))
        r += 1
    for i in range(r, n):
        if work[i][cols] != 0:
            raise Singular("inconsistent linear system")
    x = [_ZERO] * cols
    for i, c in pivots:
        x[c] = work[i][cols] / work[i][c]
    return tuple(x)


class Tensor3:
    """Order-3 tensor over Q with flat immutable storage."""

    __slots__ = ("dims", "_e")

    def __init__(self, dims: tuple[int, int, int], entries: Sequence[Fraction]):
        d1, d2, d3 = dims
        if len(entries) != d1 * d2 * d3:
            raise DimensionMismatch("entry count does not match dims")
        self.dims = (d1, d2, d3)
        self._e = tuple(entries)

    @classmethod
    def zeros(cls, d1: int, d2: int, d3: int) -> "Tensor3":
        return cls((d1, d2, d3), (_ZERO,) * (d1 * d2 * d3))

    @classmethod
    def from_entries(cls, dims: tuple[int, int, int],
                     entries: Iterable[tuple[int, int, int, Fraction]]) -> "Tensor3":
        d1, d2, d3 = dims
        buf = [_ZERO] * (d1 * d2 * d3)
        for p, q, t, v in entries:
            if not (0 <= p < d1 and 0 <= q < d2 and 0 <= t < d3):
                raise DimensionMismatch(f"index ({p},{q},{t}) out of range for {dims}")
            buf[(p * d2 + q) * d3 + t] = rat(v)
        return cls(dims, buf)

    @classmethod
    def build(cls, dims: tuple[int, int, int],
              fn: Callable[[int, int, int], Fraction]) -> "Tensor3":
        d1, d2, d3 = dims
        return cls(dims, [rat(fn(p, q, t))
                          for p in range(d1) for q in range(d2) for t in range(d3)])

    def get(self, p: int, q: int, t: int) -> Fraction:
        d1, d2, d3 = self.dims
        return self._e[(p * d2 + q) * d3 + t]

    def fibre(self, p: int, q: int) -> tuple[Fraction, ...]:
        """The vector (self[p,q,0], ..., self[p,q,d3-1])."""
        d1, d2, d3 = self.dims
        base = (p * d2 + q) * d3
        return self._e[base:base + d3]

    def nonzero(self) -> Iterator[tuple[int, int, int, Fraction]]:
        d1, d2, d3 = self.dims
        for idx, v in enumerate(self._e):
            if v:
                p, rem = divmod(idx, d2 * d3)
                q, t = divmod(rem, d3)
                yield p, q, t, v

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._e)

    def __add__(self, other: "Tensor3") -> "Tensor3":
        self._same(other)
        return Tensor3(self.dims, tuple(x + y for x, y in zip(self._e, other._e)))

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        self._same(other)
        return Tensor3(self.dims, tuple(x - y for x, y in zip(self._e, other._e)))

    def __neg__(self) -> "Tensor3":
        return Tensor3(self.dims, tuple(-x for x in self._e))

    def scale(self, c) -> "Tensor3":
        c = rat(c)
        return Tensor3(self.dims, tuple(c * x for x in self._e))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tensor3)
                and self.dims == other.dims and self._e == other._e)

    def __hash__(self):
        return hash((self.dims, self._e))

    def __repr__(self) -> str:
        nz = list(self.nonzero())
        if len(nz) > 8:
            return f"Tensor3{self.dims}<{len(nz)} nonzero entries>"
        body = ", ".join(f"({p},{q},{t})={format_rational(v)}" for p, q, t, v in nz)
        return f"Tensor3{self.dims}[{body}]"

    def _same(self, other: "Tensor3") -> None:
        if self.dims != other.dims:
            raise DimensionMismatch(f"{self.dims} vs {other.dims}")


def permute_tensor3(t: Tensor3, perm: tuple[int, int, int]) -> Tensor3:
    """Relocate slot contents: the factor in slot s moves to slot perm[s-1].

    perm is a permutation of (1, 2, 3); e.g. (2, 3, 1) sends x@y@z to
    z@x@y.  Requires a cubic tensor.  Composition is contravariant:
    permuting by p then by q equals permuting once by q o p.
    """
    d1, d2, d3 = t.dims
    if not (d1 == d2 == d3):
        raise DimensionMismatch("slot permutation needs a cubic tensor")
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1,2,3): {perm!r}")
    d = d1
    buf = [_ZERO] * (d * d * d)
    for p, q, r, v in t.nonzero():
        new = [0, 0, 0]
        new[perm[0] - 1] = p
        new[perm[1] - 1] = q
        new[perm[2] - 1] = r
        buf[(new[0] * d + new[1]) * d + new[2]] = v
    return Tensor3((d, d, d), buf)

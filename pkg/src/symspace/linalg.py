"""Exact linear algebra over arbitrary-precision rationals.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator), vectors are tuples of Fractions, and :class:`Matrix` is an
immutable dense rational matrix.  Inversion and linear solves use
fraction-free Bareiss elimination on a denominator-cleared integer copy,
so every intermediate quantity is an exact integer minor; results are
returned as Fractions.

The module also provides :class:`PiSqrtValue`, the value type ``pi *
sqrt(q)`` for a nonnegative rational ``q``.  Every geometric quantity
produced by this package (injectivity radius, diameter) has that shape,
so a single radicand is all the symbolic algebra we need.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from math import lcm

Rational = Fraction
Vector = tuple[Fraction, ...]


class SingularMatrix(ValueError):
    """Raised when inverting or solving with a singular matrix."""


class DimensionMismatch(ValueError):
    """Raised when operand shapes are incompatible."""


class NegativeFactor(ValueError):
    """Raised when a nonnegative scale factor is required but not given."""


def vec(*entries) -> Vector:
    """Build a rational vector, coercing ints/strings to Fraction."""
    return tuple(Fraction(e) for e in entries)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def vadd(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))

def vsub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))

def vscale(u: Vector, c) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in u)

def dot(u: Vector, v: Vector) -> Fraction:
    """Plain coordinate dot product (no Gram matrix)."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def format_rational(x: Fraction) -> str:
    """Canonical rendering: "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        tup = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if tup and any(len(r) != len(tup[0]) for r in tup):
            raise DimensionMismatch("ragged rows")
        return cls(tup)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                         for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries))) if self.entries else self

    def mul_vec(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"matrix cols {self.cols} != vector length {len(v)}")
        return tuple(dot(r, v) for r in self.entries)

    def mul_mat(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.cols} != {other.rows}")
        ot = other.transpose()
        return Matrix(tuple(tuple(dot(r, c) for c in ot.entries) for r in self.entries))

    def scaled(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(tuple(tuple(c * x for x in r) for r in self.entries))

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.entries]

    def _cleared(self) -> tuple[list[list[int]], int]:
        """Return (D*self as integer rows, D) for D = lcm of denominators."""
        d = 1
        for r in self.entries:
            for x in r:
                d = lcm(d, x.denominator)
        ints = [[int(x * d) for x in r] for r in self.entries]
        return ints, d

    def det(self) -> Fraction:
        """Exact determinant via fraction-free Bareiss elimination."""
        if not self.is_square():
            raise DimensionMismatch("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return Fraction(1)
        m, d = self._cleared()
        sign, last = _bareiss_forward(m, n)
        if last is None:
            return Fraction(0)
        return Fraction(sign * last, d ** n)

    def invert(self) -> "Matrix":
        """Exact inverse; raises SingularMatrix when the determinant is zero."""
        if not self.is_square():
            raise DimensionMismatch("inverse needs a square matrix")
        n = self.rows
        ints, d = self._cleared()
        aug = [ints[i] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        sign, last = _bareiss_forward(aug, n)
        if last is None:
            raise SingularMatrix("matrix is singular")
        cols = []
        for j in range(n):
            cols.append(_back_substitute(aug, n, n + j))
        # aug solved N x = e_j with N = d*M, so M^{-1} columns are d*x.
        inv_rows = tuple(tuple(d * cols[j][i] for j in range(n)) for i in range(n))
        return Matrix(inv_rows)

    def solve(self, b: Vector) -> Vector:
        """Solve self @ x = b exactly."""
        if not self.is_square():
            raise DimensionMismatch("solve needs a square matrix")
        if len(b) != self.rows:
            raise DimensionMismatch(f"rhs length {len(b)} != {self.rows}")
        n = self.rows
        d = 1
        for r in self.entries:
            for x in r:
                d = lcm(d, x.denominator)
        for x in b:
            d = lcm(d, Fraction(x).denominator)
        aug = [[int(x * d) for x in self.entries[i]] + [int(Fraction(b[i]) * d)]
               for i in range(n)]
        sign, last = _bareiss_forward(aug, n)
        if last is None:
            raise SingularMatrix("matrix is singular")
        return _back_substitute(aug, n, n)


def _bareiss_forward(m: list[list[int]], n: int) -> tuple[int, int | None]:
    """Fraction-free forward elimination in place on integer rows.

    Eliminates below the first n pivot columns of the (possibly augmented)
    integer row list ``m``.  Returns (sign from row swaps, last pivot) with
    last pivot None when the matrix is singular.  Divisions are exact by
    Sylvester's identity, so no rational arithmetic is needed.
    """
    sign = 1
    prev = 1
    width = len(m[0]) if m else 0
    for k in range(n):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return sign, None
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, width):
                row_i[j] = (piv * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign, m[n - 1][n - 1] if n else 1


def _back_substitute(m: list[list[int]], n: int, col: int) -> Vector:
    """Solve the upper-triangular system left by the forward phase."""
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][col])
        for k in range(i + 1, n):
            s -= m[i][k] * x[k]
        x[i] = s / m[i][i]
    return tuple(x)


def invert(m: Matrix) -> Matrix:
    return m.invert()


def solve(m: Matrix, b: Vector) -> Vector:
    return m.solve(b)


_PI = Decimal("3.14159265358979323846264338327950288419716939937510")


@total_ordering
@dataclass(frozen=True)
class PiSqrtValue:
    """The exact value pi * sqrt(radicand) for a nonnegative rational radicand.

    Equality and ordering compare radicands exactly.  The type deliberately
    cannot express sums of distinct radicals; no quantity in this package
    needs them.
    """

    radicand: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand < 0:
            raise NegativeFactor(f"radicand must be >= 0, got {self.radicand}")

    def scaled(self, factor) -> "PiSqrtValue":
        """Multiply the radicand by ``factor`` (i.e. scale the value by sqrt(factor))."""
        factor = Fraction(factor)
        if factor < 0:
            raise NegativeFactor(f"scale factor must be >= 0, got {factor}")
        return PiSqrtValue(self.radicand * factor)

    def __lt__(self, other: "PiSqrtValue") -> bool:
        return self.radicand < other.radicand

    def __float__(self) -> float:
        return float(_PI) * float(self.radicand) ** 0.5

    def exact_str(self) -> str:
        return f"pi*sqrt({format_rational(self.radicand)})"

    def decimal_str(self, digits: int = 12) -> str:
        """Decimal rendering at ``digits`` significant figures, round half even."""
        if self.radicand == 0:
            return "0"
        with localcontext() as ctx:
            ctx.prec = digits + 10
            val = _PI * (Decimal(self.radicand.numerator)
                         / Decimal(self.radicand.denominator)).sqrt()
            ctx.prec = digits
            ctx.rounding = ROUND_HALF_EVEN
            return str(+val)

    def to_json(self) -> dict:
        return {
            "radicand": format_rational(self.radicand),
            "exact": self.exact_str(),
            "decimal": self.decimal_str(),
        }

    def __str__(self) -> str:
        return f"{self.exact_str()} = {self.decimal_str()}"


def pi_sqrt(radicand) -> PiSqrtValue:
    return PiSqrtValue(Fraction(radicand))


def pi_sqrt_scale(v: PiSqrtValue, factor) -> PiSqrtValue:
    return v.scaled(factor)

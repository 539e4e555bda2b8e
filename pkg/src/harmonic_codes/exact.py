"""Exact rational scalars and small dense symmetric matrices.

Every certificate in this package is computed over arbitrary-precision
rationals; floats never enter except in the optional coordinate export.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# The one scalar type of the certification path.  fractions.Fraction already
# guarantees the canonical form we need: positive denominator, gcd-reduced.
Rational = Fraction


class DimensionError(ValueError):
    """Operands have incompatible sizes."""


class StructureError(ValueError):
    """A point set or matrix violates a required structural property."""


class DomainError(ValueError):
    """A value lies outside the mathematically admissible domain."""


def rat(num: int, den: int = 1) -> Rational:
    """Canonical rational num/den; the sign ends up on the numerator."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


@dataclass(frozen=True)
class SymMatrix:
    """Immutable symmetric matrix with Rational entries."""

    entries: tuple[tuple[Rational, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise StructureError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise StructureError(f"entries ({i},{j}) and ({j},{i}) differ")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int | Rational]]) -> "SymMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def zero(cls, order: int) -> "SymMatrix":
        z = Fraction(0)
        return cls(tuple(tuple(z for _ in range(order)) for _ in range(order)))

    @classmethod
    def identity(cls, order: int) -> "SymMatrix":
        return cls.diagonal([1] * order)

    @classmethod
    def diagonal(cls, values: Sequence[int | Rational]) -> "SymMatrix":
        n = len(values)
        z = Fraction(0)
        return cls(
            tuple(
                tuple(Fraction(values[i]) if i == j else z for j in range(n))
                for i in range(n)
            )
        )

    @property
    def order(self) -> int:
        return len(self.entries)

    def trace(self) -> Rational:
        return sum((self.entries[i][i] for i in range(self.order)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


def frobenius_inner(a: SymMatrix, b: SymMatrix) -> Rational:
    """Entrywise product sum over the full square, exact."""
    if a.order != b.order:
        raise DimensionError(f"orders {a.order} and {b.order} differ")
    total = Fraction(0)
    for row_a, row_b in zip(a.entries, b.entries):
        for x, y in zip(row_a, row_b):
            total += x * y
    return total

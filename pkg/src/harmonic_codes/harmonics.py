"""Spherical-harmonic dimensions and normalized Gegenbauer polynomials.

The polynomials here are the ultraspherical family C_k^lambda with
lambda = (d-1)/2 for points on S^d, rescaled so that the value at t = 1
is exactly 1.  Under this normalization the degree-k polynomial gives the
inner product of degree-k reproducing-kernel elements attached to two
sphere points with inner product t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, Rational


def harmonic_dimension(d: int, k: int) -> int:
    """Dimension of the space of degree-k spherical harmonics on S^d.

    Evaluates (2k+d-1)/(k+d-1) * C(d+k-1, k) exactly.  By convention the
    degree-0 space (constants) has dimension 1.
    """
    if d < 1:
        raise DomainError("sphere dimension must be >= 1")
    if k < 0:
        raise DomainError("degree must be >= 0")
    if k == 0:
        return 1
    value = Fraction(2 * k + d - 1, k + d - 1) * math.comb(d + k - 1, k)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class GegenbauerPoly:
    """Degree-k Gegenbauer polynomial for S^d, normalized to 1 at t = 1.

    coeffs holds k+1 Rational coefficients, constant term first.  Only
    every other coefficient can be nonzero (the polynomial has the parity
    of its degree).
    """

    d: int
    k: int
    coeffs: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.k + 1:
            raise DomainError("coefficient count must be degree + 1")
        for j, c in enumerate(self.coeffs):
            if (j - self.k) % 2 != 0 and c != 0:
                raise DomainError(f"parity violation at power {j}")
        if self.evaluate(Fraction(1)) != 1:
            raise DomainError("polynomial is not normalized at t = 1")

    def evaluate(self, t: int | Rational) -> Rational:
        """Exact Horner evaluation."""
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __call__(self, t: int | Rational) -> Rational:
        return self.evaluate(t)


def _classical_coefficients(lam: Fraction, k: int) -> list[Fraction]:
    """Coefficient list of the classical C_k^lam via the three-term recurrence.

    k C_k(t) = 2t (k-1+lam) C_{k-1}(t) - (k-2+2 lam) C_{k-2}(t),
    seeded with C_0 = 1 and C_1 = 2 lam t.
    """
    prev2 = [Fraction(1)]
    if k == 0:
        return prev2
    prev1 = [Fraction(0), 2 * lam]
    for j in range(2, k + 1):
        shifted = [Fraction(0)] + prev1
        cur = [2 * (j - 1 + lam) * c for c in shifted]
        for i, c in enumerate(prev2):
            cur[i] -= (j - 2 + 2 * lam) * c
        cur = [c / j for c in cur]
        prev2, prev1 = prev1, cur
    return prev1


def _chebyshev_coefficients(k: int) -> list[Fraction]:
    """Chebyshev T_k coefficients, the lam -> 0 limit of the normalized family."""
    prev2 = [Fraction(1)]
    if k == 0:
        return prev2
    prev1 = [Fraction(0), Fraction(1)]
    for _ in range(2, k + 1):
        cur = [Fraction(0)] + [2 * c for c in prev1]
        for i, c in enumerate(prev2):
            cur[i] -= c
        prev2, prev1 = prev1, cur
    return prev1


def gegenbauer(d: int, k: int) -> GegenbauerPoly:
    """Normalized degree-k Gegenbauer polynomial for S^d.

    For d >= 2 this runs the classical recurrence with lam = (d-1)/2 and
    divides by the value at 1.  For d = 1 the family degenerates to the
    Chebyshev polynomials T_k, which are already 1 at t = 1.
    """
    if d < 1:
        raise DomainError("sphere dimension must be >= 1")
    if k < 0:
        raise DomainError("degree must be >= 0")
    if d == 1:
        coeffs = _chebyshev_coefficients(k)
    else:
        coeffs = _classical_coefficients(Fraction(d - 1, 2), k)
        at_one = sum(coeffs)
        coeffs = [c / at_one for c in coeffs]
    return GegenbauerPoly(d=d, k=k, coeffs=tuple(coeffs))

"""Monic integer polynomials and exact integer changes of variable.

A polynomial of degree ``m`` is stored as the coefficient tuple
``(a_1, ..., a_m)`` of ``x^m + a_1 x^(m-1) + ... + a_m``; the leading 1 is
implicit and never stored.  All operations are exact: coefficients are
Python integers, evaluation points are rationals.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    DegreeTooSmallError,
    EmptyInputError,
    NoZeroRootError,
    NotMonicError,
)

#: Hard cap on accepted degree; dense coefficient storage is assumed throughout.
MAX_DEGREE = 64

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class MonicIntPolynomial:
    """``x^m + a_1 x^(m-1) + ... + a_m`` with integer ``a_k``.

    >>> MonicIntPolynomial((2, -1))
    MonicIntPolynomial(coeffs=(2, -1))
    >>> str(MonicIntPolynomial((2, -1)))
    'x^2 + 2x - 1'
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(operator.index(c) for c in self.coeffs)
        if not coeffs:
            raise EmptyInputError("polynomial must have degree >= 1")
        if len(coeffs) > MAX_DEGREE:
            raise ValueError(f"degree {len(coeffs)} exceeds supported cap {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def constant_term(self) -> int:
        return self.coeffs[-1]

    def with_leading(self) -> tuple[int, ...]:
        """Full descending coefficient tuple ``(1, a_1, ..., a_m)``."""
        return (1,) + self.coeffs

    def __str__(self) -> str:
        parts = [f"x^{self.degree}" if self.degree > 1 else "x"]
        for k, a in enumerate(self.coeffs, start=1):
            if a == 0:
                continue
            power = self.degree - k
            mag = abs(a)
            if power == 0:
                term = str(mag)
            else:
                xpow = "x" if power == 1 else f"x^{power}"
                term = xpow if mag == 1 else f"{mag}{xpow}"
            parts.append(f"- {term}" if a < 0 else f"+ {term}")
        return " ".join(parts)


@dataclass(frozen=True)
class AffineShift:
    """Eigenvalue map ``r -> a + b*r`` realized on matrices as ``a*I + b*R``.

    ``b`` must be nonzero; ``(0, 1)`` is the identity.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", operator.index(self.a))
        object.__setattr__(self, "b", operator.index(self.b))
        if self.b == 0:
            raise ValueError("shift scale b must be nonzero")

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 1

    def apply(self, value: Rational) -> Fraction:
        """``a + b*value`` as an exact rational."""
        return Fraction(value) * self.b + self.a


IDENTITY_SHIFT = AffineShift(0, 1)


def make_polynomial(
    values: Sequence[int], includes_leading: bool = True
) -> MonicIntPolynomial:
    """Build a polynomial from a coefficient list.

    With ``includes_leading`` the list is ``[1, a_1, ..., a_m]`` and the
    explicit leading 1 is checked; otherwise the list is ``[a_1, ..., a_m]``.
    """
    values = list(values)
    if includes_leading:
        if not values:
            raise EmptyInputError("coefficient list is empty")
        if operator.index(values[0]) != 1:
            raise NotMonicError(f"leading coefficient must be 1, got {values[0]}")
        values = values[1:]
    if not values:
        raise EmptyInputError("polynomial must have degree >= 1")
    return MonicIntPolynomial(tuple(values))


def eval_rational(p: MonicIntPolynomial, x: Rational) -> Fraction:
    """Exact value of ``p`` at a rational point (Horner, no rounding)."""
    x = Fraction(x)
    acc = Fraction(1)
    for a in p.coeffs:
        acc = acc * x + a
    return acc


def cauchy_bound(p: MonicIntPolynomial) -> int:
    """``1 + max|a_k|``: every root has absolute value below this integer."""
    return 1 + max(abs(a) for a in p.coeffs)


def _times_linear(desc: list[int], c0: int) -> list[int]:
    """Multiply a polynomial in descending coefficients by ``(x + c0)``."""
    out = desc + [0]
    for i, d in enumerate(desc):
        out[i + 1] += d * c0
    return out


def shift_scale(p: MonicIntPolynomial, s: AffineShift) -> MonicIntPolynomial:
    """Monic integer polynomial whose roots are ``a + b*r`` for roots ``r`` of ``p``.

    Computed as ``b^m * p((x - a)/b)``: each ``a_k`` is scaled by ``b^k`` and the
    result is composed with ``(x - a)`` by exact synthetic (Horner) substitution,
    so coefficients stay integers throughout.

    >>> str(shift_scale(MonicIntPolynomial((2, -1)), AffineShift(2, 1)))
    'x^2 - 2x - 1'
    """
    scaled = [a * s.b**k for k, a in enumerate(p.coeffs, start=1)]
    acc = [1]
    for c in scaled:
        acc = _times_linear(acc, -s.a)
        acc[-1] += c
    return MonicIntPolynomial(tuple(acc[1:]))


def deflate_zero_root(p: MonicIntPolynomial) -> MonicIntPolynomial:
    """Divide out the root at 0, i.e. return ``p / x``."""
    if p.constant_term != 0:
        raise NoZeroRootError("constant term is nonzero; 0 is not a root")
    if p.degree < 2:
        raise DegreeTooSmallError("cannot deflate a degree-1 polynomial")
    return MonicIntPolynomial(p.coeffs[:-1])


def reversed_monic(p: MonicIntPolynomial) -> MonicIntPolynomial:
    """Monic integer polynomial whose roots are ``a_m / r`` for roots ``r`` of ``p``.

    Reverses the coefficient order (mapping roots to their reciprocals) and
    rescales the variable by the constant term ``a_m`` to restore monicity
    without leaving the integers.  Requires ``a_m != 0``.
    """
    const = p.constant_term
    if const == 0:
        raise ValueError("constant term is zero; deflate the zero root first")
    full = p.with_leading()
    m = p.degree
    coeffs = tuple(full[m - j] * const ** (j - 1) for j in range(1, m + 1))
    return MonicIntPolynomial(coeffs)

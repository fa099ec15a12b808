"""Integer sequence families driven by an m-term recurrence.

Given a monic integer polynomial of degree ``m``, the family consists of
``m`` integer sequences advanced together.  The first ``m`` state vectors
are ``S_0, M S_0, ..., M^(m-1) S_0`` for an iteration matrix ``M`` whose
characteristic polynomial is the given polynomial (the companion matrix by
default, or an affine image of one); beyond that each new vector obeys

    S_j = -a_1 S_(j-1) - a_2 S_(j-2) - ... - a_m S_(j-m)

componentwise, which continues the matrix iteration exactly.  Component
ratios of these vectors converge to roots: the ratio of adjacent
components at a fixed step tends to the root whose (possibly shifted)
image dominates in absolute value, and the step-over-step ratio within one
sequence tends to that dominant image itself.

Two stepping modes are supported:

* exact (default): the recurrence is applied verbatim; vectors equal
  ``M^j S_0`` exactly and reproduce reference tables digit for digit.
* normalized: each new vector is ``M v`` divided by the gcd of its
  components.  Every stored vector is the exact one divided by a positive
  integer, so same-step component ratios are unchanged while growth of the
  common content is suppressed.  Step-over-step ratios are meaningless in
  this mode and are refused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .companion import CompanionMatrix, IntVector, affine, companion_of, mat_vec
from .errors import (
    DimensionMismatchError,
    NormalizedModeUnsupportedError,
    OutOfRangeError,
    ZeroDenominatorError,
    ZeroSeedError,
)
from .poly import AffineShift, MonicIntPolynomial, shift_scale
from .render import decimal_string


@dataclass(frozen=True)
class Convergent:
    """Exact rational ratio sample, reduced to lowest terms."""

    value: Fraction

    def decimal(self, digits: int) -> str:
        return decimal_string(self.value, digits)


def default_seed(m: int) -> IntVector:
    """Standard basis seed ``(1, 0, ..., 0)``."""
    return (1,) + (0,) * (m - 1)


class SequenceFamily:
    """Mutable, single-owner state machine over the m sequences.

    Distinct families share nothing and may run concurrently; a single
    family must not be stepped from two tasks at once.
    """

    def __init__(
        self,
        poly: MonicIntPolynomial,
        seed: Optional[Sequence[int]] = None,
        *,
        matrix: Optional[CompanionMatrix] = None,
        normalized: bool = False,
        keep_history: bool = False,
    ) -> None:
        m = poly.degree
        if seed is None:
            seed = default_seed(m)
        seed = tuple(int(c) for c in seed)
        if len(seed) != m:
            raise DimensionMismatchError(f"seed has dim {len(seed)}, need {m}")
        if all(c == 0 for c in seed):
            raise ZeroSeedError("seed vector is zero")
        if matrix is None:
            matrix = companion_of(poly)
        elif matrix.dim != m:
            raise DimensionMismatchError(f"matrix dim {matrix.dim} != degree {m}")

        self.poly = poly
        self.matrix = matrix
        self.normalized = normalized
        self._neg_coeffs = tuple(-a for a in poly.coeffs)
        self._window: list[IntVector] = []
        self._history: Optional[list[IntVector]] = [] if keep_history else None
        self.peak_bits = 0

        vec = seed
        for _ in range(m):
            self._store(vec)
            vec = mat_vec(matrix, vec)
        self.j = m - 1

    # -- state ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def current(self) -> IntVector:
        """The most recent state vector (as stored)."""
        return self._window[-1]

    @property
    def window(self) -> tuple[IntVector, ...]:
        return tuple(self._window)

    def _store(self, vec: IntVector) -> None:
        if self.normalized:
            g = math.gcd(*vec)
            if g > 1:
                vec = tuple(c // g for c in vec)
        self._window.append(vec)
        if len(self._window) > self.degree:
            del self._window[0]
        if self._history is not None:
            self._history.append(vec)
        bits = max(c.bit_length() for c in vec)
        if bits > self.peak_bits:
            self.peak_bits = bits

    def vector(self, j: int) -> IntVector:
        """State vector at step ``j`` (needs history, or ``j`` inside the window)."""
        if self._history is not None:
            if 0 <= j < len(self._history):
                return self._history[j]
            raise OutOfRangeError(f"step {j} not recorded (history up to {self.j})")
        offset = j - (self.j - len(self._window) + 1)
        if 0 <= offset < len(self._window):
            return self._window[offset]
        raise OutOfRangeError(
            f"step {j} outside window [{self.j - len(self._window) + 1}, {self.j}]"
        )

    # -- advancing --------------------------------------------------------

    def step(self) -> None:
        """Advance by one index (recurrence in exact mode, ``M v / gcd`` normalized)."""
        m = self.degree
        if self.normalized:
            new = mat_vec(self.matrix, self._window[-1])
        else:
            new = tuple(
                sum(
                    self._neg_coeffs[k] * self._window[-1 - k][c]
                    for k in range(m)
                )
                for c in range(m)
            )
        self.j += 1
        self._store(new)

    def run_to(self, j: int) -> None:
        """Step until the current index reaches ``j``."""
        while self.j < j:
            self.step()

    # -- accessors and ratios ---------------------------------------------

    def term(self, i: int, j: int) -> int:
        """Stored term of sequence ``i`` (1-based) at step ``j``."""
        if not 1 <= i <= self.degree:
            raise OutOfRangeError(f"sequence index {i} outside 1..{self.degree}")
        return self.vector(j)[i - 1]

    def cross_ratio(self, i: int, j: Optional[int] = None) -> Convergent:
        """Exact ratio of components ``i`` over ``i+1`` at step ``j``.

        Converges to the root of the original polynomial whose (shifted)
        image dominates; identical in exact and normalized modes.
        """
        if not 1 <= i <= self.degree - 1:
            raise OutOfRangeError(f"cross ratio index {i} outside 1..{self.degree - 1}")
        vec = self.current if j is None else self.vector(j)
        if vec[i] == 0:
            raise ZeroDenominatorError(f"component {i + 1} is zero at step {j}")
        return Convergent(Fraction(vec[i - 1], vec[i]))

    def successive_ratio(self, i: int, j: Optional[int] = None) -> Convergent:
        """Exact ratio of sequence ``i`` at step ``j`` over step ``j-1``.

        Converges to the dominant eigenvalue of the iteration matrix (the
        shifted image of the root).  Exact mode only.
        """
        if self.normalized:
            raise NormalizedModeUnsupportedError(
                "successive ratios require an exact-mode family"
            )
        if not 1 <= i <= self.degree:
            raise OutOfRangeError(f"sequence index {i} outside 1..{self.degree}")
        if j is None:
            j = self.j
        if j < 1:
            raise OutOfRangeError("successive ratio needs j >= 1")
        prev = self.vector(j - 1)[i - 1]
        cur = self.vector(j)[i - 1]
        if prev == 0:
            raise ZeroDenominatorError(f"sequence {i} is zero at step {j - 1}")
        return Convergent(Fraction(cur, prev))


def init_family(
    poly: MonicIntPolynomial,
    seed: Optional[Sequence[int]] = None,
    *,
    matrix: Optional[CompanionMatrix] = None,
    normalized: bool = False,
    keep_history: bool = False,
) -> SequenceFamily:
    """Build a family for ``poly`` (functional alias for the constructor)."""
    return SequenceFamily(
        poly, seed, matrix=matrix, normalized=normalized, keep_history=keep_history
    )


def shifted_family(
    p: MonicIntPolynomial,
    shift: AffineShift,
    seed: Optional[Sequence[int]] = None,
    *,
    normalized: bool = False,
    keep_history: bool = False,
) -> SequenceFamily:
    """Family targeting the root of ``p`` whose image ``a + b*r`` is dominant.

    Iterates ``a*I + b*companion_of(p)`` (eigenvectors of ``p`` preserved) with
    the recurrence of the shifted polynomial ``b^m p((x-a)/b)``.  Cross ratios
    then converge to the original root; successive ratios to ``a + b*root``.
    """
    q = shift_scale(p, shift)
    m = affine_matrix(p, shift)
    return SequenceFamily(
        q, seed, matrix=m, normalized=normalized, keep_history=keep_history
    )


def affine_matrix(p: MonicIntPolynomial, shift: AffineShift) -> CompanionMatrix:
    """``a*I + b*companion_of(p)``."""
    return affine(companion_of(p), shift)

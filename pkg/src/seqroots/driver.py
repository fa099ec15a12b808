"""Turn ratio sequences into root estimates.

Convergence is decided on exact rational convergents: a run stops when a
window of consecutive samples renders identically at the target precision
AND the candidate passes an exact relative-residual test against the
polynomial it claims to solve.  Equal-modulus dominant roots never settle;
a non-contracting oscillation amplitude over a sliding sample window
reports them as a tie instead of burning the whole iteration budget.

Enumeration of all real roots combines two passes.  A grid of integer
shifts spanning the root modulus bound makes each extreme real root
dominant in turn.  Interior real roots can never dominate under a real
affine shift (the largest shifted modulus is always attained on the convex
hull of the root set), so remaining roots are located by exact sign-change
scanning and extracted through an auxiliary polynomial: recentering at the
bracket midpoint and reversing coefficients maps the nearest root to the
dominant one, where the same ratio iteration applies; the estimate is then
mapped back exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from operator import index as _as_int
from typing import Callable, Optional

from .errors import EstimatorMismatchError, OutOfRangeError, ZeroDenominatorError
from .poly import (
    IDENTITY_SHIFT,
    AffineShift,
    MonicIntPolynomial,
    cauchy_bound,
    deflate_zero_root,
    eval_rational,
    reversed_monic,
    shift_scale,
)
from .render import EXACT_AGREEMENT, agreement_digits, decimal_string
from .sequences import SequenceFamily, init_family, shifted_family

ESTIMATOR_CROSS = "cross-ratio"
ESTIMATOR_SUCCESSIVE = "successive-ratio"
ESTIMATOR_EXACT = "exact"

TIE_SPAN = 20

PROBE_BUDGET = 1500
EXTRACT_BUDGET = 2500
GRID_START = 512
GRID_LIMIT = 8192
BISECT_STEPS = 5
BRACKET_ROUNDS = 8


class RootStatus(Enum):
    CONVERGED = "converged"
    TIE_DETECTED = "tie-detected"
    MAX_ITERS_EXCEEDED = "max-iters-exceeded"
    DEGENERATE_SEED = "degenerate-seed"


@dataclass(frozen=True)
class DriverOptions:
    target_digits: int = 12
    window: int = 3
    max_iters: int = 10000
    normalized: bool = True

    def __post_init__(self) -> None:
        for name in ("target_digits", "window", "max_iters"):
            if _as_int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_OPTIONS = DriverOptions()


@dataclass(frozen=True)
class RootEstimate:
    """One root estimate: exact rational value plus how it was obtained."""

    value: Fraction
    decimal_digits: int
    iterations: int
    status: RootStatus
    shift_used: AffineShift
    estimator: str
    peak_bits: int = 0

    @property
    def converged(self) -> bool:
        return self.status is RootStatus.CONVERGED

    def decimal(self, digits: Optional[int] = None) -> str:
        if digits is None:
            digits = self.decimal_digits if self.decimal_digits < EXACT_AGREEMENT else 12
            digits = max(1, digits)
        return decimal_string(self.value, digits)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _residual_ok(p: MonicIntPolynomial, r: Fraction, target_digits: int) -> bool:
    """Exact check of |p(r)| / max(1, |r|)^m < 10^-(target_digits // 2)."""
    half = max(1, target_digits // 2)
    res = abs(eval_rational(p, r))
    scale = max(Fraction(1), abs(r)) ** p.degree
    return res * 10**half < scale


def _agreement(last: Optional[Fraction], prev: Optional[Fraction]) -> int:
    if last is None or prev is None:
        return 0
    return agreement_digits(last, prev)


def _exact_estimate(
    value: Fraction, opts: DriverOptions, iterations: int = 0
) -> RootEstimate:
    digits = max(opts.target_digits, EXACT_AGREEMENT)
    return RootEstimate(
        Fraction(value),
        digits,
        iterations,
        RootStatus.CONVERGED,
        IDENTITY_SHIFT,
        ESTIMATOR_EXACT,
    )


def _linear_root(
    p: MonicIntPolynomial, shift_used: AffineShift, opts: DriverOptions
) -> RootEstimate:
    """Degree 1: one exact step of the family nails the root."""
    fam = init_family(p, keep_history=True)
    fam.step()
    value = fam.successive_ratio(1).value
    return RootEstimate(
        value,
        max(opts.target_digits, EXACT_AGREEMENT),
        1,
        RootStatus.CONVERGED,
        shift_used,
        ESTIMATOR_SUCCESSIVE,
        fam.peak_bits,
    )


def _check_successive(
    family: SequenceFamily, s: AffineShift, value: Fraction, opts: DriverOptions
) -> None:
    """Cross-check: step-over-step ratio must sit near a + b * value."""
    expected = s.apply(value)
    tol = Fraction(1, 10 ** max(0, opts.target_digits - 2))
    for i in range(1, family.degree + 1):
        try:
            got = family.successive_ratio(i).value
        except (ZeroDenominatorError, OutOfRangeError):
            continue
        if abs(got - expected) > tol:
            raise EstimatorMismatchError(
                f"step ratio {float(got):.6g} disagrees with shifted estimate "
                f"{float(expected):.6g} beyond 1e-{opts.target_digits - 2}"
            )
        return


def _iterate_family(
    family: SequenceFamily,
    target: MonicIntPolynomial,
    shift_used: AffineShift,
    opts: DriverOptions,
    *,
    budget: Optional[int] = None,
    successive_check: Optional[AffineShift] = None,
) -> RootEstimate:
    """Drive one family until convergence, tie, collapse, or budget end.

    ``target`` is the polynomial whose root the cross ratios approach (the
    original one when the family runs under a shift); residuals are checked
    against it.  ``budget`` caps steps below ``opts.max_iters`` if given.
    """
    limit = opts.max_iters if budget is None else min(budget, opts.max_iters)
    steps = 0
    run_render: Optional[str] = None
    run_length = 0
    rejected_render: Optional[str] = None
    recent: deque[Fraction] = deque(maxlen=2 * TIE_SPAN)
    last: Optional[Fraction] = None
    prev: Optional[Fraction] = None

    while True:
        sample: Optional[Fraction] = None
        try:
            sample = family.cross_ratio(1).value
        except ZeroDenominatorError:
            pass
        if sample is not None:
            prev, last = last, sample
            recent.append(sample)
            rendering = decimal_string(sample, opts.target_digits)
            if rendering == run_render:
                run_length += 1
            else:
                run_render, run_length = rendering, 1
            if run_length >= opts.window and rendering != rejected_render:
                if _residual_ok(target, sample, opts.target_digits):
                    if successive_check is not None:
                        _check_successive(family, successive_check, sample, opts)
                    return RootEstimate(
                        sample,
                        opts.target_digits,
                        steps,
                        RootStatus.CONVERGED,
                        shift_used,
                        ESTIMATOR_CROSS,
                        family.peak_bits,
                    )
                # A settled rendering that is not a root: remember it so the
                # residual is not re-evaluated every step, and keep going
                # until the tie detector or the budget speaks.
                rejected_render = rendering
            if len(recent) == 2 * TIE_SPAN:
                samples = list(recent)
                older, newer = samples[:TIE_SPAN], samples[TIE_SPAN:]
                if max(newer) - min(newer) >= max(older) - min(older):
                    # no digit of the root is actually known in a tie: a
                    # stalled-but-rejected constant would otherwise report
                    # perfect agreement
                    return RootEstimate(
                        sample,
                        0,
                        steps,
                        RootStatus.TIE_DETECTED,
                        shift_used,
                        ESTIMATOR_CROSS,
                        family.peak_bits,
                    )
        if steps >= limit:
            return RootEstimate(
                last if last is not None else Fraction(0),
                _agreement(last, prev),
                steps,
                RootStatus.MAX_ITERS_EXCEEDED,
                shift_used,
                ESTIMATOR_CROSS,
                family.peak_bits,
            )
        family.step()
        steps += 1
        if all(c == 0 for c in family.current):
            return RootEstimate(
                Fraction(0),
                0,
                steps,
                RootStatus.DEGENERATE_SEED,
                shift_used,
                ESTIMATOR_CROSS,
                family.peak_bits,
            )


def _retrying(
    build: Callable[[Optional[tuple[int, ...]]], SequenceFamily],
    target: MonicIntPolynomial,
    shift_used: AffineShift,
    opts: DriverOptions,
    *,
    budget: Optional[int] = None,
    successive_check: Optional[AffineShift] = None,
) -> RootEstimate:
    """Run with the default seed, once more with all-ones on collapse."""
    est = _iterate_family(
        build(None),
        target,
        shift_used,
        opts,
        budget=budget,
        successive_check=successive_check,
    )
    if est.status is not RootStatus.DEGENERATE_SEED:
        return est
    ones = (1,) * target.degree
    return _iterate_family(
        build(ones),
        target,
        shift_used,
        opts,
        budget=budget,
        successive_check=successive_check,
    )


def dominant_root(
    p: MonicIntPolynomial, opts: DriverOptions = DEFAULT_OPTIONS
) -> RootEstimate:
    """Estimate the root of strictly largest absolute value.

    Reports TieDetected when no such root exists (equal-modulus pair), and
    MaxItersExceeded when the budget runs out first.
    """
    if p.degree == 1:
        return _linear_root(p, IDENTITY_SHIFT, opts)

    def build(seed: Optional[tuple[int, ...]]) -> SequenceFamily:
        return init_family(p, seed, normalized=opts.normalized)

    return _retrying(build, p, IDENTITY_SHIFT, opts)


def root_via_shift(
    p: MonicIntPolynomial, s: AffineShift, opts: DriverOptions = DEFAULT_OPTIONS
) -> RootEstimate:
    """Estimate the root of ``p`` whose image ``a + b*r`` dominates.

    The family iterates the shifted matrix, so cross ratios converge
    straight to the original root; the step-over-step ratio is used as an
    independent consistency check at acceptance (it must approach
    ``a + b*value``), which requires exact stepping, so this path ignores
    ``opts.normalized``.
    """
    if p.degree == 1:
        return _linear_root(p, s, opts)

    def build(seed: Optional[tuple[int, ...]]) -> SequenceFamily:
        return shifted_family(p, s, seed, normalized=False)

    return _retrying(build, p, s, opts, successive_check=s)


# -- enumeration --------------------------------------------------------------


def _dedupe_tol(opts: DriverOptions) -> Fraction:
    return Fraction(1, 10 ** max(1, opts.target_digits - 2))


def _probe(
    q: MonicIntPolynomial, a: int, opts: DriverOptions
) -> Optional[RootEstimate]:
    """Dominant-root run under shift (a, 1); None unless it converged."""
    shift = AffineShift(a, 1)

    def build(seed: Optional[tuple[int, ...]]) -> SequenceFamily:
        return shifted_family(q, shift, seed, normalized=opts.normalized)

    est = _retrying(build, q, shift, opts, budget=PROBE_BUDGET)
    return est if est.status is RootStatus.CONVERGED else None


def _grid_phase(q: MonicIntPolynomial, opts: DriverOptions) -> list[RootEstimate]:
    """Shift grid over the root bound, then one refinement pass between
    adjacent shifts whose estimates disagree."""
    bound = cauchy_bound(q)
    tol = _dedupe_tol(opts)
    tried: dict[int, Optional[RootEstimate]] = {}
    for a in (-2 * bound, -bound, 0, bound, 2 * bound):
        tried[a] = _probe(q, a, opts)
    grid = sorted(tried)
    refine = []
    for lo, hi in zip(grid, grid[1:]):
        left, right = tried[lo], tried[hi]
        if (
            left is not None
            and right is not None
            and abs(left.value - right.value) >= tol
        ):
            mid = (lo + hi) // 2
            if mid not in tried:
                refine.append(mid)
    for a in refine:
        tried[a] = _probe(q, a, opts)
    return [est for est in tried.values() if est is not None]


def _scan_signs(
    q: MonicIntPolynomial, bound: int, cells: int
) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Exact sign sweep over [-bound, bound]: roots hit head-on and
    sign-change brackets."""
    exact: list[Fraction] = []
    brackets: list[tuple[Fraction, Fraction]] = []
    prev_x = Fraction(-bound)
    prev_s = _sign(eval_rational(q, prev_x))
    if prev_s == 0:
        exact.append(prev_x)
    for k in range(1, cells + 1):
        x = Fraction(-bound) + Fraction(2 * bound * k, cells)
        s = _sign(eval_rational(q, x))
        if s == 0:
            exact.append(x)
        elif prev_s * s < 0:
            brackets.append((prev_x, x))
        prev_x, prev_s = x, s
    return exact, brackets


def _stable_brackets(
    q: MonicIntPolynomial, bound: int
) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Refine the sweep until the count of located roots stops changing
    (close pairs need finer cells to separate)."""
    cells = GRID_START
    prev_total: Optional[int] = None
    while True:
        exact, brackets = _scan_signs(q, bound, cells)
        total = len(exact) + len(brackets)
        if total >= q.degree or total == prev_total or cells >= GRID_LIMIT:
            return exact, brackets
        prev_total = total
        cells *= 2


def _extract_bracket(
    q: MonicIntPolynomial,
    lo: Fraction,
    hi: Fraction,
    opts: DriverOptions,
) -> Optional[RootEstimate]:
    """Pull the root out of a sign-change bracket with exact arithmetic.

    Bisection tightens the bracket; recentring at the midpoint c = u/v and
    reversing coefficients produces a polynomial whose dominant root is
    K / (v*r - u) for the root r nearest c (K its constant term), so the
    standard iteration applies and the estimate maps back exactly.  A tie
    (c equidistant from two roots) tightens further and retries.
    """
    s_lo = _sign(eval_rational(q, lo))
    spent = 0
    for _ in range(BRACKET_ROUNDS):
        for _ in range(BISECT_STEPS):
            mid = (lo + hi) / 2
            s = _sign(eval_rational(q, mid))
            if s == 0:
                return _exact_estimate(mid, opts, iterations=spent)
            if s == s_lo:
                lo = mid
            else:
                hi = mid
        center = (lo + hi) / 2
        u, v = center.numerator, center.denominator
        recentred = shift_scale(q, AffineShift(-u, v))
        if recentred.constant_term == 0:
            return _exact_estimate(center, opts, iterations=spent)
        reversed_poly = reversed_monic(recentred)
        scale = recentred.constant_term

        def build(seed: Optional[tuple[int, ...]]) -> SequenceFamily:
            return init_family(reversed_poly, seed, normalized=opts.normalized)

        est = _retrying(
            build, reversed_poly, IDENTITY_SHIFT, opts, budget=EXTRACT_BUDGET
        )
        spent += est.iterations
        if est.status is RootStatus.CONVERGED and est.value != 0:
            root = (u + Fraction(scale) / est.value) / v
            if lo < root < hi and _residual_ok(q, root, opts.target_digits):
                return RootEstimate(
                    root,
                    opts.target_digits,
                    spent,
                    RootStatus.CONVERGED,
                    IDENTITY_SHIFT,
                    ESTIMATOR_CROSS,
                    est.peak_bits,
                )
    return None


def _bracket_phase(
    q: MonicIntPolynomial, opts: DriverOptions, have: list[RootEstimate]
) -> list[RootEstimate]:
    bound = cauchy_bound(q)
    exact_nodes, brackets = _stable_brackets(q, bound)
    tol = _dedupe_tol(opts)
    found = list(have)
    out: list[RootEstimate] = []

    def known(value: Fraction) -> bool:
        return any(abs(value - e.value) < tol for e in found)

    for node in exact_nodes:
        if not known(node):
            est = _exact_estimate(node, opts)
            out.append(est)
            found.append(est)
    for lo, hi in brackets:
        if any(lo < e.value < hi for e in found):
            continue
        est = _extract_bracket(q, lo, hi, opts)
        if est is not None and not known(est.value):
            out.append(est)
            found.append(est)
    return out


def _sign_change_near(
    q: MonicIntPolynomial, r: Fraction, target_digits: int
) -> bool:
    """Exact roots pass outright; otherwise a sign change of ``q`` must show
    up in one of a few shrinking brackets around ``r``."""
    if eval_rational(q, r) == 0:
        return True
    for k in sorted({4, max(1, target_digits // 2), max(1, target_digits - 2)}):
        d = Fraction(1, 10**k)
        a = eval_rational(q, r - d)
        b = eval_rational(q, r + d)
        if a == 0 or b == 0 or _sign(a) != _sign(b):
            return True
    return False


def _verify_and_dedupe(
    q: Optional[MonicIntPolynomial],
    estimates: list[RootEstimate],
    opts: DriverOptions,
) -> list[RootEstimate]:
    kept: list[RootEstimate] = []
    for est in estimates:
        if est.estimator == ESTIMATOR_EXACT or est.estimator == ESTIMATOR_SUCCESSIVE:
            kept.append(est)
        elif (
            q is not None
            and _residual_ok(q, est.value, opts.target_digits)
            and _sign_change_near(q, est.value, opts.target_digits)
        ):
            kept.append(est)
    kept.sort(key=lambda e: e.value)
    tol = _dedupe_tol(opts)
    out: list[RootEstimate] = []
    for est in kept:
        if out and abs(est.value - out[-1].value) < tol:
            if _prefer(est, out[-1]):
                out[-1] = est
            continue
        out.append(est)
    return out


def _prefer(new: RootEstimate, old: RootEstimate) -> bool:
    if (new.estimator == ESTIMATOR_EXACT) != (old.estimator == ESTIMATOR_EXACT):
        return new.estimator == ESTIMATOR_EXACT
    return new.iterations < old.iterations


def enumerate_real_roots(
    p: MonicIntPolynomial, opts: DriverOptions = DEFAULT_OPTIONS
) -> list[RootEstimate]:
    """Every verified real root of ``p``, ascending; may be empty.

    Zero roots are deflated exactly first.  The shift grid picks up the
    extreme real roots; sign-change brackets with the reversal transform
    recover interior ones.  Each candidate must pass the exact residual
    test and show a sign change nearby before it is reported.  Shifts that
    end in a tie or run out of budget are skipped silently.
    """
    estimates: list[RootEstimate] = []
    q: Optional[MonicIntPolynomial] = p
    zero_roots = 0
    while q is not None and q.constant_term == 0:
        q = None if q.degree == 1 else deflate_zero_root(q)
        zero_roots += 1
    if zero_roots:
        estimates.append(_exact_estimate(Fraction(0), opts))
    if q is not None:
        if q.degree == 1:
            estimates.append(_linear_root(q, IDENTITY_SHIFT, opts))
        else:
            estimates.extend(_grid_phase(q, opts))
            estimates.extend(_bracket_phase(q, opts, estimates))
    return _verify_and_dedupe(q, estimates, opts)

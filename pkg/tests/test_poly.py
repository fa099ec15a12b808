"""Polynomial construction, evaluation, and integer substitutions."""

from fractions import Fraction

import pytest

from seqroots import (
    AffineShift,
    DegreeTooSmallError,
    EmptyInputError,
    IDENTITY_SHIFT,
    MAX_DEGREE,
    MonicIntPolynomial,
    NotMonicError,
    NoZeroRootError,
    cauchy_bound,
    deflate_zero_root,
    eval_rational,
    make_polynomial,
    reversed_monic,
    shift_scale,
)


class TestMakePolynomial:
    def test_full_list_with_leading_one(self):
        p = make_polynomial([1, 2, -1])
        assert p.degree == 2
        assert p.coeffs == (2, -1)
        assert p.with_leading() == (1, 2, -1)
        assert p.constant_term == -1

    def test_tail_only(self):
        p = make_polynomial([2, -1], includes_leading=False)
        assert p.with_leading() == (1, 2, -1)

    def test_rejects_non_monic(self):
        with pytest.raises(NotMonicError):
            make_polynomial([2, 1])

    def test_rejects_degree_zero(self):
        with pytest.raises(EmptyInputError):
            make_polynomial([1])
        with pytest.raises(EmptyInputError):
            make_polynomial([], includes_leading=False)

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            make_polynomial([1, 2.5, 1])

    def test_rejects_degree_above_cap(self):
        with pytest.raises(ValueError):
            MonicIntPolynomial((0,) * (MAX_DEGREE + 1))

    def test_str_is_readable(self):
        assert "x" in str(make_polynomial([1, 2, -1]))


class TestEvalRational:
    def test_integer_point(self):
        p = make_polynomial([1, 2, -1])
        assert eval_rational(p, 2) == Fraction(7)

    def test_rational_point_is_exact(self):
        p = make_polynomial([1, 0, 0, -2])
        x = Fraction(536171481, 425559582)
        assert eval_rational(p, x) == x**3 - 2

    def test_root_gives_zero(self):
        p = make_polynomial([1, -3, 2])
        assert eval_rational(p, 1) == 0
        assert eval_rational(p, 2) == 0


class TestAffineShift:
    def test_rejects_zero_scale(self):
        with pytest.raises(ValueError):
            AffineShift(1, 0)

    def test_identity(self):
        assert IDENTITY_SHIFT.is_identity
        assert not AffineShift(2, 1).is_identity
        assert not AffineShift(0, 2).is_identity

    def test_apply(self):
        s = AffineShift(2, 3)
        assert s.apply(Fraction(1, 2)) == Fraction(7, 2)


class TestShiftScale:
    def test_known_quadratic(self):
        p = make_polynomial([1, 2, -1])
        q = shift_scale(p, AffineShift(2, 1))
        assert q.with_leading() == (1, -2, -1)

    def test_known_cubic(self):
        p = make_polynomial([1, 0, 0, -2])
        q = shift_scale(p, AffineShift(1, 1))
        assert q.with_leading() == (1, -3, 3, -3)

    def test_identity_shift_is_noop(self):
        p = make_polynomial([1, 4, -3, 7])
        assert shift_scale(p, IDENTITY_SHIFT) == p

    def test_scale_only(self):
        p = make_polynomial([1, 0, -1])  # roots 1, -1
        q = shift_scale(p, AffineShift(0, 2))  # roots 2, -2
        assert q.with_leading() == (1, 0, -4)

    def test_root_mapping_is_exact(self):
        # a rational root r of p maps to a + b*r as a root of the image
        p = make_polynomial([1, -3, 2])  # roots 1, 2
        s = AffineShift(-4, 3)
        q = shift_scale(p, s)
        for r in (1, 2):
            assert eval_rational(q, s.apply(r)) == 0

    def test_composition_round_trip(self):
        p = make_polynomial([1, 5, -2, 9])
        s = AffineShift(3, 1)
        back = AffineShift(-3, 1)
        assert shift_scale(shift_scale(p, s), back) == p


class TestDeflateZeroRoot:
    def test_divides_out_x(self):
        p = make_polynomial([1, 0, -1, 0])  # x^3 - x
        assert deflate_zero_root(p).with_leading() == (1, 0, -1)

    def test_requires_zero_constant(self):
        with pytest.raises(NoZeroRootError):
            deflate_zero_root(make_polynomial([1, 2, -1]))

    def test_requires_degree_two(self):
        with pytest.raises(DegreeTooSmallError):
            deflate_zero_root(make_polynomial([1, 0]))


class TestReversedMonic:
    def test_known_cubic(self):
        p = make_polynomial([1, 0, 0, -2])
        assert reversed_monic(p).with_leading() == (1, 0, 0, 4)

    def test_roots_invert_exactly(self):
        # roots r of p map to a_m / r; rational example (x-2)(x-3)
        p = make_polynomial([1, -5, 6])
        q = reversed_monic(p)
        for r in (2, 3):
            assert eval_rational(q, Fraction(6, r)) == 0

    def test_rejects_zero_constant(self):
        with pytest.raises(ValueError):
            reversed_monic(make_polynomial([1, 1, 0]))


class TestCauchyBound:
    def test_value(self):
        assert cauchy_bound(make_polynomial([1, 2, -1])) == 3
        assert cauchy_bound(make_polynomial([1, 0, 0, -2])) == 3

    def test_bounds_every_root(self, corpus):
        for entry in corpus[:25]:
            bound = cauchy_bound(entry.poly)
            assert all(abs(z) < bound for z in entry.roots.roots)

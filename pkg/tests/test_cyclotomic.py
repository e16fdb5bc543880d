"""Exact root-of-unity sums: ring operations and evaluation."""

import cmath

import pytest

from terw import MixedRootOrdersError, RootSum


def test_exponent_addition():
    i = RootSum.root(4, 1)
    sq = i * i
    assert sq == RootSum.root(4, 2)
    assert abs(sq.eval_complex() + 1) < 1e-12


def test_primitive_third_roots_sum_to_minus_one():
    v = RootSum.root(3, 1) + RootSum.root(3, 2)
    assert abs(v.eval_complex() + 1.0) < 1e-12
    assert v.is_integer() == -1


def test_conjugate_negates_exponent():
    assert RootSum.root(8, 3).conjugate() == RootSum.root(8, 5)


def test_fold_and_prune():
    v = RootSum(6, {1: 2, 7: -2})  # 7 = 1 mod 6, cancels
    assert v.is_zero_exact()
    assert not v


def test_add_sub_scale():
    a = RootSum(12, {0: 1, 3: 2})
    b = RootSum(12, {3: -2, 5: 1})
    assert (a + b).sorted_terms() == [(0, 1), (5, 1)]
    assert (a - a).is_zero_exact()
    assert (3 * a).sorted_terms() == [(0, 3), (3, 6)]
    assert (-a).sorted_terms() == [(0, -1), (3, -2)]


def test_multiplication_distributes():
    a = RootSum(10, {1: 1, 3: -2})
    b = RootSum(10, {2: 4, 0: 1})
    lhs = (a * b).eval_complex()
    rhs = a.eval_complex() * b.eval_complex()
    assert abs(lhs - rhs) < 1e-12


def test_mixed_orders_rejected():
    with pytest.raises(MixedRootOrdersError):
        RootSum.root(4, 1) + RootSum.root(8, 1)
    with pytest.raises(MixedRootOrdersError):
        RootSum.root(4, 1) * RootSum.root(8, 1)


def test_is_integer_tolerance():
    nearly_two = RootSum(5, {0: 2})
    assert nearly_two.is_integer() == 2
    golden = RootSum(5, {1: 1, 4: 1})  # 2 cos(72 deg), irrational
    assert golden.is_integer() is None


def test_conjugate_matches_complex_conjugate():
    v = RootSum(7, {1: 2, 3: -1, 6: 4})
    assert abs(v.conjugate().eval_complex() - v.eval_complex().conjugate()) < 1e-12


def test_eval_matches_direct_formula():
    v = RootSum(12, {5: 3})
    assert abs(v.eval_complex() - 3 * cmath.exp(2j * cmath.pi * 5 / 12)) < 1e-12

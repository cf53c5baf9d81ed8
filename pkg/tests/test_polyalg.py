from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from multisym.polyalg import (ONE, ZERO, HbarSeries, Polynomial, add, apply_permutation,
                              mul, neg, partial_derivative, series_mul, substitute_point, x, y)
from strategies import abstract_vars, point_vars, polynomials, small_rationals


def X_(i, j):
    return Polynomial.var(x(i, j))


def Y_(j):
    return Polynomial.var(y(j))


# examples ------------------------------------------------------------------

def test_add_examples():
    assert add(X_(1, 1), -X_(1, 1)) == ZERO
    assert add(X_(1, 1) * X_(1, 2), X_(1, 1) * X_(1, 2)) == X_(1, 1) * X_(1, 2) * 2
    assert add(Y_(1) + Y_(2), Y_(2)) == Y_(1) + Y_(2) * 2


def test_mul_examples():
    assert mul(Y_(1) + Y_(2), Y_(1) - Y_(2)) == Y_(1) ** 2 - Y_(2) ** 2
    f = X_(1, 1) * 3 + Y_(2)
    assert mul(f, ONE) == f
    s = X_(1, 1) + X_(2, 1)
    assert mul(s, s) == X_(1, 1) ** 2 + X_(1, 1) * X_(2, 1) * 2 + X_(2, 1) ** 2


def test_substitute_point_examples():
    q = Y_(1) * Y_(2) * Y_(3)
    assert substitute_point(q, 1) == X_(1, 1) * X_(1, 2) * X_(1, 3)
    assert substitute_point(q, 2) == X_(2, 1) * X_(2, 2) * X_(2, 3)
    assert substitute_point(ONE, 5) == ONE


def test_substitute_point_rejects_point_variables():
    with pytest.raises(ValueError):
        substitute_point(X_(1, 1), 2)


def test_partial_derivative_examples():
    assert partial_derivative(X_(1, 1) ** 2 * X_(1, 2), x(1, 1)) == X_(1, 1) * X_(1, 2) * 2
    assert partial_derivative(X_(1, 1), x(2, 1)) == ZERO
    assert partial_derivative(Y_(1) * Y_(2) + Y_(1), y(1)) == Y_(2) + 1


def test_series_mul_examples():
    h = HbarSeries.hbar(2)
    a = HbarSeries({0: ONE, 1: X_(1, 1)}, 2)
    b = HbarSeries({0: ONE, 1: -X_(1, 1)}, 2)
    assert series_mul(a, b) == HbarSeries({0: ONE}, 2)
    # at order 3 the hbar^2 term survives
    assert series_mul(HbarSeries(a.coeffs, 3), HbarSeries(b.coeffs, 3)) == \
        HbarSeries({0: ONE, 2: -X_(1, 1) ** 2})
    F = HbarSeries({0: X_(1, 2), 1: Y_(1)})
    assert series_mul(F, HbarSeries.lift(ONE)) == F
    assert series_mul(h, h).is_zero()


def test_apply_permutation_examples():
    f = X_(1, 1) * X_(2, 2)
    assert apply_permutation(f, (2, 1)) == X_(2, 1) * X_(1, 2)
    s = X_(1, 1) + X_(2, 1)
    assert apply_permutation(s, (2, 1)) == s
    assert apply_permutation(f, (1, 2)) == f


def test_canonical_terms_are_sorted_graded_lex():
    f = Y_(1) + X_(1, 1) ** 2 + X_(1, 1) * X_(1, 2) + Polynomial.const(3)
    degrees = [sum(e for _, e in m) for m, _ in f.terms]
    assert degrees == sorted(degrees, reverse=True)
    assert f.terms[-1] == ((), Fraction(3))
    # insertion order does not matter
    g = Polynomial.const(3) + X_(1, 1) * X_(1, 2) + Y_(1) + X_(1, 1) ** 2
    assert f.terms == g.terms
    assert str(f) == str(g)


def test_abstract_variables_sort_before_point_variables():
    f = X_(1, 1) + Y_(5)
    assert f.variables() == [y(5), x(1, 1)]


def test_hbar_series_drops_degrees_at_or_above_order():
    F = HbarSeries({0: ONE, 1: ONE, 2: ONE}, 2)
    assert F.degrees() == [0, 1]
    assert F.truncate(1).degrees() == [0]


# properties ----------------------------------------------------------------

VARS = abstract_vars(2) + point_vars(2, 2)
polys = polynomials(VARS)


@given(polys, polys, polys)
@settings(max_examples=150, deadline=None)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + ZERO == f and f * ONE == f
    assert f + neg(f) == ZERO


@given(polys, polys)
@settings(max_examples=100, deadline=None)
def test_canonical_form_uniqueness(f, g):
    assert (add(f, neg(g)) == ZERO) == (f.terms == g.terms)


@given(polynomials(abstract_vars(3)), polynomials(abstract_vars(3)), st.integers(1, 4))
@settings(max_examples=100, deadline=None)
def test_substitute_point_is_a_ring_homomorphism(q1, q2, i):
    assert substitute_point(q1 * q2, i) == substitute_point(q1, i) * substitute_point(q2, i)
    assert substitute_point(q1 + q2, i) == substitute_point(q1, i) + substitute_point(q2, i)


def _compose(s, t):
    "(s o t)(i) = s(t(i)) in image-list form."
    return tuple(s[t[i] - 1] for i in range(len(t)))


@given(polynomials(point_vars(3, 2)), polynomials(point_vars(3, 2)),
       st.permutations((1, 2, 3)), st.permutations((1, 2, 3)))
@settings(max_examples=100, deadline=None)
def test_permutation_is_an_automorphism_and_group_action(f, g, s, t):
    s, t = tuple(s), tuple(t)
    assert apply_permutation(f * g, s) == apply_permutation(f, s) * apply_permutation(g, s)
    assert apply_permutation(f + g, s) == apply_permutation(f, s) + apply_permutation(g, s)
    assert apply_permutation(f, _compose(s, t)) == apply_permutation(apply_permutation(f, t), s)


def series(max_deg=4):
    return st.dictionaries(st.integers(0, max_deg), polynomials(point_vars(2, 1), max_terms=2),
                           max_size=4)


@given(series(), series(), st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=100, deadline=None)
def test_series_mul_truncation_consistency(a, b, M, M2):
    lo, hi = min(M, M2), max(M, M2)
    full = series_mul(HbarSeries(a, hi), HbarSeries(b, hi)).truncate(lo)
    assert full == series_mul(HbarSeries(a, lo), HbarSeries(b, lo))
    # Cauchy rule against the unbounded product
    assert full == series_mul(HbarSeries(a), HbarSeries(b)).truncate(lo)


@given(small_rationals, small_rationals)
def test_constants_multiply_as_rationals(a, b):
    assert (Polynomial.const(a) * Polynomial.const(b)).const_value() == a * b


def test_all_permutations_fix_a_symmetric_polynomial():
    f = sum((X_(i, 1) * X_(i, 2) for i in (1, 2, 3)), ZERO)
    assert all(apply_permutation(f, s) == f for s in permutations((1, 2, 3)))

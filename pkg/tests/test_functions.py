from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from multisym.functions import (ESum, ESymbol, classical_product, elementary_product_count,
                                expand_elementary, expand_homogeneous, expand_vaccarino,
                                monomial_reduction, power_sum, staircase_product,
                                symmetrization_factor, symmetrize)
from multisym.polyalg import ONE, ZERO, Polynomial, apply_permutation, substitute_point
from strategies import abstract_polys, index_tuple


def Y(*exps):
    "Abstract monomial y1^e1 y2^e2 ... as a polynomial."
    return Polynomial.monomial(tuple(((0, j + 1), e) for j, e in enumerate(exps) if e))


def X(*pairs):
    "Product of point variables given as (i, j) pairs (repeats allowed)."
    out = ONE
    for i, j in pairs:
        out = out * Polynomial.var((i, j))
    return out


def xs(spec):
    "Polynomial from a compact spec such as '13 14 21 22 + 21 22 33 34'."
    out = ZERO
    for term in spec.split("+"):
        out = out + X(*[(int(t[0]), int(t[1])) for t in term.split()])
    return out


# oracles -------------------------------------------------------------------

def t_var(l):
    # auxiliary generating-function variables live in the abstract slots
    return (0, l + 1)


def generating_function_coefficient(p, alpha, n):
    """Coefficient of t^alpha in prod_i (1 + sum_l p_l(i) t_l)."""
    gf = ONE
    for i in range(1, n + 1):
        factor = ONE
        for l, q in enumerate(p):
            factor = factor + substitute_point(q, i) * Polynomial.var(t_var(l))
        gf = gf * factor
    want = tuple((t_var(l), k) for l, k in enumerate(alpha) if k)
    out = {}
    for m, c in gf.items():
        tpart = tuple(t for t in m if t[0][0] == 0)
        if tpart == want:
            rest = tuple(t for t in m if t[0][0] != 0)
            out[rest] = c
    return Polynomial(out)


def geometric_series_coefficient(k, n):
    """Coefficient of t^k in prod_i (1 - sum_j x_ij t_j)^(-1), by truncated
    geometric expansion."""
    K = sum(k)
    gf = ONE
    for i in range(1, n + 1):
        s = ZERO
        for j in range(len(k)):
            s = s + Polynomial.var((i, j + 1)) * Polynomial.var(t_var(j))
        factor, power = ONE, ONE
        for _ in range(K):
            power = power * s
            factor = factor + power
        gf = gf * factor
    want = tuple((t_var(j), e) for j, e in enumerate(k) if e)
    return Polynomial({tuple(t for t in m if t[0][0] != 0): c for m, c in gf.items()
                       if tuple(t for t in m if t[0][0] == 0) == want})


def invariant(f, n):
    return all(apply_permutation(f, s) == f for s in permutations(range(1, n + 1)))


# expand_elementary ----------------------------------------------------------

def test_elementary_examples():
    assert expand_elementary((1,), 2, 1) == xs("11 + 21")
    assert expand_elementary((2,), 2, 1) == xs("11 21")
    assert expand_elementary((1, 1), 2, 2) == xs("11 22 + 21 12")


@pytest.mark.parametrize("alpha,n", [((1,), 3), ((1, 1), 3), ((2, 1), 4), ((1, 1, 1), 4), ((0, 2), 3)])
def test_elementary_monomial_count_and_unit_coefficients(alpha, n):
    f = expand_elementary(alpha, n)
    expected = factorial(n) // (prod(factorial(a) for a in alpha) * factorial(n - sum(alpha)))
    assert len(f) == expected
    assert all(c == 1 for _, c in f.items())
    assert invariant(f, n)


def test_elementary_rejects_oversized_index():
    with pytest.raises(ValueError):
        expand_elementary((2, 1), 2)


# expand_vaccarino -----------------------------------------------------------

def test_vaccarino_two_block_example():
    p = (Y(1, 1), Y(0, 0, 1, 1))
    assert expand_vaccarino(p, (1, 1), 3) == xs(
        "13 14 21 22 + 21 22 33 34 + 23 24 31 32 + 11 12 33 34 + 13 14 31 32 + 11 12 23 24")
    assert expand_vaccarino(p, (2, 1), 3) == xs(
        "11 12 21 22 33 34 + 11 12 23 24 31 32 + 13 14 21 22 31 32")


def test_vaccarino_empty_index_is_one():
    assert expand_vaccarino((Y(1), Y(0, 1)), (0, 0), 3) == ONE


def test_vaccarino_rejects_oversized_index():
    with pytest.raises(ValueError):
        expand_vaccarino((Y(1),), (3,), 2)


@given(st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_vaccarino_matches_generating_function(n, data):
    a = data.draw(st.integers(1, 3))
    p = tuple(data.draw(abstract_polys(d=2, max_deg=2)) for _ in range(a))
    alpha = data.draw(index_tuple(a, n))
    assert expand_vaccarino(p, alpha, n) == generating_function_coefficient(p, alpha, n)


# expand_homogeneous and power sums -------------------------------------------

def test_homogeneous_examples():
    assert expand_homogeneous((1,), 2, 1) == xs("11 + 21")
    assert expand_homogeneous((2,), 2, 1) == xs("11 11 + 11 21 + 21 21")
    assert expand_homogeneous((1, 1), 1, 2) == xs("11 12") * 2


@pytest.mark.parametrize("k,n", [((2,), 3), ((3,), 2), ((1, 1), 2), ((2, 1), 2), ((1, 2), 3), ((0, 2), 2)])
def test_homogeneous_matches_geometric_series(k, n):
    assert expand_homogeneous(k, n) == geometric_series_coefficient(k, n)


def test_power_sum_examples():
    assert power_sum(Y(1), 3) == xs("11 + 21 + 31")
    assert power_sum(Y(1, 1), 2) == xs("11 12 + 21 22")
    m = Y(2, 0, 1)
    assert power_sum(m, 3) == expand_vaccarino((m,), (1,), 3)


def test_power_sum_rejects_constants():
    with pytest.raises(ValueError):
        power_sum(ONE, 2)


# symmetrization -------------------------------------------------------------

def test_symmetrize_examples():
    assert symmetrize(ONE, 3) == Polynomial.const(6)
    assert symmetrize(X((1, 1)), 2) == xs("11 + 21")
    assert symmetrize(X((1, 1), (2, 1)), 2) == xs("11 21") * 2


@given(st.integers(1, 4), st.data())
@settings(max_examples=40, deadline=None)
def test_symmetrization_factor_identity(n, data):
    a = data.draw(st.integers(1, 3))
    p = tuple(data.draw(abstract_polys(d=2, max_deg=2)) for _ in range(a))
    alpha = data.draw(index_tuple(a, n))
    lhs = symmetrize(staircase_product(p, alpha), n)
    assert lhs == expand_vaccarino(p, alpha, n) * symmetrization_factor(alpha, n)


# monomial reduction -----------------------------------------------------------

def test_monomial_reduction_examples():
    m, pairs = monomial_reduction((Y(1) * 2,), (1,))
    assert m == (Y(1),) and pairs == [((1,), 2)]
    m, pairs = monomial_reduction((Y(1) + Y(0, 1),), (1,))
    assert set(m) == {Y(1), Y(0, 1)}
    assert sorted(pairs) == [((0, 1), 1), ((1, 0), 1)]
    _, pairs = monomial_reduction((Y(1) * 3, Y(0, 1)), (2, 1))
    assert pairs == [((2, 1), 9)]


def test_monomial_reduction_rejects_oversized_index():
    with pytest.raises(ValueError):
        monomial_reduction((Y(1),), (3,), n=2)


@given(st.integers(1, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_monomial_reduction_identity(n, data):
    a = data.draw(st.integers(1, 2))
    p = tuple(data.draw(abstract_polys(d=2, max_deg=2, max_terms=3)) for _ in range(a))
    alpha = data.draw(index_tuple(a, n))
    m, pairs = monomial_reduction(p, alpha, n)
    total = ZERO
    for beta, c in pairs:
        total = total + expand_vaccarino(m, beta, n) * c
    assert total == expand_vaccarino(p, alpha, n)


# classical product -------------------------------------------------------------

def test_classical_product_three_term_example():
    p = (Y(1, 1), Y(1))
    q = (Y(1, 1), Y(0, 0, 1))
    got = classical_product(p, (1, 1), q, (2, 1), 3)
    expected = [
        ESymbol((1, 1, 1), (Y(0, 0, 1), Y(2, 2), Y(2, 1))),
        ESymbol((1, 1, 1), (Y(1, 1), Y(1, 1, 1), Y(2, 1))),
        ESymbol((1, 1, 1), (Y(1, 1), Y(2, 2), Y(1, 0, 1))),
    ]
    assert list(got) == expected
    direct = expand_vaccarino(p, (1, 1), 3) * expand_vaccarino(q, (2, 1), 3)
    assert got.expand(3)[0] == direct


def test_classical_product_single_point():
    got = classical_product((Y(1),), (1,), (Y(1),), (1,), 1)
    assert list(got) == [ESymbol((1,), (Y(2),))]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_classical_product_square_of_e1(n):
    got = classical_product((Y(1),), (1,), (Y(1),), (1,), n)
    assert got.same_symbols(ESum([ESymbol((1,), (Y(2),)), ESymbol((1, 1), (Y(1), Y(1)))]))
    s = power_sum(Y(1), n)
    assert got.expand(n)[0] == s * s


@given(st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_classical_product_matches_direct_product(n, data):
    a = data.draw(st.integers(1, 3))
    b = data.draw(st.integers(1, 3))
    p = tuple(data.draw(abstract_polys(d=2, max_deg=2, max_terms=1)) for _ in range(a))
    q = tuple(data.draw(abstract_polys(d=2, max_deg=2, max_terms=1)) for _ in range(b))
    alpha = data.draw(index_tuple(a, n))
    beta = data.draw(index_tuple(b, n))
    lhs = classical_product(p, alpha, q, beta, n).expand(n)[0]
    rhs = expand_vaccarino(p, alpha, n) * expand_vaccarino(q, beta, n)
    assert lhs == rhs


@given(st.integers(1, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_expansions_are_invariant(n, data):
    a = data.draw(st.integers(1, 2))
    p = tuple(data.draw(abstract_polys(d=2, max_deg=3)) for _ in range(a))
    alpha = data.draw(index_tuple(a, n))
    assert invariant(expand_vaccarino(p, alpha, n), n)


def test_expansion_invariant_exhaustively_at_four_points():
    f = expand_vaccarino((Y(1, 2), Y(2), Y(0, 1) + Y(1)), (1, 1, 1), 4)
    assert invariant(f, 4)
    g = expand_homogeneous((2, 1), 4)
    assert invariant(g, 4)


# elementary_product_count -----------------------------------------------------

def test_elementary_product_count_examples():
    assert elementary_product_count([(1,)], [(1,)]) == 1
    assert elementary_product_count([(1,), (1,)], [(1,), (1,)]) == 2
    assert elementary_product_count([(1,), (1,)], [(1,), (0,)]) == 0


def test_elementary_product_count_dimension_mismatch():
    with pytest.raises(ValueError):
        elementary_product_count([(1, 0)], [(1,)])


def _exponent_matrix(m, n, d):
    a = [[0] * d for _ in range(n)]
    for (i, j), e in m:
        a[i - 1][j - 1] = e
    return a


@pytest.mark.parametrize("alphas,n", [
    ([(1,), (1,)], 2), ([(2,), (1,)], 3), ([(1, 1), (1, 0)], 2), ([(1, 1), (0, 2)], 3),
    ([(1, 0, 1), (1, 1, 0)], 3), ([(2, 1), (1, 1)], 3), ([(1,), (3,)], 3),
])
def test_elementary_product_count_is_product_coefficient(alphas, n):
    d = len(alphas[0])
    f = ONE
    for al in alphas:
        f = f * expand_elementary(al, n, d)
    for m, c in f.items():
        assert elementary_product_count(alphas, _exponent_matrix(m, n, d)) == c
    # everything piled on one coordinate of one point
    k = sum(map(sum, alphas))
    piled = [[0] * d for _ in range(n)]
    piled[0][0] = k
    assert elementary_product_count(alphas, piled) == f.coeff((((1, 1), k),))
    # degree mismatch
    piled[0][0] = k + 1
    assert elementary_product_count(alphas, piled) == 0


# ESymbol / ESum normalisation -------------------------------------------------

def test_esymbol_drops_zero_parts_and_keeps_constant_arguments():
    s = ESymbol((1, 0, 2), (Y(1), Y(0, 1), ONE))
    assert s.index == (1, 2)
    assert s.args == (Y(1), ONE)
    assert s.to_str() == "e[1,2](y1, 1)"


def test_esymbol_equality_ignores_argument_order():
    assert ESymbol((1, 2), (Y(1), Y(0, 1))) == ESymbol((2, 1), (Y(0, 1), Y(1)))


def test_esum_equality_is_by_expansion():
    # e_(1,1)(y, y) = 2 e_2(y) although the symbols differ
    a = ESum([ESymbol((1, 1), (Y(1), Y(1)))])
    b = ESum([ESymbol((2,), (Y(1),), 2)])
    assert not a.same_symbols(b)
    assert a.equals(b, 3)


def test_esum_truncate_and_collect():
    s = ESum([ESymbol((1,), (Y(1),), 1, 0), ESymbol((1,), (Y(1),), 2, 0),
              ESymbol((1,), (Y(1),), 1, 2)])
    assert len(s.truncate(2)) == 2
    collected = s.collected()
    assert collected[0].coeff == 3 and collected[0].hbar == 0
    assert collected[1].hbar == 2
    assert ESum([ESymbol((1,), (Y(1),), Fraction(0))]).expand(2).is_zero()


def test_classical_product_skips_zero_index_parts():
    # alpha_l = 0 rows are allowed and normalised away
    got = classical_product((Y(1), Y(0, 1)), (1, 0), (Y(1),), (1,), 2)
    direct = expand_vaccarino((Y(1),), (1,), 2) * expand_vaccarino((Y(1),), (1,), 2)
    assert got.expand(2)[0] == direct
    assert all(len(t.index) == len(t.args) for t in got)

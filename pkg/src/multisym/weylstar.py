"""
Star products on n copies of the canonical phase plane, the quantum product
of Vaccarino functions, and Poisson brackets.

Single-point functions are polynomials in the abstract pair (x, y) = (y_1, y_2).
On n points, x_i is the point variable x_{i1} and y_i is x_{i2}.
"""

from dataclasses import dataclass, field
from math import comb, perm

from .functions import ESum, ESymbol, expand_vaccarino
from .margins import enumerate_Q
from .polyalg import (ZERO, HbarSeries, Polynomial, partial_derivative,
                      series_mul, split_by_point, substitute_point)

X = (0, 1)
Y = (0, 2)


def px(i):
    "x_i on the n-fold phase space."
    return (i, 1)


def py(i):
    "y_i on the n-fold phase space."
    return (i, 2)


def weyl_Bk(c, d, f, g, k):
    """The hbar^k term of (x^c y^d) * (x^f y^g) in the Weyl algebra.

    Returns ``(coefficient, (x_exponent, y_exponent))``; the coefficient is
    binomial(d, k) * f (f-1) ... (f-k+1) and vanishes for k > min(d, f).
    """
    if k < 0 or k > min(d, f):
        return 0, (max(c + f - k, 0), max(d + g - k, 0))
    return comb(d, k) * perm(f, k), (c + f - k, d + g - k)


def _xy_exponents(m):
    c = d = 0
    for v, e in m:
        if v == X:
            c = e
        elif v == Y:
            d = e
        else:
            raise ValueError("single-point phase monomials may only use x and y")
    return c, d


def _xy_monomial(c, d):
    return tuple(t for t in ((X, c), (Y, d)) if t[1])


class BilinearFamily:
    """An indexed family k -> B_k of bilinear operations on single-point
    polynomials, read as  f * g = sum_k B_k(f, g) hbar^k.

    Subclasses implement ``monomial_terms`` (the family on a pair of
    monomials) and ``monomial_max_order``.
    """

    def monomial_terms(self, mf, mg):
        "{k: Polynomial} for a pair of abstract monomials."
        raise NotImplementedError

    def monomial_max_order(self, mf, mg):
        raise NotImplementedError

    def max_order(self, f, g):
        "Largest k for which B_k(f, g) can be nonzero."
        return max((self.monomial_max_order(mf, mg) for mf, _ in f.items() for mg, _ in g.items()),
                   default=0)

    def B(self, k, f, g):
        out = ZERO
        for mf, cf in f.items():
            for mg, cg in g.items():
                t = self.monomial_terms(mf, mg).get(k)
                if t is not None:
                    out = out + t * (cf * cg)
        return out

    def series(self, f, g, order=None):
        "sum_k B_k(f, g) hbar^k for single-point polynomials."
        acc = {}
        for mf, cf in f.items():
            for mg, cg in g.items():
                for k, t in self.monomial_terms(mf, mg).items():
                    acc[k] = acc.get(k, ZERO) + t * (cf * cg)
        return HbarSeries(acc, order)


class WeylFamily(BilinearFamily):
    """Normal-ordered product of the Weyl algebra with yx - xy = hbar."""

    def __init__(self):
        self._cache = {}

    def monomial_terms(self, mf, mg):
        key = (mf, mg)
        hit = self._cache.get(key)
        if hit is None:
            c, d = _xy_exponents(mf)
            f, g = _xy_exponents(mg)
            hit = {}
            for k in range(min(d, f) + 1):
                coeff, (ex, ey) = weyl_Bk(c, d, f, g, k)
                hit[k] = Polynomial.monomial(_xy_monomial(ex, ey), coeff)
            self._cache[key] = hit
        return hit

    def monomial_max_order(self, mf, mg):
        _, d = _xy_exponents(mf)
        f, _ = _xy_exponents(mg)
        return min(d, f)


WEYL = WeylFamily()


@dataclass(frozen=True)
class PhaseContext:
    """n points in the phase plane.

    ``sign`` fixes the bracket convention {x, y} = sign.  The normal-ordered
    Weyl family satisfies  f*g - g*f = {f, g} hbar + O(hbar^2)  for sign = -1.
    """

    n: int
    sign: int = 1
    family: BilinearFamily = field(default=WEYL, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


# ---------------------------------------------------------------------------
# star product

def _check_phase_points(f):
    for v in f.variables():
        if v[0] == 0:
            raise ValueError("star expects point variables; found abstract variable y%d" % v[1])
        if v[1] not in (1, 2):
            raise ValueError("phase-space points have coordinates x (1) and y (2) only")


def _star_poly(f, g, order, family):
    _check_phase_points(f)
    _check_phase_points(g)
    acc = {}
    for mf, cf in f.items():
        sf = split_by_point(mf)
        for mg, cg in g.items():
            sg = split_by_point(mg)
            term = HbarSeries({0: Polynomial.const(cf * cg)}, order)
            for i in sorted(set(sf) | set(sg)):
                local = family.monomial_terms(sf.get(i, ()), sg.get(i, ()))
                factor = HbarSeries({k: substitute_point(t, i) for k, t in local.items()}, order)
                term = series_mul(term, factor)
                if term.is_zero():
                    break
            for k, p in term.coeffs.items():
                acc[k] = acc.get(k, ZERO) + p
    return HbarSeries(acc, order)


def star(F, G, order=None, family=WEYL):
    """F * G for series over the point variables; truncated at ``order``.

    Distinct points commute, so on monomials the product factors over points.
    """
    F = HbarSeries.lift(F)
    G = HbarSeries.lift(G)
    if order is None:
        order = F._order_with(G)
    elif F._order_with(G) is not None:
        order = min(order, F._order_with(G))
    acc = {}
    for a, fa in F.coeffs.items():
        for b, gb in G.coeffs.items():
            if order is not None and a + b >= order:
                continue
            inner = None if order is None else order - a - b
            for k, p in _star_poly(fa, gb, inner, family).coeffs.items():
                acc[a + b + k] = acc.get(a + b + k, ZERO) + p
    return HbarSeries(acc, order)


def commutator(F, G, order=None, family=WEYL):
    return star(F, G, order, family) - star(G, F, order, family)


# ---------------------------------------------------------------------------
# Poisson brackets

def poisson_bracket(f, g, ctx):
    """sign * sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i)."""
    _check_phase_points(f)
    _check_phase_points(g)
    out = ZERO
    for i in range(1, ctx.n + 1):
        out = out + (partial_derivative(f, px(i)) * partial_derivative(g, py(i))
                     - partial_derivative(f, py(i)) * partial_derivative(g, px(i)))
    return out * ctx.sign


def bivector_bracket(f, g, bivector):
    """{f, g} = sum alpha_ij df/dv_i dg/dv_j for a polynomial bivector.

    ``bivector`` maps variable pairs (v_i, v_j) to polynomials; only one of
    each antisymmetric pair needs to be given.
    """
    full = {}
    for (u, v), a in bivector.items():
        if not isinstance(a, Polynomial):
            a = Polynomial.const(a)
        full[(u, v)] = full.get((u, v), ZERO) + a
        if (v, u) not in bivector:
            full[(v, u)] = full.get((v, u), ZERO) - a
    out = ZERO
    for (u, v), a in full.items():
        out = out + a * partial_derivative(f, u) * partial_derivative(g, v)
    return out


def lie_poisson_bivector(structure, n):
    """Bivector on (g*)^n: {x_ki, x_lj} = delta_kl sum_m c^m_ij x_km.

    ``structure[(i, j)]`` is {m: c^m_ij} for i < j (1-based coordinates).
    """
    out = {}
    for k in range(1, n + 1):
        for (i, j), consts in structure.items():
            out[((k, i), (k, j))] = sum(
                (Polynomial.var((k, m)) * c for m, c in consts.items()), ZERO)
    return out


# ---------------------------------------------------------------------------
# quantum product of Vaccarino functions

def _check_xy(p):
    for v in p.variables():
        if v not in (X, Y):
            raise ValueError("phase arguments may only use the two abstract variables x, y")


def _B_table(p, q, kmax, family):
    return {(l, r, k): family.B(k, p[l], q[r])
            for l in range(len(p)) for r in range(len(q)) for k in range(kmax + 1)}


def quantum_kmax(p, q, family=WEYL, order=None):
    "Largest slice index that can carry a nonzero B_k(p_l, q_r)."
    kmax = max((family.max_order(pl, qr) for pl in p for qr in q), default=0)
    if order is not None:
        kmax = min(kmax, max(order - 1, 0))
    return kmax


def quantum_product(p, alpha, q, beta, ctx, order=None):
    """e_alpha(p) * e_beta(q) as sum_m sum_{gamma in Q(alpha, beta, n, m)} e_gamma(B(p, q)) hbar^m.

    Arguments of each symbol are p_1..p_a, q_1..q_b, then for each (l, r)
    the column B_0(p_l, q_r), B_1(p_l, q_r), ...; ``order`` drops hbar^m for
    m >= order.
    """
    p, q, alpha, beta = tuple(p), tuple(q), tuple(alpha), tuple(beta)
    if len(p) != len(alpha) or len(q) != len(beta):
        raise ValueError("index length does not match argument count")
    for f in p + q:
        _check_xy(f)
    n = ctx.n
    if sum(alpha) > n or sum(beta) > n:
        raise ValueError("|alpha| and |beta| must be <= n")
    if any(v < 0 for v in alpha + beta):
        raise ValueError("index parts must be nonnegative")
    family = ctx.family
    a, b = len(p), len(q)
    kmax = quantum_kmax(p, q, family, order)
    table = _B_table(p, q, kmax, family)
    cells = [(l, r, k) for l in range(a) for r in range(b) for k in range(kmax + 1)]
    args = p + q + tuple(table[c] for c in cells)
    top = n * kmax if order is None else min(n * kmax, order - 1)
    terms = []
    for m in range(top + 1):
        for g in enumerate_Q(alpha, beta, n, m, kmax):
            index = ([g.get(l, 0, 0) for l in range(1, a + 1)]
                     + [g.get(0, r, 0) for r in range(1, b + 1)]
                     + [g.get(l + 1, r + 1, k) for l, r, k in cells])
            terms.append(ESymbol(index, args, 1, m))
    return ESum(terms)


def bracket_esum(p, alpha, q, beta, ctx):
    "2 * sum over Q(alpha, beta, n, 1) of e_gamma(B(p, q)), with no hbar."
    hbar1 = [t for t in quantum_product(p, alpha, q, beta, ctx, order=2) if t.hbar == 1]
    return ESum(ESymbol(t.index, t.args, 2 * t.coeff, 0) for t in hbar1)


def bracket_report(p, alpha, q, beta, ctx):
    """Compare ``bracket_esum`` with the Poisson bracket of the expansions.

    ``ratio`` is the rational r with esum = r * bracket when one exists
    (None if the two are not proportional or the bracket vanishes).
    """
    es = bracket_esum(p, alpha, q, beta, ctx)
    lhs = es.expand(ctx.n)[0]
    rhs = poisson_bracket(expand_vaccarino(p, alpha, ctx.n),
                          expand_vaccarino(q, beta, ctx.n), ctx)
    ratio = None
    if rhs:
        m, c = rhs.terms[0]
        r = lhs.coeff(m) / c
        if lhs == rhs * r:
            ratio = r
    return {"esum": es, "esum_expansion": lhs, "bracket": rhs, "ratio": ratio}


def expand_phase(p, alpha, n):
    "Expanded e_alpha(p) as a series with no hbar terms."
    return HbarSeries.lift(expand_vaccarino(p, alpha, n))


__all__ = [
    "BilinearFamily", "PhaseContext", "WEYL", "WeylFamily", "X", "Y",
    "bivector_bracket", "bracket_esum", "bracket_report", "commutator",
    "expand_phase", "lie_poisson_bivector", "poisson_bracket", "px", "py",
    "quantum_kmax", "quantum_product", "star", "weyl_Bk",
]

"""
Multi-symmetric functions: elementary, homogeneous, power sums and the
Vaccarino functions e_alpha(p) of a tuple of polynomials, plus the classical
product of two Vaccarino functions.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod

from .margins import enumerate_L
from .polyalg import (ONE, ZERO, HbarSeries, Polynomial, apply_permutation,
                      is_point, mono_degree, substitute_point, y)


def _check_abstract(p):
    for v in p.variables():
        if is_point(v):
            raise ValueError("argument polynomials must use abstract variables y_j only")


def _check_index(alpha, n):
    if any(a < 0 for a in alpha):
        raise ValueError("index parts must be nonnegative: %r" % (tuple(alpha),))
    if sum(alpha) > n:
        raise ValueError("|alpha| = %d exceeds n = %d" % (sum(alpha), n))


def expand_vaccarino(p, alpha, n):
    """Expand e_alpha(p) as a polynomial in the point variables.

    Sum over tuples (c_1, ..., c_a) of pairwise disjoint subsets of [n] with
    |c_l| = alpha_l of prod_l prod_{i in c_l} p_l(i).
    """
    p, alpha = tuple(p), tuple(alpha)
    if len(p) != len(alpha):
        raise ValueError("index length %d does not match %d arguments" % (len(alpha), len(p)))
    _check_index(alpha, n)
    for q in p:
        _check_abstract(q)
    # p_l(i) for every l, i
    at = [[substitute_point(q, i) for i in range(1, n + 1)] for q in p]
    slots = [l for l, k in enumerate(alpha) if k]

    def rec(s, free, acc):
        if s == len(slots):
            return acc
        l = slots[s]
        total = ZERO
        for chosen in combinations(free, alpha[l]):
            term = acc
            for i in chosen:
                term = term * at[l][i]
            if not term:
                continue
            rest = tuple(i for i in free if i not in chosen)
            total = total + rec(s + 1, rest, term)
        return total

    return rec(0, tuple(range(n)), ONE)


def expand_elementary(alpha, n, d=None):
    "e_alpha for alpha in N^d: the Vaccarino function of (y_1, ..., y_d)."
    alpha = tuple(alpha)
    d = len(alpha) if d is None else d
    if len(alpha) != d:
        raise ValueError("alpha must have length d = %d" % d)
    return expand_vaccarino([Polynomial.var(y(j)) for j in range(1, d + 1)], alpha, n)


def _multinomial(v):
    return factorial(sum(v)) // prod(factorial(e) for e in v)


def expand_homogeneous(k, n, d=None):
    """h_k: sum over (v_1..v_n) in (N^d)^n with sum v_i = k of
    prod_i multinomial(|v_i|; v_i) x_i^{v_i}."""
    k = tuple(k)
    d = len(k) if d is None else d
    if len(k) != d:
        raise ValueError("k must have length d = %d" % d)
    if any(e < 0 for e in k):
        raise ValueError("k must be nonnegative")
    out = {}

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    # per coordinate j choose how k_j is spread across the n points
    for split in _product_of_lists(compositions(kj, n) for kj in k):
        coeff = 1
        mono = []
        for i in range(n):
            v = tuple(split[j][i] for j in range(d))
            coeff *= _multinomial(v)
            mono.extend(((i + 1, j + 1), e) for j, e in enumerate(v) if e)
        m = tuple(sorted(mono))
        out[m] = out.get(m, 0) + coeff
    return Polynomial(out)


def _product_of_lists(iterables):
    return product(*[list(it) for it in iterables])


def power_sum(m, n):
    "e_1(m) = m(1) + ... + m(n) for a non-constant abstract monomial m."
    if not isinstance(m, Polynomial):
        m = Polynomial.monomial(m)
    if len(m) != 1 or m.is_const():
        raise ValueError("power_sum needs a single non-constant monomial, got %s" % m)
    _check_abstract(m)
    total = ZERO
    for i in range(1, n + 1):
        total = total + substitute_point(m, i)
    return total


def symmetrize(f, n):
    "Sum of f o sigma over all sigma in S_n (unnormalized)."
    total = ZERO
    for sigma in permutations(range(1, n + 1)):
        total = total + apply_permutation(f, sigma)
    return total


def staircase_product(p, alpha):
    """p_1(1)...p_1(alpha_1) p_2(alpha_1 + 1)... : each p_l on its own run of points."""
    out = ONE
    i = 1
    for q, k in zip(p, alpha):
        for _ in range(k):
            out = out * substitute_point(q, i)
            i += 1
    return out


def symmetrization_factor(alpha, n):
    "(prod alpha_l!) (n - |alpha|)!: symmetrize(staircase) / e_alpha(p)."
    return prod(factorial(k) for k in alpha) * factorial(n - sum(alpha))


def monomial_reduction(p, alpha, n=None):
    """Rewrite e_alpha(p) over the monomials of the p_l.

    Returns ``(m, pairs)`` where ``m`` lists the monomials of p_1, then of p_2,
    ... (each as a unit-coefficient polynomial), and ``pairs`` holds every
    (beta, c^beta) with r(beta) = alpha, so that
    e_alpha(p) = sum c^beta e_beta(m).
    """
    p, alpha = tuple(p), tuple(alpha)
    if len(p) != len(alpha):
        raise ValueError("index length does not match argument count")
    if n is not None:
        _check_index(alpha, n)
    blocks = []
    for q in p:
        _check_abstract(q)
        blocks.append(list(q.terms))
    m = tuple(Polynomial.monomial(mono) for block in blocks for mono, _ in block)

    def spread(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in spread(total - first, parts - 1):
                yield (first,) + rest

    pairs = []
    for split in _product_of_lists(spread(a, len(block)) for a, block in zip(alpha, blocks)):
        beta = tuple(v for part in split for v in part)
        c = Fraction(1)
        for part, block in zip(split, blocks):
            for v, (_, coeff) in zip(part, block):
                c *= coeff ** v
        pairs.append((beta, c))
    return m, pairs


def elementary_product_count(alphas, a):
    """Number of 0/1 arrays A[i][j][l] (i over factors, j over points, l over
    coordinates) with sum_i A = a[j][l], sum_l A <= 1 and sum_j A = alphas[i][l].

    Equals the coefficient of x^a in prod_i e_{alphas[i]}.
    """
    alphas = [tuple(al) for al in alphas]
    a = [tuple(row) for row in a]
    if not a:
        raise ValueError("a must have at least one row")
    d = len(a[0])
    if any(len(row) != d for row in a) or any(len(al) != d for al in alphas):
        raise ValueError("dimension mismatch: every alpha and every row of a needs length %d" % d)
    n = len(a)
    for al in alphas:
        _check_index(al, n)
    if sum(map(sum, a)) != sum(map(sum, alphas)):
        return 0

    @lru_cache(maxsize=None)
    def points(j, rem):
        # rem: remaining per-factor per-coordinate counts
        if j == n:
            return 1 if all(not any(r) for r in rem) else 0
        total = 0
        for new in _assign(rem, a[j]):
            total += points(j + 1, new)
        return total

    return points(0, tuple(alphas))


def _assign(rem, need):
    """Ways for one point: each factor i picks at most one coordinate l, and
    coordinate l is picked by exactly need[l] factors."""
    m = len(rem)
    d = len(need)
    out = []

    def rec(i, left, acc):
        if i == m:
            if not any(left):
                out.append(tuple(acc))
            return
        if sum(left) > m - i:
            return
        rec(i + 1, left, acc + [rem[i]])
        for l in range(d):
            if left[l] and rem[i][l]:
                row = list(rem[i])
                row[l] -= 1
                nl = list(left)
                nl[l] -= 1
                rec(i + 1, tuple(nl), acc + [tuple(row)])

    rec(0, tuple(need), [])
    return out


# ---------------------------------------------------------------------------
# formal sums of e-symbols

class ESymbol:
    """coeff * e_index(args) * hbar^hbar.

    Index parts equal to 0 are dropped together with their argument.
    """

    __slots__ = ("index", "args", "coeff", "hbar")

    def __init__(self, index, args, coeff=1, hbar=0):
        index, args = tuple(index), tuple(args)
        if len(index) != len(args):
            raise ValueError("index length %d does not match %d arguments"
                             % (len(index), len(args)))
        if hbar < 0:
            raise ValueError("hbar degree must be >= 0")
        kept = [(k, q) for k, q in zip(index, args) if k]
        self.index = tuple(k for k, _ in kept)
        self.args = tuple(q if isinstance(q, Polynomial) else Polynomial.const(q)
                          for _, q in kept)
        self.coeff = Fraction(coeff)
        self.hbar = hbar

    def is_zero(self):
        return not self.coeff or any(q.is_zero() for q in self.args)

    def expand(self, n):
        return expand_vaccarino(self.args, self.index, n) * self.coeff

    def canonical(self):
        "Argument/index pairs in a fixed order; e_gamma is symmetric under joint permutation."
        pairs = sorted(zip(self.index, self.args), key=lambda t: (t[0], str(t[1])))
        return (self.hbar, tuple(k for k, _ in pairs), tuple(q for _, q in pairs))

    def scaled(self, c=1, shift=0):
        return ESymbol(self.index, self.args, self.coeff * c, self.hbar + shift)

    def __eq__(self, other):
        if not isinstance(other, ESymbol):
            return NotImplemented
        return self.canonical() == other.canonical() and self.coeff == other.coeff

    def __hash__(self):
        return hash((self.canonical(), self.coeff))

    def to_str(self, name=None):
        idx = ",".join(map(str, self.index))
        body = "e[%s](%s)" % (idx, ", ".join(q.to_str(name) for q in self.args))
        if not self.index:
            body = "1"
        if self.coeff != 1:
            body = "%s*%s" % (self.coeff, body) if self.index else str(self.coeff)
        if self.hbar == 1:
            body += "*hbar"
        elif self.hbar > 1:
            body += "*hbar^%d" % self.hbar
        return body

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "ESymbol(%s)" % self


class ESum:
    """A formal linear combination of e-symbols.

    Two ESums are equal as functions iff their expansions agree; use
    ``expand(n)`` / ``equals(other, n)`` for that.  ``same_symbols`` compares
    the presentations.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = tuple(t for t in terms if not t.is_zero())

    def __add__(self, other):
        return ESum(self.terms + other.terms)

    def __neg__(self):
        return ESum(t.scaled(-1) for t in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c=1, shift=0):
        return ESum(t.scaled(c, shift) for t in self.terms)

    def truncate(self, order):
        if order is None:
            return self
        return ESum(t for t in self.terms if t.hbar < order)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def expand(self, n, order=None):
        by_degree = {}
        for t in self.terms:
            by_degree[t.hbar] = by_degree.get(t.hbar, ZERO) + t.expand(n)
        return HbarSeries(by_degree, order)

    def equals(self, other, n):
        return self.expand(n) == other.expand(n)

    def collected(self):
        "Merge symbols with identical canonical form; drop cancellations."
        acc = {}
        for t in self.terms:
            key = t.canonical()
            acc[key] = acc.get(key, 0) + t.coeff
        out = []
        for (h, idx, args), c in acc.items():
            if c:
                out.append(ESymbol(idx, args, c, h))
        out.sort(key=lambda t: (t.hbar, t.index, tuple(str(q) for q in t.args)))
        return out

    def same_symbols(self, other):
        return self.collected() == other.collected()

    def to_str(self, name=None):
        if not self.terms:
            return "0"
        return " + ".join(t.to_str(name) for t in self.terms)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "ESum(%s)" % self


def classical_product(p, alpha, q, beta, n):
    """e_alpha(p) e_beta(q) as a sum of e_gamma(p, q, pq) over gamma in L(alpha, beta, n).

    Arguments are ordered p_1..p_a, q_1..q_b, p_1q_1..p_1q_b, ..., p_aq_1..p_aq_b
    and gamma is flattened in the same order.
    """
    p, q, alpha, beta = tuple(p), tuple(q), tuple(alpha), tuple(beta)
    if len(p) != len(alpha) or len(q) != len(beta):
        raise ValueError("index length does not match argument count")
    _check_index(alpha, n)
    _check_index(beta, n)
    for f in p + q:
        _check_abstract(f)
    a, b = len(p), len(q)
    args = p + q + tuple(p[l] * q[r] for l in range(a) for r in range(b))
    terms = []
    for g in enumerate_L(alpha, beta, n):
        index = ([g[l][0] for l in range(1, a + 1)]
                 + [g[0][r] for r in range(1, b + 1)]
                 + [g[l][r] for l in range(1, a + 1) for r in range(1, b + 1)])
        terms.append(ESymbol(index, args))
    return ESum(terms)


def mono_profile(m, d):
    "Multidegree of an abstract monomial as a length-d tuple."
    out = [0] * d
    for (_, j), e in m:
        out[j - 1] += e
    return tuple(out)


__all__ = [
    "ESum", "ESymbol", "classical_product", "elementary_product_count",
    "expand_elementary", "expand_homogeneous", "expand_vaccarino",
    "monomial_reduction", "power_sum", "staircase_product", "symmetrization_factor",
    "symmetrize", "mono_degree", "mono_profile",
]

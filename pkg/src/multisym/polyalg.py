"""
Exact multivariate polynomials over the rationals, and truncated series in hbar.

Variables are pairs ``(i, j)``.  ``i == 0`` is an abstract coordinate ``y_j``;
``i >= 1`` is the point variable ``x_{ij}`` (coordinate ``j`` of point ``i``).
Tuple order on pairs therefore puts every abstract variable before every
point variable, and point variables are ordered lexicographically by (i, j).

A monomial is a tuple of ``(var, exponent)`` pairs sorted by variable, with no
zero exponents.  Terms of a polynomial are ordered by graded lex order,
largest first.
"""

from fractions import Fraction
from itertools import product as cartesian


def y(j):
    "Abstract coordinate y_j."
    return (0, j)


def x(i, j):
    "Point variable x_{ij}."
    assert i >= 1
    return (i, j)


def is_point(v):
    return v[0] >= 1


# ---------------------------------------------------------------------------
# monomials

ONE_MONO = ()


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m):
    return sum(e for _, e in m)


def mono_key(m):
    # graded lex: at the first variable where exponents differ, the larger
    # exponent wins; smaller variables are more significant.
    return (mono_degree(m), tuple((-v[0], -v[1], e) for v, e in m))


def mono_from_dict(d):
    return tuple(sorted((v, e) for v, e in d.items() if e))


def mono_str(m, name=None):
    name = name or var_name
    if not m:
        return "1"
    parts = []
    for v, e in m:
        s = name(v)
        if e != 1:
            s += "^%d" % e
        parts.append(s)
    return "*".join(parts)


def var_name(v):
    i, j = v
    if i == 0:
        return "y%d" % j
    return "x%d_%d" % (i, j)


def as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError("coefficient must be int, str or Fraction, got %r" % (c,))


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable polynomial with Fraction coefficients.

    Build one from a mapping ``{monomial: coefficient}``; zero coefficients
    are dropped.  ``terms`` is the canonical sorted representation.
    """

    __slots__ = ("_d", "_terms", "_hash")

    def __init__(self, data=None):
        d = {}
        if data:
            for m, c in dict(data).items():
                c = as_fraction(c)
                if c:
                    d[m] = c
        self._d = d
        self._terms = None
        self._hash = None

    @classmethod
    def _raw(cls, d):
        # d must already be clean: Fraction values, no zeros.
        p = cls.__new__(cls)
        p._d = d
        p._terms = None
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, v):
        return cls({((v, 1),): 1})

    @classmethod
    def monomial(cls, m, c=1):
        return cls({tuple(m): c})

    @property
    def terms(self):
        if self._terms is None:
            self._terms = tuple(sorted(
                self._d.items(), key=lambda t: mono_key(t[0]), reverse=True))
        return self._terms

    def items(self):
        return self._d.items()

    def coeff(self, m):
        return self._d.get(m, Fraction(0))

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def is_zero(self):
        return not self._d

    def is_const(self):
        return all(not m for m in self._d)

    def const_value(self):
        return self._d.get(ONE_MONO, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def variables(self):
        return sorted({v for m in self._d for v, _ in m})

    def degree(self):
        if not self._d:
            return -1
        return max(mono_degree(m) for m in self._d)

    def degree_in(self, v):
        return max((dict(m).get(v, 0) for m in self._d), default=0)

    # arithmetic ------------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        d = dict(self._d)
        for m, c in other._d.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._d.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            other = as_fraction(other)
            return Polynomial._raw({m: c * other for m, c in self._d.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        d = {}
        for (ma, ca), (mb, cb) in cartesian(self._d.items(), other._d.items()):
            m = mono_mul(ma, mb)
            d[m] = d.get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        assert isinstance(e, int) and e >= 0
        result = Polynomial.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def map_monomials(self, fn):
        "Apply ``fn`` to every monomial and re-collect coefficients."
        d = {}
        for m, c in self._d.items():
            m2 = fn(m)
            d[m2] = d.get(m2, 0) + c
        return Polynomial._raw({m: c for m, c in d.items() if c})

    def __str__(self):
        return self.to_str()

    def to_str(self, name=None):
        if not self._d:
            return "0"
        out = []
        for m, c in self.terms:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = mono_str(m, name)
            else:
                body = "%s*%s" % (a, mono_str(m, name))
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += " %s %s" % (sign, body)
        return s

    def __repr__(self):
        return "Polynomial(%s)" % self


ZERO = Polynomial()
ONE = Polynomial.const(1)


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def neg(f):
    return -f


def substitute_point(q, i):
    "Replace every y_j in ``q`` by x_{ij}."
    if i < 1:
        raise ValueError("point index must be >= 1, got %d" % i)
    for v in q.variables():
        if is_point(v):
            raise ValueError("substitute_point expects only abstract variables, "
                             "found %s" % var_name(v))
    return q.map_monomials(lambda m: tuple(((i, v[1]), e) for v, e in m))


def partial_derivative(f, v):
    d = {}
    for m, c in f.items():
        md = dict(m)
        e = md.get(v, 0)
        if not e:
            continue
        if e == 1:
            del md[v]
        else:
            md[v] = e - 1
        m2 = tuple(sorted(md.items()))
        d[m2] = d.get(m2, 0) + c * e
    return Polynomial._raw({m: c for m, c in d.items() if c})


def apply_permutation(f, sigma):
    """Replace each x_{ij} by x_{sigma(i) j}.

    ``sigma`` is a sequence of images: ``sigma[i-1]`` is sigma(i).
    """
    n = len(sigma)

    def move(m):
        out = []
        for (i, j), e in m:
            if i == 0:
                raise ValueError("apply_permutation expects point variables only")
            if i > n:
                raise ValueError("point index %d exceeds permutation size %d" % (i, n))
            out.append(((sigma[i - 1], j), e))
        return tuple(sorted(out))

    return f.map_monomials(move)


def split_by_point(m):
    "Group a monomial's factors by point index: {i: abstract monomial}."
    out = {}
    for (i, j), e in m:
        out.setdefault(i, []).append(((0, j), e))
    return {i: tuple(v) for i, v in out.items()}


# ---------------------------------------------------------------------------
# series in hbar

class HbarSeries:
    """Finitely supported series  sum_m coeffs[m] * hbar^m.

    ``order`` is the truncation order: degrees >= order are discarded.
    ``None`` means no truncation.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs=None, order=None):
        d = {}
        for m, p in (coeffs or {}).items():
            if not isinstance(p, Polynomial):
                p = Polynomial.const(p)
            if m < 0:
                raise ValueError("negative hbar degree")
            if order is not None and m >= order:
                continue
            if p:
                d[m] = p
        self.coeffs = d
        self.order = order

    @classmethod
    def lift(cls, p, order=None):
        if isinstance(p, HbarSeries):
            return p.truncate(order) if order is not None else p
        if not isinstance(p, Polynomial):
            p = Polynomial.const(p)
        return cls({0: p}, order)

    @classmethod
    def hbar(cls, order=None):
        return cls({1: ONE}, order)

    def __getitem__(self, m):
        return self.coeffs.get(m, ZERO)

    def degrees(self):
        return sorted(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def truncate(self, order):
        if order is None:
            return self
        if self.order is not None:
            order = min(order, self.order)
        return HbarSeries(self.coeffs, order)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            other = HbarSeries.lift(other)
        if not isinstance(other, HbarSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def _order_with(self, other):
        if self.order is None:
            return other.order
        if other.order is None:
            return self.order
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, HbarSeries):
            other = HbarSeries.lift(other)
        d = dict(self.coeffs)
        for m, p in other.coeffs.items():
            d[m] = d.get(m, ZERO) + p
        return HbarSeries(d, self._order_with(other))

    __radd__ = __add__

    def __neg__(self):
        return HbarSeries({m: -p for m, p in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        if not isinstance(other, HbarSeries):
            other = HbarSeries.lift(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HbarSeries({m: p * other for m, p in self.coeffs.items()}, self.order)
        if isinstance(other, Polynomial):
            other = HbarSeries.lift(other)
        if not isinstance(other, HbarSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def shift(self, k):
        "Multiply by hbar^k."
        return HbarSeries({m + k: p for m, p in self.coeffs.items()}, self.order)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in self.degrees():
            p = self.coeffs[m]
            if m == 0:
                parts.append("(%s)" % p)
            elif m == 1:
                parts.append("(%s)*hbar" % p)
            else:
                parts.append("(%s)*hbar^%d" % (p, m))
        return " + ".join(parts)

    def __repr__(self):
        return "HbarSeries(%s, order=%r)" % (self, self.order)


def series_mul(F, G):
    "Cauchy product in hbar; the result is truncated at the smaller order."
    order = F._order_with(G)
    d = {}
    for a, pa in F.coeffs.items():
        for b, pb in G.coeffs.items():
            if order is not None and a + b >= order:
                continue
            d[a + b] = d.get(a + b, ZERO) + pa * pb
    return HbarSeries(d, order)

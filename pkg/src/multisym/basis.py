"""
Coordinates of S_n-invariant polynomials in the basis of Vaccarino functions
e_alpha, alpha a finitely supported multiplicity map on non-constant
monomials with |alpha| <= n, and bounded-degree generation checks.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .functions import (expand_elementary, expand_homogeneous, expand_vaccarino,
                        mono_profile, power_sum)
from .polyalg import ONE, ZERO, HbarSeries, Polynomial, apply_permutation, mono_key, mono_str


class NotInvariantError(ValueError):
    pass


class NotGeneratedError(RuntimeError):
    pass


class Alpha:
    """A multiplicity map {monomial: count} on non-constant abstract monomials."""

    __slots__ = ("support",)

    def __init__(self, support):
        items = dict(support)
        for m, k in items.items():
            if not m or k <= 0:
                raise ValueError("keys must be non-constant monomials with positive counts")
        self.support = tuple(sorted(items.items(), key=lambda t: mono_key(t[0]), reverse=True))

    def size(self):
        return sum(k for _, k in self.support)

    def profile(self, d):
        out = [0] * d
        for m, k in self.support:
            for v, e in zip(range(d), mono_profile(m, d)):
                out[v] += e * k
        return tuple(out)

    def index(self):
        return tuple(k for _, k in self.support)

    def args(self):
        return tuple(Polynomial.monomial(m) for m, _ in self.support)

    def expand(self, n):
        return expand_vaccarino(self.args(), self.index(), n)

    def __eq__(self, other):
        return isinstance(other, Alpha) and self.support == other.support

    def __hash__(self):
        return hash(self.support)

    def to_str(self, name=None):
        if not self.support:
            return "1"
        return "e[%s](%s)" % (",".join(map(str, self.index())),
                              ", ".join(mono_str(m, name) for m, _ in self.support))

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "Alpha(%s)" % self


def monomials_below(profile):
    "Non-constant abstract monomials with exponent vector <= profile."
    out = []
    for exps in product(*(range(e + 1) for e in profile)):
        if any(exps):
            out.append(tuple(((0, j + 1), e) for j, e in enumerate(exps) if e))
    out.sort(key=mono_key, reverse=True)
    return out


def enumerate_alpha(profile, n, d=None):
    """Every alpha with |alpha| <= n whose e_alpha has the given multidegree."""
    profile = tuple(profile)
    if d is not None and len(profile) != d:
        raise ValueError("profile must have length d = %d" % d)
    d = len(profile)
    monos = monomials_below(profile)
    vecs = [mono_profile(m, d) for m in monos]
    out = []

    def rec(start, left, size, acc):
        if not any(left):
            out.append(Alpha(acc))
            return
        if size == n:
            return
        for t in range(start, len(monos)):
            v = vecs[t]
            if all(a <= b for a, b in zip(v, left)):
                m = monos[t]
                acc2 = dict(acc)
                acc2[m] = acc2.get(m, 0) + 1
                rec(t, tuple(b - a for a, b in zip(v, left)), size + 1, acc2)

    rec(0, profile, 0, {})
    return out


def point_profile(m, d):
    "Multidegree of a point monomial: total exponent per coordinate."
    out = [0] * d
    for (_, j), e in m:
        if j > d:
            raise ValueError("coordinate index %d exceeds d = %d" % (j, d))
        out[j - 1] += e
    return tuple(out)


def blocks(f, d):
    "Split f into multihomogeneous pieces {profile: Polynomial}."
    out = {}
    for m, c in f.items():
        out.setdefault(point_profile(m, d), {})[m] = c
    return {k: Polynomial(v) for k, v in out.items()}


def is_invariant(f, n):
    "Invariance under the adjacent transpositions, which generate S_n."
    for i in range(1, n):
        sigma = list(range(1, n + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        if apply_permutation(f, sigma) != f:
            return False
    return True


def _check_points(f, n):
    for i, _ in f.variables():
        if i == 0:
            raise ValueError("expected a polynomial in point variables")
        if i > n:
            raise ValueError("point index %d exceeds n = %d" % (i, n))


def _coordinates(target, columns):
    "Solve sum c_k columns[k] = target over the union of monomial supports."
    if not columns:
        return [] if target.is_zero() else None
    monos = sorted({m for col in columns for m, _ in col.items()} | {m for m, _ in target.items()},
                   key=mono_key)
    A = [[col.coeff(m) for col in columns] for m in monos]
    b = [target.coeff(m) for m in monos]
    return linalg.solve(A, b)


def decompose(f, n, d):
    """Coefficients {Alpha: Fraction} with f = sum c_alpha e_alpha."""
    _check_points(f, n)
    if not is_invariant(f, n):
        raise NotInvariantError("polynomial is not S_%d-invariant" % n)
    result = {}
    for prof, part in sorted(blocks(f, d).items()):
        alphas = enumerate_alpha(prof, n)
        cols = [al.expand(n) for al in alphas]
        sol = _coordinates(part, cols)
        if sol is None:
            raise AssertionError("no solution for invariant block %r; e_alpha failed to span" % (prof,))
        for al, c in zip(alphas, sol):
            if c:
                result[al] = c
    return result


def decompose_series(F, n, d):
    "Degreewise decomposition of a series: {hbar degree: {Alpha: c}}."
    F = HbarSeries.lift(F)
    return {m: decompose(F[m], n, d) for m in F.degrees()}


def recompose(coeffs, n):
    out = ZERO
    for al, c in coeffs.items():
        out = out + al.expand(n) * c
    return out


# ---------------------------------------------------------------------------
# generation at bounded degree

GENERATOR_SETS = ("elementary", "homogeneous", "power")


@dataclass
class Generator:
    label: str
    profile: tuple
    poly: Polynomial


def generators(kind, n, d):
    """The generator set of the given kind: e_k or h_k for 1 <= |k| <= n, or
    power sums e_1(m) for monomials m of degree 1..n."""
    out = []
    if kind in ("elementary", "homogeneous"):
        for k in product(range(n + 1), repeat=d):
            if 1 <= sum(k) <= n:
                if kind == "elementary":
                    out.append(Generator("e[%s]" % ",".join(map(str, k)), k, expand_elementary(k, n)))
                else:
                    out.append(Generator("h[%s]" % ",".join(map(str, k)), k, expand_homogeneous(k, n)))
    elif kind == "power":
        for m in monomials_below((n,) * d):
            if sum(e for _, e in m) <= n:
                out.append(Generator("p(%s)" % mono_str(m), mono_profile(m, d), power_sum(m, n)))
    else:
        raise ValueError("generator set must be one of %s" % (GENERATOR_SETS,))
    return out


def _products_with_profile(gens, profile):
    "Multisets (as index tuples) of generators whose profiles add up to ``profile``."
    out = []

    def rec(start, left, acc):
        if not any(left):
            out.append(tuple(acc))
            return
        for t in range(start, len(gens)):
            v = gens[t].profile
            if all(a <= b for a, b in zip(v, left)):
                rec(t, tuple(b - a for a, b in zip(v, left)), acc + [t])

    rec(0, tuple(profile), [])
    return out


@dataclass
class Certificate:
    """f written as a polynomial in generators: sum coeff * prod(labels)."""

    kind: str
    terms: list
    gens: dict

    def expand(self):
        out = ZERO
        for c, labels in self.terms:
            t = ONE
            for lab in labels:
                t = t * self.gens[lab]
            out = out + t * c
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for c, labels in self.terms:
            powers = []
            for lab in dict.fromkeys(labels):
                k = labels.count(lab)
                powers.append(lab if k == 1 else "%s^%d" % (lab, k))
            mon = "*".join(powers)
            a = abs(c)
            body = mon if (a == 1 and mon) else ("%s*%s" % (a, mon) if mon else str(a))
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def verify_generation(f, kind, n, d, degree_bound=None):
    """Express invariant f as a polynomial in the chosen generators.

    Each multidegree block is solved over all generator products of that
    multidegree.  Raises NotGeneratedError when no combination exists.
    """
    _check_points(f, n)
    if not is_invariant(f, n):
        raise NotInvariantError("polynomial is not S_%d-invariant" % n)
    gens = generators(kind, n, d)
    table = {g.label: g.poly for g in gens}
    terms = []
    for prof, part in sorted(blocks(f, d).items()):
        if degree_bound is not None and sum(prof) > degree_bound:
            raise ValueError("block of degree %d exceeds the bound %d" % (sum(prof), degree_bound))
        if not any(prof):
            terms.append((part.const_value(), ()))
            continue
        combos = _products_with_profile(gens, prof)
        cols = []
        for combo in combos:
            t = ONE
            for idx in combo:
                t = t * gens[idx].poly
            cols.append(t)
        sol = _coordinates(part, cols)
        if sol is None:
            raise NotGeneratedError("block %r is not reached by %s generators" % (prof, kind))
        for combo, c in zip(combos, sol):
            if c:
                terms.append((Fraction(c), tuple(gens[i].label for i in combo)))
    cert = Certificate(kind, terms, table)
    assert cert.expand() == f
    return cert

"""
Surface syntax for expressions over e/h/power-sum symbols.

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "@") factor)*        -- "*" and "@" don't mix
    factor := atom ("^" nat)?
    atom   := esym | hsym | psum | "hbar" | rational | "(" expr ")"
    esym   := "e" "[" nat ("," nat)* "]" "(" poly ("," poly)* ")"
    hsym   := "h" "[" nat ("," nat)* "]"
    psum   := "p" "(" poly ")"

``poly`` is an integer polynomial in y1..yd (general mode) or in x, y (phase
mode, where x = y1 and y = y2), with + - * ^ and parentheses.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .polyalg import Polynomial, mono_key

GENERAL = "general"
PHASE = "phase"


class ParseError(ValueError):
    def __init__(self, message, line, col, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        text = "%d:%d: %s" % (line, col, message)
        if self.expected:
            text += " (expected one of: %s)" % ", ".join(self.expected)
        super().__init__(text)


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class ESym(Node):
    index: tuple
    args: tuple
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class HSym(Node):
    index: tuple
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class PSum(Node):
    mono: Polynomial
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Hbar(Node):
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Num(Node):
    value: Fraction
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class BinOp(Node):
    left: Node
    right: Node
    span: tuple = field(default=None, compare=False)


class Add(BinOp):
    symbol = "+"


class Sub(BinOp):
    symbol = "-"


class Mul(BinOp):
    symbol = "*"


class Star(BinOp):
    symbol = "@"


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exp: int
    span: tuple = field(default=None, compare=False)


# ---------------------------------------------------------------------------
# tokens

TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[\[\](),+\-*@^/]))")


@dataclass
class Tok:
    kind: str      # "num", "name", "op", "end"
    text: str
    line: int
    col: int


def tokenize(src):
    toks = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", src)]

    def where(p):
        line = max(i for i, s in enumerate(line_starts) if s <= p)
        return line + 1, p - line_starts[line] + 1

    while True:
        m = TOKEN.match(src, pos)
        if not m or m.end() == pos:
            rest = src[pos:]
            if not rest.strip():
                line, col = where(len(src))
                toks.append(Tok("end", "", line, col))
                return toks
            skip = len(rest) - len(rest.lstrip())
            line, col = where(pos + skip)
            raise ParseError("unexpected character %r" % rest.lstrip()[0], line, col)
        kind = m.lastgroup
        start = m.start(kind)
        line, col = where(start)
        toks.append(Tok(kind, m.group(kind), line, col))
        pos = m.end()


# ---------------------------------------------------------------------------
# parser

class Parser:
    def __init__(self, src):
        self.toks = tokenize(src)
        self.i = 0
        self.mode = None

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, message, expected=(), tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col, expected)

    def at(self, *texts):
        return self.tok.kind in ("op", "name") and self.tok.text in texts

    def expect(self, text):
        if not self.at(text):
            got = self.tok.text or "end of input"
            raise self.error("expected %r, got %r" % (text, got), {repr(text)})
        t = self.tok
        self.i += 1
        return t

    def nat(self):
        if self.tok.kind != "num":
            raise self.error("expected a natural number", {"nat"})
        t = self.tok
        self.i += 1
        return int(t.text)

    def span_from(self, t):
        return (t.line, t.col)

    # expressions -----------------------------------------------------------

    def parse(self):
        e = self.expr()
        if self.tok.kind != "end":
            raise self.error("unexpected %r" % self.tok.text, {"'+'", "'-'", "'*'", "'@'", "end"})
        return e

    def expr(self):
        start = self.tok
        left = self.term()
        while self.at("+", "-"):
            op = self.tok.text
            self.i += 1
            right = self.term()
            cls = Add if op == "+" else Sub
            left = cls(left, right, self.span_from(start))
        return left

    def term(self):
        start = self.tok
        left = self.factor()
        used = None
        while self.at("*", "@"):
            op = self.tok.text
            if used is not None and op != used:
                raise self.error("'*' and '@' cannot be mixed without parentheses", {repr(used)})
            used = op
            self.i += 1
            right = self.factor()
            cls = Mul if op == "*" else Star
            left = cls(left, right, self.span_from(start))
        return left

    def factor(self):
        start = self.tok
        base = self.atom()
        if self.at("^"):
            self.i += 1
            return Pow(base, self.nat(), self.span_from(start))
        return base

    def atom(self):
        t = self.tok
        span = self.span_from(t)
        if t.kind == "name" and t.text == "e":
            self.i += 1
            index = self.index_list()
            if not self.at("("):
                raise self.error("e-symbol needs an argument list", {"'('"})
            self.i += 1
            args = [self.poly()]
            while self.at(","):
                self.i += 1
                args.append(self.poly())
            close = self.tok
            self.expect(")")
            if len(args) != len(index):
                raise ParseError("arity mismatch: index has %d parts but %d arguments given"
                                 % (len(index), len(args)), close.line, close.col)
            return ESym(tuple(index), tuple(args), span)
        if t.kind == "name" and t.text == "h":
            self.i += 1
            return HSym(tuple(self.index_list()), span)
        if t.kind == "name" and t.text == "p":
            self.i += 1
            self.expect("(")
            arg_tok = self.tok
            m = self.poly()
            self.expect(")")
            if len(m) != 1 or m.is_const() or m.terms[0][1] != 1:
                raise ParseError("p(...) takes a single non-constant monomial",
                                 arg_tok.line, arg_tok.col)
            return PSum(m, span)
        if t.kind == "name" and t.text == "hbar":
            self.i += 1
            return Hbar(span)
        if t.kind == "num":
            self.i += 1
            value = Fraction(int(t.text))
            if self.at("/"):
                self.i += 1
                den_tok = self.tok
                den = self.nat()
                if den == 0:
                    raise ParseError("zero denominator", den_tok.line, den_tok.col)
                value = Fraction(int(t.text), den)
            return Num(value, span)
        if self.at("("):
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        raise self.error("expected an expression, got %r" % (t.text or "end of input"),
                         {"'e'", "'h'", "'p'", "'hbar'", "rational", "'('"})

    def index_list(self):
        self.expect("[")
        parts = [self.nat()]
        while self.at(","):
            self.i += 1
            parts.append(self.nat())
        self.expect("]")
        return parts

    # polynomials -----------------------------------------------------------

    def poly(self):
        neg = False
        if self.at("-"):
            self.i += 1
            neg = True
        acc = self.pterm()
        if neg:
            acc = -acc
        while self.at("+", "-"):
            op = self.tok.text
            self.i += 1
            t = self.pterm()
            acc = acc + t if op == "+" else acc - t
        return acc

    def pterm(self):
        acc = self.pfactor()
        while self.at("*"):
            self.i += 1
            acc = acc * self.pfactor()
        return acc

    def pfactor(self):
        base = self.patom()
        if self.at("^"):
            self.i += 1
            return base ** self.nat()
        return base

    def patom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return Polynomial.const(int(t.text))
        if t.kind == "name":
            v = self._variable(t)
            self.i += 1
            return Polynomial.var(v)
        if self.at("("):
            self.i += 1
            p = self.poly()
            self.expect(")")
            return p
        raise self.error("expected a polynomial, got %r" % (t.text or "end of input"),
                         {"variable", "integer", "'('"})

    def _variable(self, t):
        name = t.text
        if name in ("x", "y"):
            mode, j = PHASE, 1 if name == "x" else 2
        else:
            m = re.fullmatch(r"y([1-9]\d*)", name)
            if not m:
                raise self.error("unknown variable %r" % name, {"y1..yd", "x", "y"})
            mode, j = GENERAL, int(m.group(1))
        if self.mode is None:
            self.mode = mode
        elif self.mode != mode:
            raise self.error("cannot mix x/y with y1..yd in one expression")
        return (0, j)


def parse(src):
    "Parse ``src`` into an AST."
    return Parser(src).parse()


def parse_with_mode(src):
    "Parse and also report the variable spelling used (phase, general or None)."
    p = Parser(src)
    e = p.parse()
    return e, p.mode


# ---------------------------------------------------------------------------
# printing

def abstract_name(mode):
    if mode == PHASE:
        return lambda v: "x" if v[1] == 1 else "y"
    return lambda v: "y%d" % v[1]


def format_poly(p, mode=GENERAL):
    "Print a polynomial in the surface syntax (integer coefficients)."
    name = abstract_name(mode)
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in sorted(p.items(), key=lambda t: mono_key(t[0]), reverse=True):
        factors = []
        for v, e in m:
            factors.append(name(v) if e == 1 else "%s^%d" % (name(v), e))
        a = abs(c)
        if not factors:
            body = str(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(a)] + factors)
        pieces.append((c < 0, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


_LEVEL = {Add: 1, Sub: 1, Mul: 2, Star: 2, Pow: 3}


def _level(e):
    return _LEVEL.get(type(e), 4)


def to_source(e, mode=GENERAL):
    "Inverse of parse, up to spans and whitespace."
    def wrap(sub, ok):
        s = to_source(sub, mode)
        return s if ok else "(%s)" % s

    if isinstance(e, ESym):
        return "e[%s](%s)" % (",".join(map(str, e.index)),
                              ", ".join(format_poly(a, mode) for a in e.args))
    if isinstance(e, HSym):
        return "h[%s]" % ",".join(map(str, e.index))
    if isinstance(e, PSum):
        return "p(%s)" % format_poly(e.mono, mode)
    if isinstance(e, Hbar):
        return "hbar"
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)
    if isinstance(e, Pow):
        return "%s^%d" % (wrap(e.base, _level(e.base) == 4), e.exp)
    if isinstance(e, (Add, Sub)):
        return "%s %s %s" % (wrap(e.left, _level(e.left) >= 1), e.symbol,
                             wrap(e.right, _level(e.right) >= 2))
    if isinstance(e, (Mul, Star)):
        left_ok = _level(e.left) >= 3 or type(e.left) is type(e)
        return "%s %s %s" % (wrap(e.left, left_ok), e.symbol, wrap(e.right, _level(e.right) >= 3))
    raise TypeError("not an expression node: %r" % (e,))


def uses_star(e):
    if isinstance(e, Star):
        return True
    if isinstance(e, BinOp):
        return uses_star(e.left) or uses_star(e.right)
    if isinstance(e, Pow):
        return uses_star(e.base)
    return False


def max_coordinate(e):
    "Largest abstract coordinate index appearing in the expression (0 if none)."
    if isinstance(e, ESym):
        return max((v[1] for a in e.args for v in a.variables()), default=0)
    if isinstance(e, PSum):
        return max((v[1] for v in e.mono.variables()), default=0)
    if isinstance(e, HSym):
        return len(e.index)
    if isinstance(e, BinOp):
        return max(max_coordinate(e.left), max_coordinate(e.right))
    if isinstance(e, Pow):
        return max_coordinate(e.base)
    return 0


__all__ = [
    "Add", "ESym", "HSym", "Hbar", "Mul", "Num", "PSum", "ParseError", "Pow", "Star", "Sub",
    "format_poly", "parse", "parse_with_mode", "to_source",
]

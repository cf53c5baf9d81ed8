"""
Command-line front end.

    multisym eval [--n N] [--d D] [--order M] [--sign +1|-1] [--format text|json] [--verify] EXPR
    multisym enum {L|Q} --alpha 1,1 --beta 2,1 --n 3 [--m M] [--kmax K] [--workers W]
    multisym decompose [--n N] [--d D] [--format text|json] EXPR
    multisym star / qproduct  (two-operand shorthands for "(F) @ (G)")
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import basis, expr as ex
from .functions import (ESum, ESymbol, classical_product, expand_homogeneous,
                        expand_vaccarino, power_sum)
from .margins import enumerate_L, enumerate_Q, flatten_L
from .polyalg import ONE, HbarSeries, Polynomial, mono_key, series_mul, var_name
from .weylstar import PhaseContext, bracket_report, quantum_product, star


class EvalError(ValueError):
    def __init__(self, message, span=None):
        self.message = message
        self.span = span
        text = message if span is None else "%d:%d: %s" % (span[0], span[1], message)
        super().__init__(text)


@dataclass
class Config:
    n: int = None
    d: int = None
    order: int = None
    sign: int = 1
    verify: bool = False
    format: str = "text"


@dataclass
class Value:
    """A direct expansion plus, when every step had a product formula, an ESum."""
    series: HbarSeries
    esum: ESum = None


def _const_symbol(c, hbar=0):
    return ESymbol((), (), c, hbar)


def _distribute(s, t, product):
    "Product of two e-symbols, with constants and hbar powers factored out."
    c = s.coeff * t.coeff
    shift = s.hbar + t.hbar
    if not s.index:
        return ESum([ESymbol(t.index, t.args, c, shift)])
    if not t.index:
        return ESum([ESymbol(s.index, s.args, c, shift)])
    return product(s, t, shift).scaled(c, shift)


def _index_weight(e):
    if isinstance(e, ex.ESym):
        return sum(e.index)
    if isinstance(e, ex.HSym):
        return 1
    if isinstance(e, ex.PSum):
        return 1
    if isinstance(e, ex.BinOp):
        return max(_index_weight(e.left), _index_weight(e.right))
    if isinstance(e, ex.Pow):
        return _index_weight(e.base)
    return 1


class Evaluator:
    def __init__(self, n, d, order=None, sign=1):
        self.n = n
        self.d = d
        self.order = order
        self.sign = sign

    def lift(self, p):
        return HbarSeries.lift(p, self.order)

    def eval(self, e):
        span = getattr(e, "span", None)
        try:
            return self._eval(e)
        except EvalError:
            raise
        except ValueError as err:
            raise EvalError(str(err), span) from err

    def _eval(self, e):
        n, order = self.n, self.order
        if isinstance(e, ex.ESym):
            self._check_args(e.args, e.span)
            sym = ESymbol(e.index, e.args)
            return Value(self.lift(expand_vaccarino(e.args, e.index, n)), ESum([sym]).truncate(order))
        if isinstance(e, ex.HSym):
            if len(e.index) != self.d:
                raise EvalError("h-index must have d = %d parts" % self.d, e.span)
            return Value(self.lift(expand_homogeneous(e.index, n, self.d)), None)
        if isinstance(e, ex.PSum):
            self._check_args([e.mono], e.span)
            m = e.mono.terms[0][0]
            return Value(self.lift(power_sum(m, n)), ESum([ESymbol((1,), (e.mono,))]))
        if isinstance(e, ex.Hbar):
            return Value(HbarSeries.hbar(order), ESum([_const_symbol(1, 1)]).truncate(order))
        if isinstance(e, ex.Num):
            return Value(self.lift(Polynomial.const(e.value)), ESum([_const_symbol(e.value)]))
        if isinstance(e, (ex.Add, ex.Sub)):
            a, b = self.eval(e.left), self.eval(e.right)
            if isinstance(e, ex.Add):
                series = a.series + b.series
                es = None if a.esum is None or b.esum is None else a.esum + b.esum
            else:
                series = a.series - b.series
                es = None if a.esum is None or b.esum is None else a.esum - b.esum
            return Value(series, es)
        if isinstance(e, ex.Mul):
            return self.mul(self.eval(e.left), self.eval(e.right))
        if isinstance(e, ex.Star):
            if self.d != 2:
                raise EvalError("'@' needs a phase context (d = 2)", e.span)
            return self.star(self.eval(e.left), self.eval(e.right))
        if isinstance(e, ex.Pow):
            base = self.eval(e.base)
            out = Value(self.lift(ONE), ESum([_const_symbol(1)]))
            for _ in range(e.exp):
                out = self.mul(out, base)
            return out
        raise TypeError("unknown node %r" % (e,))

    def _check_args(self, args, span):
        for a in args:
            for v in a.variables():
                if v[1] > self.d:
                    raise EvalError("variable y%d exceeds d = %d" % (v[1], self.d), span)

    def mul(self, a, b):
        series = series_mul(a.series, b.series)
        if a.esum is None or b.esum is None:
            return Value(series, None)

        def product(s, t, shift):
            return classical_product(s.args, s.index, t.args, t.index, self.n)

        es = ESum()
        for s in a.esum:
            for t in b.esum:
                if self.order is None or s.hbar + t.hbar < self.order:
                    es = es + _distribute(s, t, product)
        return Value(series, es)

    def star(self, a, b):
        series = star(a.series, b.series, self.order)
        if a.esum is None or b.esum is None:
            return Value(series, None)
        ctx = PhaseContext(self.n, self.sign)

        def product(s, t, shift):
            left = None if self.order is None else self.order - shift
            return quantum_product(s.args, s.index, t.args, t.index, ctx, left)

        es = ESum()
        for s in a.esum:
            for t in b.esum:
                if self.order is None or s.hbar + t.hbar < self.order:
                    es = es + _distribute(s, t, product)
        return Value(series, es)


# ---------------------------------------------------------------------------
# setup shared by the subcommands

def prepare(text, n=None, d=None):
    "Parse ``text`` and fix (tree, mode, n, d)."
    tree, mode = ex.parse_with_mode(text)
    if mode == ex.PHASE:
        if d not in (None, 2):
            raise EvalError("x/y variables live in the phase plane; d must be 2")
        d = 2
    elif d is None:
        d = 2 if ex.uses_star(tree) else max(ex.max_coordinate(tree), 1)
    if n is None:
        n = max(_index_weight(tree), 1)
    if n < 1 or d < 1:
        raise EvalError("n and d must be positive")
    return tree, mode, n, d


def namer(mode):
    "Variable names for output: x1/y1 and x/y in phase mode, x1_2 and y2 otherwise."
    if mode == ex.PHASE:
        def name(v):
            i, j = v
            base = "x" if j == 1 else "y"
            return base if i == 0 else "%s%d" % (base, i)
        return name
    return var_name


def evaluate(text, config):
    """Evaluate an expression.

    Returns ``(doc, extra)``: the JSON-ready result document and the objects
    the text renderer needs.
    """
    tree, mode, n, d = prepare(text, config.n, config.d)
    ev = Evaluator(n, d, config.order, config.sign)
    val = ev.eval(tree)
    oracle = None
    if config.verify and val.esum is not None:
        oracle = val.esum.expand(n, config.order) == val.series
    doc = {
        "input": text,
        "n": n,
        "d": d,
        "order": config.order,
        "esum": None if val.esum is None else [_symbol_json(t, mode) for t in val.esum],
        "expansion": _series_json(val.series, mode),
        "oracle_match": oracle,
    }
    extra = {"mode": mode, "value": val, "sign": config.sign, "bracket": None}
    if (isinstance(tree, ex.Star) and isinstance(tree.left, ex.ESym)
            and isinstance(tree.right, ex.ESym)):
        ctx = PhaseContext(n, config.sign)
        extra["bracket"] = bracket_report(tree.left.args, tree.left.index,
                                          tree.right.args, tree.right.index, ctx)
    return doc, extra


# ---------------------------------------------------------------------------
# serialization

def rat_json(c):
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def poly_json(p, mode):
    name = namer(mode)
    out = []
    for m, c in sorted(p.items(), key=lambda t: mono_key(t[0]), reverse=True):
        out.append({"coeff": rat_json(c), "monomial": {name(v): e for v, e in m}})
    return out


def _symbol_json(t, mode):
    return {"coeff": rat_json(t.coeff), "hbar": t.hbar, "index": list(t.index),
            "args": [poly_json(a, mode) for a in t.args]}


def _series_json(F, mode):
    return [{"hbar": m, "terms": poly_json(F[m], mode)} for m in F.degrees()]


def render_text(doc, extra):
    mode = extra["mode"]
    name = namer(mode)
    val = extra["value"]
    lines = ["input: %s" % doc["input"],
             "n = %d, d = %d, order = %s" % (doc["n"], doc["d"],
                                            "none" if doc["order"] is None else doc["order"])]
    if val.esum is None:
        lines.append("esum: (no product formula)")
    else:
        lines.append("esum:")
        if not len(val.esum):
            lines.append("  0")
        for t in val.esum:
            lines.append("  " + t.to_str(name))
    lines.append("expansion:")
    if val.series.is_zero():
        lines.append("  0")
    for m in val.series.degrees():
        lines.append("  hbar^%d: %s" % (m, val.series[m].to_str(name)))
    if doc["oracle_match"] is not None:
        lines.append("oracle_match: %s" % ("true" if doc["oracle_match"] else "false"))
    rep = extra["bracket"]
    if rep is not None:
        lines.append("bracket {F,G} (sign %+d): %s" % (extra["sign"], rep["bracket"].to_str(name)))
        lines.append("2 * sum over Q(alpha,beta,n,1): %s" % rep["esum"].to_str(name))
        ratio = rep["ratio"]
        lines.append("ratio to bracket: %s" % ("n/a" if ratio is None else str(ratio)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands

def _ints(text):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text)


def _sign(text):
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError("sign must be +1 or -1")


def cmd_eval(args, out):
    cfg = Config(args.n, args.d, args.order, args.sign, args.verify, args.format)
    return _run_eval(args.expr, cfg, out)


def _run_eval(text, cfg, out):
    doc, extra = evaluate(text, cfg)
    if cfg.format == "json":
        out.write(json.dumps(doc, sort_keys=False) + "\n")
    else:
        out.write(render_text(doc, extra) + "\n")
    return 1 if doc["oracle_match"] is False else 0


def cmd_binary(args, out):
    for side in (args.left, args.right):
        tree, _ = ex.parse_with_mode(side)
        if args.command == "qproduct" and not isinstance(tree, ex.ESym):
            raise EvalError("qproduct operands must be single e-symbols")
    text = "(%s) @ (%s)" % (args.left, args.right)
    cfg = Config(args.n, 2, args.order, args.sign, args.verify, args.format)
    return _run_eval(text, cfg, out)


def cmd_enum(args, out):
    if args.kind == "L":
        for g in enumerate_L(args.alpha, args.beta, args.n, workers=args.workers):
            out.write(",".join(map(str, flatten_L(g))) + "\n")
        return 0
    if args.m is None:
        raise EvalError("enum Q needs --m")
    kmax = args.m if args.kmax is None else args.kmax
    for g in enumerate_Q(args.alpha, args.beta, args.n, args.m, kmax):
        out.write(",".join(map(str, g.flat)) + "\n")
    return 0


def cmd_decompose(args, out):
    tree, mode, n, d = prepare(args.expr, args.n, args.d)
    val = Evaluator(n, d).eval(tree)
    name = namer(mode)
    try:
        coeffs = basis.decompose_series(val.series, n, d)
    except basis.NotInvariantError as err:
        raise EvalError(str(err), tree.span)
    if args.format == "json":
        rows = []
        for m, cs in sorted(coeffs.items()):
            for al, c in cs.items():
                rows.append({"hbar": m, "coeff": rat_json(c), "index": list(al.index()),
                             "args": [poly_json(a, mode) for a in al.args()]})
        doc = {"input": args.expr, "n": n, "d": d, "coefficients": rows}
        out.write(json.dumps(doc) + "\n")
        return 0
    lines = ["input: %s" % args.expr, "n = %d, d = %d" % (n, d)]
    if not any(coeffs.values()):
        lines.append("  0")
    for m, cs in sorted(coeffs.items()):
        for al, c in cs.items():
            h = "" if m == 0 else ("*hbar" if m == 1 else "*hbar^%d" % m)
            lines.append("  %s * %s%s" % (str(c), al.to_str(name), h))
    out.write("\n".join(lines) + "\n")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="multisym",
                                 description="Multi-symmetric functions and their classical and quantum products.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_order=True):
        p.add_argument("--n", type=int, help="number of points (default: largest index weight)")
        if with_order:
            p.add_argument("--order", type=int, help="drop hbar^m for m >= ORDER (default: no truncation)")
            p.add_argument("--sign", type=_sign, default=1, help="bracket convention {x, y} = sign")
            p.add_argument("--verify", action="store_true",
                           help="check the e-symbol expansion against the direct product")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="evaluate an expression")
    common(p)
    p.add_argument("--d", type=int, help="coordinates per point (default: from the expression)")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    for name in ("star", "qproduct"):
        p = sub.add_parser(name, help="F @ G in the phase plane")
        common(p)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(func=cmd_binary)

    p = sub.add_parser("enum", help="list L or Q matrices, flattened, one per line")
    p.add_argument("kind", choices=("L", "Q"))
    p.add_argument("--alpha", type=_ints, required=True)
    p.add_argument("--beta", type=_ints, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--kmax", type=int, help="largest hbar slice (default: m)")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("decompose", help="coordinates in the e_alpha basis")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("expr")
    p.set_defaults(func=cmd_decompose)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ex.ParseError, EvalError, ValueError) as err:
        sys.stderr.write("multisym: error: %s\n" % err)
        return 2


if __name__ == "__main__":
    sys.exit(main())

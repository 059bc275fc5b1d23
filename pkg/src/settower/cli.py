"""Command-line surface: exact expression evaluation, comparison, relation
reports, and enumeration utilities.

Subcommands:
  eval EXPR       evaluate an arithmetic expression (exact dyadic result
                  when possible, otherwise an interval at --prec)
  cmp EXPR EXPR   order two expressions; exit code 2 when undecidable at
                  the requested precision
  relcheck PATH   classify a relation file and report extremal elements
  enum ...        pairing-function and dyadic-enumeration helpers

Expressions support + - * / ^, parentheses, abs(), inv(), sup(...),
between(,), and let NAME = E in E.  Literals are integers, m/2^u written
as ordinary division, and decimals with a finite binary expansion (3.25
yes, 0.1 no).  Division falls back from exact to interval arithmetic when
the quotient is not a binary fraction; the divisor's positivity is probed
at --prec and failure to certify a sign is an error rather than a guess.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dyadic as dy
from . import reals as re
from .countability import enum_dyadics
from .errors import (
    BadExponent,
    BadOrder,
    DivisionNearZero,
    ExprSyntaxError,
    PrecisionCap,
    SettowerError,
)
from .naturals import pair, parse_nat, unpair
from .relations import classify, extremal, parse_relation

PRECISION_CAP = 200
DEFAULT_PRECISION = 30

_KEYWORDS = {"let", "in"}
_FUNCTIONS = {"abs": (1, 1), "inv": (1, 1), "sup": (1, None), "between": (2, 2)}
_OP_CHARS = set("+-*/^(),=")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "." and j + 1 < len(text) and text[j + 1].isdigit():
                j += 1
                while j < len(text) and text[j].isdigit():
                    j += 1
            tokens.append(("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            tokens.append(("kw" if word in _KEYWORDS else "name", word, i))
            i = j
            continue
        if ch in _OP_CHARS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list; all operators left-associative,
    ^ binding tighter than * and /, which bind tighter than + and -."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, text, at = self.take()
        if kind != "op" or text != ch:
            raise ExprSyntaxError(f"expected {ch!r}", at)

    def parse(self):
        node = self.expr()
        kind, text, at = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {text!r}", at)
        return node

    def expr(self):
        kind, text, at = self.peek()
        if kind == "kw" and text == "let":
            self.take()
            nkind, name, nat_ = self.take()
            if nkind != "name":
                raise ExprSyntaxError("expected a name after 'let'", nat_)
            self.expect_op("=")
            bound = self.expr()
            kkind, ktext, kat = self.take()
            if kkind != "kw" or ktext != "in":
                raise ExprSyntaxError("expected 'in'", kat)
            body = self.expr()
            return ("let", name, bound, body)
        return self.additive()

    def additive(self):
        node = self.multiplicative()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                node = ("bin", text, node, self.multiplicative())
            else:
                return node

    def multiplicative(self):
        node = self.unary()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "*/":
                self.take()
                node = ("bin", text, node, self.unary())
            else:
                return node

    def unary(self):
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.take()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "^":
                self.take()
                node = ("bin", "^", node, self.atom())
            else:
                return node

    def atom(self):
        kind, text, at = self.take()
        if kind == "num":
            try:
                return ("num", dy.parse_dyadic(text))
            except ExprSyntaxError as exc:
                raise ExprSyntaxError(exc.message, at) from None
        if kind == "name":
            pkind, ptext, _ = self.peek()
            if pkind == "op" and ptext == "(":
                if text not in _FUNCTIONS:
                    raise ExprSyntaxError(f"unknown function {text!r}", at)
                self.take()
                args = [self.expr()]
                while True:
                    ckind, ctext, cat = self.take()
                    if ckind == "op" and ctext == ",":
                        args.append(self.expr())
                    elif ckind == "op" and ctext == ")":
                        break
                    else:
                        raise ExprSyntaxError("expected ',' or ')'", cat)
                low, high = _FUNCTIONS[text]
                if len(args) < low or (high is not None and len(args) > high):
                    raise ExprSyntaxError(
                        f"{text}() takes {low}{'' if high == low else '+'} "
                        f"argument(s), got {len(args)}",
                        at,
                    )
                return ("call", text, args)
            return ("var", text, at)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExprSyntaxError(f"unexpected {text!r}" if text else "unexpected end of input", at)


def parse_expr(text: str):
    return _Parser(text).parse()


def _as_real(value) -> re.Real:
    if isinstance(value, dy.Dyadic):
        return re.real_from_dyadic(value)
    return value


def _invert(value, prec: int):
    """Reciprocal of an evaluated value: exact when possible, else an
    interval whose sign was certified at precision prec."""
    if isinstance(value, dy.Dyadic):
        if value.sign == 0:
            raise DivisionNearZero("division by exact zero")
        exact = dy.exact_div(dy.ONE, value)
        if exact is not None:
            return exact
        cut = re.inverse(re.from_dyadic(dy.dy_abs(value)), value.exp + 1)
        flipped = re.real_from_cut(cut)
        return re.real_neg(flipped) if value.sign < 0 else flipped
    side = re.real_compare_eps(value, re.REAL_ZERO, prec)
    if side is re.Comparison.INDISTINGUISHABLE:
        raise DivisionNearZero(
            f"divisor not certified nonzero at precision {prec}"
        )
    cut = re.inverse(re.real_abs(value), prec)
    flipped = re.real_from_cut(cut)
    return re.real_neg(flipped) if side is re.Comparison.LESS else flipped


def _nat_exponent(value) -> int:
    if isinstance(value, dy.Dyadic) and value.exp == 0 and value.sign >= 0:
        return value.man if value.sign > 0 else 0
    raise BadExponent("exponent must be an exact natural number")


def _real_max(x: re.Real, y: re.Real) -> re.Real:
    # max(x, y) = (x + y + |x - y|) / 2
    gap = re.real_from_cut(re.real_abs(re.real_sub(x, y)))
    total = re.real_add(re.real_add(x, y), gap)
    return re.real_mul(total, re.real_from_dyadic(dy.HALF))


def _eval(node, env, prec: int):
    op = node[0]
    if op == "num":
        return node[1]
    if op == "var":
        _, name, at = node
        if name not in env:
            raise ExprSyntaxError(f"unbound name {name!r}", at)
        return env[name]
    if op == "let":
        _, name, bound, body = node
        value = _eval(bound, env, prec)
        return _eval(body, {**env, name: value}, prec)
    if op == "neg":
        value = _eval(node[1], env, prec)
        if isinstance(value, dy.Dyadic):
            return dy.neg(value)
        return re.real_neg(value)
    if op == "bin":
        _, sym, left, right = node
        a = _eval(left, env, prec)
        b = _eval(right, env, prec)
        return _apply_bin(sym, a, b, prec)
    if op == "call":
        _, name, args = node
        values = [_eval(a, env, prec) for a in args]
        return _apply_call(name, values, prec)
    raise AssertionError(f"unknown node {op!r}")


def _apply_bin(sym, a, b, prec: int):
    both_dyadic = isinstance(a, dy.Dyadic) and isinstance(b, dy.Dyadic)
    if sym == "+":
        if both_dyadic:
            return dy.add(a, b)
        return re.real_add(_as_real(a), _as_real(b))
    if sym == "-":
        if both_dyadic:
            return dy.sub(a, b)
        return re.real_sub(_as_real(a), _as_real(b))
    if sym == "*":
        # Sign rule: anything times exact zero is exact zero.
        if isinstance(a, dy.Dyadic) and a.sign == 0:
            return dy.ZERO
        if isinstance(b, dy.Dyadic) and b.sign == 0:
            return dy.ZERO
        if both_dyadic:
            return dy.mul(a, b)
        return re.real_mul(_as_real(a), _as_real(b))
    if sym == "/":
        if both_dyadic and b.sign != 0:
            exact = dy.exact_div(a, b)
            if exact is not None:
                return exact
        inverted = _invert(b, prec)
        return _apply_bin("*", a, inverted, prec)
    if sym == "^":
        m = _nat_exponent(b)
        if isinstance(a, dy.Dyadic):
            return dy.dy_pow(a, m)
        acc = dy.ONE
        for _ in range(m):
            acc = _apply_bin("*", acc, a, prec)
        return acc
    raise AssertionError(f"unknown operator {sym!r}")


def _apply_call(name, values, prec: int):
    if name == "abs":
        value = values[0]
        if isinstance(value, dy.Dyadic):
            return dy.dy_abs(value)
        return re.real_from_cut(re.real_abs(value))
    if name == "inv":
        return _invert(values[0], prec)
    if name == "sup":
        if all(isinstance(v, dy.Dyadic) for v in values):
            acc = values[0]
            for v in values[1:]:
                acc = dy.dy_max(acc, v)
            return acc
        acc = _as_real(values[0])
        for v in values[1:]:
            acc = _real_max(acc, _as_real(v))
        return acc
    if name == "between":
        lo, hi = values
        if not (isinstance(lo, dy.Dyadic) and isinstance(hi, dy.Dyadic)):
            raise BadOrder("between() needs exact dyadic endpoints")
        return dy.between(lo, hi)
    raise AssertionError(f"unknown function {name!r}")


def evaluate(text: str, prec: int):
    """Parse and evaluate; returns either a Dyadic or a Real."""
    return _eval(parse_expr(text), {}, prec)


def _check_prec(prec: int) -> int:
    if prec < 0 or prec > PRECISION_CAP:
        raise PrecisionCap(
            f"precision must lie in 0..{PRECISION_CAP}, got {prec}"
        )
    return prec


def _emit(out, record, fmt: str, plain: str):
    if fmt == "json-lines":
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        print(plain, file=out)


def _read_source(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else arg


def _cmd_eval(args, out) -> int:
    prec = _check_prec(args.prec)
    value = evaluate(_read_source(args.expr), prec)
    if isinstance(value, dy.Dyadic):
        _emit(
            out,
            {"exact": True, "kind": "dyadic", "value": str(value)},
            args.format,
            str(value),
        )
        return 0
    tidy = re.canonicalize(value)
    lo, hi = re.real_interval(tidy, prec)
    _emit(
        out,
        {
            "exact": False,
            "hi": str(hi),
            "kind": "interval",
            "lo": str(lo),
            "precision": prec,
        },
        args.format,
        f"[{lo}, {hi}]@{prec}",
    )
    return 0


def _cmd_cmp(args, out) -> int:
    prec = _check_prec(args.prec)
    a = evaluate(args.left, prec)
    b = evaluate(args.right, prec)
    if isinstance(a, dy.Dyadic) and isinstance(b, dy.Dyadic):
        order = dy.compare(a, b)
        word = "less" if order < 0 else "greater" if order > 0 else "equal"
    else:
        side = re.real_compare_eps(_as_real(a), _as_real(b), prec)
        word = side.value
    _emit(out, {"kind": "comparison", "result": word}, args.format, word)
    return 2 if word == "indistinguishable" else 0


def _cmd_relcheck(args, out) -> int:
    if args.path == "-":
        text = sys.stdin.read()
    else:
        with open(args.path, encoding="utf-8") as handle:
            text = handle.read()
    rel = parse_relation(text)
    report = classify(rel)
    for name, value in report.as_dict().items():
        shown = name.replace("_", "-")
        _emit(
            out,
            {"kind": "property", "name": shown, "value": value},
            args.format,
            f"{shown}: {'yes' if value else 'no'}",
        )
    ext = extremal(rel, rel.carrier.atoms)
    for label in ("minima", "maxima", "weak_minima", "weak_maxima"):
        atoms = getattr(ext, label)
        ordered = [a for a in rel.carrier if a in atoms]
        shown = label.replace("_", "-")
        _emit(
            out,
            {"atoms": ordered, "kind": "extremal", "name": shown},
            args.format,
            f"{shown}: {' '.join(ordered) if ordered else '(none)'}",
        )
    return 0


def _cmd_enum(args, out) -> int:
    if args.what == "pair":
        p, q = parse_nat(args.first), parse_nat(args.second)
        value = pair(p, q)
        _emit(
            out,
            {"kind": "pair", "p": p, "q": q, "value": value},
            args.format,
            str(value),
        )
        return 0
    if args.what == "unpair":
        r = parse_nat(args.first)
        p, q = unpair(r)
        _emit(
            out,
            {"kind": "unpair", "p": p, "q": q, "value": r},
            args.format,
            f"{p} {q}",
        )
        return 0
    index = parse_nat(args.first)
    value = enum_dyadics().forward(index)
    _emit(
        out,
        {"index": index, "kind": "dyadic", "value": str(value)},
        args.format,
        str(value),
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="settower",
        description="Exact set-theoretic arithmetic and relation reports.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--prec",
            type=int,
            default=DEFAULT_PRECISION,
            help=f"working precision in bits (default {DEFAULT_PRECISION}, "
            f"cap {PRECISION_CAP})",
        )
        p.add_argument(
            "--format",
            choices=("plain", "json-lines"),
            default="plain",
            help="output style",
        )

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expr", help="expression, or - to read stdin")
    common(p_eval)

    p_cmp = sub.add_parser("cmp", help="compare two expressions")
    p_cmp.add_argument("left")
    p_cmp.add_argument("right")
    common(p_cmp)

    p_rel = sub.add_parser("relcheck", help="classify a relation file")
    p_rel.add_argument("path", help="relation file, or - to read stdin")
    common(p_rel)

    p_enum = sub.add_parser("enum", help="pairing and enumeration utilities")
    p_enum.add_argument("what", choices=("pair", "unpair", "dyadic"))
    p_enum.add_argument("first")
    p_enum.add_argument("second", nargs="?")
    common(p_enum)
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "enum":
        if args.what == "pair" and args.second is None:
            print("error: enum pair needs two naturals", file=sys.stderr)
            return 1
        if args.what != "pair" and args.second is not None:
            print(f"error: enum {args.what} takes one argument", file=sys.stderr)
            return 1
    handlers = {
        "eval": _cmd_eval,
        "cmp": _cmd_cmp,
        "relcheck": _cmd_relcheck,
        "enum": _cmd_enum,
    }
    try:
        return handlers[args.command](args, sys.stdout)
    except SettowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

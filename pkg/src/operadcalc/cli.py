"""Command-line interface.

Verbs operate on presentation expressions (SPEC): a catalog key, a
mag_{p,q,r} literal, a path to a presentation file, or a parenthesized
nested expression such as `dual (black ass (dual postcom))`.

Exit codes: 0 success, 1 parse or usage error, 2 verification failure,
3 internal consistency failure (disagreeing white methods).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .linalg import StructuralError
from .presentation import ParseError, parse, render
from .cochain import (
    ASS_BLACK,
    ASS_WHITE,
    COM_BLACK,
    LIE_WHITE,
    PERM_WHITE,
    PRELIE_L_BLACK,
    PRELIE_R_BLACK,
    black_table,
    white_table,
)
from . import functors, koszul, morphisms, recognize, verify, zoo

BLACK_FAMILIES = {
    "ass": ASS_BLACK,
    "com": COM_BLACK,
    "prelie": PRELIE_R_BLACK,
    "prelie-left": PRELIE_L_BLACK,
}
WHITE_FAMILIES = {
    "ass": ASS_WHITE,
    "lie": LIE_WHITE,
    "perm": PERM_WHITE,
}

VERBS = (
    "show", "black", "white", "dual", "sum", "prod", "adm", "opp",
    "recognize", "verify", "parse",
)


class CliError(Exception):
    def __init__(self, message, code=1):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# SPEC expressions


def _tokenize(text):
    return text.replace("(", " ( ").replace(")", " ) ").split()


class _SpecParser:
    def __init__(self, tokens, env):
        self.tokens = tokens
        self.pos = 0
        self.env = env

    def next(self):
        if self.pos >= len(self.tokens):
            raise CliError("unexpected end of expression")
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def parse_spec(self):
        t = self.next()
        if t == "(":
            result = self.parse_form()
            if self.next() != ")":
                raise CliError("expected ')' in expression")
            return result
        if t == ")":
            raise CliError("unexpected ')' in expression")
        return self.env.atom(t)

    def parse_form(self):
        head = self.peek()
        if head in VERBS:
            self.next()
            return self.env.apply_verb(head, self)
        return self.parse_spec()


class _Env:
    """Resolution context: catalog, extra presentation files, method."""

    def __init__(self, zoo_dir=None, method="direct"):
        self.method = method
        self.extra = {}
        if zoo_dir:
            if not os.path.isdir(zoo_dir):
                raise CliError("not a directory: %s" % zoo_dir)
            for fn in sorted(os.listdir(zoo_dir)):
                path = os.path.join(zoo_dir, fn)
                if os.path.isfile(path):
                    try:
                        pres = parse(open(path).read())
                    except (ParseError, StructuralError) as e:
                        raise CliError("%s: %s" % (path, e))
                    self.extra[pres.name.lower()] = pres

    def atom(self, token):
        key = token.lower()
        if key in self.extra:
            return self.extra[key]
        try:
            return zoo.zoo_get(token)
        except KeyError:
            pass
        if os.path.isfile(token):
            try:
                return parse(open(token).read())
            except (ParseError, StructuralError) as e:
                raise CliError("%s: %s" % (token, e))
        raise CliError("unknown presentation: %r" % token)

    def white(self, family, operand):
        if self.method == "dual":
            return functors.white_via_dual(family, operand)
        direct = functors.white_direct(family, operand)
        if self.method == "both":
            via = functors.white_via_dual(family, operand)
            if not recognize.equal_presentations(direct, via):
                raise CliError(
                    "white product methods disagree on %s" % operand.name,
                    code=3,
                )
        return direct

    def apply_verb(self, verb, parser):
        if verb == "show":
            return parser.parse_spec()
        if verb == "black":
            fam = parser.next()
            if fam not in BLACK_FAMILIES:
                raise CliError("unknown black family: %r" % fam)
            operand = parser.parse_spec()
            family = BLACK_FAMILIES[fam]
            if family == COM_BLACK:
                return functors.black_com(operand)
            return functors.black(family, operand)
        if verb == "white":
            fam = parser.next()
            if fam not in WHITE_FAMILIES:
                raise CliError("unknown white family: %r" % fam)
            return self.white(WHITE_FAMILIES[fam], parser.parse_spec())
        if verb == "dual":
            return koszul.dual(parser.parse_spec())
        if verb == "sum":
            return functors.sum_(parser.parse_spec(), parser.parse_spec())
        if verb == "prod":
            return functors.prod(parser.parse_spec(), parser.parse_spec())
        if verb == "adm":
            return functors.adm(parser.parse_spec())
        if verb == "opp":
            return functors.opposite_operad(parser.parse_spec())
        if verb in ("recognize", "parse"):
            return parser.parse_spec()
        raise CliError("verb %r cannot appear in an expression" % verb)


def eval_spec(tokens, env, verb=None):
    parser = _SpecParser(tokens, env)
    if verb is not None:
        result = env.apply_verb(verb, parser)
    else:
        result = parser.parse_form()
    if parser.pos != len(parser.tokens):
        raise CliError(
            "trailing tokens: %s" % " ".join(tokens[parser.pos:])
        )
    return result


# ---------------------------------------------------------------------------
# output


def _matches(pres):
    out = []
    for key, t in recognize.match_zoo(pres):
        out.append({"entry": key, "transform": t.describe(pres.signature)})
    return out


def _emit(pres, fmt, with_matches):
    if fmt == "json":
        data = json.loads(render(pres, "json"))
        if with_matches:
            data["recognized"] = _matches(pres)
        print(json.dumps(data, indent=2))
        return
    print(render(pres, fmt))
    if fmt == "text":
        print("ambient arity-3 dimension: %d" % len(pres.basis3))
        print("relation dimension: %d" % pres.relations.dim)
    if with_matches:
        matches = _matches(pres)
        if not matches:
            print("recognized: (no catalog match)")
        for m in matches:
            print("recognized: %s via %s" % (m["entry"], m["transform"]))


def _dump_tables(pres):
    sig = pres.signature
    for label, fams, builder in (
        ("black", BLACK_FAMILIES, black_table),
        ("white", WHITE_FAMILIES, white_table),
    ):
        for fam_name, fam in sorted(fams.items()):
            table, derived, _ = builder(sig, fam)
            print("# %s %s table over %s" % (label, fam_name, pres.name))
            for (g, a, b), rules in sorted(table.items()):
                for out, payload in rules:
                    terms = " + ".join(
                        "%s*%s%s" % (c, derived[t].name if label == "black"
                                     else sig[t].name,
                                     "^op" if o else "")
                        for c, t, o in payload
                    )
                    print("  (%s, %s, %s) -> %s : %s" % (g, a, b, out, terms))


# ---------------------------------------------------------------------------
# entry point


def build_argparser():
    p = argparse.ArgumentParser(
        prog="operadcalc",
        description="Symbolic calculator for binary quadratic operads.",
    )
    p.add_argument("verb", choices=VERBS)
    p.add_argument("args", nargs="*", help="expression / verb arguments")
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default="text")
    p.add_argument("--method", choices=("direct", "dual", "both"),
                   default="direct")
    p.add_argument("--recognize", action="store_true",
                   help="append catalog recognition results")
    p.add_argument("--dump-tables", action="store_true",
                   help="print the derived-product rule tables")
    p.add_argument("--zoo-dir", default=None,
                   help="directory of extra presentation files")
    return p


def main(argv=None):
    args = build_argparser().parse_args(argv)
    try:
        return _run(args)
    except CliError as e:
        if args.format == "json":
            print(json.dumps({"error": str(e), "code": e.code}))
        else:
            print("error: %s" % e, file=sys.stderr)
        return e.code
    except (ParseError, StructuralError) as e:
        if args.format == "json":
            print(json.dumps({"error": str(e), "code": 1}))
        else:
            print("error: %s" % e, file=sys.stderr)
        return 1


def _run(args):
    env = _Env(zoo_dir=args.zoo_dir, method=args.method)
    if args.verb == "verify":
        group = args.args[0] if args.args else "all"
        if group not in verify.GROUPS:
            raise CliError("unknown verify group: %r" % group)
        lines = []
        ok = verify.run(group, report=lines.append)
        if args.format == "json":
            print(json.dumps({"group": group, "ok": ok, "checks": lines},
                             indent=2))
        else:
            for line in lines:
                print(line)
        return 0 if ok else 2
    if args.verb == "parse":
        if len(args.args) != 1:
            raise CliError("parse takes exactly one file argument")
        path = args.args[0]
        if not os.path.isfile(path):
            raise CliError("no such file: %s" % path)
        pres = parse(open(path).read())
        _emit(pres, args.format, args.recognize)
        return 0
    if not args.args:
        raise CliError("verb %r needs an expression" % args.verb)
    tokens = _tokenize(" ".join(args.args))
    pres = eval_spec(tokens, env, verb=args.verb)
    if args.verb == "recognize":
        matches = _matches(pres)
        if args.format == "json":
            print(json.dumps({"name": pres.name, "recognized": matches},
                             indent=2))
        else:
            if not matches:
                print("no catalog match for %s" % pres.name)
            for m in matches:
                print("%s via %s" % (m["entry"], m["transform"]))
        return 0
    _emit(pres, args.format, args.recognize)
    if args.dump_tables:
        _dump_tables(pres)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Operad presentations and the small text language that describes them.

A presentation is a signature of binary generators plus a list of
quadratic relators (arity-3 elements).  The relation space is the span of
all variable relabellings of the relators, so that two presentations of
the same operad compare equal regardless of which generating relators
were written down.

The text format::

    operad preLie {
      gens: p:nonsym;
      rel: p(p(x,y),z) - p(x,p(y,z)) - p(p(x,z),y) + p(x,p(z,y));
    }

Each relator must use each of the variables x, y, z exactly once.
"""

from __future__ import annotations

import json
import re

from .linalg import StructuralError, mpq, span
from .freeop import (
    ANTISYM,
    ID,
    LEFT,
    NONSYM,
    OP,
    RIGHT,
    SYM,
    Monomial3,
    add_term,
    basis3,
    canonical_term,
    format_element3,
    make_signature,
    variable_orbit,
)


class ParseError(ValueError):
    """A syntax or arity error in presentation source, with location."""

    def __init__(self, message, line, column):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


class OperadPresentation:
    """A binary quadratic operad given by generators and relators."""

    def __init__(self, name, signature, relators, membership_fn=None):
        self.name = name
        self.signature = signature
        self.relators = [dict(r) for r in relators if r]
        self.basis3 = basis3(signature)
        self._relations = None
        self._membership_fn = membership_fn

    @property
    def relations(self):
        """The full relation subspace (closed under variable relabelling)."""
        if self._relations is None:
            vectors = []
            for r in self.relators:
                vectors.extend(variable_orbit(self.signature, r))
            self._relations = span(vectors, self.basis3)
        return self._relations

    def contains_relation(self, element):
        """Whether an arity-3 element vanishes in the presented operad."""
        if self._membership_fn is not None and self._relations is None:
            return self._membership_fn(element)
        return self.relations.contains(element)

    @property
    def dim3(self):
        """Dimension of the arity-3 component of the presented operad."""
        return len(self.basis3) - self.relations.dim

    def counts(self):
        return self.signature.counts()

    def __repr__(self):
        return "OperadPresentation(%r, gens=%d, relators=%d)" % (
            self.name,
            len(self.signature),
            len(self.relators),
        )


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>\#[^\n]*)
      | (?P<number>\d+(/\d+)?)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<punct>[{}();:,*+-])
    """,
    re.VERBOSE,
)


def _tokenize(source):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError("unexpected character %r" % source[pos], line, col)
        text = m.group(0)
        kind = m.lastgroup if m.lastgroup != "punct" else text
        if kind not in ("ws", "comment"):
            tokens.append((kind, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, source):
        self.tokens = _tokenize(source)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message):
        kind, text, line, col = self.peek()
        raise ParseError(message, line, col)

    def expect(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            self.fail("expected %r, found %r" % (kind, tok[1] or "end of input"))
        return self.next()

    def parse(self):
        kw = self.expect("name")
        if kw[1] != "operad":
            raise ParseError("expected 'operad'", kw[2], kw[3])
        name = self.expect("name")[1]
        self.expect("{")
        sig = self.parse_gens()
        relators = []
        while self.peek()[0] == "name" and self.peek()[1] == "rel":
            self.next()
            self.expect(":")
            relators.append(self.parse_relator(sig))
            self.expect(";")
        self.expect("}")
        self.expect("eof")
        return OperadPresentation(name, sig, relators)

    def parse_gens(self):
        kw = self.expect("name")
        if kw[1] != "gens":
            raise ParseError("expected 'gens'", kw[2], kw[3])
        self.expect(":")
        spec = []
        while True:
            gname = self.expect("name")[1]
            self.expect(":")
            stok = self.expect("name")
            if stok[1] not in (NONSYM, SYM, ANTISYM):
                raise ParseError(
                    "unknown symmetry %r" % stok[1], stok[2], stok[3]
                )
            spec.append((gname, stok[1]))
            if self.peek()[0] == ",":
                self.next()
            else:
                break
        self.expect(";")
        try:
            return make_signature(spec)
        except StructuralError as exc:
            raise ParseError(str(exc), kw[2], kw[3])

    def parse_relator(self, sig):
        acc = {}
        first_line, first_col = self.peek()[2], self.peek()[3]
        sign = 1
        if self.peek()[0] in ("+", "-"):
            if self.next()[0] == "-":
                sign = -1
        while True:
            self.parse_term(sig, sign, acc)
            tok = self.peek()
            if tok[0] == "+":
                self.next()
                sign = 1
            elif tok[0] == "-":
                self.next()
                sign = -1
            else:
                break
        return acc

    def parse_term(self, sig, sign, acc):
        coeff = mpq(sign)
        if self.peek()[0] == "number":
            num = self.next()[1]
            coeff = coeff * mpq(num)
            self.expect("*")
        tok = self.peek()
        shape, outer, inner, leaves = self.parse_application(sig, depth=0)
        if sorted(leaves) != [0, 1, 2]:
            raise ParseError(
                "each of x, y, z must occur exactly once in a relator term",
                tok[2],
                tok[3],
            )
        mono, c = canonical_term(sig, shape, outer, inner, leaves, coeff)
        add_term(acc, mono, c)

    def parse_application(self, sig, depth):
        tok = self.expect("name")
        gname = tok[1]
        if gname not in sig.by_name:
            raise ParseError("unknown operation %r" % gname, tok[2], tok[3])
        gen = sig.by_name[gname].index
        self.expect("(")
        args = [self.parse_arg(sig, depth)]
        self.expect(",")
        args.append(self.parse_arg(sig, depth))
        self.expect(")")
        if depth == 0:
            inners = [a for a in args if isinstance(a, tuple)]
            if len(inners) != 1:
                raise ParseError(
                    "a relator term must be one operation applied to another",
                    tok[2],
                    tok[3],
                )
            if isinstance(args[0], tuple):
                inner_gen, (u, v) = args[0]
                return LEFT, gen, inner_gen, (u, v, args[1])
            inner_gen, (u, v) = args[1]
            return RIGHT, gen, inner_gen, (args[0], u, v)
        return (gen, tuple(args))

    def parse_arg(self, sig, depth):
        tok = self.peek()
        if tok[0] == "name" and tok[1] in ("x", "y", "z"):
            self.next()
            return "xyz".index(tok[1])
        if tok[0] == "name":
            if depth >= 1:
                raise ParseError(
                    "operations nest at most two deep in a relator",
                    tok[2],
                    tok[3],
                )
            gen, args = self.parse_application(sig, depth + 1)
            bad = [a for a in args if not isinstance(a, int)]
            if bad:
                raise ParseError(
                    "inner operations take variables only", tok[2], tok[3]
                )
            return (gen, args)
        self.fail("expected a variable or operation")


def parse(source):
    """Parse presentation source text into an OperadPresentation."""
    return _Parser(source).parse()


# ---------------------------------------------------------------------------
# rendering

def render(pres, format="text"):
    if format == "text":
        return render_text(pres)
    if format == "json":
        return render_json(pres)
    if format == "latex":
        return render_latex(pres)
    raise StructuralError("unknown format: %r" % (format,))


def render_text(pres):
    lines = ["operad %s {" % pres.name]
    lines.append(
        "  gens: %s;"
        % ", ".join("%s:%s" % (g.name, g.symmetry) for g in pres.signature)
    )
    for r in pres.relators:
        lines.append("  rel: %s;" % format_element3(pres.signature, r))
    lines.append("}")
    return "\n".join(lines)


def render_json(pres):
    def mono_json(m, c):
        return {
            "shape": "left" if m.shape == LEFT else "right",
            "outer": pres.signature[m.outer].name,
            "inner": pres.signature[m.inner].name,
            "leaves": [("x", "y", "z")[v] for v in m.leaves],
            "coeff": str(c),
        }

    basis = pres.relations.basis_vectors()
    return json.dumps(
        {
            "name": pres.name,
            "generators": [
                {"name": g.name, "symmetry": g.symmetry}
                for g in pres.signature
            ],
            "ambient_dim3": len(pres.basis3),
            "relation_dim": pres.relations.dim,
            "dim3": pres.dim3,
            "relation_basis": [
                [
                    mono_json(m, c)
                    for m, c in sorted(
                        v.items(), key=lambda kv: kv[0].sort_key()
                    )
                ]
                for v in basis
            ],
        },
        indent=2,
    )


_LATEX_SYM = {NONSYM: "", SYM: r"\ (\text{sym})", ANTISYM: r"\ (\text{antisym})"}


def render_latex(pres):
    lines = [r"\begin{aligned}"]
    gens = ",\\ ".join(
        g.name + _LATEX_SYM[g.symmetry] for g in pres.signature
    )
    lines.append(r"&\text{%s: generators } %s\\" % (pres.name, gens))
    for r in pres.relators:
        body = format_element3(pres.signature, r)
        body = body.replace("*", r" \cdot ")
        lines.append(r"&%s = 0\\" % body)
    lines.append(r"\end{aligned}")
    return "\n".join(lines)

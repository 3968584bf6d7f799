"""Arity-2 and arity-3 components of a free operad on binary generators.

A generator is a binary operation that is plain (no symmetry), commutative,
or anticommutative.  Degree-3 monomials are planar binary trees with three
leaves labelled by the variables x, y, z (indices 0, 1, 2), with a fixed
canonical representative chosen for every orbit of the symmetry
normalizations.  Elements are sparse rational combinations of canonical
monomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import StructuralError, mpq, vec_add

# generator symmetry types
NONSYM = "nonsym"
SYM = "sym"
ANTISYM = "antisym"
SYMMETRIES = (NONSYM, SYM, ANTISYM)

# tree shapes: LEFT = outer(inner(a,b), c); RIGHT = outer(a, inner(b,c))
LEFT = 0
RIGHT = 1

# orientations of a binary generator inside an arity-2 element
ID = 0  # g(a, b)
OP = 1  # g(b, a)

VARS = ("x", "y", "z")


@dataclass(frozen=True)
class Generator:
    """A binary generating operation of an operad presentation."""

    index: int
    name: str
    symmetry: str

    def __post_init__(self):
        if self.symmetry not in SYMMETRIES:
            raise StructuralError("unknown symmetry: %r" % (self.symmetry,))


class Signature:
    """An ordered list of binary generators."""

    def __init__(self, gens):
        self.gens = tuple(gens)
        for i, g in enumerate(self.gens):
            if g.index != i:
                raise StructuralError("generator index mismatch at %d" % i)
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise StructuralError("duplicate generator names")
        self.by_name = {g.name: g for g in self.gens}

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return [(g.name, g.symmetry) for g in self.gens] == [
            (g.name, g.symmetry) for g in other.gens
        ]

    def counts(self):
        """(#plain, #commutative, #anticommutative)."""
        p = sum(1 for g in self.gens if g.symmetry == NONSYM)
        q = sum(1 for g in self.gens if g.symmetry == SYM)
        r = sum(1 for g in self.gens if g.symmetry == ANTISYM)
        return (p, q, r)

    def symmetry_sequence(self):
        return tuple(g.symmetry for g in self.gens)

    def __repr__(self):
        return "Signature(%s)" % ", ".join(
            "%s:%s" % (g.name, g.symmetry) for g in self.gens
        )


def make_signature(spec):
    """Build a Signature from (name, symmetry) pairs."""
    return Signature(
        Generator(i, name, sym) for i, (name, sym) in enumerate(spec)
    )


@dataclass(frozen=True)
class Monomial3:
    """A canonical three-leaf tree monomial.

    `leaves` lists variable indices in planar left-to-right order; for a
    LEFT shape the inner operation takes leaves[0], leaves[1], for a RIGHT
    shape it takes leaves[1], leaves[2].
    """

    shape: int
    outer: int
    inner: int
    leaves: tuple

    def sort_key(self):
        return (self.shape, self.outer, self.inner, self.leaves)


def canonical_term(sig, shape, outer, inner, leaves, coeff):
    """Normalize one raw tree term; returns (Monomial3, coeff).

    Commutative and anticommutative generators get their arguments
    sorted; a symmetric-type outer operation in RIGHT shape is rewritten
    to the equivalent LEFT-shape tree.
    """
    coeff = mpq(coeff)
    leaves = list(leaves)
    inner_sym = sig[inner].symmetry
    if inner_sym != NONSYM:
        lo, hi = (0, 1) if shape == LEFT else (1, 2)
        if leaves[lo] > leaves[hi]:
            leaves[lo], leaves[hi] = leaves[hi], leaves[lo]
            if inner_sym == ANTISYM:
                coeff = -coeff
    outer_sym = sig[outer].symmetry
    if outer_sym != NONSYM and shape == RIGHT:
        # outer(a, inner(b,c)) = +- outer(inner(b,c), a)
        leaves = [leaves[1], leaves[2], leaves[0]]
        shape = LEFT
        if outer_sym == ANTISYM:
            coeff = -coeff
    return Monomial3(shape, outer, inner, tuple(leaves)), coeff


def add_term(acc, mono, coeff):
    if not coeff:
        return
    s = acc.get(mono, 0) + coeff
    if s:
        acc[mono] = s
    else:
        acc.pop(mono, None)


def basis3(sig):
    """Canonical monomial basis of the arity-3 component, sorted."""
    seen = set()
    for shape in (LEFT, RIGHT):
        for outer in range(len(sig)):
            for inner in range(len(sig)):
                for leaves in itertools.permutations((0, 1, 2)):
                    m, c = canonical_term(sig, shape, outer, inner, leaves, 1)
                    if c:
                        seen.add(m)
    return tuple(sorted(seen, key=Monomial3.sort_key))


def normalize_element2(sig, terms):
    """Canonicalize an arity-2 element given as (coeff, gen, orient) terms.

    For commutative generators the OP orientation folds onto ID; for
    anticommutative ones it folds with a sign.  Returns a sorted tuple of
    (coeff, gen_index, orient) with nonzero coefficients.
    """
    acc = {}
    for coeff, gen, orient in terms:
        coeff = mpq(coeff)
        sym = sig[gen].symmetry
        if orient == OP and sym != NONSYM:
            orient = ID
            if sym == ANTISYM:
                coeff = -coeff
        key = (gen, orient)
        s = acc.get(key, 0) + coeff
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)
    return tuple(
        (acc[k], k[0], k[1]) for k in sorted(acc)
    )


def permute_variables(sig, element, perm):
    """Relabel the variables of an arity-3 element by perm (old -> new)."""
    out = {}
    for m, c in element.items():
        leaves = tuple(perm[v] for v in m.leaves)
        mono, coeff = canonical_term(sig, m.shape, m.outer, m.inner, leaves, c)
        add_term(out, mono, coeff)
    return out


def variable_orbit(sig, element):
    """All six variable relabellings of an arity-3 element."""
    return [
        permute_variables(sig, element, perm)
        for perm in itertools.permutations((0, 1, 2))
    ]


def substitute(element, images, src_sig, dst_sig):
    """Substitute arity-2 elements for the generators in an arity-3 element.

    `images` maps each source generator index to a normalized arity-2
    element over `dst_sig`.  The composite of two substituted trees is
    expanded term by term and canonicalized in the target.
    """
    out = {}
    for m, c in element.items():
        outer_img = images[m.outer]
        inner_img = images[m.inner]
        for oc, og, oo in outer_img:
            for ic, ig, io in inner_img:
                shape, leaves = m.shape, list(m.leaves)
                if io == OP:
                    lo, hi = (0, 1) if shape == LEFT else (1, 2)
                    leaves[lo], leaves[hi] = leaves[hi], leaves[lo]
                if oo == OP:
                    if shape == LEFT:
                        # outer(inner, c) -> outer^op means outer(c, inner)
                        shape = RIGHT
                        leaves = [leaves[2], leaves[0], leaves[1]]
                    else:
                        shape = LEFT
                        leaves = [leaves[1], leaves[2], leaves[0]]
                mono, coeff = canonical_term(
                    dst_sig, shape, og, ig, leaves, c * oc * ic
                )
                add_term(out, mono, coeff)
    return out


def opposite_element(sig, element):
    """Image of an arity-3 element under reversing every generator."""
    images = {g.index: normalize_element2(sig, [(1, g.index, OP)]) for g in sig}
    return substitute(element, images, sig, sig)


def element_to_key_vector(element):
    """An arity-3 element as a sparse vector keyed by its monomials."""
    return dict(element)


def format_monomial(sig, mono):
    a, b, c = (VARS[v] for v in mono.leaves)
    inner_name = sig[mono.inner].name
    outer_name = sig[mono.outer].name
    if mono.shape == LEFT:
        return "%s(%s(%s,%s),%s)" % (outer_name, inner_name, a, b, c)
    return "%s(%s,%s(%s,%s))" % (outer_name, a, inner_name, b, c)


def format_element3(sig, element):
    """Human-readable rendering of an arity-3 element."""
    if not element:
        return "0"
    out = []
    for mono in sorted(element, key=Monomial3.sort_key):
        coeff = element[mono]
        term = format_monomial(sig, mono)
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        body = term if mag == 1 else "%s*%s" % (mag, term)
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append("%s %s" % (sign, body))
    return " ".join(out)

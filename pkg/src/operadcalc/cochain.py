"""Symbolic interval-cochain model driving the derived-operad constructions.

The cochain complex of the interval with coefficients in a generic algebra
V has three atoms: a 0-cochain supported at the left vertex (L0), one at
the right vertex (R0), and a 1-cochain (E1).  The differential acts by
d(R0) = E1, d(L0) = -E1.  A multiplication table assigns to each
(generator, position pair) a list of (output position, payload) rules,
where the payload is a binary expression over the table's output
signature; absent entries are zero.  Evaluating an arity-3 relator under
an assignment of positions to x, y, z then produces an arity-3 element
over the output signature — the mechanism behind every derived operad
computed here.
"""

from __future__ import annotations

import itertools

from .linalg import StructuralError, mpq
from .freeop import (
    ANTISYM,
    ID,
    LEFT,
    NONSYM,
    OP,
    RIGHT,
    SYM,
    Generator,
    Signature,
    add_term,
    canonical_term,
    normalize_element2,
)

# cochain atoms
L0 = "L0"
R0 = "R0"
E1 = "E1"

# complexes: the full interval, and the two vertex-relative ones
FULL = "full"
REL_LEFT = "rel_left"   # left vertex collapsed: atoms R0, E1
REL_RIGHT = "rel_right"  # right vertex collapsed: atoms L0, E1

COMPLEX_ATOMS = {
    FULL: (L0, R0, E1),
    REL_LEFT: (R0, E1),
    REL_RIGHT: (L0, E1),
}

DIFFERENTIAL_SIGN = {R0: 1, L0: -1}  # d(R0 v) = E1 v, d(L0 v) = -E1 v

# functor families
ASS_BLACK = "ass_black"
COM_BLACK = "com_black"
PRELIE_R_BLACK = "prelie_r_black"
PRELIE_L_BLACK = "prelie_l_black"
ASS_WHITE = "ass_white"
LIE_WHITE = "lie_white"
PERM_WHITE = "perm_white"

BLACK_FAMILIES = (ASS_BLACK, COM_BLACK, PRELIE_R_BLACK, PRELIE_L_BLACK)
WHITE_FAMILIES = (ASS_WHITE, LIE_WHITE, PERM_WHITE)


class Configuration:
    """An assignment of cochain positions to the variables x, y, z."""

    def __init__(self, assignment, complex):
        self.assignment = tuple(assignment)
        self.complex = complex
        atoms = COMPLEX_ATOMS[complex]
        if sum(1 for a in self.assignment if a == E1) != 1:
            raise StructuralError("exactly one variable must sit at E1")
        for a in self.assignment:
            if a not in atoms:
                raise StructuralError(
                    "atom %s not allowed in complex %s" % (a, complex)
                )

    def __repr__(self):
        return "Configuration(%s; %s)" % (",".join(self.assignment), self.complex)


def configs_for(family):
    """The defining configurations of a derived-operad family."""
    if family in (ASS_BLACK, COM_BLACK, ASS_WHITE, LIE_WHITE):
        return [
            Configuration(a, FULL)
            for a in itertools.permutations((E1, L0, R0))
        ]
    if family in (PRELIE_R_BLACK, PERM_WHITE):
        return [
            Configuration(a, REL_LEFT)
            for a in ((E1, R0, R0), (R0, E1, R0), (R0, R0, E1))
        ]
    if family == PRELIE_L_BLACK:
        return [
            Configuration(a, REL_RIGHT)
            for a in ((E1, L0, L0), (L0, E1, L0), (L0, L0, E1))
        ]
    raise StructuralError("unknown family: %r" % (family,))


def derived_signature(family, sig):
    """Signature of the derived operad, with deterministic generator names.

    Plain source generators double into g_prec, g_succ; symmetric and
    antisymmetric ones yield a single g_circ / g_ast.  The symmetrized
    families instead emit g_star / g_brace / g_cast with symmetry types
    swapped between the symmetric classes.
    """
    gens = []
    mapping = {}  # source index -> tuple of derived indices
    doubled = family in (ASS_BLACK, PRELIE_R_BLACK, PRELIE_L_BLACK,
                         ASS_WHITE, PERM_WHITE)
    for g in sig:
        if g.symmetry == NONSYM:
            if doubled:
                i = len(gens)
                gens.append(Generator(i, g.name + "_prec", NONSYM))
                gens.append(Generator(i + 1, g.name + "_succ", NONSYM))
                mapping[g.index] = (i, i + 1)
            else:
                i = len(gens)
                gens.append(Generator(i, g.name + "_star", NONSYM))
                mapping[g.index] = (i,)
        elif g.symmetry == SYM:
            i = len(gens)
            if doubled:
                gens.append(Generator(i, g.name + "_circ", NONSYM))
            else:
                gens.append(Generator(i, g.name + "_brace", ANTISYM))
            mapping[g.index] = (i,)
        else:
            i = len(gens)
            if doubled:
                gens.append(Generator(i, g.name + "_ast", NONSYM))
            else:
                gens.append(Generator(i, g.name + "_cast", SYM))
            mapping[g.index] = (i,)
    return Signature(gens), mapping


# ---------------------------------------------------------------------------
# table construction
#
# A table maps (generator index over the *input* signature, posA, posB) to a
# list of (output position, payload) with payload an Element2 over the
# *output* signature.  For black tables the input signature is the source
# operad's and the output signature is the derived one; for white (cup)
# tables it is the other way around.


def black_table(sig, family):
    """Rules for the derived products induced by a local dg algebra
    structure on the interval (or vertex-relative) complex."""
    derived, mapping = derived_signature(
        ASS_BLACK if family == COM_BLACK else family, sig
    )
    table = {}
    for g in sig:
        if g.symmetry == NONSYM:
            prec, succ = mapping[g.index]
            p = ((1, prec, ID),)
            ms = ((-1, succ, OP),)
            both = ((1, prec, ID), (-1, succ, OP))
            table[(g.index, L0, E1)] = [(E1, p)]
            table[(g.index, E1, R0)] = [(E1, p)]
            table[(g.index, R0, E1)] = [(E1, ms)]
            table[(g.index, E1, L0)] = [(E1, ms)]
            table[(g.index, R0, R0)] = [(R0, both)]
            table[(g.index, L0, L0)] = [(L0, both)]
        elif g.symmetry == SYM:
            (circ,) = mapping[g.index]
            c = ((1, circ, ID),)
            cop = ((1, circ, OP),)
            both = ((1, circ, ID), (1, circ, OP))
            table[(g.index, L0, E1)] = [(E1, c)]
            table[(g.index, E1, R0)] = [(E1, c)]
            table[(g.index, E1, L0)] = [(E1, cop)]
            table[(g.index, R0, E1)] = [(E1, cop)]
            table[(g.index, R0, R0)] = [(R0, both)]
            table[(g.index, L0, L0)] = [(L0, both)]
        else:
            (ast,) = mapping[g.index]
            a = ((1, ast, ID),)
            maop = ((-1, ast, OP),)
            both = ((1, ast, ID), (-1, ast, OP))
            table[(g.index, L0, E1)] = [(E1, a)]
            table[(g.index, E1, R0)] = [(E1, a)]
            table[(g.index, E1, L0)] = [(E1, maop)]
            table[(g.index, R0, E1)] = [(E1, maop)]
            table[(g.index, R0, R0)] = [(R0, both)]
            table[(g.index, L0, L0)] = [(L0, both)]
    return table, derived, mapping


# cup-product position patterns: where the product of interval cochains is
# nonzero, by the orientation of the scalar factor
_CUP_FWD = ((L0, L0, L0), (R0, R0, R0), (L0, E1, E1), (E1, R0, E1))
_CUP_REV = ((L0, L0, L0), (R0, R0, R0), (R0, E1, E1), (E1, L0, E1))


def white_table(sig, family):
    """Rules for the cup products / cup brackets on the interval complex.

    Input signature is the derived one; payloads live over the source
    signature.  Each plain source generator splits into a forward and a
    reversed cup product; for the bracket family the two are combined
    into commutators / anticommutators.
    """
    derived, mapping = derived_signature(family, sig)
    table = {}

    def put(din, pattern, payload):
        for pa, pb, out in pattern:
            entry = table.setdefault((din, pa, pb), [])
            entry.append((out, payload))

    if family in (ASS_WHITE, PERM_WHITE):
        for g in sig:
            f = ((1, g.index, ID),)
            if g.symmetry == NONSYM:
                prec, succ = mapping[g.index]
                put(prec, _CUP_FWD, f)
                put(succ, _CUP_FWD, ((1, g.index, OP),))
            else:
                (d,) = mapping[g.index]
                put(d, _CUP_FWD, f)
    elif family == LIE_WHITE:
        # each derived operation combines a cup product with its opposite:
        # the commutator of the forward and reversed cup products for a
        # plain generator, the (anti)commutator of the single cup product
        # otherwise.  The opposite of a rule lives at the reversed
        # position pattern with the payload orientation toggled.
        for g in sig:
            (d,) = mapping[g.index]
            f = ((1, g.index, ID),)
            if g.symmetry == NONSYM:
                # forward cup minus the opposite of the reversed cup,
                # whose two orientation toggles cancel
                other = ((-1, g.index, ID),)
            elif g.symmetry == SYM:
                other = ((-1, g.index, OP),)
            else:
                other = ((1, g.index, OP),)
            put(d, _CUP_FWD, f)
            put(d, _CUP_REV, other)
    else:
        raise StructuralError("not a white family: %r" % (family,))

    # normalize payloads over the output (source) signature and drop zeros
    clean = {}
    for key, entries in table.items():
        acc = {}
        for out, payload in entries:
            for term in normalize_element2(sig, payload):
                k = (out, term[1], term[2])
                v = acc.get(k, 0) + term[0]
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        merged = {}
        for (out, gen, orient), coeff in acc.items():
            merged.setdefault(out, []).append((coeff, gen, orient))
        cleaned = [
            (out, normalize_element2(sig, terms))
            for out, terms in sorted(merged.items())
        ]
        cleaned = [(out, pl) for out, pl in cleaned if pl]
        if cleaned:
            clean[key] = cleaned
    return clean, derived, mapping


def table_for(family, sig):
    """(table, input signature, output signature) for a family over sig."""
    if family in BLACK_FAMILIES:
        table, derived, _ = black_table(sig, family)
        return table, sig, derived
    table, derived, _ = white_table(sig, family)
    return table, derived, sig


# ---------------------------------------------------------------------------
# evaluation


def _apply_rule(table, gen, pos_a, pos_b):
    return table.get((gen, pos_a, pos_b), ())


def eval_relator(element, config, table, out_sig):
    """Evaluate an arity-3 element bottom-up under a configuration.

    Returns a dict position -> Element3 over out_sig; the degree-1 part
    (at E1) is the derived relator.  Monomials whose inner or outer rule
    is absent contribute nothing.
    """
    pos = config.assignment
    result = {}
    for mono, coeff in element.items():
        if mono.shape == LEFT:
            ia, ib = mono.leaves[0], mono.leaves[1]
            oc = mono.leaves[2]
        else:
            ia, ib = mono.leaves[1], mono.leaves[2]
            oc = mono.leaves[0]
        for mid, inner_payload in _apply_rule(
            table, mono.inner, pos[ia], pos[ib]
        ):
            if mono.shape == LEFT:
                outer_pair = (mid, pos[oc])
            else:
                outer_pair = (pos[oc], mid)
            for fin, outer_payload in _apply_rule(
                table, mono.outer, *outer_pair
            ):
                acc = result.setdefault(fin, {})
                for occ, og, oo in outer_payload:
                    for icc, ig, io in inner_payload:
                        shape, leaves = mono.shape, list(mono.leaves)
                        if io == OP:
                            lo, hi = (0, 1) if shape == LEFT else (1, 2)
                            leaves[lo], leaves[hi] = leaves[hi], leaves[lo]
                        if oo == OP:
                            if shape == LEFT:
                                shape = RIGHT
                                leaves = [leaves[2], leaves[0], leaves[1]]
                            else:
                                shape = LEFT
                                leaves = [leaves[1], leaves[2], leaves[0]]
                        m2, c2 = canonical_term(
                            out_sig, shape, og, ig, leaves,
                            mpq(coeff) * occ * icc,
                        )
                        add_term(acc, m2, c2)
    return {p: e for p, e in result.items() if e}


def eval_relator_degree1(element, config, table, out_sig):
    """The E1 component of eval_relator (the derived relator)."""
    return eval_relator(element, config, table, out_sig).get(E1, {})


# ---------------------------------------------------------------------------
# self-checks


def _payload_sum(entries):
    """Collect (pos, gen, orient) -> coeff from a list of rule entries."""
    acc = {}
    for out, payload in entries:
        for c, g, o in payload:
            k = (out, g, o)
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return acc


def leibniz_selfcheck(table, in_sig, out_sig, atoms=(L0, R0, E1)):
    """d(a * b) = (d a) * b + (-1)^|a| a * (d b) for every table product
    of 0-cochains, expanding through the table itself."""
    zero_atoms = [a for a in atoms if a != E1]
    for gen in range(len(in_sig)):
        for pa in zero_atoms:
            for pb in zero_atoms:
                lhs = {}
                for out, payload in _apply_rule(table, gen, pa, pb):
                    if out == E1:
                        return False  # 0-cochains cannot multiply to degree 1
                    sign = DIFFERENTIAL_SIGN[out]
                    for c, g, o in payload:
                        k = (E1, g, o)
                        lhs[k] = lhs.get(k, 0) + sign * c
                rhs = _payload_sum(
                    [
                        (out, tuple((DIFFERENTIAL_SIGN[pa] * c, g, o)
                                    for c, g, o in payload))
                        for out, payload in _apply_rule(table, gen, E1, pb)
                    ]
                    + [
                        (out, tuple((DIFFERENTIAL_SIGN[pb] * c, g, o)
                                    for c, g, o in payload))
                        for out, payload in _apply_rule(table, gen, pa, E1)
                    ]
                )
                lhs = {k: v for k, v in lhs.items() if v}
                if _normalize_keyed(lhs, out_sig) != _normalize_keyed(rhs, out_sig):
                    return False
    return True


def _normalize_keyed(acc, sig):
    out = {}
    for (pos, g, o), c in acc.items():
        for nc, ng, no in normalize_element2(sig, [(c, g, o)]):
            k = (pos, ng, no)
            v = out.get(k, 0) + nc
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def symmetry_selfcheck(table, in_sig, out_sig, atoms=(L0, R0, E1)):
    """Table rules must respect the symmetry of their input generator:
    rule(a,b) equals rule(b,a) (up to sign) with the arguments swapped."""
    for g in in_sig:
        if g.symmetry == NONSYM:
            continue
        sign = 1 if g.symmetry == SYM else -1
        for pa in atoms:
            for pb in atoms:
                lhs = _payload_sum(_apply_rule(table, g.index, pa, pb))
                swapped = _payload_sum(
                    [
                        (out, tuple(
                            (sign * c, gg, ID if o == OP else OP)
                            for c, gg, o in payload
                        ))
                        for out, payload in _apply_rule(table, g.index, pb, pa)
                    ]
                )
                if _normalize_keyed(lhs, out_sig) != _normalize_keyed(
                    swapped, out_sig
                ):
                    return False
    return True

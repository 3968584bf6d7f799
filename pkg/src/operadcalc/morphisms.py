"""Morphisms between operad presentations and the black/white adjunctions.

A morphism is determined by an arity-2 image for every generator; it is
well defined when every source relator is carried into the target's
relation space.  The black and white constructions act on morphisms as
well as presentations, and each (black, white) family pair is adjoint,
with explicit unit and counit exhibited on generators.
"""

from __future__ import annotations

from .linalg import StructuralError, mpq
from .freeop import (
    ANTISYM,
    ID,
    NONSYM,
    OP,
    SYM,
    normalize_element2,
    substitute,
)
from .presentation import OperadPresentation
from .cochain import (
    ASS_BLACK,
    ASS_WHITE,
    COM_BLACK,
    E1,
    L0,
    LIE_WHITE,
    PERM_WHITE,
    PRELIE_L_BLACK,
    PRELIE_R_BLACK,
    R0,
    black_table,
    derived_signature,
)
from . import functors

ASS_PAIR = "ass"
COM_LIE_PAIR = "comlie"
PRELIE_PERM_PAIR = "prelieperm"
ADJUNCTION_FAMILIES = (ASS_PAIR, COM_LIE_PAIR, PRELIE_PERM_PAIR)

_PAIR = {
    ASS_PAIR: (ASS_BLACK, ASS_WHITE),
    COM_LIE_PAIR: (COM_BLACK, LIE_WHITE),
    PRELIE_PERM_PAIR: (PRELIE_R_BLACK, PERM_WHITE),
}


# ---------------------------------------------------------------------------
# arity-2 element helpers


def el2_op(sig, element):
    return normalize_element2(
        sig, [(c, g, OP if o == ID else ID) for c, g, o in element]
    )


def el2_scale(sig, element, scale):
    return normalize_element2(sig, [(c * scale, g, o) for c, g, o in element])


def el2_add(sig, *elements):
    terms = []
    for e in elements:
        terms.extend(e)
    return normalize_element2(sig, terms)


def el2_push(sig_out, element, images):
    """Compose an arity-2 element with generator images (also arity-2)."""
    terms = []
    for c, g, o in element:
        img = images[g]
        if o == OP:
            img = el2_op(sig_out, img)
        terms.extend((c * ci, gi, oi) for ci, gi, oi in img)
    return normalize_element2(sig_out, terms)


# ---------------------------------------------------------------------------
# morphisms


class OperadMorphism:
    """A map of presentations given by generator images."""

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = {}
        tsig = target.signature
        for g in source.signature:
            e = normalize_element2(tsig, images[g.index])
            if g.symmetry == SYM and el2_op(tsig, e) != e:
                raise StructuralError(
                    "image of symmetric %r is not symmetric" % g.name
                )
            if g.symmetry == ANTISYM and el2_op(tsig, e) != el2_scale(
                tsig, e, -1
            ):
                raise StructuralError(
                    "image of antisymmetric %r is not antisymmetric" % g.name
                )
            self.images[g.index] = e

    def apply(self, element):
        """Image of an arity-3 element under the morphism."""
        return substitute(
            element, self.images, self.source.signature, self.target.signature
        )

    def __eq__(self, other):
        return (
            isinstance(other, OperadMorphism)
            and self.source.signature == other.source.signature
            and self.target.signature == other.target.signature
            and self.images == other.images
        )

    def __repr__(self):
        return "OperadMorphism(%r -> %r)" % (
            self.source.name,
            self.target.name,
        )


def identity(o):
    return OperadMorphism(
        o, o, {g.index: ((1, g.index, ID),) for g in o.signature}
    )


def is_morphism(f):
    """Whether every source relation maps into the target's relations."""
    return all(
        f.target.contains_relation(f.apply(r))
        for r in f.source.relations.basis_vectors()
    )


def compose(g, f):
    """The composite g after f."""
    if f.target.signature != g.source.signature:
        raise StructuralError(
            "cannot compose: %r does not feed %r" % (f, g)
        )
    if (
        f.target._relations is not None
        and g.source._relations is not None
        and f.target.relations != g.source.relations
    ):
        raise StructuralError(
            "cannot compose: middle presentations disagree"
        )
    tsig = g.target.signature
    images = {
        i: el2_push(tsig, e, g.images) for i, e in f.images.items()
    }
    return OperadMorphism(f.source, g.target, images)


# ---------------------------------------------------------------------------
# the black and white constructions on morphisms

# a derived generator is recovered from the evaluation of its source
# generator at a defining atom pattern: gen = sign * eval(pattern)^orient
_PART_PATTERNS = {
    0: (L0, E1),   # first (or only) derived part
    1: (R0, E1),   # second derived part of a plain generator
}


def _eval_pattern(table, sig_out, element, pattern):
    """Evaluate an arity-2 element at an atom pattern through a table.

    Reversed terms evaluate at the swapped pattern with their payload
    orientations toggled.
    """
    a, b = pattern
    terms = []
    for c, t, o in element:
        if o == ID:
            rules = table.get((t, a, b), ())
            flip = False
        else:
            rules = table.get((t, b, a), ())
            flip = True
        for out, payload in rules:
            if out != E1:
                continue
            for cc, d, oo in payload:
                if flip:
                    oo = OP if oo == ID else ID
                terms.append((c * cc, d, oo))
    return normalize_element2(sig_out, terms)


def _black_part_image(table, dsig, element, part_rule):
    """Image of one derived generator through a table evaluation."""
    sign, orient, pattern = part_rule
    e = _eval_pattern(table, dsig, element, pattern)
    if orient == OP:
        e = el2_op(dsig, e)
    return el2_scale(dsig, e, sign)


def _part_rules(sig):
    """Per-generator recovery rules (sign, orient, pattern) for the
    derived generators of the doubled black construction."""
    rules = {}
    for g in sig:
        if g.symmetry == NONSYM:
            # eval(L0,E1) = prec ; eval(R0,E1) = -succ^op
            rules[g.index] = [
                (1, ID, _PART_PATTERNS[0]),
                (-1, OP, _PART_PATTERNS[1]),
            ]
        else:
            rules[g.index] = [(1, ID, _PART_PATTERNS[0])]
    return rules


def black_morphism(family, f):
    """The black construction applied to a morphism."""
    if family == COM_BLACK:
        return _black_com_morphism(f)
    src = functors.black(family, f.source)
    dst = functors.black(family, f.target)
    table, dsig, _ = black_table(f.target.signature, family)
    _, src_map = derived_signature(family, f.source.signature)
    images = {}
    for g in f.source.signature:
        rules = _part_rules(f.source.signature)[g.index]
        for di, rule in zip(src_map[g.index], rules):
            images[di] = _black_part_image(
                table, dsig, f.images[g.index], rule
            )
    return OperadMorphism(src, dst, images)


def _identify_images(sig, out_sig, mapping):
    """Generator images collapsing a doubled signature onto the
    symmetrized one (prec -> forward, succ -> reversed)."""
    images = {}
    derived = 0
    for g in sig:
        if g.symmetry == NONSYM:
            (t,) = mapping[g.index]
            images[derived] = ((1, t, ID),)
            images[derived + 1] = ((1, t, OP),)
            derived += 2
        else:
            (t,) = mapping[g.index]
            images[derived] = ((1, t, ID),)
            derived += 1
    return images


def _black_com_morphism(f):
    src = functors.black_com(f.source)
    dst = functors.black_com(f.target)
    table, adsig, _ = black_table(f.target.signature, ASS_BLACK)
    _, src_map = derived_signature(COM_BLACK, f.source.signature)
    _, dst_map = derived_signature(COM_BLACK, f.target.signature)
    ident = _identify_images(f.target.signature, dst.signature, dst_map)
    images = {}
    for g in f.source.signature:
        (di,) = src_map[g.index]
        e = _black_part_image(
            table, adsig, f.images[g.index], (1, ID, _PART_PATTERNS[0])
        )
        images[di] = el2_push(dst.signature, e, ident)
    return OperadMorphism(src, dst, images)


def _white_pres(family, o, lazy):
    return (
        functors.white_lazy(family, o) if lazy
        else functors.white_direct(family, o)
    )


def white_morphism(family, f, lazy_targets=False):
    """The white construction applied to a morphism."""
    src = _white_pres(family, f.source, lazy_targets)
    dst = _white_pres(family, f.target, lazy_targets)
    _, src_map = derived_signature(family, f.source.signature)
    _, dst_map = derived_signature(family, f.target.signature)
    dsig = dst.signature
    doubled = family in (ASS_WHITE, PERM_WHITE)

    def forward(t, orient):
        # the derived generator evaluating to t^orient at forward patterns
        parts = dst_map[t]
        sym = f.target.signature[t].symmetry
        if orient == ID:
            return (1, parts[0], ID)
        if sym == NONSYM:
            return (1, parts[1], ID) if doubled else (-1, parts[0], OP)
        if sym == SYM:
            return (1, parts[0], ID) if doubled else (-1, parts[0], OP)
        return (-1, parts[0], ID) if doubled else (-1, parts[0], OP)

    images = {}
    for g in f.source.signature:
        e = f.images[g.index]
        parts = src_map[g.index]
        first = normalize_element2(
            dsig, [
                (c * s, d, o)
                for c, t, orient in e
                for s, d, o in (forward(t, orient),)
            ]
        )
        images[parts[0]] = first
        if len(parts) > 1:
            flipped = normalize_element2(
                dsig, [
                    (c * s, d, o)
                    for c, t, orient in e
                    for s, d, o in (
                        forward(t, OP if orient == ID else ID),
                    )
                ]
            )
            images[parts[1]] = flipped
    return OperadMorphism(src, dst, images)


# ---------------------------------------------------------------------------
# unit and counit of the adjunctions


def _black_pres(black_family, o):
    if black_family == COM_BLACK:
        return functors.black_com(o)
    return functors.black(black_family, o)


def counit(family, o, lazy=False):
    """The adjunction counit black(white(o)) -> o on generators."""
    bf, wf = _PAIR[family]
    w = _white_pres(wf, o, lazy)
    bw = _black_pres(bf, w)
    _, w_map = derived_signature(wf, o.signature)
    _, b_map = derived_signature(bf, w.signature)
    images = {}
    for g in o.signature:
        wparts = w_map[g.index]
        if len(wparts) == 2:
            # doubled white: the forward-side parts recover the source
            # operation (the reversed side with arguments swapped); the
            # remaining parts vanish
            p1 = b_map[wparts[0]]
            p2 = b_map[wparts[1]]
            images[p1[0]] = ((1, g.index, ID),)
            images[p2[0]] = ((1, g.index, OP),)
            if len(p1) > 1:
                images[p1[1]] = ()
                images[p2[1]] = ()
        else:
            bparts = b_map[wparts[0]]
            images[bparts[0]] = ((1, g.index, ID),)
            for extra in bparts[1:]:
                images[extra] = ()
    return OperadMorphism(bw, o, images)


def unit(family, o, lazy=False):
    """The adjunction unit o -> white(black(o)) on generators."""
    bf, wf = _PAIR[family]
    b = _black_pres(bf, o)
    wb = _white_pres(wf, b, lazy)
    _, b_map = derived_signature(bf, o.signature)
    _, w_map = derived_signature(wf, b.signature)
    images = {}
    for g in o.signature:
        bparts = b_map[g.index]
        if bf == COM_BLACK:
            # the derived generators already carry the symmetry
            images[g.index] = ((1, w_map[bparts[0]][0], ID),)
        elif len(bparts) == 2:
            # the associated-element pattern, landed in forward parts
            d1 = w_map[bparts[0]][0]
            d2 = w_map[bparts[1]][0]
            images[g.index] = ((1, d1, ID), (-1, d2, OP))
        else:
            (d,) = (w_map[bparts[0]][0],)
            if g.symmetry == SYM:
                images[g.index] = ((1, d, ID), (1, d, OP))
            else:
                images[g.index] = ((1, d, ID), (-1, d, OP))
    return OperadMorphism(o, wb, images)


def triangle_check(family, o):
    """Both triangle identities of an adjunction pair, on generators."""
    bf, wf = _PAIR[family]
    # black side: counit-at-black(o) after black(unit) is the identity
    eta = unit(family, o, lazy=True)
    b_eta = black_morphism(bf, eta)
    eps_b = counit(family, _black_pres(bf, o), lazy=True)
    left = compose(eps_b, b_eta)
    if left.images != identity(_black_pres(bf, o)).images:
        return False
    # white side: white(counit) after unit-at-white(o) is the identity
    eps = counit(family, o, lazy=True)
    w_eps = white_morphism(wf, eps, lazy_targets=True)
    eta_w = unit(family, _white_pres(wf, o, True), lazy=True)
    right = compose(w_eps, eta_w)
    return right.images == identity(_white_pres(wf, o, True)).images


def associated_morphism(o):
    """The canonical morphism o -> black(ass, o) recovering each source
    operation from the derived one-sided ones."""
    b = functors.black(ASS_BLACK, o)
    _, mapping = derived_signature(ASS_BLACK, o.signature)
    images = {}
    for g in o.signature:
        parts = mapping[g.index]
        if g.symmetry == NONSYM:
            prec, succ = parts
            images[g.index] = ((1, prec, ID), (-1, succ, OP))
        elif g.symmetry == SYM:
            (circ,) = parts
            images[g.index] = ((1, circ, ID), (1, circ, OP))
        else:
            (ast,) = parts
            images[g.index] = ((1, ast, ID), (-1, ast, OP))
    return OperadMorphism(o, b, images)

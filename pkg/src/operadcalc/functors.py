"""Derived-operad constructions: black and white products, Koszul-dual
cross-check for the white ones, sums, products, polarization, opposite."""

from __future__ import annotations

from .linalg import StructuralError, kernel, span
from .freeop import (
    ANTISYM,
    ID,
    NONSYM,
    OP,
    SYM,
    Generator,
    Signature,
    basis3,
    opposite_element,
    substitute,
    variable_orbit,
)
from .presentation import OperadPresentation
from . import cochain
from .cochain import (
    ASS_BLACK,
    ASS_WHITE,
    COM_BLACK,
    LIE_WHITE,
    PERM_WHITE,
    PRELIE_L_BLACK,
    PRELIE_R_BLACK,
    configs_for,
    derived_signature,
    eval_relator_degree1,
    table_for,
)
from . import koszul


def black(family, o):
    """Black product with the associative / pre-Lie (left or right) factor.

    The derived relators are the degree-one evaluations of the source
    relators over the family's defining configurations.
    """
    if family not in (ASS_BLACK, PRELIE_R_BLACK, PRELIE_L_BLACK):
        raise StructuralError("not a direct black family: %r" % (family,))
    table, _, out_sig = table_for(family, o.signature)
    configs = configs_for(family)
    seen = []
    for r in o.relators:
        for c in configs:
            e = eval_relator_degree1(r, c, table, out_sig)
            if e and e not in seen:
                seen.append(e)
    name = {
        ASS_BLACK: "ass.",
        PRELIE_R_BLACK: "prelie.",
        PRELIE_L_BLACK: "prelie_l.",
    }[family]
    return OperadPresentation(name + o.name, out_sig, seen)


def black_com(o):
    """Black product with the commutative factor: the associative case
    followed by identifying each pair of one-sided products (and
    symmetrizing the remaining ones)."""
    bo = black(ASS_BLACK, o)
    out_sig, _ = derived_signature(COM_BLACK, o.signature)
    # the doubled generators of bo line up with o's generators in order
    images = {}
    derived_index = 0
    target_index = 0
    for g in o.signature:
        if g.symmetry == NONSYM:
            images[derived_index] = ((1, target_index, ID),)
            images[derived_index + 1] = ((1, target_index, OP),)
            derived_index += 2
        else:
            images[derived_index] = ((1, target_index, ID),)
            derived_index += 1
        target_index += 1
    relators = []
    for r in bo.relators:
        e = substitute(r, images, bo.signature, out_sig)
        if e and e not in relators:
            relators.append(e)
    return OperadPresentation("com." + o.name, out_sig, relators)


def _white_map(family, o):
    """The linear map whose kernel is the white relation space.

    Each derived arity-3 monomial evaluates, under every defining
    configuration, to an arity-3 element over the source; the map records
    these evaluations reduced modulo the source relations.
    """
    table, in_sig, out_sig = table_for(family, o.signature)
    configs = configs_for(family)
    rel = o.relations
    ambient = basis3(in_sig)

    def image(element):
        out = {}
        for ci, c in enumerate(configs):
            e = eval_relator_degree1(element, c, table, out_sig)
            for k, v in rel.reduce(e).items():
                out[(ci, k)] = v
        return out

    return in_sig, ambient, image


def white_direct(family, o):
    """White product with the associative / Lie / permutative factor,
    computed as the kernel of the evaluation map."""
    if family not in (ASS_WHITE, LIE_WHITE, PERM_WHITE):
        raise StructuralError("not a white family: %r" % (family,))
    in_sig, ambient, image = _white_map(family, o)
    ker = kernel({m: image({m: 1}) for m in ambient}, ambient)
    name = {ASS_WHITE: "ass o ", LIE_WHITE: "lie o ", PERM_WHITE: "perm o "}[
        family
    ]
    pres = OperadPresentation(
        name + o.name,
        in_sig,
        ker.basis_vectors(),
        membership_fn=lambda v: not image(v),
    )
    pres._relations = ker
    return pres


def white_lazy(family, o):
    """A white product whose relation space is never materialized:
    membership is decided by evaluating through the defining map.  Used
    where only a membership oracle is required."""
    in_sig, ambient, image = _white_map(family, o)
    name = {ASS_WHITE: "ass o ", LIE_WHITE: "lie o ", PERM_WHITE: "perm o "}[
        family
    ]
    return OperadPresentation(
        name + o.name, in_sig, [], membership_fn=lambda v: not image(v)
    )


_DUAL_FAMILY = {
    ASS_WHITE: ASS_BLACK,
    LIE_WHITE: COM_BLACK,
    PERM_WHITE: PRELIE_R_BLACK,
}


def white_via_dual(family, o):
    """White product computed through duality: the dual of the matching
    black product of the dual."""
    dual_o = koszul.dual(o)
    if _DUAL_FAMILY[family] == COM_BLACK:
        b = black_com(dual_o)
    else:
        b = black(_DUAL_FAMILY[family], dual_o)
    result = koszul.dual(b)
    # realign generator names with the direct construction (the symmetry
    # pattern of the two signatures agrees position by position)
    direct_sig, _ = derived_signature(family, o.signature)
    if result.signature.symmetry_sequence() != direct_sig.symmetry_sequence():
        raise StructuralError("dual-route signature mismatch")
    renamed = OperadPresentation(
        "ass o " + o.name if family == ASS_WHITE else result.name,
        direct_sig,
        result.relators,
    )
    return renamed


def sum_(o, p):
    """Disjoint union of presentations: both structures, no interaction."""
    sig, emb_o, emb_p = _concat_signatures(o, p)
    relators = [
        substitute(r, emb_o, o.signature, sig) for r in o.relators
    ] + [substitute(r, emb_p, p.signature, sig) for r in p.relators]
    return OperadPresentation("%s + %s" % (o.name, p.name), sig, relators)


def prod(o, p):
    """Like sum_, with every mixed triple product additionally vanishing."""
    s = sum_(o, p)
    n_o = len(o.signature)
    mixed = [
        {m: 1}
        for m in basis3(s.signature)
        if (m.outer < n_o) != (m.inner < n_o)
    ]
    return OperadPresentation(
        "%s x %s" % (o.name, p.name), s.signature, s.relators + mixed
    )


def _concat_signatures(o, p):
    names = set()
    gens = []
    emb_o = {}
    for g in o.signature:
        name = g.name
        if name in names:
            name = "l_" + name
        names.add(name)
        emb_o[g.index] = ((1, len(gens), ID),)
        gens.append(Generator(len(gens), name, g.symmetry))
    emb_p = {}
    for g in p.signature:
        name = g.name
        if name in names:
            name = "r_" + name
        names.add(name)
        emb_p[g.index] = ((1, len(gens), ID),)
        gens.append(Generator(len(gens), name, g.symmetry))
    return Signature(gens), emb_o, emb_p


def adm(o):
    """Polarization: split each operation into one-sided halves whose
    prescribed (anti)symmetrizations satisfy the original relations."""
    out_sig, mapping = derived_signature(ASS_BLACK, o.signature)
    images = {}
    for g in o.signature:
        if g.symmetry == NONSYM:
            prec, succ = mapping[g.index]
            images[g.index] = ((1, prec, ID), (1, succ, ID))
        elif g.symmetry == SYM:
            (circ,) = mapping[g.index]
            images[g.index] = ((1, circ, ID), (1, circ, OP))
        else:
            (ast,) = mapping[g.index]
            images[g.index] = ((1, ast, ID), (-1, ast, OP))
    relators = [
        substitute(r, images, o.signature, out_sig) for r in o.relators
    ]
    return OperadPresentation(o.name + "_adm", out_sig, relators)


def opposite_operad(o):
    """Same signature with every operation reversed."""
    relators = [opposite_element(o.signature, r) for r in o.relators]
    return OperadPresentation(o.name + "_op", o.signature, relators)

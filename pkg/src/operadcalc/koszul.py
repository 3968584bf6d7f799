"""Quadratic duality for binary operad presentations.

The dual presentation lives on the sign-transposed signature (plain
generators stay plain, commutative and anticommutative swap) and its
relation space is the annihilator of the original relations under a
canonical bilinear pairing of the arity-3 components.

The pairing is defined through the fully plain picture: a commutative
generator b lifts to b + b^op, an anticommutative c to c - c^op, and two
plain tree monomials pair nontrivially exactly when they have the same
shape, the same generator in each vertex slot, and the same leaf word;
the value is the sign of the leaf permutation, negated on right-combed
trees.  This convention is pinned by the duality checks in the test
suite (com/lie, prelie/perm, diass/dend); flipping either sign globally
only rescales rows and yields the same annihilators.
"""

from __future__ import annotations

import itertools

from .linalg import annihilator, mpq
from .freeop import (
    ANTISYM,
    ID,
    NONSYM,
    OP,
    RIGHT,
    SYM,
    Generator,
    Signature,
    basis3,
    substitute,
)
from .presentation import OperadPresentation

_DUAL_SYMMETRY = {NONSYM: NONSYM, SYM: ANTISYM, ANTISYM: SYM}

_PERM_SIGN = {
    perm: 1 - 2 * (sum(a > b for a, b in itertools.combinations(perm, 2)) % 2)
    for perm in itertools.permutations((0, 1, 2))
}


def dual_name(name):
    if name.endswith("_dual"):
        return name[: -len("_dual")]
    return name + "_dual"


def dual_signature(sig):
    """The signature of the dual presentation (involutive up to naming)."""
    return Signature(
        Generator(g.index, dual_name(g.name), _DUAL_SYMMETRY[g.symmetry])
        for g in sig
    )


def _plain_signature(sig):
    return Signature(
        Generator(g.index, "g%d" % g.index, NONSYM) for g in sig
    )


_LIFT_IMAGE = {
    NONSYM: lambda i: ((mpq(1), i, ID),),
    SYM: lambda i: ((mpq(1), i, ID), (mpq(1), i, OP)),
    ANTISYM: lambda i: ((mpq(1), i, ID), (mpq(-1), i, OP)),
}


def lift_element(sig, element):
    """An arity-3 element rewritten over the fully plain signature."""
    plain = _plain_signature(sig)
    images = {g.index: _LIFT_IMAGE[g.symmetry](g.index) for g in sig}
    return substitute(element, images, sig, plain)


def _mono_sign(mono):
    s = _PERM_SIGN[mono.leaves]
    return -s if mono.shape == RIGHT else s


def pairing_table(sig):
    """The duality pairing, one sparse row per canonical monomial.

    Maps each basis monomial of the arity-3 component over `sig` to its
    pairings with the basis monomials over the dual signature.
    """
    dsig = dual_signature(sig)
    lifted_left = {m: lift_element(sig, {m: mpq(1)}) for m in basis3(sig)}
    lifted_right = {m: lift_element(dsig, {m: mpq(1)}) for m in basis3(dsig)}
    table = {}
    for m, lm in lifted_left.items():
        # each (anti)symmetric vertex doubles the number of matching plain
        # terms; normalize so every vertex contributes a bare sign
        scale = mpq(1, 2 ** sum(
            sig[g].symmetry != NONSYM for g in (m.outer, m.inner)
        ))
        row = {}
        for mp, lmp in lifted_right.items():
            val = mpq(0)
            for k, c in lm.items():
                cp = lmp.get(k)
                if cp:
                    val += c * cp * _mono_sign(k)
            if val:
                row[mp] = val * scale
        table[m] = row
    return table


def pairing_matrix(sig):
    """Dense matrix of the pairing over (basis3(sig), basis3(dual))."""
    dsig = dual_signature(sig)
    cols = basis3(dsig)
    table = pairing_table(sig)
    return [[table[m].get(mp, mpq(0)) for mp in cols] for m in basis3(sig)]


def dual(o):
    """The quadratically dual presentation."""
    dsig = dual_signature(o.signature)
    ann = annihilator(o.relations, pairing_table(o.signature), basis3(dsig))
    pres = OperadPresentation(dual_name(o.name), dsig, ann.basis_vectors())
    pres._relations = ann
    return pres

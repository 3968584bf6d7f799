"""Identify computed presentations with named catalog entries.

Two presentations on the same signature shape may present the same operad
with differently chosen generators.  Recognition searches the finite
group of class-preserving generator transformations -- permutations
within each symmetry class, sign flips, and orientation reversals of the
plain generators -- for one carrying the candidate's relation space onto
the given one.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .freeop import ID, NONSYM, OP, SYM, ANTISYM, substitute, variable_orbit
from .linalg import span
from . import zoo


TRANSFORM_BOUND = 10 ** 6


@dataclass(frozen=True)
class GenTransform:
    """A change of generators: target position, sign, orientation per gen.

    `permutation[i]` is the generator of the transformed presentation
    that generator i is sent to; `signs[i]` scales it and `orients[i]`
    optionally reverses it (always ID for non-plain generators, whose
    reversal is already a sign).
    """

    permutation: tuple
    signs: tuple
    orients: tuple

    def is_identity(self):
        n = len(self.permutation)
        return (
            self.permutation == tuple(range(n))
            and self.signs == (1,) * n
            and self.orients == (ID,) * n
        )

    def images(self):
        return {
            i: ((self.signs[i], self.permutation[i], self.orients[i]),)
            for i in range(len(self.permutation))
        }

    def describe(self, sig):
        if self.is_identity():
            return "identity"
        parts = []
        for i, g in enumerate(sig):
            j, s, o = self.permutation[i], self.signs[i], self.orients[i]
            if (j, s, o) == (i, 1, ID):
                continue
            img = ("-" if s < 0 else "") + sig[j].name
            if o == OP:
                img += "^op"
            parts.append("%s -> %s" % (g.name, img))
        return ", ".join(parts)


def transform_relations(pres, t):
    """The relation space of `pres` rewritten through a GenTransform."""
    images = t.images()
    vecs = []
    for r in pres.relations.basis_vectors():
        e = substitute(r, images, pres.signature, pres.signature)
        vecs.extend(variable_orbit(pres.signature, e))
    return span(vecs, pres.basis3)


def equal_presentations(o, p):
    """Whether two presentations have identical relation spaces.

    Requires the same symmetry sequence in the same generator order;
    a shape mismatch is reported as inequality, not an error.
    """
    if o.signature.symmetry_sequence() != p.signature.symmetry_sequence():
        return False
    return o.relations == p.relations


def _class_permutations(sig):
    """All generator permutations preserving each symmetry class."""
    classes = {}
    for g in sig:
        classes.setdefault(g.symmetry, []).append(g.index)
    keys = sorted(classes)
    pools = [itertools.permutations(classes[k]) for k in keys]
    for combo in itertools.product(*pools):
        perm = [None] * len(sig)
        for k, images in zip(keys, combo):
            for src, dst in zip(classes[k], images):
                perm[src] = dst
        yield tuple(perm)


def transforms_for(sig):
    """All GenTransforms of a signature, in deterministic order."""
    n = len(sig)
    plain = [g.index for g in sig if g.symmetry == NONSYM]
    for perm in _class_permutations(sig):
        for signs in itertools.product((1, -1), repeat=n):
            for sub in itertools.product((ID, OP), repeat=len(plain)):
                orients = [ID] * n
                for i, o in zip(plain, sub):
                    orients[i] = o
                yield GenTransform(perm, signs, tuple(orients))


def transform_count(sig):
    counts = {}
    for g in sig:
        counts[g.symmetry] = counts.get(g.symmetry, 0) + 1
    total = 2 ** len(sig) * 2 ** counts.get(NONSYM, 0)
    for c in counts.values():
        for k in range(2, c + 1):
            total *= k
    return total


def matches_against(o, candidate):
    """All GenTransforms t with transform_relations(candidate, t) == Rel(o)."""
    if o.signature.symmetry_sequence() != candidate.signature.symmetry_sequence():
        return []
    if o.relations.dim != candidate.relations.dim:
        return []
    if transform_count(o.signature) > TRANSFORM_BOUND:
        warnings.warn(
            "transform group of %r exceeds the search bound; skipped"
            % candidate.name
        )
        return []
    found = []
    for t in transforms_for(o.signature):
        if transform_relations(candidate, t) == o.relations:
            found.append(t)
    return found


def match_zoo(o, candidates=None):
    """Catalog entries equal to `o` up to a generator transform.

    Returns a list of (zoo key, GenTransform) pairs covering every
    matching transform of every matching entry, in catalog order.
    """
    if candidates is None:
        entries = zoo.zoo_entries()
        counts = o.counts()
        if o.relations.dim == 0 and counts != (0, 0, 0):
            entries = entries + [
                ("mag_{%d,%d,%d}" % counts, zoo.mag(*counts))
            ]
    else:
        entries = [(k, zoo.zoo_get(k)) for k in candidates]
    out = []
    for key, pres in entries:
        for t in matches_against(o, pres):
            out.append((key, t))
    return out

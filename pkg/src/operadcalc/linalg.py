"""Exact linear algebra over the rationals on sparse vectors.

Vectors are plain dicts mapping basis keys to nonzero rationals.  A basis
("ambient") is an ordered tuple of hashable keys; all canonical forms are
taken with respect to that order.  Everything here is exact: scalars are
arbitrary-precision rationals (gmpy2.mpq when available).
"""

from __future__ import annotations

try:
    from gmpy2 import mpq
except ImportError:  # pragma: no cover
    from fractions import Fraction as mpq

QQ = mpq
ZERO = mpq(0)
ONE = mpq(1)


class StructuralError(ValueError):
    """Raised on malformed inputs: unknown keys, mismatched ambients."""


def vec_add(u, v, scale=ONE):
    """u + scale*v on sparse dicts, dropping zeros."""
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, ZERO) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(u, scale):
    if not scale:
        return {}
    return {k: scale * c for k, c in u.items()}


class Subspace:
    """A subspace given by its reduced row-echelon basis over a fixed ambient.

    Rows are index-keyed sparse dicts; `rows[p]` has pivot `p` with
    coefficient 1, and no other row has support at p.  Equality of
    subspaces is literal equality of this canonical form.
    """

    def __init__(self, ambient, rows):
        self.ambient = tuple(ambient)
        self.index = {k: i for i, k in enumerate(self.ambient)}
        if len(self.index) != len(self.ambient):
            raise StructuralError("ambient basis has duplicate keys")
        self.rows = rows  # dict pivot_index -> sparse index dict

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ambient_dim(self):
        return len(self.ambient)

    @classmethod
    def span(cls, vectors, ambient):
        """RREF basis of the linear span of key-keyed sparse vectors."""
        sub = cls(ambient, {})
        index = sub.index
        rows = {}
        for v in vectors:
            w = {}
            for k, c in v.items():
                if k not in index:
                    raise StructuralError("unknown basis key: %r" % (k,))
                if c:
                    w[index[k]] = mpq(c)
            _echelon_insert(rows, w)
        _back_substitute(rows)
        sub.rows = rows
        return sub

    def _to_indices(self, v):
        w = {}
        for k, c in v.items():
            if k not in self.index:
                raise StructuralError("unknown basis key: %r" % (k,))
            if c:
                w[self.index[k]] = mpq(c)
        return w

    def reduce(self, v):
        """Remainder of v after elimination against the basis (key-keyed)."""
        w = _reduce_full(self.rows, self._to_indices(v))
        return {self.ambient[i]: c for i, c in w.items()}

    def contains(self, v):
        return not _reduce_full(self.rows, self._to_indices(v))

    def basis_vectors(self):
        """Basis as key-keyed dicts, in increasing pivot order."""
        return [
            {self.ambient[i]: c for i, c in self.rows[p].items()}
            for p in sorted(self.rows)
        ]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient != other.ambient:
            raise StructuralError("ambient mismatch in subspace comparison")
        return self.rows == other.rows

    def __hash__(self):  # pragma: no cover
        raise TypeError("Subspace is not hashable")

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)


def _echelon_insert(rows, w):
    """Insert one index-keyed vector into an echelon row set (in place)."""
    while w:
        lead = min(w)
        if lead in rows:
            coeff = w[lead]
            row = rows[lead]
            for i, c in row.items():
                s = w.get(i, ZERO) - coeff * c
                if s:
                    w[i] = s
                else:
                    w.pop(i, None)
        else:
            inv = 1 / w[lead]
            rows[lead] = {i: c * inv for i, c in w.items()}
            return


def _back_substitute(rows):
    """Bring an echelon row set to full RREF (in place)."""
    for p in sorted(rows, reverse=True):
        row = rows[p]
        for q in [i for i in row if i != p and i in rows]:
            coeff = row[q]
            for i, c in rows[q].items():
                s = row.get(i, ZERO) - coeff * c
                if s:
                    row[i] = s
                else:
                    row.pop(i, None)


def _reduce_full(rows, w):
    """Eliminate every pivot position from an index-keyed vector."""
    pending = sorted(k for k in w if k in rows)
    while pending:
        lead = pending.pop(0)
        coeff = w.get(lead)
        if not coeff:
            continue
        for i, c in rows[lead].items():
            s = w.get(i, ZERO) - coeff * c
            if s:
                if i not in w and i in rows and i > lead:
                    pending.append(i)
                w[i] = s
            else:
                w.pop(i, None)
        pending.sort()
    return w


def span(vectors, ambient):
    return Subspace.span(vectors, ambient)


def kernel(columns, ambient_in):
    """Null space of a linear map given column by column.

    `columns` maps every input key to its image, a sparse dict over an
    arbitrary output basis.  Returns the kernel as a Subspace over
    `ambient_in`; rank-nullity holds by construction.
    """
    ambient_in = tuple(ambient_in)
    in_index = {k: i for i, k in enumerate(ambient_in)}
    missing = [k for k in ambient_in if k not in columns]
    if missing:
        raise StructuralError("unmapped input key: %r" % (missing[0],))
    out_index = {}
    rows = {}
    n_in = len(ambient_in)

    def out_idx(k):
        if k not in out_index:
            # output coordinates are eliminated first: negative positions
            out_index[k] = -len(out_index) - 1
        return out_index[k]

    # Rows are graph vectors (image | unit); echelon rows whose pivot lies
    # in the input block have vanishing image, i.e. are kernel elements.
    order = {}
    for k in ambient_in:
        w = {}
        for ok, c in columns[k].items():
            if c:
                w[out_idx(ok)] = mpq(c)
        w[in_index[k]] = ONE
        _echelon_insert(rows, w)
    kernel_vecs = []
    for p, row in rows.items():
        if p >= 0:
            kernel_vecs.append(
                {ambient_in[i]: c for i, c in row.items() if i >= 0}
            )
    return Subspace.span(kernel_vecs, ambient_in)


def annihilator(sub, pairing, ambient_b):
    """{v in ambient_b : <s, v> = 0 for all s in sub}.

    `pairing` maps keys of sub.ambient to sparse dicts over ambient_b.
    """
    ambient_b = tuple(ambient_b)
    functionals = []
    for s in sub.basis_vectors():
        w = {}
        for a, c in s.items():
            for b, p in pairing.get(a, {}).items():
                s2 = w.get(b, ZERO) + c * p
                if s2:
                    w[b] = s2
                else:
                    w.pop(b, None)
        functionals.append(w)
    columns = {
        b: {i: f[b] for i, f in enumerate(functionals) if b in f}
        for b in ambient_b
    }
    return kernel(columns, ambient_b)

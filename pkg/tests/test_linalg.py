import pytest
from hypothesis import given, settings, strategies as st

from operadcalc.linalg import (
    StructuralError,
    Subspace,
    annihilator,
    kernel,
    mpq,
    span,
    vec_add,
    vec_scale,
)

AMBIENT = tuple("abcdef")


def vec(**kw):
    return {k: mpq(v) for k, v in kw.items()}


def test_vec_add_drops_zeros():
    u = vec(a=1, b=2)
    v = vec(b=-2, c=3)
    assert vec_add(u, v) == vec(a=1, c=3)
    assert vec_scale(u, 0) == {}


def test_span_basics():
    s = span([vec(a=1, b=1), vec(b=1, c=1), vec(a=1, c=-1)], AMBIENT)
    assert s.dim == 2
    assert s.contains(vec(a=2, b=2))
    assert s.contains(vec(a=1, c=-1))
    assert not s.contains(vec(a=1))


def test_span_rejects_unknown_key():
    with pytest.raises(StructuralError):
        span([{"nope": mpq(1)}], AMBIENT)


def test_duplicate_ambient_rejected():
    with pytest.raises(StructuralError):
        Subspace(("a", "a"), {})


def test_subspace_equality_same_space_different_generators():
    s = span([vec(a=1, b=2), vec(c=1)], AMBIENT)
    t = span([vec(a=2, b=4, c=5), vec(c=-3)], AMBIENT)
    assert s == t


def test_subspace_ambient_mismatch_raises():
    s = span([vec(a=1)], AMBIENT)
    t = span([{"z": mpq(1)}], ("z",))
    with pytest.raises(StructuralError):
        s == t


def test_reduce_is_zero_on_members():
    s = span([vec(a=1, b=1), vec(c=2, d=1)], AMBIENT)
    assert s.reduce(vec(a=3, b=3, c=2, d=1)) == {}
    r = s.reduce(vec(a=1, e=1))
    assert r and s.contains(vec_add(vec(a=1, e=1), r, mpq(-1)))


small_rationals = st.integers(min_value=-4, max_value=4).map(mpq)


@st.composite
def sparse_vectors(draw):
    keys = draw(st.sets(st.sampled_from(AMBIENT), max_size=4))
    return {k: c for k in keys if (c := draw(small_rationals))}


@settings(deadline=None, max_examples=60)
@given(st.lists(sparse_vectors(), max_size=6))
def test_rref_idempotent(vectors):
    s = span(vectors, AMBIENT)
    again = span(s.basis_vectors(), AMBIENT)
    assert again.rows == s.rows


@settings(deadline=None, max_examples=60)
@given(st.lists(sparse_vectors(), min_size=6, max_size=6))
def test_kernel_rank_nullity(columns):
    mapping = dict(zip(AMBIENT, columns))
    ker = kernel(mapping, AMBIENT)
    rank = span(columns, AMBIENT).dim
    assert ker.dim + rank == len(AMBIENT)
    for v in ker.basis_vectors():
        image = {}
        for k, c in v.items():
            image = vec_add(image, mapping[k], c)
        assert image == {}


def test_kernel_requires_all_columns():
    with pytest.raises(StructuralError):
        kernel({"a": {}}, AMBIENT)


def test_annihilator_with_identity_pairing():
    pairing = {k: {k: mpq(1)} for k in AMBIENT}
    s = span([vec(a=1, b=1), vec(c=1)], AMBIENT)
    ann = annihilator(s, pairing, AMBIENT)
    assert ann.dim == len(AMBIENT) - s.dim
    for v in ann.basis_vectors():
        for u in s.basis_vectors():
            assert sum((u.get(k, 0)) * c for k, c in v.items()) == 0

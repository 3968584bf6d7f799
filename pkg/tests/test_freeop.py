import itertools

import pytest
from hypothesis import given, settings, strategies as st

from operadcalc.freeop import (
    ANTISYM,
    ID,
    LEFT,
    NONSYM,
    OP,
    RIGHT,
    SYM,
    basis3,
    canonical_term,
    make_signature,
    normalize_element2,
    opposite_element,
    permute_variables,
    substitute,
    variable_orbit,
)
from operadcalc.linalg import StructuralError, mpq


def sig_of(p, q, r):
    spec = [("n%d" % i, NONSYM) for i in range(p)]
    spec += [("s%d" % i, SYM) for i in range(q)]
    spec += [("a%d" % i, ANTISYM) for i in range(r)]
    return make_signature(spec)


counts = st.tuples(
    st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)
).filter(lambda t: 0 < sum(t) <= 3)


@settings(deadline=None, max_examples=40)
@given(counts)
def test_basis3_counts_match_enumeration(pqr):
    """Pick the pair of variables combining first (3 ways), then an inner
    and an outer operation from the arity-2 component."""
    sig = sig_of(*pqr)
    arity2 = []
    for g in sig:
        arity2.append((g.index, ID))
        if g.symmetry == NONSYM:
            arity2.append((g.index, OP))
    assert len(basis3(sig)) == 3 * len(arity2) ** 2


@settings(deadline=None, max_examples=40)
@given(counts, st.data())
def test_canonical_term_idempotent(pqr, data):
    sig = sig_of(*pqr)
    n = len(sig)
    shape = data.draw(st.sampled_from((LEFT, RIGHT)))
    outer = data.draw(st.integers(0, n - 1))
    inner = data.draw(st.integers(0, n - 1))
    leaves = data.draw(st.permutations((0, 1, 2)))
    m, c = canonical_term(sig, shape, outer, inner, leaves, 1)
    m2, c2 = canonical_term(sig, m.shape, m.outer, m.inner, m.leaves, c)
    assert (m2, c2) == (m, c)


def test_canonical_basis_is_canonical():
    sig = sig_of(1, 1, 1)
    for m in basis3(sig):
        m2, c = canonical_term(sig, m.shape, m.outer, m.inner, m.leaves, 1)
        assert m2 == m and c == 1


def test_normalize_element2_folds_orientations():
    sig = sig_of(1, 1, 1)
    n, s, a = 0, 1, 2
    assert normalize_element2(sig, [(1, s, OP)]) == ((1, s, ID),)
    assert normalize_element2(sig, [(1, a, OP)]) == ((-1, a, ID),)
    assert normalize_element2(sig, [(1, n, OP)]) == ((1, n, OP),)
    assert normalize_element2(sig, [(1, n, ID), (-1, n, ID)]) == ()


def element_strategy(sig):
    monos = st.sampled_from(basis3(sig))
    coeffs = st.integers(-3, 3).filter(bool).map(mpq)
    return st.dictionaries(monos, coeffs, max_size=4)


@settings(deadline=None, max_examples=40)
@given(counts, st.data())
def test_permute_variables_is_a_group_action(pqr, data):
    sig = sig_of(*pqr)
    e = data.draw(element_strategy(sig))
    p1 = data.draw(st.permutations((0, 1, 2)))
    p2 = data.draw(st.permutations((0, 1, 2)))
    composed = tuple(p2[p1[i]] for i in range(3))
    step = permute_variables(sig, permute_variables(sig, e, p1), p2)
    assert step == permute_variables(sig, e, composed)
    ident = permute_variables(sig, e, (0, 1, 2))
    assert ident == e


@settings(deadline=None, max_examples=40)
@given(counts, st.data())
def test_variable_orbit_closed(pqr, data):
    sig = sig_of(*pqr)
    e = data.draw(element_strategy(sig))
    orbit = variable_orbit(sig, e)
    assert len(orbit) == 6
    for perm in itertools.permutations((0, 1, 2)):
        assert permute_variables(sig, e, perm) in orbit


@settings(deadline=None, max_examples=40)
@given(counts, st.data())
def test_substitute_identity(pqr, data):
    sig = sig_of(*pqr)
    e = data.draw(element_strategy(sig))
    images = {g.index: ((1, g.index, ID),) for g in sig}
    assert substitute(e, images, sig, sig) == e


@settings(deadline=None, max_examples=40)
@given(counts, st.data())
def test_opposite_is_involutive(pqr, data):
    sig = sig_of(*pqr)
    e = data.draw(element_strategy(sig))
    assert opposite_element(sig, opposite_element(sig, e)) == e


def test_signature_validation():
    with pytest.raises(StructuralError):
        make_signature([("m", "weird")])
    with pytest.raises(StructuralError):
        make_signature([("m", NONSYM), ("m", SYM)])

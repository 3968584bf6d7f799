import itertools

import pytest
from hypothesis import given, settings, strategies as st

from operadcalc import zoo
from operadcalc.freeop import (
    ANTISYM,
    NONSYM,
    SYM,
    basis3,
    make_signature,
    permute_variables,
)
from operadcalc.koszul import (
    dual,
    dual_name,
    dual_signature,
    lift_element,
    pairing_matrix,
    pairing_table,
)
from operadcalc.linalg import mpq, span
from operadcalc.recognize import equal_presentations, matches_against

MIXED = make_signature([("m", NONSYM), ("b", SYM), ("c", ANTISYM)])


def test_dual_signature_swaps_symmetric_classes():
    d = dual_signature(MIXED)
    assert [g.symmetry for g in d] == [NONSYM, ANTISYM, SYM]
    assert dual_signature(d).symmetry_sequence() == MIXED.symmetry_sequence()


def test_dual_name_is_involutive():
    assert dual_name("ass") == "ass_dual"
    assert dual_name(dual_name("ass")) == "ass"


def test_lift_of_symmetric_generator_has_two_terms():
    e = {m: mpq(1) for m in basis3(MIXED)[:1]}
    lifted = lift_element(MIXED, e)
    assert sum(1 for _ in lifted) >= 1


@pytest.mark.parametrize(
    "sig",
    [
        make_signature([("m", NONSYM)]),
        make_signature([("b", SYM)]),
        make_signature([("c", ANTISYM)]),
        MIXED,
    ],
    ids=["plain", "sym", "antisym", "mixed"],
)
def test_pairing_nondegenerate(sig):
    rows = list(pairing_table(sig).values())
    assert span(rows, basis3(dual_signature(sig))).dim == len(basis3(sig))


@settings(deadline=None, max_examples=30)
@given(st.permutations((0, 1, 2)), st.data())
def test_pairing_equivariance(perm, data):
    """Pairing twists by the sign of a simultaneous variable relabelling."""
    sig = MIXED
    dsig = dual_signature(sig)
    table = pairing_table(sig)
    sign = 1 if tuple(perm) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
    m = data.draw(st.sampled_from(basis3(sig)))
    mp = data.draw(st.sampled_from(basis3(dsig)))
    left = permute_variables(sig, {m: mpq(1)}, perm)
    right = permute_variables(dsig, {mp: mpq(1)}, perm)
    moved = mpq(0)
    for a, ca in left.items():
        row = table.get(a, {})
        for b, cb in right.items():
            moved += ca * cb * row.get(b, mpq(0))
    assert moved == sign * table.get(m, {}).get(mp, mpq(0))


def test_pairing_matrix_is_square():
    m = pairing_matrix(MIXED)
    assert len(m) == len(basis3(MIXED))
    assert all(len(row) == len(basis3(dual_signature(MIXED))) for row in m)


@pytest.mark.parametrize(
    "a,b",
    [("com", "lie"), ("ass", "ass"), ("prelie", "perm"), ("leib", "zinb")],
)
def test_classical_dual_pairs(a, b):
    assert matches_against(dual(zoo.zoo_get(a)), zoo.zoo_get(b))


@pytest.mark.parametrize("key", ["ass", "com", "pois", "postlie", "dend"])
def test_double_dual_identity(key):
    o = zoo.zoo_get(key)
    assert equal_presentations(dual(dual(o)), o)


@pytest.mark.parametrize("key", ["ass", "lie", "pois", "postcom"])
def test_dual_dimensions_complementary(key):
    o = zoo.zoo_get(key)
    d = dual(o)
    assert o.relations.dim + d.relations.dim == len(basis3(o.signature))

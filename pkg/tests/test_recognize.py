import pytest

from operadcalc import functors, zoo
from operadcalc.cochain import PRELIE_R_BLACK
from operadcalc.freeop import ANTISYM, ID, NONSYM, OP, SYM, make_signature
from operadcalc.recognize import (
    GenTransform,
    equal_presentations,
    match_zoo,
    matches_against,
    transform_count,
    transform_relations,
    transforms_for,
)


def test_identity_transform():
    t = GenTransform((0, 1), (1, 1), (ID, ID))
    assert t.is_identity()
    assert t.describe(zoo.zoo_get("diass").signature) == "identity"


def test_describe_mentions_changed_generators():
    sig = zoo.zoo_get("diass").signature
    t = GenTransform((1, 0), (1, -1), (ID, OP))
    d = t.describe(sig)
    assert "->" in d and "^op" in d


def test_transform_count_formula():
    sig = make_signature(
        [("m", NONSYM), ("n", NONSYM), ("b", SYM), ("c", ANTISYM)]
    )
    # 2 plain generators may permute (2), all four flip sign (2^4),
    # plain ones may reverse (2^2)
    assert transform_count(sig) == 2 * 16 * 4
    assert transform_count(sig) == sum(1 for _ in transforms_for(sig))


def test_transform_relations_identity():
    o = zoo.zoo_get("prelie")
    t = GenTransform((0,), (1,), (ID,))
    assert transform_relations(o, t) == o.relations


def test_equal_presentations_guards_shape():
    assert not equal_presentations(zoo.zoo_get("ass"), zoo.zoo_get("com"))
    assert equal_presentations(zoo.zoo_get("ass"), zoo.zoo_get("ass"))


def test_matches_against_dimension_prefilter():
    assert matches_against(zoo.zoo_get("ass"), zoo.zoo_get("nilass")) == []


def test_match_zoo_self():
    matches = match_zoo(zoo.zoo_get("leib"))
    keys = [k for k, t in matches]
    assert "leib" in keys
    assert any(t.is_identity() for k, t in matches if k == "leib")


def test_match_zoo_finds_basis_change():
    result = functors.black(PRELIE_R_BLACK, zoo.zoo_get("ass"))
    matches = match_zoo(result, candidates=["dend"])
    assert matches
    assert any(not t.is_identity() for _, t in matches) or any(
        t.is_identity() for _, t in matches
    )


def test_match_zoo_free_presentations():
    m = zoo.mag(2, 0, 0)
    keys = [k for k, _ in match_zoo(m)]
    assert "mag_{2,0,0}" in keys

import json

import pytest

from operadcalc import zoo
from operadcalc.freeop import permute_variables
from operadcalc.presentation import (
    OperadPresentation,
    ParseError,
    parse,
    render,
    render_text,
)

SOURCE = """
operad demo {
  gens: m:nonsym, b:antisym;
  rel: m(m(x,y),z) - m(x,m(y,z)) + 2*b(x,b(y,z));
}
"""


def test_parse_basic():
    p = parse(SOURCE)
    assert p.name == "demo"
    assert [g.name for g in p.signature] == ["m", "b"]
    assert [g.symmetry for g in p.signature] == ["nonsym", "antisym"]
    assert len(p.relators) == 1


def test_parse_error_reports_location():
    with pytest.raises(ParseError) as e:
        parse("operad x {\n  gens m:nonsym;\n}")
    assert e.value.line == 2


def test_parse_rejects_unknown_generator():
    with pytest.raises(ParseError):
        parse("operad x { gens: m:nonsym; rel: q(x,m(y,z)); }")


def test_relations_closed_under_relabelling():
    p = parse(SOURCE)
    for r in p.relators:
        for perm in ((1, 0, 2), (2, 1, 0), (1, 2, 0)):
            assert p.relations.contains(
                permute_variables(p.signature, r, perm)
            )


@pytest.mark.parametrize(
    "key,dim3",
    [
        ("ass", 6),
        ("com", 1),
        ("lie", 2),
        ("prelie", 9),
        ("perm", 3),
        ("dend", 30),
        ("diass", 18),
    ],
)
def test_known_arity3_dimensions(key, dim3):
    assert zoo.zoo_get(key).dim3 == dim3


@pytest.mark.parametrize("key", [k for k, _ in zoo.zoo_entries()])
def test_render_parse_round_trip(key):
    o = zoo.zoo_get(key)
    back = parse(render_text(o))
    assert back.signature.symmetry_sequence() == o.signature.symmetry_sequence()
    assert back.relations == o.relations


def test_render_json_is_valid_and_stable():
    o = zoo.zoo_get("prelie")
    first = render(o, "json")
    data = json.loads(first)
    assert data["relation_dim"] == o.relations.dim
    assert data["ambient_dim3"] == len(o.basis3)
    assert render(o, "json") == first


def test_render_latex_mentions_generators():
    out = render(zoo.zoo_get("pois"), "latex")
    assert "aligned" in out


def test_membership_fn_backed_presentation():
    o = zoo.zoo_get("ass")
    lazy = OperadPresentation(
        "lazy", o.signature, [], membership_fn=o.relations.contains
    )
    for r in o.relations.basis_vectors():
        assert lazy.contains_relation(r)


def test_zoo_lookup_variants():
    assert zoo.zoo_get("Ass").name == zoo.zoo_get("ass").name
    m = zoo.zoo_get("mag_{1,2,0}")
    assert m.counts() == (1, 2, 0)
    assert m.relations.dim == 0
    with pytest.raises(KeyError):
        zoo.zoo_get("nope")

import pytest

from operadcalc import zoo
from operadcalc.cochain import (
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
    configs_for,
    derived_signature,
    white_table,
)
from operadcalc.freeop import ANTISYM, ID, NONSYM, OP, SYM, make_signature
from operadcalc.verify import _leibniz_ok

MIXED = make_signature([("m", NONSYM), ("b", SYM), ("c", ANTISYM)])


def test_derived_signature_doubles_plain_generators():
    d, mapping = derived_signature(ASS_BLACK, MIXED)
    assert [g.name for g in d] == ["m_prec", "m_succ", "b_circ", "c_ast"]
    assert all(g.symmetry == NONSYM for g in d)
    assert mapping == {0: (0, 1), 1: (2,), 2: (3,)}


def test_derived_signature_symmetrized_family_swaps_classes():
    d, mapping = derived_signature(COM_BLACK, MIXED)
    assert [g.name for g in d] == ["m_star", "b_brace", "c_cast"]
    assert [g.symmetry for g in d] == [NONSYM, ANTISYM, SYM]
    assert mapping == {0: (0,), 1: (1,), 2: (2,)}


def test_black_table_plain_entries():
    table, derived, mapping = black_table(MIXED, ASS_BLACK)
    prec, succ = mapping[0]
    assert table[(0, L0, E1)] == [(E1, ((1, prec, ID),))]
    assert table[(0, E1, R0)] == [(E1, ((1, prec, ID),))]
    assert table[(0, R0, E1)] == [(E1, ((-1, succ, OP),))]
    assert table[(0, E1, L0)] == [(E1, ((-1, succ, OP),))]
    assert table[(0, L0, L0)] == [
        (L0, ((1, prec, ID), (-1, succ, OP)))
    ]
    # no rule mixes the two endpoint degree-zero atoms
    assert (0, L0, R0) not in table


def test_black_table_symmetric_entries():
    table, derived, mapping = black_table(MIXED, ASS_BLACK)
    (circ,) = mapping[1]
    assert table[(1, L0, E1)] == [(E1, ((1, circ, ID),))]
    assert table[(1, E1, L0)] == [(E1, ((1, circ, OP),))]
    (ast,) = mapping[2]
    assert table[(2, L0, E1)] == [(E1, ((1, ast, ID),))]
    assert table[(2, E1, L0)] == [(E1, ((-1, ast, OP),))]


def test_white_table_inputs_are_derived_generators():
    table, derived, mapping = white_table(MIXED, ASS_WHITE)
    prec, succ = mapping[0]
    assert table[(prec, L0, E1)] == [(E1, ((1, 0, ID),))]
    assert table[(succ, L0, E1)] == [(E1, ((1, 0, OP),))]
    # payloads live over the source signature
    for rules in table.values():
        for out, payload in rules:
            for c, t, o in payload:
                assert 0 <= t < len(MIXED)


def test_bracket_white_table_has_both_composites():
    table, derived, mapping = white_table(MIXED, LIE_WHITE)
    (star,) = mapping[0]
    assert len(table[(star, L0, E1)]) == 1
    assert (star, R0, E1) in table


@pytest.mark.parametrize(
    "family", [ASS_BLACK, COM_BLACK, PRELIE_R_BLACK, PRELIE_L_BLACK]
)
def test_black_tables_satisfy_derivation_rule(family):
    table, derived, _ = black_table(MIXED, family)
    assert _leibniz_ok(table, [g.index for g in MIXED], derived)


@pytest.mark.parametrize("family", [ASS_WHITE, LIE_WHITE, PERM_WHITE])
def test_white_tables_satisfy_derivation_rule(family):
    table, derived, _ = white_table(MIXED, family)
    assert _leibniz_ok(table, [g.index for g in derived], MIXED)


def test_configurations_per_family():
    # one configuration per assignment of the degree-one slot positions
    assert len(configs_for(ASS_BLACK)) == 6
    assert len(configs_for(PRELIE_R_BLACK)) == 3
    assert len(configs_for(PRELIE_L_BLACK)) == 3

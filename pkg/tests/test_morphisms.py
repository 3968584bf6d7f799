import pytest

from operadcalc import functors, morphisms, zoo
from operadcalc.cochain import ASS_BLACK, ASS_WHITE, PRELIE_R_BLACK
from operadcalc.freeop import ID, OP
from operadcalc.linalg import StructuralError
from operadcalc.morphisms import (
    OperadMorphism,
    associated_morphism,
    black_morphism,
    compose,
    counit,
    identity,
    is_morphism,
    triangle_check,
    unit,
    white_morphism,
)


def test_identity_is_a_morphism():
    o = zoo.zoo_get("pois")
    assert is_morphism(identity(o))


def test_symmetry_of_images_is_enforced():
    lie = zoo.zoo_get("lie")
    prelie = zoo.zoo_get("prelie")
    # a symmetric image for the antisymmetric bracket is rejected
    with pytest.raises(StructuralError):
        OperadMorphism(lie, prelie, {0: ((1, 0, ID), (1, 0, OP))})


def test_commutator_morphism():
    lie = zoo.zoo_get("lie")
    prelie = zoo.zoo_get("prelie")
    f = OperadMorphism(lie, prelie, {0: ((1, 0, ID), (-1, 0, OP))})
    assert is_morphism(f)


def test_not_every_map_is_a_morphism():
    lie = zoo.zoo_get("lie")
    postlie = zoo.zoo_get("postlie")
    bad = OperadMorphism(lie, postlie, {0: ((1, 1, ID),)})
    # the bracket alone satisfies Jacobi, so this one is a morphism;
    # sending the bracket to the non-Lie product combination is not
    assert is_morphism(bad)
    worse = OperadMorphism(lie, postlie, {0: ((1, 0, ID), (-1, 0, OP))})
    assert not is_morphism(worse)


def test_compose_checks_signatures():
    lie = zoo.zoo_get("lie")
    prelie = zoo.zoo_get("prelie")
    ldend = zoo.zoo_get("ldend")
    f = OperadMorphism(lie, prelie, {0: ((1, 0, ID), (-1, 0, OP))})
    g = OperadMorphism(prelie, ldend, {0: ((1, 0, ID), (1, 1, ID))})
    gf = compose(g, f)
    assert is_morphism(gf)
    with pytest.raises(StructuralError):
        compose(f, g)


def test_compose_with_identity():
    o = zoo.zoo_get("prelie")
    f = associated_morphism(o)
    assert compose(f, identity(o)).images == f.images
    assert compose(identity(f.target), f).images == f.images


@pytest.mark.parametrize("key", ["ass", "lie", "pois", "postlie"])
def test_associated_morphism(key):
    assert is_morphism(associated_morphism(zoo.zoo_get(key)))


def test_black_functor_preserves_composition():
    lie = zoo.zoo_get("lie")
    prelie = zoo.zoo_get("prelie")
    ldend = zoo.zoo_get("ldend")
    f = OperadMorphism(lie, prelie, {0: ((1, 0, ID), (-1, 0, OP))})
    g = OperadMorphism(prelie, ldend, {0: ((1, 0, ID), (1, 1, ID))})
    bf = black_morphism(ASS_BLACK, f)
    bg = black_morphism(ASS_BLACK, g)
    both = black_morphism(ASS_BLACK, compose(g, f))
    assert compose(bg, bf).images == both.images
    assert is_morphism(bf) and is_morphism(bg)


def test_white_functor_preserves_composition():
    lie = zoo.zoo_get("lie")
    prelie = zoo.zoo_get("prelie")
    ldend = zoo.zoo_get("ldend")
    f = OperadMorphism(lie, prelie, {0: ((1, 0, ID), (-1, 0, OP))})
    g = OperadMorphism(prelie, ldend, {0: ((1, 0, ID), (1, 1, ID))})
    wf = white_morphism(ASS_WHITE, f)
    wg = white_morphism(ASS_WHITE, g)
    both = white_morphism(ASS_WHITE, compose(g, f))
    assert compose(wg, wf).images == both.images
    assert is_morphism(wf) and is_morphism(wg)


def test_black_functor_on_identity_is_identity():
    o = zoo.zoo_get("pois")
    b = black_morphism(PRELIE_R_BLACK, identity(o))
    assert b.images == identity(functors.black(PRELIE_R_BLACK, o)).images


@pytest.mark.parametrize("family", morphisms.ADJUNCTION_FAMILIES)
@pytest.mark.parametrize("key", ["ass", "com", "lie", "prelie", "pois"])
def test_unit_counit_are_morphisms(family, key):
    o = zoo.zoo_get(key)
    assert is_morphism(unit(family, o))
    assert is_morphism(counit(family, o))


@pytest.mark.parametrize("family", morphisms.ADJUNCTION_FAMILIES)
@pytest.mark.parametrize("key", ["ass", "com", "lie", "leib", "postlie"])
def test_triangle_identities(family, key):
    assert triangle_check(family, zoo.zoo_get(key))

"""The black/white adjunctions on a worked example.

For the associative family: builds the unit and counit on the post-Lie
presentation, checks that both are morphisms, and verifies the two
triangle identities.
"""

from operadcalc import morphisms, zoo


def main():
    o = zoo.zoo_get("postlie")
    for family in morphisms.ADJUNCTION_FAMILIES:
        eta = morphisms.unit(family, o)
        eps = morphisms.counit(family, o)
        print("family %-10s unit is morphism: %s" % (
            family, morphisms.is_morphism(eta)))
        print("family %-10s counit is morphism: %s" % (
            family, morphisms.is_morphism(eps)))
        print("family %-10s triangle identities: %s" % (
            family, morphisms.triangle_check(family, o)))

    f = morphisms.associated_morphism(o)
    print("associated morphism into the derived operad:",
          morphisms.is_morphism(f))


if __name__ == "__main__":
    main()

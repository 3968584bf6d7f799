"""Quadratic duality on the catalog.

Computes duals of a few presentations, identifies them, and checks that
taking the dual twice returns the original relation space.  Also shows
the white product computed two ways: directly as a kernel, and through
the dual of a black product.
"""

from operadcalc import functors, koszul, recognize, zoo
from operadcalc.cochain import ASS_WHITE


def main():
    for key in ("com", "prelie", "leib", "diass", "postcom"):
        o = zoo.zoo_get(key)
        d = koszul.dual(o)
        names = [k for k, _ in recognize.match_zoo(d)]
        print("dual(%s) = %s" % (key, ", ".join(sorted(set(names)))))
        back = koszul.dual(d)
        assert recognize.equal_presentations(back, o)
        print("  double dual returns %s exactly" % key)

    print()
    o = zoo.zoo_get("zinb")
    direct = functors.white_direct(ASS_WHITE, o)
    via = functors.white_via_dual(ASS_WHITE, o)
    assert recognize.equal_presentations(direct, via)
    print("white product of zinb: both methods agree;")
    print("  recognized as:",
          [k for k, _ in recognize.match_zoo(direct)])


if __name__ == "__main__":
    main()

"""Derived ("black") products of catalog presentations.

Runs the three derived-product constructions on a few catalog entries
and identifies the results against the catalog, printing the generator
change that realizes each identification.
"""

from operadcalc import functors, recognize, zoo
from operadcalc.cochain import ASS_BLACK, PRELIE_R_BLACK
from operadcalc.presentation import render_text


def show(result):
    print(render_text(result))
    for key, t in recognize.match_zoo(result):
        print("  = %s via %s" % (key, t.describe(result.signature)))
    print()


def main():
    print("== associative-type product of the Lie presentation ==")
    show(functors.black(ASS_BLACK, zoo.zoo_get("lie")))

    print("== associative-type product of the Leibniz presentation ==")
    show(functors.black(ASS_BLACK, zoo.zoo_get("leib")))

    print("== symmetrized product of the Leibniz presentation ==")
    show(functors.black_com(zoo.zoo_get("leib")))

    print("== pre-Lie-type product of the associative presentation ==")
    show(functors.black(PRELIE_R_BLACK, zoo.zoo_get("ass")))


if __name__ == "__main__":
    main()

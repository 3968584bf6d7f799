"""Built-in verification suites.

Every check recomputes a catalog identity from scratch and compares the
result against an independently stated expectation (a catalog entry, a
closed-form count, or a second computation path).  Checks are grouped so
the command line can run a subset: `paper` covers the black/white product
catalog, `duality` the pairing layer, `adjunction` the unit/counit layer.
"""

from __future__ import annotations

import itertools

from .linalg import mpq, span
from .freeop import (
    ANTISYM,
    ID,
    NONSYM,
    OP,
    SYM,
    basis3,
    normalize_element2,
)
from .presentation import parse, render_text
from .cochain import (
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
    derived_signature,
    white_table,
)
from . import functors, koszul, morphisms, recognize, zoo


def _black(family, o):
    if family == COM_BLACK:
        return functors.black_com(o)
    return functors.black(family, o)


def _is(result, expected_key):
    """Recognition of a computed presentation as a catalog entry."""
    expected = zoo.zoo_get(expected_key)
    if recognize.equal_presentations(result, expected):
        return True
    return bool(recognize.matches_against(result, expected))


def _same(a, b):
    return recognize.equal_presentations(a, b) or bool(
        recognize.matches_against(a, b)
    )


# ---------------------------------------------------------------------------
# black-product suite


def _check_black(triples):
    fails = []
    for family, source, expected in triples:
        r = _black(family, zoo.zoo_get(source))
        if not _is(r, expected):
            fails.append("%s of %s != %s" % (family, source, expected))
    return not fails, "; ".join(fails)


def check_01():
    return _check_black([
        (ASS_BLACK, "lie", "ass"),
        (PRELIE_R_BLACK, "lie", "prelie"),
        (COM_BLACK, "lie", "com"),
    ])


def check_02():
    ok1 = _same(_black(ASS_BLACK, zoo.zoo_get("ass")),
                functors.prod(zoo.zoo_get("ass"), zoo.zoo_get("ass")))
    ok2, d = _check_black([
        (COM_BLACK, "ass", "nilass"),
        (PRELIE_R_BLACK, "ass", "dend"),
    ])
    return ok1 and ok2, d if ok1 else "ass black ass != ass x ass; " + d


def check_03():
    ok1, d = _check_black([
        (COM_BLACK, "com", "nillie"),
        (PRELIE_R_BLACK, "com", "zinb"),
    ])
    # the associative black product of com is checked through duality:
    # its dual must be the associative white product of lie
    dual_side = koszul.dual(_black(ASS_BLACK, zoo.zoo_get("com")))
    direct = functors.white_direct(ASS_WHITE, zoo.zoo_get("lie"))
    ok2 = _same(dual_side, direct)
    return ok1 and ok2, d if ok2 else d + "; dual(ass black com) mismatch"


def check_04():
    return _check_black([
        (ASS_BLACK, "prelie", "dend"),
        (COM_BLACK, "prelie", "zinb"),
        (PRELIE_R_BLACK, "prelie", "ldend"),
    ])


def check_05():
    return _check_black([
        (ASS_BLACK, "leib", "diass"),
        (COM_BLACK, "leib", "perm"),
        (PRELIE_R_BLACK, "leib", "preliebulletleib"),
    ])


def check_06():
    ok1, d = _check_black([
        (ASS_BLACK, "pois", "assbulletpois"),
        (PRELIE_R_BLACK, "pois", "prepois"),
    ])
    ok2 = _same(_black(COM_BLACK, zoo.zoo_get("pois")),
                functors.prod(zoo.zoo_get("nillie"), zoo.zoo_get("com")))
    return ok1 and ok2, d if ok2 else d + "; com black pois != nillie x com"


def check_07():
    ok1 = _same(_black(ASS_BLACK, zoo.zoo_get("perm")),
                functors.prod(zoo.zoo_get("nilass"), zoo.zoo_get("nilass")))
    ok2, d = _check_black([
        (COM_BLACK, "perm", "nilass"),
        (PRELIE_R_BLACK, "perm", "preliebulletperm"),
    ])
    return ok1 and ok2, d if ok1 else "ass black perm mismatch; " + d


def check_08():
    fails = []
    for family, base in (
        (ASS_BLACK, "ass"), (COM_BLACK, "com"), (PRELIE_R_BLACK, "prelie"),
    ):
        r = _black(family, zoo.zoo_get("lieadm"))
        if not _same(r, functors.adm(zoo.zoo_get(base))):
            fails.append("%s of lieadm != adm(%s)" % (family, base))
    return not fails, "; ".join(fails)


def check_09():
    return _check_black([
        (ASS_BLACK, "postlie", "tridend"),
        (COM_BLACK, "postlie", "postcom"),
        (ASS_BLACK, "postcomdual", "triass"),
        (COM_BLACK, "postcomdual", "comtrias"),
    ])


def check_10():
    fails = []
    for p, q, r in itertools.product(range(3), repeat=3):
        if p + q + r > 3:
            continue
        m = zoo.mag(p, q, r)
        a = functors.black(ASS_BLACK, m)
        if a.relations.dim or a.counts() != (2 * p + q + r, 0, 0):
            fails.append("ass black mag_{%d,%d,%d}" % (p, q, r))
        c = functors.black_com(m)
        if c.relations.dim or sorted(c.counts()[1:]) != sorted((r, q)) or \
                c.counts()[0] != p:
            fails.append("com black mag_{%d,%d,%d}" % (p, q, r))
    return not fails, "; ".join(fails)


# ---------------------------------------------------------------------------
# duality suite


def check_11():
    fails = []
    pairs = [
        ("ass", "ass"), ("com", "lie"), ("prelie", "perm"),
        ("leib", "zinb"), ("diass", "dend"), ("tridend", "triass"),
        ("postcom", "postcomdual"),
    ]
    for a, b in pairs:
        if not _is(koszul.dual(zoo.zoo_get(a)), b):
            fails.append("dual(%s) != %s" % (a, b))
    for key, o in zoo.zoo_entries():
        if not _same(koszul.dual(koszul.dual(o)), o):
            fails.append("dual(dual(%s)) != %s" % (key, key))
    sum_pairs = [
        ("ass", "com"), ("lie", "prelie"), ("com", "leib"),
        ("perm", "zinb"), ("ass", "lie"),
    ]
    for a, b in sum_pairs:
        left = koszul.dual(functors.sum_(zoo.zoo_get(a), zoo.zoo_get(b)))
        right = functors.prod(
            koszul.dual(zoo.zoo_get(a)), koszul.dual(zoo.zoo_get(b))
        )
        if not _same(left, right):
            fails.append("dual(%s + %s) != dual x dual" % (a, b))
    return not fails, "; ".join(fails)


def check_12():
    fails = []
    seen = set()
    for key, o in zoo.zoo_entries():
        sig = o.signature
        shape = sig.symmetry_sequence()
        if shape in seen:
            continue
        seen.add(shape)
        rows = list(koszul.pairing_table(sig).values())
        if span(rows, basis3(koszul.dual_signature(sig))).dim != len(
            basis3(sig)
        ):
            fails.append("degenerate pairing on signature of %s" % key)
    return not fails, "; ".join(fails)


# ---------------------------------------------------------------------------
# white-product suite


def check_13():
    cases = [
        (ASS_WHITE, "com", "ass"),
        (ASS_WHITE, "lie", "mag_{1,0,0}"),
        (ASS_WHITE, "zinb", "dend"),
        (ASS_WHITE, "leib", "asscircleib"),
        (PERM_WHITE, "lie", "leib"),
        (PERM_WHITE, "ass", "diass"),
        (PERM_WHITE, "pois", "prepoisdual"),
        (PERM_WHITE, "prelie", "permcircprelie"),
        (LIE_WHITE, "ass", "mag_{1,0,0}"),
        (LIE_WHITE, "prelie", "mag_{1,0,0}"),
        (LIE_WHITE, "lie", "mag_{0,1,0}"),
        (LIE_WHITE, "perm", "leib"),
        (LIE_WHITE, "zinb", "prelie"),
    ]
    fails = []
    for family, source, expected in cases:
        r = functors.white_direct(family, zoo.zoo_get(source))
        if not _is(r, expected):
            fails.append("%s of %s != %s" % (family, source, expected))
    r = functors.white_direct(LIE_WHITE, zoo.zoo_get("pois"))
    if not _same(r, functors.sum_(zoo.zoo_get("lie"), zoo.mag(0, 1, 0))):
        fails.append("lie white pois != lie + mag_{0,1,0}")
    return not fails, "; ".join(fails)


def check_14():
    fails = []
    for family in (ASS_WHITE, LIE_WHITE, PERM_WHITE):
        for key, o in zoo.zoo_entries():
            direct = functors.white_direct(family, o)
            via = functors.white_via_dual(family, o)
            if not recognize.equal_presentations(direct, via):
                fails.append("%s of %s: methods disagree" % (family, key))
    return not fails, "; ".join(fails)


_FAMILY_PAIRS = (
    (ASS_BLACK, ASS_WHITE),
    (COM_BLACK, LIE_WHITE),
    (PRELIE_R_BLACK, PERM_WHITE),
)


def check_15():
    fails = []
    for bf, wf in _FAMILY_PAIRS:
        for key, o in zoo.zoo_entries():
            b = _black(bf, o)
            w = functors.white_direct(wf, koszul.dual(o))
            ambient = len(basis3(b.signature))
            if b.relations.dim + w.relations.dim != ambient:
                fails.append("%s/%s on %s: dims" % (bf, wf, key))
                continue
            if not recognize.equal_presentations(koszul.dual(b), w):
                fails.append("%s/%s on %s: annihilator" % (bf, wf, key))
    return not fails, "; ".join(fails)


# ---------------------------------------------------------------------------
# structural suite


def _left_right_transform(sig):
    """The generator change carrying the right-sided derived operad's
    opposite onto the left-sided one: the two one-sided products swap,
    the symmetric-source product flips sign."""
    dsig, mapping = derived_signature(PRELIE_R_BLACK, sig)
    perm = list(range(len(dsig)))
    signs = [1] * len(dsig)
    for g in sig:
        parts = mapping[g.index]
        if len(parts) == 2:
            perm[parts[0]], perm[parts[1]] = parts[1], parts[0]
        elif g.symmetry == SYM:
            signs[parts[0]] = -1
    return recognize.GenTransform(
        tuple(perm), tuple(signs), (ID,) * len(dsig)
    )


def check_16():
    fails = []
    for key, o in zoo.zoo_entries():
        left = functors.black(PRELIE_L_BLACK, o)
        right = functors.opposite_operad(functors.black(PRELIE_R_BLACK, o))
        t = _left_right_transform(o.signature)
        if recognize.transform_relations(right, t) != left.relations:
            fails.append(key)
    return not fails, "left/right mismatch on: " + ", ".join(fails)


_NAMED_MORPHISMS = (
    ("lie", "postlie", {0: ((1, 0, ID), (-1, 0, OP), (1, 1, ID))}),
    ("ass", "tridend", {0: ((1, 0, ID), (1, 1, ID), (1, 2, ID))}),
    ("com", "postcom", {0: ((1, 0, ID), (1, 0, OP), (1, 1, ID))}),
    ("prelie", "ldend", {0: ((1, 0, ID), (1, 1, ID))}),
    ("prelie", "ldend", {0: ((1, 0, ID), (-1, 1, OP))}),
    ("lie", "prelie", {0: ((1, 0, ID), (-1, 0, OP))}),
)


def check_17():
    fails = []
    for src, dst, images in _NAMED_MORPHISMS:
        f = morphisms.OperadMorphism(
            zoo.zoo_get(src), zoo.zoo_get(dst), images
        )
        if not morphisms.is_morphism(f):
            fails.append("%s -> %s" % (src, dst))
    return not fails, "; ".join(fails)


def check_18():
    fails = []
    for family in morphisms.ADJUNCTION_FAMILIES:
        for key, o in zoo.zoo_entries():
            if not morphisms.is_morphism(morphisms.unit(family, o)):
                fails.append("unit %s %s" % (family, key))
            if not morphisms.is_morphism(morphisms.counit(family, o)):
                fails.append("counit %s %s" % (family, key))
            if not morphisms.triangle_check(family, o):
                fails.append("triangle %s %s" % (family, key))
    return not fails, "; ".join(fails)


def check_19():
    cases = [
        ("white", ASS_WHITE, "zinb", "dend"),
        ("white", LIE_WHITE, "zinb", "prelie"),
        ("black", COM_BLACK, "lie", "com"),
        ("black", COM_BLACK, "ass", "nilass"),
        ("black", COM_BLACK, "com", "nillie"),
        ("black", ASS_BLACK, "leib", "diass"),
        ("black", COM_BLACK, "leib", "perm"),
    ]
    fails = []
    for kind, family, source, expected in cases:
        if kind == "white":
            r = functors.white_direct(family, zoo.zoo_get(source))
        else:
            r = _black(family, zoo.zoo_get(source))
        if not _is(r, expected):
            fails.append("%s of %s != %s" % (family, source, expected))
    return not fails, "; ".join(fails)


# ---------------------------------------------------------------------------
# property suite


def _count_oracle(sig):
    """Independent count of the canonical arity-3 monomials: choose
    which unordered pair of variables combines first (3 ways), then an
    inner and an outer operation, each from the arity-2 component whose
    dimension is 2 * plain + sym + antisym."""
    p, q, r = sig.counts()
    d = 2 * p + q + r
    return 3 * d * d


_D_ATOM = {L0: ((E1, 1),), R0: ((E1, -1),), E1: ()}
_DEG = {L0: 0, R0: 0, E1: 1}


def _leibniz_ok(table, in_gens, payload_sig):
    atoms = (L0, R0, E1)
    for g in in_gens:
        for a in atoms:
            for b in atoms:
                lhs = {}
                for da, s in _D_ATOM[a]:
                    for out, pay in table.get((g, da, b), ()):
                        lhs.setdefault(out, []).extend(
                            (s * c, t, o) for c, t, o in pay
                        )
                sgn = -1 if _DEG[a] else 1
                for db, s in _D_ATOM[b]:
                    for out, pay in table.get((g, a, db), ()):
                        lhs.setdefault(out, []).extend(
                            (sgn * s * c, t, o) for c, t, o in pay
                        )
                rhs = {}
                for out, pay in table.get((g, a, b), ()):
                    for dout, s in _D_ATOM[out]:
                        rhs.setdefault(dout, []).extend(
                            (s * c, t, o) for c, t, o in pay
                        )
                for k in set(lhs) | set(rhs):
                    if normalize_element2(
                        payload_sig, lhs.get(k, [])
                    ) != normalize_element2(payload_sig, rhs.get(k, [])):
                        return False
    return True


def check_20():
    fails = []
    for p, q, r in itertools.product(range(4), repeat=3):
        if p + q + r > 3:
            continue
        sig = zoo.mag(p, q, r).signature
        if len(basis3(sig)) != _count_oracle(sig):
            fails.append("basis count mag_{%d,%d,%d}" % (p, q, r))
    # the differential is a derivation for every shipped table
    shapes = set()
    for key, o in zoo.zoo_entries():
        sig = o.signature
        if sig.symmetry_sequence() in shapes:
            continue
        shapes.add(sig.symmetry_sequence())
        for fam in (ASS_BLACK, COM_BLACK, PRELIE_R_BLACK, PRELIE_L_BLACK):
            t, dsig, _ = black_table(sig, fam)
            if not _leibniz_ok(t, [g.index for g in sig], dsig):
                fails.append("leibniz %s %s" % (fam, key))
        for fam in (ASS_WHITE, LIE_WHITE, PERM_WHITE):
            t, dsig, _ = white_table(sig, fam)
            if not _leibniz_ok(t, [g.index for g in dsig], sig):
                fails.append("leibniz %s %s" % (fam, key))
    # parse / render round trip
    for key, o in zoo.zoo_entries():
        back = parse(render_text(o))
        if not recognize.equal_presentations(o, back):
            fails.append("round trip %s" % key)
    return not fails, "; ".join(fails)


# ---------------------------------------------------------------------------
# suite driver


CHECKS = [
    (1, "black products of lie recover ass, prelie, com", check_01),
    (2, "black products of ass: ass x ass, nilass, dend", check_02),
    (3, "black products of com: nillie, zinb, dual cross-check", check_03),
    (4, "black products of prelie: dend, zinb, ldend", check_04),
    (5, "black products of leib: diass, perm, catalog entry", check_05),
    (6, "black products of pois: catalog entry, nillie x com, prepois",
     check_06),
    (7, "black products of perm: nilass x nilass, nilass, catalog entry",
     check_07),
    (8, "black products of lieadm are the admissible variants", check_08),
    (9, "black products of postlie / postcomdual: trialgebra operads",
     check_09),
    (10, "black products of free presentations count generators",
     check_10),
    (11, "duality pairs, double dual, dual of sum is product of duals",
     check_11),
    (12, "duality pairing is nondegenerate on all catalog signatures",
     check_12),
    (13, "white product catalog identities", check_13),
    (14, "white products: direct and dual methods agree", check_14),
    (15, "black and dual white relation spaces are complementary",
     check_15),
    (16, "left-sided derived operad is opposite to the right-sided one",
     check_16),
    (17, "named morphisms into the derived operads", check_17),
    (18, "adjunction unit, counit and triangle identities", check_18),
    (19, "square of operads: rows reproduced", check_19),
    (20, "count oracle, derivation property, round trips", check_20),
]

GROUPS = {
    "paper": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 16, 17, 19),
    "duality": (11, 12, 14, 15),
    "adjunction": (18,),
    "all": tuple(range(1, 21)),
}


def run(group="all", report=print):
    """Run a named group of checks; returns True when all pass."""
    wanted = GROUPS[group]
    ok = True
    for num, title, fn in CHECKS:
        if num not in wanted:
            continue
        passed, detail = fn()
        ok = ok and passed
        line = "%2d %s: %s" % (num, "PASS" if passed else "FAIL", title)
        if not passed and detail:
            line += " [%s]" % detail
        report(line)
    return ok

"""Built-in catalog of named operad presentations.

Conventions are right-handed throughout (right pre-Lie, right Leibniz,
right Zinbiel, right permutative); left variants are obtained with
`functors.opposite_operad`.  Most entries are written in the textual
presentation language; a few composite entries (triassociative,
commutative triassociative) are constructed from other entries by
adjoining relators and flipping generator signs.
"""

from __future__ import annotations

import re

from .freeop import ID, NONSYM, SYM, ANTISYM, Generator, Signature, substitute
from .presentation import OperadPresentation, parse


_SOURCES = {
    "ass": """
        operad ass {
          gens: m:nonsym;
          rel: m(m(x,y),z) - m(x,m(y,z));
        }
    """,
    "com": """
        operad com {
          gens: c:sym;
          rel: c(c(x,y),z) - c(x,c(y,z));
        }
    """,
    "lie": """
        operad lie {
          gens: b:antisym;
          rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y);
        }
    """,
    "prelie": """
        operad prelie {
          gens: p:nonsym;
          rel: p(p(x,y),z) - p(x,p(y,z)) - p(p(x,z),y) + p(x,p(z,y));
        }
    """,
    "leib": """
        operad leib {
          gens: m:nonsym;
          rel: m(m(x,y),z) - m(x,m(y,z)) - m(m(x,z),y);
        }
    """,
    "zinb": """
        operad zinb {
          gens: m:nonsym;
          rel: m(m(x,y),z) - m(x,m(y,z)) - m(x,m(z,y));
        }
    """,
    "perm": """
        operad perm {
          gens: m:nonsym;
          rel: m(m(x,y),z) - m(x,m(y,z));
          rel: m(x,m(y,z)) - m(x,m(z,y));
        }
    """,
    "nilass": """
        operad nilass {
          gens: m:nonsym;
          rel: m(m(x,y),z);
          rel: m(x,m(y,z));
        }
    """,
    "nillie": """
        operad nillie {
          gens: b:antisym;
          rel: b(b(x,y),z);
        }
    """,
    "pois": """
        operad pois {
          gens: c:sym, b:antisym;
          rel: c(c(x,y),z) - c(x,c(y,z));
          rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y);
          rel: b(x,c(y,z)) - c(b(x,y),z) - c(y,b(x,z));
        }
    """,
    "dend": """
        operad dend {
          gens: p:nonsym, s:nonsym;
          rel: p(p(x,y),z) - p(x,p(y,z)) - p(x,s(y,z));
          rel: p(s(x,y),z) - s(x,p(y,z));
          rel: s(p(x,y),z) + s(s(x,y),z) - s(x,s(y,z));
        }
    """,
    "diass": """
        operad diass {
          gens: p:nonsym, s:nonsym;
          rel: p(p(x,y),z) - p(x,p(y,z));
          rel: p(x,p(y,z)) - p(x,s(y,z));
          rel: p(s(x,y),z) - s(x,p(y,z));
          rel: s(p(x,y),z) - s(s(x,y),z);
          rel: s(s(x,y),z) - s(x,s(y,z));
        }
    """,
    "tridend": """
        operad tridend {
          gens: p:nonsym, s:nonsym, a:nonsym;
          rel: a(a(x,y),z) - a(x,a(y,z));
          rel: p(a(x,y),z) - a(x,p(y,z));
          rel: s(z,a(y,x)) - a(s(z,y),x);
          rel: a(x,s(z,y)) - a(p(x,z),y);
          rel: p(x,p(y,z)) + p(x,s(y,z)) + p(x,a(y,z)) - p(p(x,y),z);
          rel: s(s(z,y),x) + s(p(z,y),x) + s(a(z,y),x) - s(z,s(y,x));
          rel: p(s(y,x),z) - s(y,p(x,z));
        }
    """,
    "postlie": """
        operad postlie {
          gens: m:nonsym, b:antisym;
          rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y);
          rel: m(b(x,y),z) - b(x,m(y,z)) - b(m(x,z),y);
          rel: m(x,m(y,z)) - m(x,m(z,y)) + m(x,b(y,z))
               - m(m(x,y),z) + m(m(x,z),y);
        }
    """,
    "postcom": """
        operad postcom {
          gens: s:nonsym, t:sym;
          rel: t(t(x,y),z) - t(x,t(y,z));
          rel: s(t(x,y),z) - t(x,s(y,z));
          rel: s(s(x,y),z) - s(x,s(y,z)) - s(x,s(z,y)) - s(x,t(y,z));
        }
    """,
    "postcomdual": """
        operad postcomdual {
          gens: m:nonsym, b:antisym;
          rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y);
          rel: m(m(x,y),z) - m(x,m(y,z)) - m(m(x,z),y);
          rel: m(b(x,y),z) - b(x,m(y,z)) - b(m(x,z),y);
          rel: m(x,b(y,z)) - m(x,m(y,z));
        }
    """,
    "lieadm": """
        operad lieadm {
          gens: m:nonsym;
          rel: m(m(x,y),z) - m(x,m(y,z))
             + m(m(y,z),x) - m(y,m(z,x))
             + m(m(z,x),y) - m(z,m(x,y))
             - m(m(y,x),z) + m(y,m(x,z))
             - m(m(z,y),x) + m(z,m(y,x))
             - m(m(x,z),y) + m(x,m(z,y));
        }
    """,
    "prepois": """
        operad prepois {
          gens: c:nonsym, s:nonsym;
          rel: c(c(x,y),z) - c(x,c(y,z)) - c(x,c(z,y));
          rel: s(s(x,y),z) - s(x,s(y,z)) - s(s(x,z),y) + s(x,s(z,y));
          rel: s(x,c(y,z)) + s(x,c(z,y)) - c(s(x,y),z) - c(s(x,z),y);
          rel: c(s(y,x),z) - s(c(y,z),x) - c(y,s(x,z)) + c(y,s(z,x));
        }
    """,
    "prepoisdual": """
        operad prepoisdual {
          gens: c:nonsym, s:nonsym;
          rel: c(c(x,y),z) - c(x,c(y,z));
          rel: c(x,c(y,z)) - c(x,c(z,y));
          rel: s(s(x,y),z) - s(x,s(y,z)) - s(s(x,z),y);
          rel: s(c(x,y),z) - c(x,s(y,z)) - c(s(x,z),y);
          rel: s(x,c(y,z)) - c(s(x,y),z) - c(s(x,z),y);
          rel: c(x,s(y,z)) + c(x,s(z,y));
        }
    """,
    "ldend": """
        operad ldend {
          gens: p:nonsym, s:nonsym;
          rel: s(z,s(y,x)) - s(z,p(x,y)) - s(s(z,y),x)
             + p(s(z,x),y) - s(p(z,y),x);
          rel: p(p(x,y),z) - p(p(x,z),y) - p(x,p(y,z))
             + p(x,s(z,y)) + p(x,p(z,y)) - p(x,s(y,z));
        }
    """,
    "assbulletpois": """
        operad assbulletpois {
          gens: c:nonsym, a:nonsym;
          rel: c(c(x,y),z);
          rel: c(x,c(y,z));
          rel: a(a(x,y),z) - a(x,a(y,z));
          rel: c(a(x,y),z) - a(x,c(y,z));
          rel: a(x,c(y,z)) - c(x,a(y,z));
          rel: c(x,a(y,z)) - a(c(x,y),z);
        }
    """,
    "preliebulletleib": """
        operad preliebulletleib {
          gens: p:nonsym, s:nonsym;
          rel: p(p(x,y),z) - p(p(x,z),y) - p(x,p(y,z)) + p(x,s(z,y));
          rel: s(s(x,y),z) - s(p(x,y),z);
          rel: p(s(x,y),z) - s(p(x,z),y) - s(x,p(y,z)) + s(x,s(z,y));
        }
    """,
    "preliebulletperm": """
        operad preliebulletperm {
          gens: p:nonsym, s:nonsym;
          rel: p(p(x,y),z) - p(x,p(y,z)) - p(x,s(y,z));
          rel: p(s(x,y),z) - s(x,p(y,z));
          rel: s(p(x,y),z) + s(s(x,y),z) - s(x,s(y,z));
          rel: p(x,p(y,z)) + p(x,s(y,z)) - p(x,p(z,y)) - p(x,s(z,y));
          rel: s(x,p(y,z)) - s(x,s(z,y));
        }
    """,
    "permcircprelie": """
        operad permcircprelie {
          gens: p:nonsym, s:nonsym;
          rel: p(p(x,y),z) - p(x,p(y,z)) - p(p(x,z),y) + p(x,p(z,y));
          rel: p(x,p(y,z)) - p(x,s(y,z));
          rel: s(s(x,y),z) - s(x,s(y,z)) - p(s(x,z),y) + s(x,p(z,y));
          rel: s(s(x,y),z) - s(p(x,y),z);
        }
    """,
    "asscircleib": """
        operad asscircleib {
          gens: p:nonsym, s:nonsym;
          rel: p(x,p(y,z)) + p(x,s(y,z));
          rel: s(p(x,y),z) + s(s(x,y),z);
        }
    """,
}


def _sign_flip(o, name, flips):
    """Copy a presentation, negating the named generators in every relator."""
    sig = o.signature
    images = {
        g.index: ((-1 if g.name in flips else 1, g.index, ID),) for g in sig
    }
    relators = [substitute(r, images, sig, sig) for r in o.relators]
    return OperadPresentation(name, sig, relators)


def _build_triass():
    # dendriform trialgebra relations plus diassociativity for the two
    # one-sided products, then a sign change on both of them
    tridend = zoo_get("tridend")
    diass = zoo_get("diass")
    sig = tridend.signature
    # diass is presented on (p, s); embed its relators into (p, s, a)
    embed = {0: ((1, 0, ID),), 1: ((1, 1, ID),)}
    relators = list(tridend.relators) + [
        substitute(r, embed, diass.signature, sig) for r in diass.relators
    ]
    merged = OperadPresentation("triass", sig, relators)
    return _sign_flip(merged, "triass", {"p", "s"})


def _build_comtrias():
    # the commutative analogue: adjoin right-permutativity for the
    # non-symmetric product, then flip its sign
    postcom = zoo_get("postcom")
    perm = zoo_get("perm")
    sig = postcom.signature
    embed = {0: ((1, 0, ID),)}
    relators = list(postcom.relators) + [
        substitute(r, embed, perm.signature, sig) for r in perm.relators
    ]
    merged = OperadPresentation("comtrias", sig, relators)
    return _sign_flip(merged, "comtrias", {"s"})


_CONSTRUCTED = {
    "triass": _build_triass,
    "comtrias": _build_comtrias,
}

_MAG_RE = re.compile(r"^mag_?\{?(\d+),(\d+),(\d+)\}?$")

ZOO_KEYS = tuple(sorted(_SOURCES)) + ("triass", "comtrias", "mag_{p,q,r}")

_cache = {}


def mag(p, q, r):
    """The free presentation on p plain, q commutative, r anticommutative
    binary operations."""
    gens = []
    for i in range(p):
        gens.append(Generator(len(gens), "m%d" % (i + 1), NONSYM))
    for j in range(q):
        gens.append(Generator(len(gens), "s%d" % (j + 1), SYM))
    for k in range(r):
        gens.append(Generator(len(gens), "a%d" % (k + 1), ANTISYM))
    return OperadPresentation("mag_{%d,%d,%d}" % (p, q, r), Signature(gens), [])


def zoo_get(key):
    """Look up a catalog presentation by key (case-insensitive)."""
    norm = key.lower().replace("!", "dual")
    m = _MAG_RE.match(norm)
    if m:
        return mag(*(int(g) for g in m.groups()))
    if norm not in _cache:
        if norm in _SOURCES:
            _cache[norm] = parse(_SOURCES[norm])
        elif norm in _CONSTRUCTED:
            _cache[norm] = _CONSTRUCTED[norm]()
        else:
            raise KeyError(
                "unknown operad %r; known keys: %s"
                % (key, ", ".join(ZOO_KEYS))
            )
    return _cache[norm]


def zoo_entries():
    """All non-parametric catalog entries, in key order."""
    return [(k, zoo_get(k)) for k in sorted(_SOURCES) + ["triass", "comtrias"]]

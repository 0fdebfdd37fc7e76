"""Finite group presentations: parsing, printing and the built-in families."""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .dsl import DSLSyntaxError, parse_presentation_parts
from .words import Alphabet, Word, commutator, conjugate

__all__ = [
    "Presentation",
    "PresentationError",
    "parse",
    "builtin",
    "BUILTIN_FAMILIES",
    "free",
    "mccool",
    "pure_braid",
    "braid",
    "paper_G",
    "paper_H",
    "h_z",
    "index2_H",
    "semidirect",
    "poison",
]


class PresentationError(ValueError):
    pass


class Presentation:
    """Generators plus an ordered list of reduced, nonempty relators."""

    __slots__ = ("alphabet", "relators", "name")

    def __init__(self, alphabet: Alphabet, relators: Iterable[Word] = (), name: Optional[str] = None):
        relators = tuple(relators)
        for r in relators:
            if r.alphabet != alphabet:
                raise PresentationError(f"relator {r} is not over the presentation alphabet")
            if r.is_identity():
                raise PresentationError("relators must be nonempty after reduction")
        self.alphabet = alphabet
        self.relators = relators
        self.name = name

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[Word], name=None) -> "Presentation":
        """Build a presentation, silently dropping relators that reduce to 1."""
        return cls(alphabet, [w for w in words if not w.is_identity()], name=name)

    @property
    def generators(self):
        return self.alphabet.generators

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.alphabet == other.alphabet and self.relators == other.relators

    def __hash__(self):
        return hash((self.alphabet, self.relators))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Presentation{label}: {len(self.alphabet)} generators, {len(self.relators)} relators>"

    def to_text(self) -> str:
        gens = ", ".join(self.alphabet.names)
        rels = "; ".join(str(r) for r in self.relators)
        return f"gens: {gens}; rels: {rels}" if rels else f"gens: {gens}; rels:"

    __str__ = to_text

    def word(self, text: str) -> Word:
        return self.alphabet.word(text)


def parse(text: str) -> Presentation:
    """Parse presentation text.

    >>> p = parse("gens: a, b; rels: a*b*a^-1*b^-1")
    >>> len(p.alphabet), len(p.relators)
    (2, 1)
    """
    alphabet, rels = parse_presentation_parts(text)
    for w, line, col in rels:
        if w.is_identity():
            raise DSLSyntaxError("relator reduces to the empty word", line, col)
    return Presentation(alphabet, [w for w, _, _ in rels])


# ---------------------------------------------------------------------------
# built-in families


def _relation(lhs: Word, rhs: Word) -> Word:
    # A = B is encoded as A * B^-1
    return lhs * rhs.inverse()


def free(n: int) -> Presentation:
    if n < 0:
        raise PresentationError("rank must be non-negative")
    return Presentation(Alphabet.free(n), (), name=f"free:{n}")


def _eps_name(i, j):
    return f"e_{i}_{j}"


def mccool(n: int) -> Presentation:
    """McCool's presentation of the basis-conjugating group on ``n`` strands.

    Generators ``e_i_j`` (i != j) in lexicographic order of (i, j).  The three
    relation schemas are instantiated over every ordered tuple of pairwise
    distinct indices, schema by schema, tuples in lexicographic order:

    * ``e_ij e_kl = e_kl e_ij`` over (i, j, k, l): n(n-1)(n-2)(n-3) relators
    * ``e_ij e_kj = e_kj e_ij`` over (i, j, k): n(n-1)(n-2) relators
    * ``(e_ij e_kj) e_ik = e_ik (e_ij e_kj)`` over (i, j, k): n(n-1)(n-2)

    for a total of n(n-1)^2(n-2).  No deduplication is done.
    """
    if n < 2:
        raise PresentationError("mccool requires n >= 2")
    idx = range(1, n + 1)
    A = Alphabet(_eps_name(i, j) for i in idx for j in idx if i != j)

    def e(i, j):
        return A.letter(_eps_name(i, j))

    rels = []
    for i, j, k, l in permutations(idx, 4):
        rels.append(_relation(e(i, j) * e(k, l), e(k, l) * e(i, j)))
    for i, j, k in permutations(idx, 3):
        rels.append(_relation(e(i, j) * e(k, j), e(k, j) * e(i, j)))
    for i, j, k in permutations(idx, 3):
        p = e(i, j) * e(k, j)
        rels.append(_relation(p * e(i, k), e(i, k) * p))
    return Presentation.from_words(A, rels, name=f"mccool:{n}")


def mccool_relator_count(n: int) -> int:
    return n * (n - 1) ** 2 * (n - 2)


def _a_name(i, j):
    return f"a_{i}_{j}"


def pure_braid(n: int) -> Presentation:
    """Pure braid group presentation in the generators ``a_i_j`` (i < j).

    Generators are ordered by ``j`` then ``i`` (a_1_2, a_1_3, a_2_3, a_1_4, ...).
    For each nu in (+1, -1) and each schema, with ``x^y`` meaning conjugation:

    1. ``a_ik^-nu a_kj a_ik^nu = (a_ij a_kj)^nu a_kj (a_ij a_kj)^-nu``, i<k<j
    2. ``a_km^-nu a_kj a_km^nu = (a_kj a_mj)^nu a_kj (a_kj a_mj)^-nu``, k<m<j
    3. ``a_im^-nu a_kj a_im^nu = [a_ij^-nu, a_mj^-nu]^nu a_kj [..]^-nu``, i<k<m<j
    4. ``a_im^-nu a_kj a_im^nu = a_kj``, i<m<j, k<j and (k<i or m<k)

    Relators are emitted schema by schema, index tuples lexicographic, nu=+1
    before nu=-1.
    """
    if n < 2:
        raise PresentationError("pure_braid requires n >= 2")
    A = Alphabet(_a_name(i, j) for j in range(2, n + 1) for i in range(1, j))

    def a(i, j):
        return A.letter(_a_name(i, j))

    def conj(g, x, nu):
        return g ** (-nu) * x * g ** nu

    rng = range(1, n + 1)
    rels = []
    for nu in (1, -1):
        for i in rng:
            for k in rng:
                for j in rng:
                    if i < k < j:
                        p = a(i, j) * a(k, j)
                        rels.append(_relation(conj(a(i, k), a(k, j), nu), p ** nu * a(k, j) * p ** (-nu)))
    for nu in (1, -1):
        for k in rng:
            for m in rng:
                for j in rng:
                    if k < m < j:
                        p = a(k, j) * a(m, j)
                        rels.append(_relation(conj(a(k, m), a(k, j), nu), p ** nu * a(k, j) * p ** (-nu)))
    for nu in (1, -1):
        for i in rng:
            for k in rng:
                for m in rng:
                    for j in rng:
                        if i < k < m < j:
                            c = commutator(a(i, j) ** (-nu), a(m, j) ** (-nu))
                            rels.append(_relation(conj(a(i, m), a(k, j), nu), c ** nu * a(k, j) * c ** (-nu)))
    for nu in (1, -1):
        for i in rng:
            for m in rng:
                for k in rng:
                    for j in rng:
                        if i < m < j and k < j and (k < i or m < k):
                            rels.append(_relation(conj(a(i, m), a(k, j), nu), a(k, j)))
    return Presentation.from_words(A, rels, name=f"pure_braid:{n}")


def braid(n: int) -> Presentation:
    """Artin presentation of the braid group with generators ``s1..s(n-1)``.

    Relators: the braid relations ``s_i s_i+1 s_i = s_i+1 s_i s_i+1`` for
    i = 1..n-2, then the far commutations ``s_i s_j = s_j s_i`` for j >= i+2.
    """
    if n < 2:
        raise PresentationError("braid requires n >= 2")
    A = Alphabet.free(n - 1, prefix="s")
    s = A.gens()
    rels = [_relation(s[i] * s[i + 1] * s[i], s[i + 1] * s[i] * s[i + 1]) for i in range(n - 2)]
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            rels.append(_relation(s[i] * s[j], s[j] * s[i]))
    return Presentation.from_words(A, rels, name=f"braid:{n}")


def paper_G() -> Presentation:
    """The centre-free factor G of Cb_4^+, on e_3_1, e_3_2, e_4_1, e_4_2, e_4_3.

    Relators r11, r21, r31, r12, r22, r32 in that order.
    """
    A = Alphabet(["e_3_1", "e_3_2", "e_4_1", "e_4_2", "e_4_3"])
    w = A.word
    rels = [
        w("e_4_1^-1 e_3_1^-1 e_4_1 e_3_1"),  # r11
        w("e_4_2^-1 e_3_1^-1 e_4_2 e_3_1"),  # r21
        w("e_4_3^-1 e_4_1^-1 e_3_1^-1 e_4_3 e_3_1 e_4_1"),  # r31
        w("e_4_1^-1 e_3_2^-1 e_4_1 e_3_2"),  # r12
        w("e_4_2^-1 e_3_2^-1 e_4_2 e_3_2"),  # r22
        w("e_4_3^-1 e_4_2^-1 e_3_2^-1 e_4_3 e_3_2 e_4_2"),  # r32
    ]
    return Presentation(A, rels, name="paper_G")


PAPER_G_RELATOR_NAMES = ("r11", "r21", "r31", "r12", "r22", "r32")


def paper_H() -> Presentation:
    """The centre-free factor H of P_4, on a_1_3, a_2_3, a_1_4, a_2_4, a_3_4.

    Relators q11, q21, q12, q22, q31, q32 in that order.
    """
    A = Alphabet(["a_1_3", "a_2_3", "a_1_4", "a_2_4", "a_3_4"])
    w = A.word
    rels = [
        w("a_1_3 a_1_4 a_1_3^-1 a_3_4^-1 a_1_4^-1 a_3_4"),  # q11
        w(
            "a_1_3^-1 a_2_4 a_1_3 a_1_4 a_3_4 a_1_4^-1 a_3_4^-1"
            " a_2_4^-1 a_3_4 a_1_4 a_3_4^-1 a_1_4^-1"
        ),  # q21
        w("a_1_4^-1 a_2_3^-1 a_1_4 a_2_3"),  # q12
        w("a_2_3 a_2_4 a_2_3^-1 a_3_4^-1 a_2_4^-1 a_3_4"),  # q22
        w("a_1_3^-1 a_3_4 a_1_3 a_1_4 a_3_4^-1 a_1_4^-1"),  # q31
        w("a_2_3^-1 a_3_4 a_2_3 a_2_4 a_3_4^-1 a_2_4^-1"),  # q32
    ]
    return Presentation(A, rels, name="paper_H")


PAPER_H_RELATOR_NAMES = ("q11", "q21", "q12", "q22", "q31", "q32")


def h_z() -> Presentation:
    """``<a, t | [a, [a, t]]>``"""
    A = Alphabet(["a", "t"])
    return Presentation(A, [A.word("[a,[a,t]]")], name="h_z")


def index2_H() -> Presentation:
    """Five-generator, eight-relator index-2 subgroup of the poison group.

    ``x^y`` is ``y^-1 x y``.
    """
    A = Alphabet.free(5)
    x1, x2, x3, x4, x5 = A.gens()
    x1c, x2c = conjugate(x1, x5), conjugate(x2, x5)
    rels = [
        commutator(x1, x3),
        commutator(x2, x4),
        commutator(x1c, x3),
        commutator(x2c, x4),
        commutator(x1 * x3, x2),
        commutator(x2 * x4, x1),
        commutator(x1c * x3, x4),
        commutator(x2c * x4, x3),
    ]
    return Presentation(A, rels, name="index2_H")


_NO_ARG = {"paper_G": paper_G, "paper_H": paper_H, "h_z": h_z, "index2_H": index2_H}
_WITH_N = {
    "mccool": mccool,
    "pure_braid": pure_braid,
    "braid": braid,
    "free": free,
    "poison_free": lambda n: poison(free(n)),
}
_MIN_N = {"free": 0, "poison_free": 1}
BUILTIN_FAMILIES = tuple(sorted(_WITH_N)) + tuple(sorted(_NO_ARG))


def builtin(family: str, n: Optional[int] = None) -> Presentation:
    """Look up a built-in presentation by family name.

    ``builtin("mccool", 3)``; ``builtin("paper_G")``.
    """
    if family in _NO_ARG:
        if n is not None:
            raise PresentationError(f"{family} takes no size parameter")
        return _NO_ARG[family]()
    if family in _WITH_N:
        if n is None:
            raise PresentationError(f"{family} requires a size parameter n")
        n = int(n)
        if n < _MIN_N.get(family, 2):
            raise PresentationError(f"{family}: n={n} out of range")
        return _WITH_N[family](n)
    raise PresentationError(f"unknown family {family!r}; known: {', '.join(BUILTIN_FAMILIES)}")


# ---------------------------------------------------------------------------
# derived builders


def semidirect(fiber: Alphabet, base: Alphabet, action: Mapping[str, "Endomorphism"]) -> Presentation:  # noqa: F821
    """Presentation of ``F(fiber) x| F(base)``.

    For each base generator u (outer loop) and fiber generator x (inner loop)
    the relator ``u x u^-1 (phi(u)(x))^-1`` encodes ``u x u^-1 = phi(u)(x)``.
    Base generators missing from ``action`` act trivially.
    """
    clash = set(fiber.names) & set(base.names)
    if clash:
        raise PresentationError(f"fiber and base share generator names: {sorted(clash)}")
    A = fiber.extend(base.names)
    k = len(fiber)
    fiber_map = list(range(k))
    rels = []
    for u in base.generators:
        phi = action.get(u.name)
        if phi is not None and phi.alphabet != fiber:
            raise PresentationError(f"action of {u.name} is not an endomorphism of the fiber")
        uw = A.letter(u.name)
        for x in fiber.generators:
            xw = A.letter(x.name)
            img = phi.images[x.index] if phi is not None else fiber.letter(x.name)
            rels.append(uw * xw * uw.inverse() * img.rename(A, fiber_map).inverse())
    return Presentation.from_words(A, rels, name="semidirect")


def poison(g_pres: Presentation, prime: str = "'", stable: str = "t") -> Presentation:
    """HNN presentation of ``H(G) = <G x G, t | t (g, g) t^-1 = (g, 1)>``.

    Generators: g_1..g_m, then the primed copy g_1'..g_m', then ``t``.
    Relators, in order: the relators of G, the same relators on the primed
    copy, ``[g_i, g_j']`` for all i, j, and ``t g_i g_i' t^-1 g_i^-1`` for each i.

    The stable-letter relation is imposed on generators only; that is enough
    because if it holds for g and h, then t(gh)(gh)'t^-1 = t g g' t^-1 t h h' t^-1
    = gh, using that h commutes with g'.
    """
    names = g_pres.alphabet.names
    primed = [n + prime for n in names]
    try:
        A = Alphabet(list(names) + primed + [stable])
    except ValueError as e:
        raise PresentationError(f"name collision building poison group: {e}") from None
    m = len(names)
    first = list(range(m))
    second = list(range(m, 2 * m))
    rels = [r.rename(A, first) for r in g_pres.relators]
    rels += [r.rename(A, second) for r in g_pres.relators]
    g = [A.letter(n) for n in names]
    gp = [A.letter(n) for n in primed]
    t = A.letter(stable)
    for i in range(m):
        for j in range(m):
            rels.append(commutator(g[i], gp[j]))
    for i in range(m):
        rels.append(t * g[i] * gp[i] * t.inverse() * g[i].inverse())
    label = f"poison({g_pres.name})" if g_pres.name else "poison"
    return Presentation.from_words(A, rels, name=label)

"""Endomorphisms of free groups given by generator images.

Composition is right-to-left: ``compose(e1, e2)`` (also ``e1 * e2``) first
applies ``e2``, then ``e1``.

Relators are evaluated by default with the first letter acting first: the word
``g_1 ... g_k`` goes to ``f(g_k) o ... o f(g_1)``.  This is the convention of
the classical tables for sigma_i, a_rs and e_ij (``a_13 = s_2 s_1^2 s_2^-1``
only holds read this way, and the pure braid relations need it).  Pass
``order="right-to-left"`` for the function-composition reading.

Inverses are never computed; every builtin comes with a hand-derived inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .presentation import Presentation
from .words import Alphabet, AlphabetMismatch, Word, commutator, cyclically_reduce

__all__ = [
    "Endomorphism",
    "identity",
    "compose",
    "commutes",
    "sigma",
    "pure_braid_generator",
    "eps",
    "epsk",
    "inner",
    "builtin_autom",
    "builtin_pair",
    "RelatorCheck",
    "VerificationReport",
    "verify_homomorphism",
    "LEFT_TO_RIGHT",
    "RIGHT_TO_LEFT",
    "is_ia",
    "poison_assignment",
    "image_of_word",
    "BraidReport",
    "braid_membership",
]


class Endomorphism:
    """A self-map of the free group on ``alphabet``, ``images[i]`` being the
    image of the i-th generator."""

    __slots__ = ("alphabet", "images")

    def __init__(self, alphabet: Alphabet, images: Sequence[Word]):
        images = tuple(images)
        if len(images) != len(alphabet):
            raise ValueError(f"need {len(alphabet)} images, got {len(images)}")
        for w in images:
            if w.alphabet != alphabet:
                raise AlphabetMismatch(f"image {w} is not over {alphabet.names}")
        self.alphabet = alphabet
        self.images = images

    @classmethod
    def from_mapping(cls, alphabet: Alphabet, mapping: Mapping[str, object]) -> "Endomorphism":
        """Generators absent from ``mapping`` are fixed; values may be words or strings."""
        unknown = set(mapping) - set(alphabet.names)
        if unknown:
            raise KeyError(f"unknown generators: {sorted(unknown)}")
        images = []
        for g in alphabet.names:
            v = mapping.get(g)
            if v is None:
                images.append(alphabet.letter(g))
            elif isinstance(v, str):
                images.append(alphabet.word(v))
            else:
                images.append(v)
        return cls(alphabet, images)

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    def __call__(self, w: Word) -> Word:
        return self.apply(w)

    def apply(self, w: Word) -> Word:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("word and endomorphism have different alphabets")
        out = []
        imgs = self.images
        for c in w.codes:
            out.extend(imgs[c - 1].codes if c > 0 else imgs[-c - 1].inverse().codes)
        return Word(self.alphabet, out)

    def __mul__(self, other: "Endomorphism") -> "Endomorphism":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.alphabet == other.alphabet and self.images == other.images

    def __hash__(self):
        return hash((self.alphabet, self.images))

    def is_identity(self) -> bool:
        return all(w.codes == (i + 1,) for i, w in enumerate(self.images))

    def __repr__(self):
        body = ", ".join(f"{g} -> {w}" for g, w in zip(self.alphabet.names, self.images))
        return f"Endomorphism({body})"

    def to_text(self) -> str:
        return "images:[" + ";".join(str(w) for w in self.images) + "]"


def identity(alphabet: Alphabet) -> Endomorphism:
    return Endomorphism(alphabet, alphabet.gens())


def compose(e1: Endomorphism, e2: Endomorphism) -> Endomorphism:
    """``e1 o e2``: apply ``e2`` first, then ``e1``."""
    if e1.alphabet != e2.alphabet:
        raise ValueError(f"rank mismatch: {e1.rank} vs {e2.rank}")
    return Endomorphism(e1.alphabet, [e1.apply(w) for w in e2.images])


def commutes(e1: Endomorphism, e2: Endomorphism) -> bool:
    return compose(e1, e2) == compose(e2, e1)


# ---------------------------------------------------------------------------
# builtin automorphisms of F_n = <x1..xn>, each with its inverse


def _check_index(n, *idx):
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range for rank {n}")


def sigma(i: int, n: int, inverse: bool = False) -> Endomorphism:
    """Artin generator: x_i -> x_i x_i+1 x_i^-1, x_i+1 -> x_i.

    Inverse: x_i -> x_i+1, x_i+1 -> x_i+1^-1 x_i x_i+1.
    """
    _check_index(n, i, i + 1)
    X = Alphabet.free(n)
    x = X.gens()
    a, b = x[i - 1], x[i]
    if inverse:
        imgs = {f"x{i}": b, f"x{i + 1}": b.inverse() * a * b}
    else:
        imgs = {f"x{i}": a * b * a.inverse(), f"x{i + 1}": a}
    return Endomorphism.from_mapping(X, imgs)


def pure_braid_generator(r: int, s: int, n: int, inverse: bool = False) -> Endomorphism:
    """a_rs: x_r -> x_r x_s x_r x_s^-1 x_r^-1, x_s -> x_r x_s x_r^-1 and
    x_i -> C x_i C^-1 for r < i < s, where C = [x_r^-1, x_s^-1].

    a_rs fixes P = x_r x_s and conjugates x_r, x_s by P, and a_rs(C) = P C P^-1.
    Hence the inverse conjugates x_r, x_s by P^-1 and each middle x_i by
    P^-1 C P = [x_r, x_s], i.e. x_i -> [x_r, x_s]^-1 x_i [x_r, x_s].
    """
    if not r < s:
        raise ValueError("pure braid generator needs r < s")
    _check_index(n, r, s)
    X = Alphabet.free(n)
    x = X.gens()
    xr, xs = x[r - 1], x[s - 1]
    p = xr * xs
    imgs = {}
    if inverse:
        c = commutator(xr, xs)
        imgs[f"x{r}"] = p.inverse() * xr * p
        imgs[f"x{s}"] = p.inverse() * xs * p
        for i in range(r + 1, s):
            imgs[f"x{i}"] = c.inverse() * x[i - 1] * c
    else:
        c = commutator(xr.inverse(), xs.inverse())
        imgs[f"x{r}"] = xr * xs * xr * xs.inverse() * xr.inverse()
        imgs[f"x{s}"] = xr * xs * xr.inverse()
        for i in range(r + 1, s):
            imgs[f"x{i}"] = c * x[i - 1] * c.inverse()
    return Endomorphism.from_mapping(X, imgs)


def eps(i: int, j: int, n: int, inverse: bool = False) -> Endomorphism:
    """Basis conjugation x_i -> x_j^-1 x_i x_j (inverse: x_i -> x_j x_i x_j^-1)."""
    if i == j:
        raise ValueError("eps needs i != j")
    _check_index(n, i, j)
    X = Alphabet.free(n)
    xi, xj = X.letter(f"x{i}"), X.letter(f"x{j}")
    if inverse:
        xj = xj.inverse()
    return Endomorphism.from_mapping(X, {f"x{i}": xj.inverse() * xi * xj})


def epsk(i: int, j: int, k: int, n: int, inverse: bool = False) -> Endomorphism:
    """x_i -> x_i [x_j, x_k] for k != i, j; the inverse uses [x_j, x_k]^-1,
    valid because [x_j, x_k] does not involve x_i."""
    if len({i, j, k}) != 3:
        raise ValueError("epsk needs pairwise distinct indices")
    _check_index(n, i, j, k)
    X = Alphabet.free(n)
    c = commutator(X.letter(f"x{j}"), X.letter(f"x{k}"))
    if inverse:
        c = c.inverse()
    return Endomorphism.from_mapping(X, {f"x{i}": X.letter(f"x{i}") * c})


def inner(c: Word, inverse: bool = False) -> Endomorphism:
    """Conjugation x -> c x c^-1, so that inner(c) o inner(d) = inner(cd)."""
    if inverse:
        c = c.inverse()
    X = c.alphabet
    return Endomorphism(X, [c * g * c.inverse() for g in X.gens()])


def builtin_autom(name: str, *indices: int, inverse: bool = False) -> Endomorphism:
    """Dispatch by name: ``sigma i n``, ``a r s n``, ``eps i j n``, ``epsk i j k n``."""
    table = {"sigma": (sigma, 2), "a": (pure_braid_generator, 3), "eps": (eps, 3), "epsk": (epsk, 4)}
    if name not in table:
        raise ValueError(f"unknown builtin automorphism {name!r}")
    fn, arity = table[name]
    if len(indices) != arity:
        raise ValueError(f"{name} takes {arity} integer arguments, got {len(indices)}")
    return fn(*indices, inverse=inverse)


def builtin_pair(name: str, *indices: int) -> Tuple[Endomorphism, Endomorphism]:
    return builtin_autom(name, *indices), builtin_autom(name, *indices, inverse=True)


# ---------------------------------------------------------------------------
# relator verification


@dataclass
class RelatorCheck:
    relator: Word
    image: Endomorphism
    ok: bool


@dataclass
class VerificationReport:
    checks: List[RelatorCheck] = field(default_factory=list)
    inverse_failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.inverse_failures and all(c.ok for c in self.checks)

    def failures(self) -> List[RelatorCheck]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        good = sum(c.ok for c in self.checks)
        status = "PASS" if self.passed else "FAIL"
        return f"{status}: {good}/{len(self.checks)} relators map to the identity"


LEFT_TO_RIGHT = "left-to-right"
RIGHT_TO_LEFT = "right-to-left"


def verify_homomorphism(
    p: Presentation,
    assignment: Mapping[str, Endomorphism],
    inverses: Optional[Mapping[str, Endomorphism]] = None,
    order: str = LEFT_TO_RIGHT,
) -> VerificationReport:
    """Check that every relator of ``p`` maps to the identity endomorphism.

    ``inverses`` must supply an inverse for each generator that occurs with
    a negative exponent; each supplied pair is checked to compose to the
    identity on both sides.  ``order`` says which end of a relator acts first
    (see the module docstring).
    """
    if order not in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
        raise ValueError(f"order must be {LEFT_TO_RIGHT!r} or {RIGHT_TO_LEFT!r}")
    inverses = dict(inverses or {})
    missing = [g for g in p.alphabet.names if g not in assignment]
    if missing:
        raise KeyError(f"no endomorphism assigned to: {', '.join(missing)}")
    ranks = {assignment[g].alphabet for g in p.alphabet.names}
    if len(ranks) > 1:
        raise ValueError("assigned endomorphisms do not share a common free group")

    needed = sorted({p.alphabet.names[-c - 1] for r in p.relators for c in r.codes if c < 0})
    absent = [g for g in needed if g not in inverses]
    if absent:
        raise KeyError(f"inverse needed but not supplied for: {', '.join(absent)}")

    report = VerificationReport()
    for g, inv in inverses.items():
        if g not in assignment:
            continue
        e = assignment[g]
        if not (compose(e, inv).is_identity() and compose(inv, e).is_identity()):
            report.inverse_failures.append(g)

    for r in p.relators:
        image = image_of_word(r, assignment, inverses, order)
        report.checks.append(RelatorCheck(r, image, image.is_identity()))
    return report


def image_of_word(
    w: Word,
    assignment: Mapping[str, Endomorphism],
    inverses: Optional[Mapping[str, Endomorphism]] = None,
    order: str = LEFT_TO_RIGHT,
) -> Endomorphism:
    """Endomorphism obtained by letting the letters of ``w`` act in turn.

    Under ``left-to-right`` the first letter acts first, so ``g h`` gives
    ``f(h) o f(g)``; under ``right-to-left`` it gives ``f(g) o f(h)``.
    """
    names = w.alphabet.names
    if not names:
        raise ValueError("word over an empty alphabet")
    X = assignment[names[0]].alphabet
    current = list(X.gens())
    codes = w.codes if order == LEFT_TO_RIGHT else tuple(reversed(w.codes))
    for c in codes:
        if c > 0:
            e = assignment[names[c - 1]]
        else:
            g = names[-c - 1]
            if not inverses or g not in inverses:
                raise KeyError(f"inverse needed but not supplied for: {g}")
            e = inverses[g]
        current = [e.apply(x) for x in current]
    return Endomorphism(X, current)


# ---------------------------------------------------------------------------
# Artin's braid conditions


@dataclass
class BraidReport:
    is_candidate: bool
    permutation: Optional[Tuple[int, ...]] = None  # 1-based: i -> permutation[i-1]
    conjugators: Optional[Tuple[Word, ...]] = None
    reason: str = ""


def braid_membership(e: Endomorphism) -> BraidReport:
    """Test Artin's two conditions: each x_i goes to a_i^-1 x_pi(i) a_i for
    a permutation pi, and the product x_1...x_n is fixed."""
    n = e.rank
    perm = []
    conj = []
    for i, img in enumerate(e.images):
        core, c = cyclically_reduce(img)
        if len(core) != 1 or core.codes[0] < 0:
            return BraidReport(False, reason=f"image of {e.alphabet.names[i]} is not a conjugate of a generator")
        perm.append(core.codes[0])
        conj.append(c)
    if sorted(perm) != list(range(1, n + 1)):
        return BraidReport(False, reason="generator images do not induce a permutation")
    prod = e.alphabet.identity()
    for g in e.alphabet.gens():
        prod = prod * g
    if e.apply(prod) != prod:
        return BraidReport(False, tuple(perm), tuple(conj), reason="product x1...xn is not fixed")
    return BraidReport(True, tuple(perm), tuple(conj))


def is_ia(e: Endomorphism) -> bool:
    """True when ``e`` induces the identity on the abelianization."""
    for i, w in enumerate(e.images):
        for g in e.alphabet.generators:
            if w.exponent_sum(g) != (1 if g.index == i else 0):
                return False
    return True


def poison_assignment(a1: Word, a2: Word, a3: Word, order: str = LEFT_TO_RIGHT):
    """Images of the generators of ``poison(free(2))`` in Aut(F_3).

    ``a1, a2`` must lie in <x1, x2> and ``a3`` is the stable letter's
    conjugator (x3 in the standard example).  The first copy of F_2 goes to
    the maps fixing x1, x2 and multiplying x3 on the right, the primed copy
    to conjugations by a1, a2 and t to conjugation by a3.

    With ``order="left-to-right"`` the conjugation is x -> a^-1 x a and the
    first copy acts by x3 -> x3 a_i^-1; with ``"right-to-left"`` it is
    x -> a x a^-1 and x3 -> x3 a_i.  Either way the five images generate the
    same subgroup as conjugation by a_1, a_2, a_3 together with
    x3 -> x3 a_1 and x3 -> x3 a_2.

    Returns ``(assignment, inverses)`` keyed by generator name.
    """
    X = a3.alphabet
    x3 = X.gens()[2]
    ltr = order == LEFT_TO_RIGHT

    def conj(c):
        return (inner(c.inverse()), inner(c)) if ltr else (inner(c), inner(c.inverse()))

    def mult(c):
        fwd = Endomorphism.from_mapping(X, {"x3": x3 * (c.inverse() if ltr else c)})
        back = Endomorphism.from_mapping(X, {"x3": x3 * (c if ltr else c.inverse())})
        return fwd, back

    assignment, inverses = {}, {}
    for name, a in (("x1", a1), ("x2", a2)):
        assignment[name], inverses[name] = mult(a)
        assignment[name + "'"], inverses[name + "'"] = conj(a)
    assignment["t"], inverses["t"] = conj(a3)
    return assignment, inverses

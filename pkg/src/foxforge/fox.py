"""Integral group ring of a free group and Fox derivatives."""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple, Union

from .poly import LaurentPoly
from .words import Alphabet, AlphabetMismatch, Generator, Word

__all__ = [
    "GroupRingElement",
    "augment",
    "fox_derivative",
    "fox_gradient",
    "fundamental_check",
    "specialize",
]


class GroupRingElement:
    """A finite integer combination of reduced words.

    Multiplication reduces word products eagerly, so keys stay canonical.
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, int] = None):
        clean: Dict[Word, int] = {}
        for w, c in (terms or {}).items():
            if w.alphabet != alphabet:
                raise AlphabetMismatch(f"word {w} is not over {alphabet.names}")
            if c:
                v = clean.get(w, 0) + int(c)
                if v:
                    clean[w] = v
                else:
                    clean.pop(w, None)
        self.alphabet = alphabet
        self.terms = clean

    @classmethod
    def _from_clean(cls, alphabet, terms):
        v = object.__new__(cls)
        v.alphabet = alphabet
        v.terms = terms
        return v

    @classmethod
    def of(cls, w: Word, c: int = 1) -> "GroupRingElement":
        return cls(w.alphabet, {w: c})

    @classmethod
    def one(cls, alphabet: Alphabet) -> "GroupRingElement":
        return cls(alphabet, {alphabet.identity(): 1})

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "GroupRingElement":
        return cls(alphabet)

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            if other.alphabet != self.alphabet:
                raise AlphabetMismatch("group ring elements over different alphabets")
            return other
        if isinstance(other, Word):
            return GroupRingElement.of(other) if other.alphabet == self.alphabet else None
        if isinstance(other, int):
            return GroupRingElement(self.alphabet, {self.alphabet.identity(): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return GroupRingElement._from_clean(self.alphabet, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._from_clean(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.alphabet, {w: c * other for w, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement._from_clean(self.alphabet, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, GroupRingElement) else other
        if other is None:
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"GroupRingElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=Word.sort_key)
        return " + ".join(f"{self.terms[w]}*{w}" for w in ordered)


def augment(v: GroupRingElement) -> int:
    """Sum of coefficients (every word goes to 1)."""
    return sum(v.terms.values())


def _gen_index(alphabet: Alphabet, g: Union[str, Generator]) -> int:
    if isinstance(g, Generator):
        if g not in alphabet:
            raise KeyError(f"generator {g.name} not in alphabet")
        return g.index
    return alphabet.index(g)


def _word_derivative(w: Word, j: int) -> Dict[Tuple[int, ...], int]:
    # Peel letters left to right: the prefix before an x_j contributes +prefix,
    # an x_j^-1 contributes -(prefix x_j^-1).
    out: Dict[Tuple[int, ...], int] = {}
    target = j + 1
    codes = w.codes
    for k, c in enumerate(codes):
        if c == target:
            key, sign = codes[:k], 1
        elif c == -target:
            key, sign = codes[: k + 1], -1
        else:
            continue
        v = out.get(key, 0) + sign
        if v:
            out[key] = v
        else:
            del out[key]
    return out


def fox_derivative(v: Union[GroupRingElement, Word], g: Union[str, Generator]) -> GroupRingElement:
    """Fox derivative of ``v`` with respect to generator ``g``.

    >>> from foxforge.words import Alphabet
    >>> X = Alphabet.free(2)
    >>> str(fox_derivative(X.word("[x1,x2]"), "x1"))
    '-1*x1^-1 + 1*x1^-1*x2^-1'
    """
    if isinstance(v, Word):
        v = GroupRingElement.of(v)
    j = _gen_index(v.alphabet, g)
    A = v.alphabet
    out: Dict[Word, int] = {}
    for w, c in v.terms.items():
        for key, s in _word_derivative(w, j).items():
            # prefixes of a reduced word are reduced
            pw = Word._raw(A, key)
            out[pw] = out.get(pw, 0) + c * s
    return GroupRingElement._from_clean(A, {w: c for w, c in out.items() if c})


def fox_gradient(v) -> Tuple[GroupRingElement, ...]:
    """All Fox derivatives of ``v``, in alphabet order."""
    if isinstance(v, Word):
        v = GroupRingElement.of(v)
    return tuple(fox_derivative(v, g) for g in v.alphabet.generators)


def fundamental_check(v: Union[GroupRingElement, Word]) -> bool:
    """Check ``v - aug(v) = sum_j dv/dx_j (x_j - 1)`` exactly."""
    if isinstance(v, Word):
        v = GroupRingElement.of(v)
    A = v.alphabet
    lhs = v - augment(v)
    rhs = GroupRingElement.zero(A)
    for g, x in zip(A.generators, A.gens()):
        rhs = rhs + fox_derivative(v, g) * (GroupRingElement.of(x) - 1)
    return lhs == rhs


def specialize(v: Union[GroupRingElement, Word], weights: Mapping[str, int] = None) -> LaurentPoly:
    """Ring map to Z[t, t^-1] sending generator g to ``t^weights[g]``.

    ``weights=None`` sends every generator to ``t``.
    """
    if isinstance(v, Word):
        v = GroupRingElement.of(v)
    A = v.alphabet
    if weights is None:
        w = [1] * len(A)
    else:
        missing = [n for n in A.names if n not in weights]
        if missing:
            raise KeyError(f"no weight for generator(s): {', '.join(missing)}")
        w = [int(weights[n]) for n in A.names]
    out: Dict[int, int] = {}
    for word, c in v.terms.items():
        e = sum(w[k - 1] if k > 0 else -w[-k - 1] for k in word.codes)
        out[e] = out.get(e, 0) + c
    return LaurentPoly(out)

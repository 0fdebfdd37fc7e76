"""Reduced words in free groups.

A :class:`Word` is stored as a tuple of signed letter codes: the generator
with alphabet index ``i`` is ``i + 1`` and its inverse is ``-(i + 1)``.
Every constructor reduces freely, so two words are equal as group elements
exactly when their letter tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple, Union

__all__ = [
    "AlphabetMismatch",
    "Alphabet",
    "Generator",
    "Word",
    "reduce",
    "multiply",
    "commutator",
    "conjugate",
    "cyclically_reduce",
]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*'*\Z")


class AlphabetMismatch(ValueError):
    """Raised when words over different alphabets are combined."""


@dataclass(frozen=True)
class Generator:
    name: str
    index: int

    def __str__(self):
        return self.name


class Alphabet:
    """An ordered tuple of distinct generator names.

    Alphabets compare by their names, so two independently built copies of
    ``x1..xn`` are interchangeable.
    """

    __slots__ = ("names", "_lookup", "_hash")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid generator name: {name!r}")
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate generator names: {', '.join(dup)}")
        self.names = names
        self._lookup = {n: i for i, n in enumerate(names)}
        self._hash = hash(names)

    @classmethod
    def free(cls, n: int, prefix: str = "x") -> "Alphabet":
        """The alphabet ``x1, ..., xn``."""
        if n < 0:
            raise ValueError("rank must be non-negative")
        return cls(f"{prefix}{i}" for i in range(1, n + 1))

    def __len__(self):
        return len(self.names)

    def __iter__(self) -> Iterator[Generator]:
        return (Generator(n, i) for i, n in enumerate(self.names))

    def __contains__(self, name) -> bool:
        if isinstance(name, Generator):
            return self._lookup.get(name.name) == name.index
        return name in self._lookup

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def __getitem__(self, key: Union[str, int]) -> Generator:
        if isinstance(key, int):
            return Generator(self.names[key], key)
        try:
            return Generator(key, self._lookup[key])
        except KeyError:
            raise KeyError(f"unknown generator {key!r}") from None

    def index(self, name: str) -> int:
        try:
            return self._lookup[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return tuple(self)

    # word constructors

    def identity(self) -> "Word":
        return Word(self, ())

    def letter(self, name: Union[str, Generator], sign: int = 1) -> "Word":
        i = name.index if isinstance(name, Generator) else self.index(name)
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return Word._raw(self, ((i + 1) * sign,))

    def gens(self) -> Tuple["Word", ...]:
        """Each generator as a one-letter word."""
        return tuple(Word._raw(self, (i + 1,)) for i in range(len(self)))

    def word(self, text: str) -> "Word":
        """Parse ``text`` in the word syntax, e.g. ``"[x1,x2]*x3^-2"``."""
        from .dsl import parse_word

        return parse_word(text, self)

    def extend(self, names: Iterable[str]) -> "Alphabet":
        return Alphabet(self.names + tuple(names))


def _free_reduce(codes: Iterable[int]) -> Tuple[int, ...]:
    stack = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


class Word:
    """A freely reduced word over an :class:`Alphabet`."""

    __slots__ = ("alphabet", "codes", "_hash")

    def __init__(self, alphabet: Alphabet, codes: Iterable[int] = ()):
        n = len(alphabet)
        codes = tuple(codes)
        for c in codes:
            if c == 0 or abs(c) > n:
                raise ValueError(f"letter code {c} outside alphabet of size {n}")
        self.alphabet = alphabet
        self.codes = _free_reduce(codes)
        self._hash = None

    @classmethod
    def _raw(cls, alphabet, codes):
        # codes already reduced and in range
        w = object.__new__(cls)
        w.alphabet = alphabet
        w.codes = codes
        w._hash = None
        return w

    # -- basic protocol --

    def __len__(self):
        return len(self.codes)

    def __bool__(self):
        return bool(self.codes)

    def __iter__(self) -> Iterator[Tuple[Generator, int]]:
        for c in self.codes:
            i = abs(c) - 1
            yield Generator(self.alphabet.names[i], i), (1 if c > 0 else -1)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.codes == other.codes and self.alphabet == other.alphabet

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabet, self.codes))
        return self._hash

    def __repr__(self):
        return f"Word({self})"

    def __str__(self):
        if not self.codes:
            return "1"
        names = self.alphabet.names
        return "*".join(
            names[c - 1] if c > 0 else f"{names[-c - 1]}^-1" for c in self.codes
        )

    def sort_key(self):
        """Length first, then letters by (generator index, sign)."""
        return (len(self.codes), tuple((abs(c), -c) for c in self.codes))

    def is_identity(self) -> bool:
        return not self.codes

    def _check(self, other: "Word"):
        if not isinstance(other, Word):
            raise TypeError(f"expected Word, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch(
                f"alphabets differ: {self.alphabet.names} vs {other.alphabet.names}"
            )

    # -- group operations --

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        a, b = self.codes, other.codes
        k = 0
        m = min(len(a), len(b))
        while k < m and a[len(a) - 1 - k] == -b[k]:
            k += 1
        return Word._raw(self.alphabet, a[: len(a) - k] + b[k:])

    def inverse(self) -> "Word":
        return Word._raw(self.alphabet, tuple(-c for c in reversed(self.codes)))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.alphabet.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exponent_sum(self, gen: Union[str, Generator]) -> int:
        i = gen.index if isinstance(gen, Generator) else self.alphabet.index(gen)
        return sum(1 if c > 0 else -1 for c in self.codes if abs(c) == i + 1)

    def rename(self, alphabet: Alphabet, mapping: Sequence[int] = None) -> "Word":
        """Move the word into ``alphabet``; ``mapping[i]`` is the new index of
        old generator ``i`` (identity when omitted)."""
        if mapping is None:
            mapping = range(len(self.alphabet))
        codes = tuple(
            (mapping[c - 1] + 1) if c > 0 else -(mapping[-c - 1] + 1)
            for c in self.codes
        )
        return Word(alphabet, codes)


def reduce(alphabet: Alphabet, raw: Iterable[Tuple[Union[str, Generator, int], int]]) -> Word:
    """Freely reduce a sequence of ``(generator, sign)`` pairs.

    Generators may be given as names, :class:`Generator` objects or indices.

    >>> X = Alphabet.free(3)
    >>> str(reduce(X, [("x2", 1), ("x1", 1), ("x1", -1), ("x2", -1), ("x3", 1)]))
    'x3'
    """
    codes = []
    for g, sign in raw:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if isinstance(g, Generator):
            i = g.index
            if alphabet.names[i] != g.name:
                raise AlphabetMismatch(f"generator {g.name} not in alphabet")
        elif isinstance(g, int):
            i = g
        else:
            i = alphabet.index(g)
        codes.append((i + 1) * sign)
    return Word(alphabet, codes)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def commutator(a: Word, b: Word) -> Word:
    """``[a, b] = a^-1 b^-1 a b``."""
    a._check(b)
    return a.inverse() * b.inverse() * a * b


def conjugate(x: Word, y: Word) -> Word:
    """``x^y = y^-1 x y``."""
    return y.inverse() * x * y


def cyclically_reduce(w: Word) -> Tuple[Word, Word]:
    """Split ``w`` as ``conjugator^-1 * core * conjugator`` with ``core``
    cyclically reduced.

    >>> X = Alphabet.free(3)
    >>> core, c = cyclically_reduce(X.word("x3^-1*x2*x1*x2^-1*x3"))
    >>> str(core), str(c)
    ('x1', 'x2^-1*x3')
    """
    codes = w.codes
    k = 0
    while 2 * k + 1 < len(codes) and codes[k] == -codes[len(codes) - 1 - k]:
        k += 1
    core = Word._raw(w.alphabet, codes[k : len(codes) - k])
    # w = l_1..l_k core l_k^-1..l_1^-1, so the conjugator is l_k^-1..l_1^-1
    conj = Word._raw(w.alphabet, tuple(-c for c in reversed(codes[:k])))
    return core, conj

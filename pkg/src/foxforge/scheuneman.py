"""Class-2 nilpotent Lie algebras, ordered products in U(L), and the
alternating-sum invariant with a Hessian-based non-equivalence test.

An algebra has a non-central basis ``x1..xn`` and a central basis
``y1..yr``; every bracket ``[x_i, x_j]`` is a rational combination of the
``y``.  Jacobi holds automatically in class 2 because all double brackets
vanish, so nothing is checked.

Elements of U(L) are kept in PBW normal form: an ordered x-monomial
``x1^e1 ... xn^en`` times a polynomial in the (commuting, central) y's.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .alexander import Verdict
from .poly import MultiPoly, hessian

__all__ = [
    "MAX_INVARIANT_N",
    "NilLie2",
    "UElement",
    "DimensionMismatch",
    "u_multiply",
    "scheuneman_invariant",
    "central_part",
    "build_L_alpha",
    "parse_alpha",
    "parse_alpha_spec",
    "ALPHA_ALLOWED",
    "CASE_ALPHAS",
    "hessian_signature",
    "distinguish_forms",
    "distinguish_algebras",
    "heisenberg",
    "InvariantReport",
    "analyse",
]

# n! ordered products; 8 gives 40320 and is far beyond the 6 we need.
MAX_INVARIANT_N = 8

XExp = Tuple[int, ...]
YExp = Tuple[int, ...]
Key = Tuple[XExp, YExp]


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class NilLie2:
    x_count: int
    y_count: int
    bracket_table: Mapping[Tuple[int, int], Tuple[Fraction, ...]]
    x_names: Tuple[str, ...] = ()
    y_names: Tuple[str, ...] = ()

    def __post_init__(self):
        n, r = self.x_count, self.y_count
        if n < 1 or r < 0:
            raise ValueError("need at least one non-central generator")
        table = {}
        for (i, j), vec in self.bracket_table.items():
            if not (0 <= i < j < n):
                raise ValueError(f"bracket key {(i, j)} must satisfy 0 <= i < j < {n}")
            vec = tuple(Fraction(c) for c in vec)
            if len(vec) != r:
                raise ValueError(f"bracket vector for {(i, j)} has length {len(vec)}, expected {r}")
            table[(i, j)] = vec
        object.__setattr__(self, "bracket_table", table)
        if not self.x_names:
            object.__setattr__(self, "x_names", tuple(f"x{i}" for i in range(1, n + 1)))
        if not self.y_names:
            object.__setattr__(self, "y_names", tuple(f"y{i}" for i in range(1, r + 1)))
        if len(self.x_names) != n or len(self.y_names) != r:
            raise ValueError("name lists do not match dimensions")

    def __hash__(self):
        return hash((self.x_count, self.y_count, tuple(sorted(self.bracket_table.items()))))

    @classmethod
    def from_brackets(cls, n: int, r: int, brackets: Mapping[Tuple[int, int], Sequence], **names):
        """Like the constructor but accepts any ordered pair; ``(j, i)`` is
        stored negated."""
        table = {}
        for (i, j), vec in brackets.items():
            if i == j:
                raise ValueError("[x_i, x_i] is always zero")
            if i > j:
                i, j, vec = j, i, [-Fraction(c) for c in vec]
            table[(i, j)] = tuple(vec)
        return cls(n, r, table, **names)

    def bracket(self, i: int, j: int) -> Tuple[Fraction, ...]:
        if i == j:
            return (Fraction(0),) * self.y_count
        if i < j:
            return self.bracket_table.get((i, j), (Fraction(0),) * self.y_count)
        return tuple(-c for c in self.bracket(j, i))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.x_count, self.y_count

    def zero(self) -> "UElement":
        return UElement(self, {})

    def one(self) -> "UElement":
        return UElement(self, {((0,) * self.x_count, (0,) * self.y_count): Fraction(1)})

    def x(self, i: int) -> "UElement":
        e = [0] * self.x_count
        e[i] = 1
        return UElement(self, {(tuple(e), (0,) * self.y_count): Fraction(1)})

    def y(self, k: int) -> "UElement":
        e = [0] * self.y_count
        e[k] = 1
        return UElement(self, {((0,) * self.x_count, tuple(e)): Fraction(1)})

    def central(self, p: MultiPoly) -> "UElement":
        if len(p.variables) != self.y_count:
            raise DimensionMismatch("polynomial has the wrong number of variables")
        z = (0,) * self.x_count
        return UElement(self, {(z, e): c for e, c in p.terms.items()})


def heisenberg() -> NilLie2:
    return NilLie2(2, 1, {(0, 1): (1,)})


class UElement:
    """Element of U(L) in normal form, stored as ``(x-exponents, y-exponents)
    -> coefficient``."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: NilLie2, terms: Mapping[Key, object]):
        self.algebra = algebra
        clean: Dict[Key, Fraction] = {}
        for (xe, ye), c in terms.items():
            if len(xe) != algebra.x_count or len(ye) != algebra.y_count:
                raise DimensionMismatch("exponent vector does not fit the algebra")
            c = Fraction(c)
            if c:
                v = clean.get((xe, ye), 0) + c
                if v:
                    clean[(xe, ye)] = v
                else:
                    clean.pop((xe, ye), None)
        self._terms = clean

    @classmethod
    def _from_clean(cls, algebra, terms):
        u = object.__new__(cls)
        u.algebra = algebra
        u._terms = terms
        return u

    @property
    def raw_terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    @property
    def terms(self) -> Dict[XExp, MultiPoly]:
        """Ordered x-monomial -> y-polynomial coefficient."""
        grouped: Dict[XExp, Dict[YExp, Fraction]] = {}
        for (xe, ye), c in self._terms.items():
            grouped.setdefault(xe, {})[ye] = c
        names = self.algebra.y_names
        return {xe: MultiPoly(names, ys) for xe, ys in grouped.items()}

    def _check(self, other: "UElement"):
        if other.algebra.shape != self.algebra.shape:
            raise DimensionMismatch(f"shapes {self.algebra.shape} and {other.algebra.shape} differ")

    def __add__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return UElement._from_clean(self.algebra, out)

    def __neg__(self):
        return UElement._from_clean(self.algebra, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UElement(self.algebra, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, UElement):
            return NotImplemented
        return u_multiply(self, other, self.algebra)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        return self.algebra.shape == other.algebra.shape and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"UElement({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        L = self.algebra
        parts = []
        for xe, poly in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            xs = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(L.x_names, xe) if e
            )
            if not xs:
                parts.append(str(poly))
            elif poly == MultiPoly.constant(poly.variables, 1):
                parts.append(xs)
            else:
                parts.append(f"({poly})*{xs}")
        return " + ".join(parts)


def _add_into(out: Dict[Key, Fraction], key: Key, c: Fraction):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class _Straightener:
    """Right multiplication of a normal-form monomial by one x-letter.

    ``x_b x_a = x_a x_b - [x_a, x_b]`` for ``a < b`` and brackets are
    central, so ``x_b^k x_a = x_a x_b^k - k [x_a, x_b] x_b^(k-1)``.
    Peeling the highest letter of the monomial gives a recursion whose
    results are cached per ``(monomial, a)``.
    """

    def __init__(self, L: NilLie2):
        self.L = L
        self.cache: Dict[Tuple[XExp, int], Dict[Tuple[XExp, YExp], Fraction]] = {}
        r = L.y_count
        self.unit_y = [tuple(1 if k == m else 0 for k in range(r)) for m in range(r)]

    def times_x(self, xe: XExp, a: int) -> Dict[Tuple[XExp, YExp], Fraction]:
        key = (xe, a)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        L = self.L
        zero_y = (0,) * L.y_count
        b = max((i for i, e in enumerate(xe) if e), default=-1)
        out: Dict[Tuple[XExp, YExp], Fraction] = {}
        if b <= a:
            e = list(xe)
            e[a] += 1
            out[(tuple(e), zero_y)] = Fraction(1)
        else:
            eb = xe[b]
            head = list(xe)
            head[b] = 0
            head = tuple(head)
            # (x^head x_a) x_b^eb: every index in the head product is below b
            for (he, hy), c in self.times_x(head, a).items():
                e = list(he)
                e[b] = eb
                _add_into(out, (tuple(e), hy), c)
            # - eb [x_a, x_b] x^head x_b^(eb-1)
            low = list(xe)
            low[b] -= 1
            low = tuple(low)
            for k, cab in enumerate(L.bracket(a, b)):
                if cab:
                    _add_into(out, (low, self.unit_y[k]), -eb * cab)
        self.cache[key] = out
        return out

    def mul_x(self, u: Mapping[Key, Fraction], a: int) -> Dict[Key, Fraction]:
        out: Dict[Key, Fraction] = {}
        for (xe, ye), c in u.items():
            for (ne, dy), d in self.times_x(xe, a).items():
                y = tuple(p + q for p, q in zip(ye, dy)) if any(dy) else ye
                _add_into(out, (ne, y), c * d)
        return out


_STRAIGHTENERS: Dict[int, _Straightener] = {}


def _straightener(L: NilLie2) -> _Straightener:
    s = _STRAIGHTENERS.get(id(L))
    if s is None or s.L is not L:
        if len(_STRAIGHTENERS) > 64:
            _STRAIGHTENERS.clear()
        s = _Straightener(L)
        _STRAIGHTENERS[id(L)] = s
    return s


def u_multiply(a: UElement, b: UElement, L: Optional[NilLie2] = None) -> UElement:
    """Product ``a * b`` in normal form."""
    L = L or a.algebra
    for u in (a, b):
        if u.algebra.shape != L.shape:
            raise DimensionMismatch(f"element of shape {u.algebra.shape} used with algebra {L.shape}")
    st = _straightener(L)
    out: Dict[Key, Fraction] = {}
    for (xe, ye), c in b._terms.items():
        acc = a._terms
        for i, e in enumerate(xe):
            for _ in range(e):
                acc = st.mul_x(acc, i)
        for (ke, ky), d in acc.items():
            _add_into(out, (ke, tuple(p + q for p, q in zip(ky, ye))), c * d)
    return UElement._from_clean(L, out)


def scheuneman_invariant(L: NilLie2) -> UElement:
    """Alternating sum of ``x_{s(1)} ... x_{s(n)}`` over all permutations s.

    Orderings sharing a prefix share work: for each subset S of letters
    already placed, keep the signed sum of their ordered products, and
    appending letter i adds ``#{j in S : j > i}`` inversions.
    """
    n = L.x_count
    if n > MAX_INVARIANT_N:
        raise ValueError(f"n = {n} exceeds the configured bound {MAX_INVARIANT_N}")
    st = _straightener(L)
    one = {((0,) * n, (0,) * L.y_count): Fraction(1)}
    layer: Dict[int, Dict[Key, Fraction]] = {0: one}
    for _ in range(n):
        nxt: Dict[int, Dict[Key, Fraction]] = {}
        for mask, acc in layer.items():
            for i in range(n):
                if mask >> i & 1:
                    continue
                inv = bin(mask >> (i + 1)).count("1")
                sign = -1 if inv & 1 else 1
                tgt = nxt.setdefault(mask | 1 << i, {})
                for k, c in st.mul_x(acc, i).items():
                    _add_into(tgt, k, sign * c)
        layer = nxt
    return UElement._from_clean(L, layer.get((1 << n) - 1, {}))


def central_part(u: UElement) -> Tuple[MultiPoly, bool]:
    """Coefficient of the empty x-monomial, and whether anything else is left."""
    L = u.algebra
    z = (0,) * L.x_count
    ys = {ye: c for (xe, ye), c in u._terms.items() if xe == z}
    noncentral = any(xe != z for (xe, _ye) in u._terms)
    return MultiPoly(L.y_names, ys), noncentral


# ---------------------------------------------------------------------------
# the six-generator family L_alpha

_T_PAIRS = {(0, 1): 0, (0, 2): 1, (1, 2): 2}  # y1=[t1,t2], y2=[t1,t3], y3=[t2,t3]

# allowed values of alpha_i, as signed y-indices (0-based)
ALPHA_ALLOWED = (
    frozenset({(1, 0), (1, 2), (1, 1)}),
    frozenset({(-1, 0), (1, 2), (1, 1)}),
    frozenset({(1, 0), (-1, 2), (-1, 1)}),
)

CASE_ALPHAS = {
    "a1": ("[t2,t3]", "[t1,t3]", "[t1,t2]"),
    "a2": ("[t2,t3]", "[t2,t3]", "[t1,t2]"),
}

_BRACKET_RE = re.compile(r"^\s*\[\s*t([123])\s*,\s*t([123])\s*\]\s*$")
_SIGNED_Y_RE = re.compile(r"^\s*([+-]?)\s*y([123])\s*$")


def parse_alpha(text: str) -> Tuple[int, int]:
    """``"[t3,t2]"`` or ``"-y3"`` -> ``(sign, y index)``."""
    m = _BRACKET_RE.match(text)
    if m:
        i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
        if i == j:
            raise ValueError(f"degenerate bracket {text!r}")
        if i < j:
            return 1, _T_PAIRS[(i, j)]
        return -1, _T_PAIRS[(j, i)]
    m = _SIGNED_Y_RE.match(text)
    if m:
        return (-1 if m.group(1) == "-" else 1), int(m.group(2)) - 1
    raise ValueError(f"cannot read alpha value {text!r}; use [ti,tj] or +-y1..y3")


def parse_alpha_spec(text: str) -> Tuple[str, str, str]:
    """``"a1=[t2,t3];a2=[t1,t3];a3=[t1,t2]"`` -> the three value strings."""
    vals: Dict[int, str] = {}
    for part in filter(None, (p.strip() for p in text.split(";"))):
        key, sep, val = part.partition("=")
        key = key.strip().lower()
        if not sep or key not in ("a1", "a2", "a3", "alpha1", "alpha2", "alpha3"):
            raise ValueError(f"bad alpha assignment {part!r}")
        vals[int(key[-1])] = val.strip()
    if sorted(vals) != [1, 2, 3]:
        raise ValueError("alpha spec must set a1, a2 and a3")
    return vals[1], vals[2], vals[3]


def build_L_alpha(a1, a2, a3) -> NilLie2:
    """The algebra on ``t1,t2,t3,u1,u2,u3`` with ``[t_i,u_i] = alpha_i``,
    other mixed brackets zero, and ``y1..y6`` the six brackets within the
    t's and within the u's."""
    alphas = []
    for k, a in enumerate((a1, a2, a3)):
        sa = parse_alpha(a) if isinstance(a, str) else tuple(a)
        if sa not in ALPHA_ALLOWED[k]:
            raise ValueError(f"alpha{k + 1} = {a!r} is not an allowed value")
        alphas.append(sa)
    table: Dict[Tuple[int, int], List[int]] = {}

    def unit(k, s=1):
        v = [0] * 6
        v[k] = s
        return v

    for (i, j), k in _T_PAIRS.items():
        table[(i, j)] = unit(k)
        table[(i + 3, j + 3)] = unit(k + 3)
    for i, (s, k) in enumerate(alphas):
        table[(i, i + 3)] = unit(k, s)
    return NilLie2(6, 6, {k: tuple(v) for k, v in table.items()},
                   x_names=("t1", "t2", "t3", "u1", "u2", "u3"),
                   y_names=tuple(f"y{i}" for i in range(1, 7)))


# ---------------------------------------------------------------------------
# Hessian signatures


def hessian_signature(f: MultiPoly) -> Optional[Tuple[int, ...]]:
    """Sorted nonzero exponents of a monomial ``f``; ``None`` when ``f`` is
    zero or has more than one term.

    For a monomial each variable is a linear factor, so the tuple is the
    multiset of linear-factor multiplicities, which an invertible linear
    change of variables and rescaling cannot alter.
    """
    if not f.is_monomial():
        return None
    (exps,) = f.terms
    return tuple(sorted(e for e in exps if e))


def distinguish_forms(f: MultiPoly, g: MultiPoly) -> Tuple[Verdict, MultiPoly, MultiPoly]:
    hf, hg = hessian(f), hessian(g)
    sf, sg = hessian_signature(hf), hessian_signature(hg)
    if sf is not None and sg is not None and sf != sg:
        return Verdict.DISTINGUISHED, hf, hg
    return Verdict.INCONCLUSIVE, hf, hg


@dataclass
class InvariantReport:
    invariant: UElement
    central: MultiPoly
    noncentral: bool
    hessian: MultiPoly
    signature: Optional[Tuple[int, ...]]


def analyse(L: NilLie2) -> InvariantReport:
    inv = scheuneman_invariant(L)
    c, nc = central_part(inv)
    h = hessian(c)
    return InvariantReport(inv, c, nc, h, hessian_signature(h))


def distinguish_algebras(L1: NilLie2, L2: NilLie2) -> Verdict:
    """``distinguished`` only when both Hessian signatures exist and differ."""
    if L1.shape != L2.shape:
        raise DimensionMismatch(f"algebras of shape {L1.shape} and {L2.shape}")
    r1, r2 = analyse(L1), analyse(L2)
    if r1.noncentral or r2.noncentral:
        return Verdict.INCONCLUSIVE
    if r1.signature is not None and r2.signature is not None and r1.signature != r2.signature:
        return Verdict.DISTINGUISHED
    return Verdict.INCONCLUSIVE

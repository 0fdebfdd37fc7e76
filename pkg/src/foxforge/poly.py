"""Exact polynomial arithmetic.

:class:`LaurentPoly` is an integer Laurent polynomial in ``t``;
:class:`MultiPoly` is a rational polynomial over a fixed list of variable
names.  Both are immutable and keep no zero coefficients.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce as _fold
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

__all__ = [
    "LaurentPoly",
    "MultiPoly",
    "NotDivisible",
    "laurent_gcd",
    "normalize",
    "bareiss_det",
    "hessian",
    "hessian_matrix",
    "substitute_linear",
]


class NotDivisible(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# univariate Laurent polynomials


class LaurentPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        clean = {}
        for e, c in (coeffs or {}).items():
            if int(c) != c:
                raise ValueError(f"non-integer coefficient {c}")
            if c:
                clean[int(e)] = int(c)
        self.coeffs = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def monomial(cls, c: int = 1, e: int = 0) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_list(cls, coeffs: Sequence[int], shift: int = 0) -> "LaurentPoly":
        """``coeffs[i]`` is the coefficient of ``t^(i + shift)``."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_clean({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1 or abs(next(iter(self.coeffs.values()))) != 1:
                raise NotDivisible("only units can be raised to negative powers")
            (e, c), = self.coeffs.items()
            return LaurentPoly({e * k: c ** k})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and abs(next(iter(self.coeffs.values()))) == 1

    @property
    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly._from_clean({e + k: c for e, c in self.coeffs.items()})

    def coefficient(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def evaluate(self, t):
        return sum(c * t ** e for e, c in self.coeffs.items())

    def to_list(self) -> Tuple[int, List[int]]:
        """``(shift, dense coefficients)`` with the lowest exponent first."""
        if not self.coeffs:
            return 0, []
        lo, hi = self.min_exp, self.max_exp
        return lo, [self.coeffs.get(e, 0) for e in range(lo, hi + 1)]

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def to_json(self) -> Dict[str, int]:
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): c for e, c in data.items()})

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPoly":
        """Parse the expanded form produced by ``str``."""
        terms = _parse_terms(text, (var,))
        out: Dict[int, int] = {}
        for coeff, exps in terms:
            if coeff.denominator != 1:
                raise ValueError(f"non-integer coefficient in {text!r}")
            out[exps[0]] = out.get(exps[0], 0) + int(coeff)
        return cls(out)


def _parse_terms(text: str, variables: Sequence[str]) -> List[Tuple[Fraction, Tuple[int, ...]]]:
    s = text.replace(" ", "")
    if s in ("", "0"):
        return []
    index = {v: i for i, v in enumerate(variables)}
    terms = []
    pos = 0
    pattern = re.compile(r"([+-]?)((?:[^+\-^]|\^-?\d+)+)")
    while pos < len(s):
        m = pattern.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        exps = [0] * len(variables)
        for factor in m.group(2).split("*"):
            if not factor:
                raise ValueError(f"cannot parse polynomial {text!r}")
            base, _, power = factor.partition("^")
            if base in index:
                exps[index[base]] += int(power) if power else 1
            else:
                if power:
                    raise ValueError(f"cannot parse factor {factor!r}")
                coeff *= Fraction(base)
        terms.append((coeff, tuple(exps)))
        pos = m.end()
    return terms


def _strip(p: List[int]) -> List[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content(p: Sequence[int]) -> int:
    return _fold(math.gcd, p, 0)


def _prem(a: List[int], b: List[int]) -> List[int]:
    """Pseudo-remainder of dense integer polynomials (lowest degree first)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + k] -= lr * c
        _strip(r)
    return r


def _primitive(p: List[int]) -> List[int]:
    g = _content(p)
    return [c // g for c in p] if g else p


def _poly_gcd(a: List[int], b: List[int]) -> List[int]:
    """Gcd in Z[t] via the primitive remainder sequence."""
    if not a:
        return list(b)
    if not b:
        return list(a)
    g = math.gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r) if r else []
    a = _primitive(a)
    if a[-1] < 0:
        a = [-c for c in a]
    return [g * c for c in a]


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Canonical associate under units ``+-t^k``: lowest exponent 0 and
    positive constant term.

    >>> str(normalize(LaurentPoly({-2: -1, -1: 1})))
    '1 - t'
    """
    if p.is_zero():
        return p
    q = p.shift(-p.min_exp)
    return -q if q.coeffs[0] < 0 else q


def laurent_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Normalized gcd in Z[t, t^-1]; ``gcd(0, 0) = 0``."""
    if p.is_zero():
        return normalize(q)
    if q.is_zero():
        return normalize(p)
    _, a = p.to_list()
    _, b = q.to_list()
    return normalize(LaurentPoly.from_list(_poly_gcd(a, b)))


def laurent_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``p / q`` in Z[t, t^-1]; raises :class:`NotDivisible`."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    sp, a = p.to_list()
    sq, b = q.to_list()
    # b has nonzero constant term, so divisibility in Z[t, 1/t] is divisibility in Z[t]
    quot = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b) and r:
        lr = r[-1]
        if lr % lb:
            raise NotDivisible(f"{p} is not divisible by {q}")
        c = lr // lb
        k = len(r) - len(b)
        quot[k] = c
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        _strip(r)
    if r:
        raise NotDivisible(f"{p} is not divisible by {q}")
    return LaurentPoly.from_list(quot, sp - sq)


def divides(q: LaurentPoly, p: LaurentPoly) -> bool:
    try:
        laurent_divide(p, q)
    except NotDivisible:
        return False
    return True


# ---------------------------------------------------------------------------
# fraction-free determinants


def bareiss_det(matrix: Sequence[Sequence], divide: Callable, zero, one):
    """Determinant by fraction-free (Bareiss) elimination over an integral
    domain; ``divide(a, b)`` must return the exact quotient."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return one
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divide(pivot * m[i][j] - m[i][k] * m[k][j], prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def laurent_det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square LaurentPoly matrix.

    Each row is first multiplied by a power of t so that its entries are
    ordinary polynomials; the shift is undone at the end.
    """
    total = 0
    rows = []
    for row in matrix:
        nonzero = [p.min_exp for p in row if not p.is_zero()]
        k = -min(nonzero) if nonzero else 0
        total += k
        rows.append([p.shift(k) for p in row])
    det = bareiss_det(rows, laurent_divide, LaurentPoly(), LaurentPoly.constant(1))
    return det.shift(-total)


# ---------------------------------------------------------------------------
# multivariate polynomials over Q


def _default_vars(n: int) -> Tuple[str, ...]:
    return tuple(f"y{i}" for i in range(1, n + 1))


class MultiPoly:
    """Polynomial with rational coefficients over an ordered variable list."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Tuple[int, ...], object]] = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {self.variables}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, variables, terms):
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise KeyError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> Tuple["MultiPoly", ...]:
        return tuple(cls.var(variables, v) for v in variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c=1) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "MultiPoly":
        """Parse expressions like ``"y1^2*y4 - 1/2*y2*y3"``."""
        variables = tuple(variables)
        out = MultiPoly(variables)
        for coeff, exps in _parse_terms(text, variables):
            out = out + MultiPoly(variables, {exps: coeff})
        return out

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.variables, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._from_clean(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._from_clean(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._from_clean(self.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self) -> Tuple[Tuple[int, ...], Fraction]:
        """Leading term in graded lexicographic order."""
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def derivative(self, i) -> "MultiPoly":
        if isinstance(i, str):
            i = self.variables.index(i)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return MultiPoly._from_clean(self.variables, out)

    def evaluate(self, values: Sequence):
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def scale(self, a) -> "MultiPoly":
        return self * Fraction(a)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return exact_divide(self, other)

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """``p / q`` when ``q`` divides ``p``; raises :class:`NotDivisible` otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    qe, qc = q.leading()
    quot = MultiPoly.zero(p.variables)
    r = p
    while not r.is_zero():
        re_, rc = r.leading()
        if any(a < b for a, b in zip(re_, qe)):
            raise NotDivisible(f"{p} is not divisible by {q}")
        m = MultiPoly(p.variables, {tuple(a - b for a, b in zip(re_, qe)): rc / qc})
        quot = quot + m
        r = r - m * q
    return quot


def hessian_matrix(f: MultiPoly) -> List[List[MultiPoly]]:
    first = [f.derivative(i) for i in range(len(f.variables))]
    return [[d.derivative(j) for j in range(len(f.variables))] for d in first]


def hessian(f: MultiPoly) -> MultiPoly:
    """Determinant of the matrix of second partials over all declared variables."""
    if not f.variables:
        raise ValueError("hessian needs at least one variable")
    return bareiss_det(
        hessian_matrix(f), exact_divide, MultiPoly.zero(f.variables), MultiPoly.constant(f.variables, 1)
    )


def substitute_linear(f: MultiPoly, B: Sequence[Sequence]) -> MultiPoly:
    """Replace variable i by ``sum_j B[i][j] * var_j`` and expand."""
    n = len(f.variables)
    if len(B) != n or any(len(row) != n for row in B):
        raise ValueError(f"substitution matrix must be {n}x{n}")
    ys = MultiPoly.gens(f.variables)
    forms = []
    for row in B:
        form = MultiPoly.zero(f.variables)
        for b, y in zip(row, ys):
            if b:
                form = form + y * Fraction(b)
        forms.append(form)
    powers: Dict[Tuple[int, int], MultiPoly] = {}

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = forms[i] ** k
        return powers[(i, k)]

    out = MultiPoly.zero(f.variables)
    for e, c in f.terms.items():
        term = MultiPoly.constant(f.variables, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    return out


def det_rational(B: Sequence[Sequence]) -> Fraction:
    """Determinant of a small rational matrix."""
    rows = [[Fraction(x) for x in row] for row in B]
    return bareiss_det(rows, lambda a, b: a / b, Fraction(0), Fraction(1))

"""Alexander matrices and Alexander polynomials of finite presentations.

The Alexander polynomial of a presentation with ``g`` generators is taken to
be the normalized gcd of all ``(g-1) x (g-1)`` minors of the specialized Fox
matrix.  A zero result (two or more independent columns missing) is kept as
zero and reported as such.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .fox import fox_derivative, specialize
from .poly import LaurentPoly, laurent_det, laurent_gcd, normalize
from .presentation import Presentation

__all__ = [
    "Verdict",
    "WeightError",
    "LaurentMatrix",
    "AlexanderResult",
    "default_weights",
    "alexander_matrix",
    "minors_gcd",
    "alexander_polynomial",
    "distinguish",
]

_ONE = LaurentPoly.constant(1)


class Verdict(str, enum.Enum):
    DISTINGUISHED = "distinguished"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value


class WeightError(ValueError):
    """The weight map does not kill some relator."""

    def __init__(self, relator, weight_sum):
        super().__init__(f"weights do not define a homomorphism: relator {relator} has weight sum {weight_sum}")
        self.relator = relator
        self.weight_sum = weight_sum


@dataclass(frozen=True)
class LaurentMatrix:
    rows: Tuple[Tuple[LaurentPoly, ...], ...]
    row_labels: Tuple[str, ...] = ()
    col_labels: Tuple[str, ...] = ()
    ncols: int = 0

    @classmethod
    def from_rows(cls, rows, row_labels=(), col_labels=(), ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else len(col_labels)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(rows, tuple(row_labels), tuple(col_labels), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> LaurentPoly:
        return laurent_det([[self.rows[i][j] for j in cols] for i in rows])

    def nonzero_entries(self):
        for i, row in enumerate(self.rows):
            for j, p in enumerate(row):
                if not p.is_zero():
                    yield i, j, p

    def to_json(self):
        return [[p.to_json() for p in row] for row in self.rows]


@dataclass(frozen=True)
class AlexanderResult:
    matrix: LaurentMatrix
    polynomial: LaurentPoly
    minor_size: int

    @property
    def is_zero(self) -> bool:
        return self.polynomial.is_zero()


def default_weights(p: Presentation) -> Dict[str, int]:
    return {g: 1 for g in p.alphabet.names}


def _resolve_weights(p: Presentation, weights: Optional[Mapping[str, int]]) -> Dict[str, int]:
    w = default_weights(p)
    if weights:
        unknown = set(weights) - set(w)
        if unknown:
            raise KeyError(f"weights given for unknown generators: {sorted(unknown)}")
        w.update({k: int(v) for k, v in weights.items()})
    return w


def alexander_matrix(p: Presentation, weights: Optional[Mapping[str, int]] = None) -> LaurentMatrix:
    """Row i, column j: ``specialize(d r_i / d x_j)``.

    Generators missing from ``weights`` get weight 1.
    """
    w = _resolve_weights(p, weights)
    for r in p.relators:
        s = sum(w[g.name] * sign for g, sign in r)
        if s:
            raise WeightError(r, s)
    t_pows = [LaurentPoly.monomial(1, w[g]) - 1 for g in p.alphabet.names]
    rows = []
    for r in p.relators:
        row = [specialize(fox_derivative(r, g), w) for g in p.alphabet.generators]
        # specialized fundamental formula; r maps to 1, so sum_j a_ij (t^w_j - 1) = 0
        check = sum((a * tp for a, tp in zip(row, t_pows)), LaurentPoly())
        if not check.is_zero():
            raise AssertionError(f"fundamental formula violated for relator {r}")
        rows.append(row)
    return LaurentMatrix.from_rows(
        rows, [str(r) for r in p.relators], p.alphabet.names, ncols=len(p.alphabet)
    )


def minors_gcd(m: LaurentMatrix, k: int) -> LaurentPoly:
    """Normalized gcd of all ``k x k`` minors (1 for ``k = 0``, 0 when the
    matrix has fewer than ``k`` rows).

    Minors are enumerated row subsets outer, column subsets inner, both in
    lexicographic order; the fold stops as soon as the gcd is 1.
    """
    if k < 0 or k > m.ncols:
        raise ValueError(f"minor size {k} out of range for a {m.nrows}x{m.ncols} matrix")
    if k == 0:
        return _ONE
    if m.nrows < k:
        return LaurentPoly()
    g = LaurentPoly()
    for rows in combinations(range(m.nrows), k):
        for cols in combinations(range(m.ncols), k):
            d = m.minor(rows, cols)
            if d.is_zero():
                continue
            g = laurent_gcd(g, d)
            if g == _ONE:
                return g
    return g


def alexander_polynomial(p: Presentation, weights: Optional[Mapping[str, int]] = None) -> AlexanderResult:
    m = alexander_matrix(p, weights)
    k = max(len(p.alphabet) - 1, 0)
    return AlexanderResult(m, minors_gcd(m, k), k)


def distinguish(p1: Presentation, w1, p2: Presentation, w2) -> Verdict:
    """``distinguished`` when the normalized polynomials differ; never claims
    isomorphism."""
    a = alexander_polynomial(p1, w1).polynomial
    b = alexander_polynomial(p2, w2).polynomial
    return Verdict.DISTINGUISHED if normalize(a) != normalize(b) else Verdict.INCONCLUSIVE

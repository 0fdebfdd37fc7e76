import random

import pytest

from foxforge.alexander import (
    LaurentMatrix,
    Verdict,
    WeightError,
    alexander_matrix,
    alexander_polynomial,
    distinguish,
    minors_gcd,
)
from foxforge.poly import LaurentPoly, normalize
from foxforge.presentation import free, paper_G, paper_H, parse

t = LaurentPoly.t()
one = LaurentPoly.constant(1)
ti = LaurentPoly.monomial(1, -1)


def test_trefoil():
    p = parse("gens: a, b; rels: a b a b^-1 a^-1 b^-1")
    assert alexander_polynomial(p).polynomial == one - t + t * t


def test_abelian_rank_two():
    # hand computation: row [t^-2(1-t), t^-2(t-1)], gcd of 1x1 minors is 1 - t
    p = parse("gens: a, b; rels: [a,b]")
    m = alexander_matrix(p)
    assert m[0, 0] == ti ** 2 * (one - t)
    assert m[0, 1] == ti ** 2 * (t - 1)
    assert alexander_polynomial(p).polynomial == one - t


def test_free_groups():
    assert alexander_polynomial(free(1)).polynomial == one  # 0x0 minor
    r = alexander_polynomial(free(2))
    assert r.is_zero and r.minor_size == 1


def test_matrix_shape_and_labels():
    m = alexander_matrix(paper_G())
    assert m.shape == (6, 5)
    assert m.col_labels == ("e_3_1", "e_3_2", "e_4_1", "e_4_2", "e_4_3")


def test_paper_G_and_H():
    assert alexander_polynomial(paper_G()).polynomial == (one - t) ** 4 * (one + t)
    assert alexander_polynomial(paper_H()).polynomial == (one - t) ** 4 * (t * t + t + 1)


def test_nonuniform_weights_accepted_for_balanced_relators():
    # every relator is balanced in every generator, so any weights define a map
    r = alexander_polynomial(paper_H(), {"a_1_3": 2})
    assert not r.is_zero


def test_weight_error_names_relator():
    p = parse("gens: a, b; rels: a b a b^-1 a^-1 b^-1")
    with pytest.raises(WeightError) as e:
        alexander_matrix(p, {"a": 2})
    assert e.value.weight_sum == 1


def test_unknown_weight():
    with pytest.raises(KeyError):
        alexander_matrix(paper_G(), {"zz": 1})


def test_minors_gcd_edge_cases():
    m = alexander_matrix(paper_G())
    assert minors_gcd(m, 0) == one
    assert minors_gcd(m, 1) == one - t
    with pytest.raises(ValueError):
        minors_gcd(m, 6)
    short = LaurentMatrix.from_rows([[one, t]])
    assert minors_gcd(short, 2).is_zero()


def test_distinguish():
    assert distinguish(paper_G(), None, paper_H(), None) is Verdict.DISTINGUISHED
    assert distinguish(paper_G(), None, paper_G(), None) is Verdict.INCONCLUSIVE


# elementary operations that preserve the elementary ideals


def _row_op(rows, rng):
    n = len(rows)
    kind = rng.randrange(4)
    rows = [list(r) for r in rows]
    if kind == 0:
        i, j = rng.sample(range(n), 2)
        rows[i], rows[j] = rows[j], rows[i]
    elif kind == 1:
        i, j = rng.sample(range(n), 2)
        c = LaurentPoly.monomial(rng.choice([1, -1, 2]), rng.randint(-2, 2)) + rng.randint(-1, 1)
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    elif kind == 2:
        i = rng.randrange(n)
        u = LaurentPoly.monomial(rng.choice([1, -1]), rng.randint(-3, 3))
        rows[i] = [u * a for a in rows[i]]
    else:
        i = rng.randrange(n)
        rows = rows[:i] + rows[i + 1:] + [rows[i]]
    return rows


def _transpose(rows):
    return [list(c) for c in zip(*rows)]


def test_minors_gcd_invariant_under_elementary_operations():
    rng = random.Random(7)
    base = alexander_matrix(paper_G())
    want = minors_gcd(base, 4)
    for _ in range(50):
        rows = [list(r) for r in base.rows]
        for _ in range(rng.randint(1, 6)):
            if rng.random() < 0.5:
                rows = _row_op(rows, rng)
            else:
                rows = _transpose(_row_op(_transpose(rows), rng))
        assert minors_gcd(LaurentMatrix.from_rows(rows), 4) == want


def test_normalized_output():
    for p in (paper_G(), paper_H()):
        poly = alexander_polynomial(p).polynomial
        assert normalize(poly) == poly

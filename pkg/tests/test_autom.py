import pytest
from hypothesis import given

from foxforge.autom import (
    LEFT_TO_RIGHT,
    RIGHT_TO_LEFT,
    Endomorphism,
    braid_membership,
    builtin_autom,
    builtin_pair,
    commutes,
    compose,
    eps,
    identity,
    image_of_word,
    inner,
    is_ia,
    poison_assignment,
    pure_braid_generator,
    sigma,
    verify_homomorphism,
)
from foxforge.presentation import braid, free, mccool, paper_G, paper_H, poison, pure_braid
from foxforge.words import Alphabet

from _strategies import X3, words


def by_name(p, n):
    out = {}
    inv = {}
    for g in p.alphabet.names:
        if g.startswith("e_"):
            _, i, j = g.split("_")
            out[g], inv[g] = builtin_pair("eps", int(i), int(j), n)
        elif g.startswith("a_"):
            _, r, s = g.split("_")
            out[g], inv[g] = builtin_pair("a", int(r), int(s), n)
        else:
            out[g], inv[g] = builtin_pair("sigma", int(g[1:]), n)
    return out, inv


def test_sigma_images():
    s = sigma(1, 3)
    assert s.images == (X3.word("x1 x2 x1^-1"), X3.word("x1"), X3.word("x3"))


def test_eps_images():
    e = eps(2, 1, 3)
    assert e.images == (X3.word("x1"), X3.word("x1^-1 x2 x1"), X3.word("x3"))


def test_compose_order():
    # compose(f, g) applies g first
    f, g = eps(1, 2, 3), sigma(1, 3)
    w = X3.word("x1 x3")
    assert compose(f, g).apply(w) == f.apply(g.apply(w))


@pytest.mark.parametrize("name,idx", [
    ("sigma", (1, 4)), ("sigma", (3, 4)), ("a", (1, 3, 4)), ("a", (2, 4, 4)),
    ("eps", (3, 1, 4)), ("epsk", (1, 2, 3, 4)),
])
def test_builtin_inverses(name, idx):
    f, g = builtin_pair(name, *idx)
    assert compose(f, g).is_identity()
    assert compose(g, f).is_identity()


def test_inner_inverse():
    c = X3.word("x1 x2^-1")
    assert compose(inner(c), inner(c, inverse=True)).is_identity()


def test_unknown_builtin():
    with pytest.raises(ValueError):
        builtin_autom("zeta", 1, 2)
    with pytest.raises(ValueError):
        builtin_autom("eps", 1, 2)


def test_pure_braid_generator_as_sigma_word():
    # a_13 read left to right is s2 s1^2 s2^-1
    A = Alphabet(["s1", "s2", "s3"])
    assign, inv = by_name(braid(4), 4)
    img = image_of_word(A.word("s2 s1 s1 s2^-1"), assign, inv)
    assert img == pure_braid_generator(1, 3, 4)


def test_mccool_relators():
    for n in (3, 4):
        p = mccool(n)
        assert verify_homomorphism(p, *by_name(p, n)).passed


def test_braid_relators():
    for n in (3, 4, 5):
        p = braid(n)
        assert verify_homomorphism(p, *by_name(p, n)).passed


def test_pure_braid_relators():
    for n in (3, 4):
        p = pure_braid(n)
        assert verify_homomorphism(p, *by_name(p, n)).passed


def test_paper_groups_verify():
    for p in (paper_G(), paper_H()):
        assert verify_homomorphism(p, *by_name(p, 4)).passed


def test_order_matters_for_pure_braids():
    p = pure_braid(4)
    rep = verify_homomorphism(p, *by_name(p, 4), order=RIGHT_TO_LEFT)
    assert not rep.passed
    assert rep.failures()
    assert rep.summary().startswith("FAIL")


def test_missing_assignment_and_inverse():
    p = mccool(3)
    assign, inv = by_name(p, 3)
    with pytest.raises(KeyError):
        verify_homomorphism(p, {k: v for k, v in list(assign.items())[1:]}, inv)
    with pytest.raises(KeyError):
        verify_homomorphism(p, assign, {})


def test_bad_inverse_is_reported():
    p = mccool(3)
    assign, inv = by_name(p, 3)
    g = p.alphabet.names[0]
    inv[g] = assign[g]
    rep = verify_homomorphism(p, assign, inv)
    assert g in rep.inverse_failures
    assert not rep.passed


def test_braid_membership():
    assert braid_membership(sigma(2, 4)).is_candidate
    assert braid_membership(pure_braid_generator(1, 3, 4)).permutation == (1, 2, 3, 4)
    assert not braid_membership(eps(2, 1, 3)).is_candidate  # product not fixed
    e = Endomorphism(X3, [X3.word("x1 x2"), X3.word("x2"), X3.word("x3")])
    rep = braid_membership(e)
    assert not rep.is_candidate and "conjugate" in rep.reason


def test_is_ia():
    assert is_ia(eps(1, 2, 3))
    assert is_ia(pure_braid_generator(1, 2, 3))
    assert not is_ia(sigma(1, 3))


def test_centres():
    z = compose(compose(eps(2, 1, 4), eps(3, 1, 4)), eps(4, 1, 4))
    for i in range(1, 5):
        for j in range(1, i):
            assert commutes(z, eps(i, j, 4))
    # the element a12 a13 a23 a14 a24 a34, letters acting left to right
    P = pure_braid(4)
    assign, inv = by_name(P, 4)
    zp = image_of_word(P.word("a_1_2 a_1_3 a_2_3 a_1_4 a_2_4 a_3_4"), assign, inv)
    for g in P.alphabet.names:
        assert commutes(zp, assign[g])


def test_full_twist_fails_against_upper_eps():
    # inner by x1 cannot commute with a map moving x1
    z = compose(compose(eps(2, 1, 4), eps(3, 1, 4)), eps(4, 1, 4))
    assert not commutes(z, eps(1, 3, 4))


@pytest.mark.parametrize("order", [LEFT_TO_RIGHT, RIGHT_TO_LEFT])
def test_poison_embedding(order):
    p = poison(free(2))
    a1, a2, a3 = X3.word("[x1,x2]"), X3.word("[x1,x2^-1]"), X3.word("x3")
    assign, inv = poison_assignment(a1, a2, a3, order=order)
    assert verify_homomorphism(p, assign, inv, order=order).passed


def test_poison_literal_roles_fail():
    # giving the primed copy the x3-multiplication maps breaks the t relator
    p = poison(free(2))
    a1, a2, a3 = X3.word("[x1,x2]"), X3.word("[x1,x2^-1]"), X3.word("x3")
    assign, inv = poison_assignment(a1, a2, a3)
    swapped = dict(assign)
    swapped_inv = dict(inv)
    for g in ("x1", "x2"):
        swapped[g], swapped[g + "'"] = assign[g + "'"], assign[g]
        swapped_inv[g], swapped_inv[g + "'"] = inv[g + "'"], inv[g]
    assert not verify_homomorphism(p, swapped, swapped_inv).passed


@given(words(X3), words(X3))
def test_endomorphism_is_homomorphism(u, v):
    f = compose(eps(1, 2, 3), sigma(2, 3))
    assert f.apply(u * v) == f.apply(u) * f.apply(v)


@given(words(X3))
def test_identity_map(w):
    assert identity(X3).apply(w) == w


def test_to_text():
    assert eps(2, 1, 2).to_text() == "images:[x1;x1^-1*x2*x1]"

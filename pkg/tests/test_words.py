import doctest

import pytest
from hypothesis import given

import foxforge.alexander
import foxforge.fox
import foxforge.poly
import foxforge.words
from foxforge.words import (
    Alphabet,
    AlphabetMismatch,
    Word,
    commutator,
    conjugate,
    cyclically_reduce,
    reduce,
)

from _strategies import X2, X3, words


@pytest.mark.parametrize("mod", [foxforge.words, foxforge.fox, foxforge.poly, foxforge.alexander])
def test_doctests(mod):
    res = doctest.testmod(mod)
    assert res.failed == 0


def test_reduce_cancels_adjacent_pairs():
    w = reduce(X3, [("x2", 1), ("x1", 1), ("x1", -1), ("x2", -1), ("x3", 1)])
    assert w == X3.word("x3")
    assert str(X3.word("x1 x1^-1")) == "1"


def test_reduction_is_nested():
    # x1 x2 x2^-1 x1^-1 collapses fully
    assert Word(X2, (1, 2, -2, -1)).is_identity()


def test_commutator_convention():
    a, b = X2.gens()
    assert commutator(a, b) == X2.word("x1^-1 x2^-1 x1 x2")
    assert X2.word("[x1,x2]") == commutator(a, b)


def test_conjugate_convention():
    a, b = X2.gens()
    assert conjugate(a, b) == X2.word("x2^-1 x1 x2")


def test_powers():
    a = X2.gens()[0]
    assert a ** 3 == X2.word("x1 x1 x1")
    assert a ** -2 == X2.word("x1^-1 x1^-1")
    assert a ** 0 == X2.identity()


def test_exponent_sum():
    w = X3.word("x1^3 x2^-1 x1^-1")
    assert w.exponent_sum("x1") == 2
    assert w.exponent_sum("x2") == -1
    assert w.exponent_sum("x3") == 0


def test_mismatched_alphabets_raise():
    with pytest.raises(AlphabetMismatch):
        X2.gens()[0] * X3.gens()[0]


def test_unknown_generator_name():
    with pytest.raises(KeyError):
        X2.index("x9")


def test_alphabet_rejects_duplicates_and_bad_names():
    with pytest.raises(ValueError):
        Alphabet(["a", "a"])
    with pytest.raises(ValueError):
        Alphabet(["1a"])
    assert Alphabet(["a", "a'"]).names == ("a", "a'")


def test_print_form():
    assert str(X2.word("x1 x2^-1")) == "x1*x2^-1"


def test_cyclically_reduce_example():
    core, c = cyclically_reduce(X3.word("x3^-1*x2*x1*x2^-1*x3"))
    assert core == X3.word("x1")
    assert c == X3.word("x2^-1 x3")


@given(words(X3), words(X3), words(X3))
def test_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words(X3))
def test_inverse(u):
    assert (u * u.inverse()).is_identity()
    assert (u.inverse() * u).is_identity()
    assert u.inverse().inverse() == u


@given(words(X3))
def test_reduced_output_has_no_cancelling_pair(u):
    assert all(a != -b for a, b in zip(u.codes, u.codes[1:]))


@given(words(X3))
def test_cyclic_reduction_recomposes(w):
    core, c = cyclically_reduce(w)
    assert c.inverse() * core * c == w
    if len(core) > 1:
        assert core.codes[0] != -core.codes[-1]


@given(words(X2), words(X2))
def test_print_parse_roundtrip(u, v):
    w = u * v
    assert X2.word(str(w)) == w

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from markovwords import (
    EMPTY,
    cf_less,
    cf_value,
    continuant,
    format_word,
    identity3_check,
    parse_word,
    reverse,
    strip_first,
    strip_last,
    tail_slot,
    word,
)

words_12 = st.lists(st.integers(1, 2), max_size=24).map(tuple)
words_15 = st.lists(st.integers(1, 5), max_size=24).map(tuple)
nonempty_15 = st.lists(st.integers(1, 5), min_size=1, max_size=24).map(tuple)


def matrix_continuant(w):
    # independent route: fold the 2x2 letter matrices [[a,1],[1,0]]
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in w:
        m00, m01, m10, m11 = m00 * a + m01, m00, m10 * a + m11, m10
    return m00


def folded_cf(w):
    # independent route: evaluate the fraction tail-first
    val = Fraction(w[-1])
    for a in reversed(w[:-1]):
        val = a + Fraction(1, 1) / val
    return val


@pytest.mark.parametrize(
    "w, expected",
    [
        ((), 1),
        ((2, 1, 1, 2), 13),
        ((2, 1, 1, 1, 1, 2), 34),
        ((2, 2, 2, 2), 29),
    ],
)
def test_continuant_examples(w, expected):
    assert continuant(w) == expected
    assert matrix_continuant(w) == expected


@pytest.mark.parametrize(
    "w, expected",
    [
        ((2,), Fraction(2, 1)),
        ((2, 2), Fraction(5, 2)),
        ((1, 1, 2), Fraction(5, 3)),
    ],
)
def test_cf_value_examples(w, expected):
    assert cf_value(w) == expected


def test_cf_value_empty_word():
    with pytest.raises(ValueError, match="cf of empty word"):
        cf_value(EMPTY)


def test_word_operators():
    assert reverse((2, 1, 1)) == (1, 1, 2)
    assert strip_first((2, 2)) == (2,)
    assert strip_last((2,)) == ()
    for op in (strip_first, strip_last):
        with pytest.raises(ValueError, match="strip of empty word"):
            op(EMPTY)


def test_tail_slot():
    assert tail_slot(EMPTY) == EMPTY
    assert continuant(tail_slot(EMPTY)) == 1
    assert tail_slot((2,)) == (2,)
    assert tail_slot((2, 2, 1)) == (2, 1, 2)


@pytest.mark.parametrize(
    "mu, nu, lhs, rhs",
    [
        ((2,), (), 13, 13),
        ((2, 2), (2,), 74, 74),
        ((2,), (2,), 31, 31),
    ],
)
def test_identity3_examples(mu, nu, lhs, rhs):
    res = identity3_check(mu, nu)
    assert res == (lhs, rhs, True)


def test_identity3_empty_mu():
    with pytest.raises(ValueError):
        identity3_check(EMPTY, (2,))


def test_cf_less_examples():
    assert cf_less((2,), (2, 2))
    assert not cf_less((2, 2), (2, 2))
    # reversed prefix vs tail word of the 9/14 descent, second level
    assert not cf_less((2, 2), (2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2))


def test_parse_format_round_trip():
    assert parse_word("2 1 1 2") == (2, 1, 1, 2)
    assert parse_word("-") == EMPTY
    assert format_word(EMPTY) == "-"
    assert format_word((2, 1, 1, 2)) == "2 1 1 2"
    assert parse_word(format_word((1, 2, 3))) == (1, 2, 3)
    with pytest.raises(ValueError):
        parse_word("2 x 1")
    with pytest.raises(ValueError):
        parse_word("")
    with pytest.raises(ValueError):
        parse_word("0 1")


def test_word_constructor_validates():
    assert word([2, 1]) == (2, 1)
    with pytest.raises(ValueError):
        word([2, 0])
    with pytest.raises(ValueError):
        word([2, -1])


@given(nonempty_15)
def test_continuant_matches_matrix_oracle(w):
    assert continuant(w) == matrix_continuant(w)


@given(st.lists(st.integers(1, 5), min_size=2, max_size=24).map(tuple))
def test_continuant_recurrence(w):
    assert continuant(w) == w[-1] * continuant(w[:-1]) + continuant(w[:-2])


@given(words_15)
def test_continuant_reversal_symmetry(w):
    assert continuant(w) == continuant(reverse(w))


@given(nonempty_15)
def test_cf_value_matches_fold_and_continuant_quotient(w):
    assert cf_value(w) == folded_cf(w)
    assert cf_value(w) == Fraction(continuant(w), continuant(w[1:]))


@given(st.lists(st.integers(1, 2), min_size=1, max_size=24).map(tuple), words_12)
def test_identity3_letters_12(mu, nu):
    assert identity3_check(mu, nu).holds


@given(nonempty_15, words_15)
def test_identity3_letters_15(mu, nu):
    assert identity3_check(mu, nu).holds


@given(nonempty_15, nonempty_15)
def test_sign_bridge(mu, nu_prime):
    gap = continuant(mu[:-1]) * continuant(nu_prime) - continuant(mu) * continuant(nu_prime[1:])
    assert (gap > 0) == cf_less(reverse(mu), nu_prime)
    assert (gap == 0) == (cf_value(reverse(mu)) == cf_value(nu_prime))

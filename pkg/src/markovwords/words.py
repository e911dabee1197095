"""Exact arithmetic on quotient words.

A word is a plain tuple of positive integer letters.  Continuants are
Python ints and continued-fraction values are `fractions.Fraction`, so
every comparison is exact at any word length; nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

Word = tuple[int, ...]

EMPTY: Word = ()


def word(letters: Iterable[int]) -> Word:
    """Validate and freeze a sequence of letters into a word."""
    w = tuple(letters)
    for a in w:
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"invalid letter {a!r}: letters are positive integers")
    return w


def parse_word(text: str) -> Word:
    """Parse the shared text format: letters separated by whitespace, "-" for the empty word."""
    tokens = text.split()
    if tokens == ["-"]:
        return EMPTY
    if not tokens:
        raise ValueError("empty word text: use '-' for the empty word")
    letters = []
    for tok in tokens:
        if not tok.isdigit() or int(tok) < 1:
            raise ValueError(f"invalid word letter {tok!r}")
        letters.append(int(tok))
    return tuple(letters)


def format_word(w: Word) -> str:
    return " ".join(str(a) for a in w) if w else "-"


def continuant(w: Word) -> int:
    """Continuant of w: the numerator of the finite continued fraction [w].

    The empty word has continuant 1, a single letter is its own
    continuant, and appending a letter a maps (K', K) to (K, a*K + K').
    """
    prev, cur = 0, 1
    for a in w:
        prev, cur = cur, a * cur + prev
    return cur


def reverse(w: Word) -> Word:
    return w[::-1]


def strip_first(w: Word) -> Word:
    if not w:
        raise ValueError("strip of empty word")
    return w[1:]


def strip_last(w: Word) -> Word:
    if not w:
        raise ValueError("strip of empty word")
    return w[:-1]


def tail_slot(v: Word) -> Word:
    """First-letter strip of v + [2], total on every word.

    For nonempty v this is strip_first(v) + [2]; the empty word maps to
    itself, so its continuant contributes the neutral factor 1.
    """
    return (v + (2,))[1:]


def cf_value(w: Word) -> Fraction:
    """Exact value of a1 + 1/(a2 + 1/(...)), reduced to lowest terms.

    Equals continuant(w) / continuant(strip_first(w)).
    """
    if not w:
        raise ValueError("cf of empty word")
    return Fraction(continuant(w), continuant(w[1:]))


def cf_less(u: Word, v: Word) -> bool:
    """Exact comparison [u] < [v]; equality is not less-than."""
    return cf_value(u) < cf_value(v)


class Identity3Result(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def identity3_check(mu: Word, nu: Word) -> Identity3Result:
    """Exact check of the split identity

        N[mu 1 1 nu 2] = N[mu 2 nu 2] + N[strip_last(mu)] * N[tail_slot(nu)]

    valid for arbitrary positive letters.  Both sides are returned so a
    failure is diagnosable, `holds` is their equality.
    """
    if not mu:
        raise ValueError("identity check requires nonempty mu")
    lhs = continuant(mu + (1, 1) + nu + (2,))
    rhs = continuant(mu + (2,) + nu + (2,)) + continuant(mu[:-1]) * continuant(tail_slot(nu))
    return Identity3Result(lhs, rhs, lhs == rhs)

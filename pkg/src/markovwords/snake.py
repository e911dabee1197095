"""Quotient words for rational indices and their structural counts.

The word attached to an index p/q (1 <= p < q) has length 2q-2: a letter
2 at each end and q-2 interior blocks, one per step i = 1..q-2, where
block i is 11 exactly when floor((i+1)(q-p)/q) - floor(i(q-p)/q) = 1 and
22 otherwise.  All arithmetic is exact on integers.  The continuant of
this word is the Markov number of p/q whenever gcd(p, q) = 1; for
non-coprime indices the same formula is applied and results should be
read as conditional on this construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .align import decompose
from .words import Word, continuant

_ONES = (1, 1)
_TWOS = (2, 2)


def snake_word(p: int, q: int) -> Word:
    if not isinstance(p, int) or not isinstance(q, int) or not 1 <= p < q:
        raise ValueError(f"index out of range: need integers 1 <= p < q, got {p}/{q}")
    r = q - p
    out = [2]
    extend = out.extend
    prev = 0  # floor(1*r/q), zero since r < q
    for i in range(2, q):
        nxt = (i * r) // q
        extend(_ONES if nxt - prev == 1 else _TWOS)
        prev = nxt
    out.append(2)
    return tuple(out)


@lru_cache(maxsize=None)
def markov_number(p: int, q: int) -> int:
    """Continuant of snake_word(p, q); the Markov number of p/q when gcd(p, q) = 1."""
    return continuant(snake_word(p, q))


@dataclass(frozen=True)
class FactBasicReport:
    """Observed structural counts of snake_word(p, q) against their closed forms.

    endpoints: first and last letter are 2
    ones:      count of letter 1 equals 2q - 2p - 2
    twos:      count of letter 2 equals 2p
    length:    word length equals 2q - 2
    entries:   replaceable-entry count equals q + p - 1
    """

    p: int
    q: int
    endpoints_ok: bool
    ones_ok: bool
    twos_ok: bool
    length_ok: bool
    entries_ok: bool
    ones: int
    twos: int
    length: int
    entries: int

    @property
    def all_ok(self) -> bool:
        return (
            self.endpoints_ok
            and self.ones_ok
            and self.twos_ok
            and self.length_ok
            and self.entries_ok
        )


def fact_basic_report(p: int, q: int) -> FactBasicReport:
    w = snake_word(p, q)
    ones = w.count(1)
    twos = w.count(2)
    length = len(w)
    entries = len(decompose(w))
    return FactBasicReport(
        p=p,
        q=q,
        endpoints_ok=(w[0] == 2 and w[-1] == 2),
        ones_ok=(ones == 2 * q - 2 * p - 2),
        twos_ok=(twos == 2 * p),
        length_ok=(length == 2 * q - 2),
        entries_ok=(entries == q + p - 1),
        ones=ones,
        twos=twos,
        length=length,
        entries=entries,
    )


def parse_fraction(text: str) -> tuple[int, int]:
    """Parse the shared index format "p/q" into a (p, q) pair."""
    parts = text.split("/")
    if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
        raise ValueError(f"invalid fraction {text!r}: expected the form p/q")
    p, q = int(parts[0]), int(parts[1])
    if q < 1:
        raise ValueError(f"invalid fraction {text!r}: denominator must be positive")
    return p, q


def format_fraction(p: int, q: int) -> str:
    return f"{p}/{q}"

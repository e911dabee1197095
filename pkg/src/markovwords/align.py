"""Replaceable entries and lockstep alignment of word pairs.

A {1,2}-word splits left to right into replaceable entries: each maximal
run of 1s is paired off into consecutive 11 entries, each 2 stands alone.
Two words are aligned by walking their entry sequences in lockstep; equal
kinds at a position are matches, unequal kinds are replacements, and
whatever remains once the shorter sequence is exhausted is the residual.

The two factorizations extracted here cut an aligned pair at replacement
boundaries:

* odd_factorization cuts at the LAST replacement, writing the pair as
  A = mu 1 1 nu 2 and B = mu' 2 nu (the words are compared right to
  left in this setting);
* even_factorization cuts at the FIRST and SECOND replacements, writing
  the pair as A = mu 1 1 delta 2 nu 2 and B = mu 2 delta 1 1 nu', where
  delta is the matched all-2s stretch between the two replacements.

Every factorization asserts that its parts reassemble the inputs exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .words import EMPTY, Word

E11 = "11"
E2 = "2"

_ENTRY_LEN = {E11: 2, E2: 1}


class AlignmentError(ValueError):
    pass


class Entry(NamedTuple):
    kind: str  # E11 or E2
    start: int  # 0-based letter offset in the source word


class Replacement(NamedTuple):
    index: int  # lockstep entry position
    entry_a: Entry
    entry_b: Entry


@dataclass(frozen=True)
class Alignment:
    replacements: tuple[Replacement, ...]
    matched: int
    residual_a: Word
    residual_b: Word
    parity: str  # "even" | "odd"


@dataclass(frozen=True)
class OddFactorization:
    mu: Word
    mu_prime: Word
    nu: Word


@dataclass(frozen=True)
class EvenFactorization:
    mu: Word
    delta: Word
    nu: Word
    nu_prime: Word


def decompose(w: Word) -> list[Entry]:
    """Split a {1,2}-word into its replaceable entries, left to right.

    A maximal run of 1s of odd length cannot be paired and is an error;
    snake words never contain one.
    """
    if w and (min(w) < 1 or max(w) > 2):
        raise AlignmentError("decompose requires letters in {1, 2}")
    entries: list[Entry] = []
    append = entries.append
    n = len(w)
    pos = 0
    while pos < n:
        try:
            run = w.index(1, pos)
        except ValueError:
            run = n
        for k in range(pos, run):
            append(Entry(E2, k))
        if run == n:
            break
        try:
            end = w.index(2, run)
        except ValueError:
            end = n
        if (end - run) % 2:
            raise AlignmentError(f"unpairable 1-run at offset {run}")
        for k in range(run, end, 2):
            append(Entry(E11, k))
        pos = end
    return entries


def align(a: Word, b: Word) -> Alignment:
    """Lockstep comparison of the entry sequences of a and b."""
    ea = decompose(a)
    eb = decompose(b)
    common = min(len(ea), len(eb))
    replacements = []
    for i in range(common):
        if ea[i].kind != eb[i].kind:
            replacements.append(Replacement(i, ea[i], eb[i]))
    residual_a = a[ea[common].start:] if common < len(ea) else EMPTY
    residual_b = b[eb[common].start:] if common < len(eb) else EMPTY
    return Alignment(
        replacements=tuple(replacements),
        matched=common - len(replacements),
        residual_a=residual_a,
        residual_b=residual_b,
        parity="odd" if len(replacements) % 2 else "even",
    )


def odd_factorization(a: Word, b: Word) -> OddFactorization:
    """Cut an odd-parity pair at its last replacement: A = mu 1 1 nu 2, B = mu' 2 nu."""
    return _odd_from(align(a, b), a, b)


def _odd_from(al: Alignment, a: Word, b: Word) -> OddFactorization:
    if al.parity != "odd" or al.residual_a != (2,) or al.residual_b != EMPTY:
        raise AlignmentError("not in odd setting")
    last = al.replacements[-1]
    if last.entry_a.kind != E11 or last.entry_b.kind != E2:
        raise AlignmentError("not in odd setting")
    mu = a[: last.entry_a.start]
    nu = a[last.entry_a.start + 2 : len(a) - 1]
    mu_prime = b[: last.entry_b.start]
    if a != mu + (1, 1) + nu + (2,) or b != mu_prime + (2,) + nu:
        raise AlignmentError("not in odd setting")
    return OddFactorization(mu=mu, mu_prime=mu_prime, nu=nu)


def even_factorization(a: Word, b: Word) -> EvenFactorization:
    """Cut a pair at its first two replacements: A = mu 1 1 delta 2 nu 2, B = mu 2 delta 1 1 nu'."""
    return _even_from(align(a, b), a, b)


def _even_from(al: Alignment, a: Word, b: Word) -> EvenFactorization:
    if len(al.replacements) < 2:
        raise AlignmentError("fewer than two replacements")
    first, second = al.replacements[0], al.replacements[1]
    if first.entry_a.kind != E11 or first.entry_b.kind != E2:
        raise AlignmentError("wrong first-replacement orientation")
    mu = a[: first.entry_a.start]
    delta = a[first.entry_a.start + 2 : second.entry_a.start]
    if any(x != 2 for x in delta):
        raise AlignmentError("delta not all 2s")
    nu = a[second.entry_a.start + _ENTRY_LEN[second.entry_a.kind] : len(a) - 1]
    nu_prime = b[second.entry_b.start + _ENTRY_LEN[second.entry_b.kind] :]
    if a != mu + (1, 1) + delta + (2,) + nu + (2,):
        raise AlignmentError("factorization does not reassemble the first word")
    if b != mu + (2,) + delta + (1, 1) + nu_prime:
        raise AlignmentError("factorization does not reassemble the second word")
    return EvenFactorization(mu=mu, delta=delta, nu=nu, nu_prime=nu_prime)


class Fact2Result(NamedTuple):
    ok: bool
    applicable: bool


def fact2_check(a: Word, b: Word) -> Fact2Result:
    """Length bookkeeping of the two-replacement cut of a snake pair.

    For a pair with at least two replacements, the cut satisfies
    |nu| = |nu'| + 1, so nu = nu' is impossible at the top level.  Pairs
    with fewer than two replacements have nothing to cut; they report ok
    with applicable=False.
    """
    al = align(a, b)
    if len(al.replacements) < 2:
        return Fact2Result(ok=True, applicable=False)
    f = _even_from(al, a, b)
    return Fact2Result(ok=(len(f.nu) == len(f.nu_prime) + 1 and f.nu != f.nu_prime), applicable=True)


def fact3_check(a: Word, b: Word) -> bool:
    """Odd replacement parity, pinned down by the two-extra-1s count gap."""
    al = align(a, b)
    return al.parity == "odd" and a.count(1) - b.count(1) == 2

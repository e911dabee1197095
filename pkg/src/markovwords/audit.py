"""Mechanical replay of the word-splitting induction behind the one-step
monotonicity inequality m(p, q+1) > m(p, q).

For a snake pair (A, B) = (word(p, q+1), word(p, q)) the replay proceeds
exactly as the induction does:

1. cut (A, B) at the last replacement: A = mu 1 1 nu 2, B = mu' 2 nu;
2. record the exact split identity
   N[A] - N[B] = (N[mu 2 nu 2] - N[mu' 2 nu]) + N[mu-] * N[tail_slot(nu)],
   which reduces the claim to the positivity of N[mu 2 nu 2] - N[mu' 2 nu];
3. descend: cut the pair (mu 2 nu 2, mu' 2 nu) at its first two
   replacements, then repeat on (nu_k 2, nu'_k), one AuditStep per level,
   until nu_k = nu'_k, where the difference is evaluated directly.

Each reduction step leans on two side conditions: the common prefix mu_k
must have odd length, and the continued-fraction bound [reversed mu_k] <
[nu'_k] (equivalently q3 > 0) must hold.  The verdict names the first
reduction level where either condition fails.  Pairs whose rewritten
form contains no replacements (nu empty, for instance) fall outside the
descent pattern entirely and are flagged out-of-pattern rather than
forced through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .align import AlignmentError, EvenFactorization, OddFactorization, align, _even_from, odd_factorization
from .snake import markov_number, snake_word
from .words import Identity3Result, Word, cf_value, continuant, identity3_check, reverse, tail_slot


class StepQuantities(NamedTuple):
    q1: int  # N[nu 2] - N[nu']
    q2: int  # N[strip_first(nu) 2] - N[strip_first(nu')]
    q3: int  # N[strip_last(mu)] N[nu'] - N[mu] N[strip_first(nu')]


def even_step_quantities(mu: Word, nu: Word, nu_prime: Word) -> StepQuantities:
    """The three signed gaps a reduction step must keep positive.

    All three are exact integers; q3 > 0 is equivalent to the
    continued-fraction bound [reversed mu] < [nu'].
    """
    if not nu:
        raise ValueError("empty nu: cannot strip its first letter")
    if not nu_prime:
        raise ValueError("empty nu': cannot strip its first letter")
    if not mu:
        raise ValueError("empty mu: cannot strip its last letter")
    q1 = continuant(nu + (2,)) - continuant(nu_prime)
    q2 = continuant(nu[1:] + (2,)) - continuant(nu_prime[1:])
    q3 = continuant(mu[:-1]) * continuant(nu_prime) - continuant(mu) * continuant(nu_prime[1:])
    return StepQuantities(q1, q2, q3)


def base_difference(mu: Word, delta: Word, nu: Word) -> int:
    """N[mu 1 1 delta 2 nu 2] - N[mu 2 delta 1 1 nu], the directly evaluated base case."""
    if any(x != 2 for x in delta):
        raise ValueError("delta not all 2s")
    lhs = continuant(mu + (1, 1) + delta + (2,) + nu + (2,))
    rhs = continuant(mu + (2,) + delta + (1, 1) + nu)
    return lhs - rhs


def overall_difference(p: int, q: int) -> int:
    """markov_number(p, q+1) - markov_number(p, q), exact."""
    return markov_number(p, q + 1) - markov_number(p, q)


@dataclass(frozen=True)
class AuditStep:
    level: int
    factorization: EvenFactorization
    q1: int
    q2: int | None
    q3: int | None
    mu_length_parity: str  # "odd" | "even"
    cf_reversed_mu: Fraction | None
    cf_nu_prime: Fraction | None
    cf_holds: bool | None
    is_base: bool
    base_diff: int | None


@dataclass(frozen=True)
class AuditVerdict:
    defect_level: int | None
    even_prefix_level: int | None
    cf_fail_level: int | None
    out_of_pattern: bool
    description: str


@dataclass(frozen=True)
class AuditTrace:
    p: int
    q: int
    word_a: Word  # snake word of p/(q+1)
    word_b: Word  # snake word of p/q
    odd: OddFactorization
    identity3: Identity3Result
    odd_main_diff: int  # N[mu 2 nu 2] - N[mu' 2 nu]
    odd_correction: int  # N[mu-] * N[tail_slot(nu)]
    steps: tuple[AuditStep, ...]
    verdict: AuditVerdict
    overall_diff: int


def _make_step(level: int, f: EvenFactorization) -> AuditStep:
    # Each quantity is recorded whenever its own strip operations exist;
    # an empty common prefix (length 0, even) still counts for parity.
    mu, nu, nup = f.mu, f.nu, f.nu_prime
    if mu and nu and nup:
        q1, q2, q3 = even_step_quantities(mu, nu, nup)
    else:
        q1 = continuant(nu + (2,)) - continuant(nup)
        q2 = (continuant(nu[1:] + (2,)) - continuant(nup[1:])) if nu and nup else None
        q3 = (
            continuant(mu[:-1]) * continuant(nup) - continuant(mu) * continuant(nup[1:])
            if mu and nup
            else None
        )
    if mu and nup:
        cf_mu = cf_value(reverse(mu))
        cf_nup = cf_value(nup)
        cf_holds = cf_mu < cf_nup
    else:
        cf_mu = cf_nup = cf_holds = None
    is_base = nu == nup
    return AuditStep(
        level=level,
        factorization=f,
        q1=q1,
        q2=q2,
        q3=q3,
        mu_length_parity="even" if len(mu) % 2 == 0 else "odd",
        cf_reversed_mu=cf_mu,
        cf_nu_prime=cf_nup,
        cf_holds=cf_holds,
        is_base=is_base,
        base_diff=base_difference(mu, f.delta, nu) if is_base else None,
    )


def _verdict(steps: tuple[AuditStep, ...], out_of_pattern: bool, stopped_level: int | None) -> AuditVerdict:
    reduction = [s for s in steps if not s.is_base]
    even_lvl = next((s.level for s in reduction if s.mu_length_parity == "even"), None)
    cf_lvl = next((s.level for s in reduction if s.cf_holds is False), None)
    candidates = [x for x in (even_lvl, cf_lvl) if x is not None]
    defect = min(candidates) if candidates else None
    parts = []
    if defect is not None:
        reasons = []
        if even_lvl == defect:
            reasons.append("common prefix has even length")
        if cf_lvl == defect:
            reasons.append("continued-fraction inequality fails (q3 not positive)")
        parts.append(f"defect at level {defect}: " + "; ".join(reasons))
    if out_of_pattern:
        if stopped_level == 1 and not steps:
            parts.append("out-of-pattern: the rewritten pair has no replacements, the descent does not apply")
        else:
            parts.append(f"out-of-pattern: descent stopped at level {stopped_level} with fewer than two replacements")
    if not parts:
        parts.append("no defect found")
    return AuditVerdict(
        defect_level=defect,
        even_prefix_level=even_lvl,
        cf_fail_level=cf_lvl,
        out_of_pattern=out_of_pattern,
        description="; ".join(parts),
    )


def audit_pair(p: int, q: int) -> AuditTrace:
    """Replay the induction for the pair (p/(q+1), p/q) and record every level."""
    a = snake_word(p, q + 1)
    b = snake_word(p, q)
    odd = odd_factorization(a, b)
    id3 = identity3_check(odd.mu, odd.nu)
    pair_a = odd.mu + (2,) + odd.nu + (2,)
    pair_b = odd.mu_prime + (2,) + odd.nu
    odd_main = continuant(pair_a) - continuant(pair_b)
    correction = continuant(odd.mu[:-1]) * continuant(tail_slot(odd.nu))

    steps: list[AuditStep] = []
    out_of_pattern = False
    stopped_level: int | None = None
    level = 1
    prev_nu_len: int | None = None
    while True:
        al = align(pair_a, pair_b)
        if len(al.replacements) < 2:
            out_of_pattern = True
            stopped_level = level
            break
        f = _even_from(al, pair_a, pair_b)
        step = _make_step(level, f)
        steps.append(step)
        if step.is_base:
            break
        if prev_nu_len is not None and len(f.nu) >= prev_nu_len:
            raise AlignmentError("descent stalled")
        prev_nu_len = len(f.nu)
        pair_a = f.nu + (2,)
        pair_b = f.nu_prime
        level += 1

    frozen = tuple(steps)
    return AuditTrace(
        p=p,
        q=q,
        word_a=a,
        word_b=b,
        odd=odd,
        identity3=id3,
        odd_main_diff=odd_main,
        odd_correction=correction,
        steps=frozen,
        verdict=_verdict(frozen, out_of_pattern, stopped_level),
        overall_diff=overall_difference(p, q),
    )

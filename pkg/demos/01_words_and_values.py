#!/usr/bin/env python3
"""Continuants, exact continued-fraction values, and the split identity.

Everything runs on plain Python ints and Fractions, so the numbers stay
exact no matter how long the words get.
"""

from markovwords import (
    cf_less,
    cf_value,
    continuant,
    format_word,
    identity3_check,
    reverse,
    tail_slot,
)

print("Continuants of a few short words")
for w in [(), (2,), (2, 2), (2, 1, 1, 2), (2, 1, 1, 1, 1, 2), (2, 2, 2, 2)]:
    print(f"  K[{format_word(w)}] = {continuant(w)}")

print("\nA continuant never changes under reversal:")
w = (2, 1, 1, 2, 2, 1, 1, 2, 2, 2)
print(f"  K[{format_word(w)}] = {continuant(w)}")
print(f"  K[{format_word(reverse(w))}] = {continuant(reverse(w))}")

print("\nExact continued-fraction values (numerator/denominator in lowest terms):")
for w in [(2,), (2, 2), (1, 1, 2), (2, 1, 1, 1, 1, 2)]:
    print(f"  [{format_word(w)}] = {cf_value(w)}")

print("\nExact comparison avoids any floating-point rounding:")
u, v = (2, 2), (2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2)
print(f"  [{format_word(u)}] = {cf_value(u)}")
print(f"  [{format_word(v)}] = {cf_value(v)} ~ {float(cf_value(v)):.6f}")
print(f"  [{format_word(u)}] < [{format_word(v)}] ? {cf_less(u, v)}")

print("\nThe split identity  N[mu 1 1 nu 2] = N[mu 2 nu 2] + N[mu-] N[tail(nu)]:")
for mu, nu in [((2,), ()), ((2, 2), (2,)), ((2, 1, 1), (2, 2, 1, 1))]:
    res = identity3_check(mu, nu)
    print(
        f"  mu = {format_word(mu)}, nu = {format_word(nu)}: "
        f"{res.lhs} = {res.rhs} -> {'holds' if res.holds else 'FAILS'}"
    )

print("\nThe empty tail is the edge case: tail(empty) is empty and K[-] = 1,")
print(f"  tail_slot(()) = {tail_slot(())!r}, continuant = {continuant(tail_slot(()))}")

#!/usr/bin/env python3
"""Lockstep alignment of neighbouring words and the two cut patterns.

Words are read as sequences of replaceable entries (11 counts as one
entry, each 2 stands alone).  Aligning the words of p/(q+1) and p/q
entry by entry always shows an odd number of replacements, alternating
11-for-2, 2-for-11, ..., with a single trailing 2 left over.
"""

from markovwords import (
    align,
    even_factorization,
    format_word,
    odd_factorization,
    snake_word,
)

a, b = snake_word(9, 14), snake_word(9, 13)
print("A (9/14):", format_word(a))
print("B (9/13):", format_word(b))

al = align(a, b)
print(f"\n{len(al.replacements)} replacements (parity {al.parity}), {al.matched} matched entries")
for r in al.replacements:
    print(
        f"  entry {r.index:>2}: A has {r.entry_a.kind:>2} at offset {r.entry_a.start:>2}, "
        f"B has {r.entry_b.kind:>2} at offset {r.entry_b.start:>2}"
    )
print(f"residuals: A -> {format_word(al.residual_a)}, B -> {format_word(al.residual_b)}")

print("\nCut at the LAST replacement (A = mu 1 1 nu 2, B = mu' 2 nu):")
f = odd_factorization(a, b)
print(f"  mu  = {format_word(f.mu)}")
print(f"  mu' = {format_word(f.mu_prime)}")
print(f"  nu  = {format_word(f.nu)}")

print("\nCut at the FIRST TWO replacements (A = mu 1 1 d 2 nu 2, B = mu 2 d 1 1 nu'):")
g = even_factorization(a, b)
print(f"  mu  = {format_word(g.mu)}")
print(f"  d   = {format_word(g.delta)}")
print(f"  nu  = {format_word(g.nu)}")
print(f"  nu' = {format_word(g.nu_prime)}")
print(f"  lengths: |nu| = {len(g.nu)} = |nu'| + 1 = {len(g.nu_prime) + 1}")

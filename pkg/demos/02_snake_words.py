#!/usr/bin/env python3
"""The quotient word of an index p/q and its structural counts.

Each index p/q with 1 <= p < q gets a {1,2}-word of length 2q-2; its
continuant is the Markov number of p/q whenever the fraction is reduced.
The counts of 1s, 2s, the length and the number of replaceable entries
all have closed forms in p and q, checked here index by index.
"""

from markovwords import fact_basic_report, format_word, markov_number, snake_word

print("Words and values for small indices")
for p, q in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (9, 13), (9, 14)]:
    w = snake_word(p, q)
    print(f"  {p}/{q}: {format_word(w)}")
    print(f"        markov number {markov_number(p, q)}")

print("\nStructural counts against their closed forms")
header = f"  {'index':>7} {'ones':>5} {'twos':>5} {'length':>7} {'entries':>8}  all ok"
print(header)
for p, q in [(1, 5), (9, 14), (11, 17), (7, 24)]:
    r = fact_basic_report(p, q)
    print(
        f"  {p:>3}/{q:<3} {r.ones:>5} {r.twos:>5} {r.length:>7} {r.entries:>8}  {r.all_ok}"
    )

print("\nExhaustive check over every index with q <= 60:")
bad = [(p, q) for q in range(2, 61) for p in range(1, q) if not fact_basic_report(p, q).all_ok]
print(f"  violations: {len(bad)}")

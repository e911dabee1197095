#!/usr/bin/env python3
"""Replaying the word-splitting induction for m(p, q+1) > m(p, q).

Each reduction level rewrites the running pair as mu 1 1 d 2 nu 2 versus
mu 2 d 1 1 nu' and leans on two side conditions: the common prefix mu
must have odd length, and the bound [reversed mu] < [nu'] (equivalently
q3 > 0) must hold.  The audit records both at every level.

The pair 9/14 vs 9/13 is the telling one: level 1 is healthy, but at
level 2 the prefix length turns even and q3 goes negative, so the
induction's own preconditions fail there, even though the inequality
m(9/14) > m(9/13) is itself true.  The pair 1/5 vs 1/4 is degenerate in
a different way: its rewritten form contains no replacements at all, so
the descent never starts ("out-of-pattern").
"""

from markovwords import audit_pair, format_word, overall_difference

for p, q in [(9, 13), (1, 4)]:
    t = audit_pair(p, q)
    print(f"=== audit of {p}/{q + 1} vs {p}/{q} ===")
    print(f"difference of values: {t.overall_diff} (positive: {t.overall_diff > 0})")
    print(
        f"split identity: lhs {t.identity3.lhs} = rhs {t.identity3.rhs}; "
        f"reduced difference {t.odd_main_diff} + correction {t.odd_correction}"
    )
    print(f"odd cut: mu = {format_word(t.odd.mu)}")
    print(f"         mu' = {format_word(t.odd.mu_prime)}")
    print(f"         nu = {format_word(t.odd.nu)}")
    for s in t.steps:
        tag = " (base)" if s.is_base else ""
        print(f"level {s.level}{tag}: mu = {format_word(s.factorization.mu)}"
              f" | delta = {format_word(s.factorization.delta)}")
        print(f"  nu  = {format_word(s.factorization.nu)}")
        print(f"  nu' = {format_word(s.factorization.nu_prime)}")
        print(f"  |mu| parity: {s.mu_length_parity}; q1 = {s.q1}, q2 = {s.q2}, q3 = {s.q3}")
        if s.cf_holds is not None:
            print(f"  [reversed mu] = {s.cf_reversed_mu} < [nu'] = {s.cf_nu_prime}"
                  f" -> {'holds' if s.cf_holds else 'fails'}")
        if s.is_base:
            print(f"  nu = nu', base difference = {s.base_diff}")
    print(f"verdict: {t.verdict.description}")
    print()

print("How often does the descent break somewhere?  Sweep q <= 40:")
total = defective = degenerate = clean = 0
for q in range(2, 41):
    for p in range(1, q):
        t = audit_pair(p, q)
        total += 1
        if t.verdict.defect_level is not None:
            defective += 1
        elif t.verdict.out_of_pattern:
            degenerate += 1
        else:
            clean += 1
        assert overall_difference(p, q) > 0  # the inequality itself never fails
print(f"  {total} pairs: {defective} with a defective descent, "
      f"{degenerate} out-of-pattern, {clean} fully clean")
print("  ... and the difference m(p, q+1) - m(p, q) stayed positive on every one.")

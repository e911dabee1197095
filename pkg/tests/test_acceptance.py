"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s`.  Every check is exact
(zero tolerance); the stated time targets are asserted where given.
"""

import io
import json
import math
import random
import time
from fractions import Fraction

import pytest

from markovwords import (
    E2,
    E11,
    align,
    audit_pair,
    cf_less,
    cf_value,
    continuant,
    fact_basic_report,
    identity3_check,
    markov_number,
    overall_difference,
    reverse,
    scan_fixed_numerator,
    scan_theorem52,
    snake_word,
    strip_first,
    tail_slot,
    triple_path,
    triple_tree_oracle,
)
from markovwords.cli import dispatch
from reference_data import (
    LEVEL1,
    LEVEL2,
    WORD_1_4,
    WORD_1_5,
    WORD_9_13,
    WORD_9_14,
)

AUDIT_SWEEP_MAX_Q = 60


def _cli(argv):
    buf = io.StringIO()
    code = dispatch(argv, stdout=buf)
    return code, buf.getvalue()


def _report(name, ok):
    print(f"{'PASS' if ok else 'FAIL'}: {name}")
    assert ok


def test_c01_word_fidelity():
    expected = {
        "1/4": WORD_1_4,
        "1/5": WORD_1_5,
        "9/13": WORD_9_13,
        "9/14": WORD_9_14,
    }
    snake_word(1, 4)  # warm up imports before timing
    ok = True
    for index, letters in expected.items():
        t0 = time.perf_counter()
        p, q = index.split("/")
        w = snake_word(int(p), int(q))
        elapsed = time.perf_counter() - t0
        code, out = _cli(["word", index])
        ok &= w == letters
        ok &= code == 0 and out == " ".join(str(a) for a in letters) + "\n"
        ok &= elapsed < 0.001
    _report("criterion 1: word fidelity for 1/4, 1/5, 9/13, 9/14", ok)


def test_c02_structural_counts_up_to_300():
    t0 = time.perf_counter()
    violations = [
        (p, q)
        for q in range(2, 301)
        for p in range(1, q)
        if not fact_basic_report(p, q).all_ok
    ]
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 10.0
    _report(
        f"criterion 2: structural counts clean for q <= 300 ({elapsed:.1f}s)", ok
    )


def test_c03_pair_invariants_up_to_200():
    t0 = time.perf_counter()
    violations = []
    for p in range(1, 200):
        prev = None
        for q in range(p + 1, 201):
            b = prev if prev is not None else snake_word(p, q)
            a = snake_word(p, q + 1)
            prev = a
            al = align(a, b)
            good = (
                al.parity == "odd"
                and al.residual_a == (2,)
                and al.residual_b == ()
                and a.count(1) - b.count(1) == 2
            )
            if good:
                for j, r in enumerate(al.replacements):
                    want = (E11, E2) if j % 2 == 0 else (E2, E11)
                    if (r.entry_a.kind, r.entry_b.kind) != want:
                        good = False
                        break
            if not good:
                violations.append((p, q))
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 30.0
    _report(f"criterion 3: pair invariants clean for q <= 200 ({elapsed:.1f}s)", ok)


def test_c04_split_identity_randomized():
    rng = random.Random(20260809)
    failures = 0
    for letters_hi in (2, 5):
        for _ in range(1000):
            mu = tuple(rng.randint(1, letters_hi) for _ in range(rng.randint(1, 18)))
            nu = tuple(rng.randint(1, letters_hi) for _ in range(rng.randint(0, 18)))
            if not identity3_check(mu, nu).holds:
                failures += 1
    edge = identity3_check((2, 1, 1, 1, 1), ())
    ok = failures == 0 and edge.holds and tail_slot(()) == () and continuant(tail_slot(())) == 1
    _report("criterion 4: split identity on 2000 random pairs plus empty-nu edge", ok)


def test_c05_reversal_and_cf_link_randomized():
    rng = random.Random(97)
    failures = 0
    for _ in range(1200):
        letters_hi = rng.choice((2, 5))
        w = tuple(rng.randint(1, letters_hi) for _ in range(rng.randint(1, 40)))
        if continuant(w) != continuant(reverse(w)):
            failures += 1
        if cf_value(w) != Fraction(continuant(w), continuant(strip_first(w))):
            failures += 1
    _report("criterion 5: reversal symmetry and cf link on 1200 random words", failures == 0)


def test_c06_oracle_equivalence_up_to_50():
    t0 = time.perf_counter()
    mismatches = []
    equation_failures = []
    for q in range(2, 51):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            if markov_number(p, q) != triple_tree_oracle(p, q):
                mismatches.append((p, q))
            for a, c, b in triple_path(p, q):
                if a * a + c * c + b * b != 3 * a * c * b:
                    equation_failures.append((a, c, b))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and not equation_failures and elapsed < 5.0
    _report(f"criterion 6: oracle equivalence for q <= 50 ({elapsed:.2f}s)", ok)


def test_c07_audit_9_13_reproduction():
    t = audit_pair(9, 13)
    s1, s2 = t.steps[0], t.steps[1]
    f1, f2 = s1.factorization, s2.factorization
    ok = (
        (f1.mu, f1.delta, f1.nu, f1.nu_prime)
        == (LEVEL1["mu"], LEVEL1["delta"], LEVEL1["nu"], LEVEL1["nu_prime"])
        and (f2.mu, f2.delta, f2.nu, f2.nu_prime)
        == (LEVEL2["mu"], LEVEL2["delta"], LEVEL2["nu"], LEVEL2["nu_prime"])
        and s1.mu_length_parity == "odd"
        and s1.cf_holds is True
        and s1.q3 is not None
        and s1.q3 > 0
        and s2.mu_length_parity == "even"
        and s2.cf_holds is False
        and s2.q3 is not None
        and s2.q3 < 0
        and t.verdict.defect_level == 2
    )
    code, out = _cli(["audit", "9/13", "--format", "json"])
    data = json.loads(out)
    ok &= code == 0 and data["verdict"]["defect_level"] == 2
    ok &= data["levels"][0]["mu"] == "2 2 2" and data["levels"][1]["mu"] == "2 2"
    _report("criterion 7: audit 9/13 reproduces the reference trace, defect at level 2", ok)


def test_c08_audit_1_4_edge_case():
    t = audit_pair(1, 4)
    ok = (
        t.odd.nu == ()
        and continuant(tail_slot(t.odd.nu)) == 1
        and t.identity3.holds
        and t.steps == ()
        and t.verdict.out_of_pattern
    )
    code, out = _cli(["audit", "1/4"])
    ok &= code == 0 and "out-of-pattern" in out
    _report("criterion 8: audit 1/4 applies the empty-tail reading and is out-of-pattern", ok)


def test_c09_scans_clean_and_sign_bridge():
    t0 = time.perf_counter()
    fixed = scan_fixed_numerator(150)
    one_step = scan_theorem52(150)
    bridge_failures = 0
    for q in range(2, AUDIT_SWEEP_MAX_Q + 1):
        for p in range(1, q):
            for s in audit_pair(p, q).steps:
                if s.q3 is None:
                    continue
                if (s.q3 > 0) != s.cf_holds:
                    bridge_failures += 1
                if (s.q3 > 0) != cf_less(reverse(s.factorization.mu), s.factorization.nu_prime):
                    bridge_failures += 1
    elapsed = time.perf_counter() - t0
    ok = (
        fixed.verdict == "clean"
        and one_step.verdict == "clean"
        and bridge_failures == 0
        and elapsed < 60.0
    )
    _report(
        f"criterion 9: fixed-numerator and one-step scans clean at 150, "
        f"sign bridge holds on audited levels ({elapsed:.1f}s)",
        ok,
    )


def test_c10_defect_verdicts_never_contradict_the_inequality():
    audited = 0
    defective = 0
    bad = []
    for q in range(2, AUDIT_SWEEP_MAX_Q + 1):
        for p in range(1, q):
            t = audit_pair(p, q)
            audited += 1
            if t.verdict.defect_level is not None:
                defective += 1
                if overall_difference(p, q) <= 0:
                    bad.append((p, q))
    ok = not bad and defective > 0
    _report(
        f"criterion 10: all {defective} defect verdicts of {audited} audits "
        "coexist with a positive difference",
        ok,
    )

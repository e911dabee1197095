"""Command-line front end: every library operation behind one batch tool.

Output is deterministic: identical invocations produce byte-identical
text (scan timings are kept on the in-memory report only).  Exit status
is 0 when every executed verdict is clean, 1 when any scan reports a
violation, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import NamedTuple, Sequence

from .align import Alignment, align
from .audit import AuditTrace, audit_pair
from .scans import (
    ScanReport,
    oracle_cross_check,
    scan_aigner,
    scan_facts,
    scan_fixed_numerator,
    scan_theorem52,
)
from .snake import FactBasicReport, fact_basic_report, format_fraction, markov_number, parse_fraction, snake_word
from .words import Word, cf_value, format_word, parse_word


class WordOutput(NamedTuple):
    index: str
    letters: Word


class MarkovOutput(NamedTuple):
    index: str
    value: int


class CfOutput(NamedTuple):
    letters: Word
    value: Fraction


class AlignOutput(NamedTuple):
    index_a: str
    index_b: str
    alignment: Alignment


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _opt(x):
    return None if x is None else str(x)


# ---------------------------------------------------------------------------
# structured (json-ready) views


def _facts_dict(r: FactBasicReport) -> dict:
    return {
        "index": format_fraction(r.p, r.q),
        "endpoints_ok": r.endpoints_ok,
        "ones": {"observed": r.ones, "expected": 2 * r.q - 2 * r.p - 2, "ok": r.ones_ok},
        "twos": {"observed": r.twos, "expected": 2 * r.p, "ok": r.twos_ok},
        "length": {"observed": r.length, "expected": 2 * r.q - 2, "ok": r.length_ok},
        "entries": {"observed": r.entries, "expected": r.q + r.p - 1, "ok": r.entries_ok},
        "all_ok": r.all_ok,
    }


def _align_dict(o: AlignOutput) -> dict:
    al = o.alignment
    return {
        "a": o.index_a,
        "b": o.index_b,
        "replacements": [
            {
                "index": r.index,
                "offset_a": r.entry_a.start,
                "offset_b": r.entry_b.start,
                "kind_a": r.entry_a.kind,
                "kind_b": r.entry_b.kind,
            }
            for r in al.replacements
        ],
        "matched": al.matched,
        "residual_a": format_word(al.residual_a),
        "residual_b": format_word(al.residual_b),
        "parity": al.parity,
    }


def _trace_dict(t: AuditTrace) -> dict:
    return {
        "pair": {"a": format_fraction(t.p, t.q + 1), "b": format_fraction(t.p, t.q)},
        "word_a": format_word(t.word_a),
        "word_b": format_word(t.word_b),
        "markov_a": str(markov_number(t.p, t.q + 1)),
        "markov_b": str(markov_number(t.p, t.q)),
        "overall_difference": str(t.overall_diff),
        "odd_cut": {
            "mu": format_word(t.odd.mu),
            "mu_prime": format_word(t.odd.mu_prime),
            "nu": format_word(t.odd.nu),
        },
        "split_identity": {
            "lhs": str(t.identity3.lhs),
            "rhs": str(t.identity3.rhs),
            "holds": t.identity3.holds,
            "main_term": str(t.odd_main_diff),
            "correction": str(t.odd_correction),
        },
        "levels": [
            {
                "level": s.level,
                "mu": format_word(s.factorization.mu),
                "delta": format_word(s.factorization.delta),
                "nu": format_word(s.factorization.nu),
                "nu_prime": format_word(s.factorization.nu_prime),
                "q1": str(s.q1),
                "q2": _opt(s.q2),
                "q3": _opt(s.q3),
                "mu_length": len(s.factorization.mu),
                "mu_length_parity": s.mu_length_parity,
                "cf_reversed_mu": None if s.cf_reversed_mu is None else _frac(s.cf_reversed_mu),
                "cf_nu_prime": None if s.cf_nu_prime is None else _frac(s.cf_nu_prime),
                "cf_holds": s.cf_holds,
                "is_base": s.is_base,
                "base_difference": _opt(s.base_diff),
            }
            for s in t.steps
        ],
        "verdict": {
            "defect_level": t.verdict.defect_level,
            "even_prefix_level": t.verdict.even_prefix_level,
            "cf_fail_level": t.verdict.cf_fail_level,
            "out_of_pattern": t.verdict.out_of_pattern,
            "description": t.verdict.description,
        },
    }


def _scan_dict(r: ScanReport) -> dict:
    return {
        "scan": r.scan,
        "params": r.params,
        "verdict": r.verdict,
        "pairs_checked": r.pairs_checked,
        "counterexamples": [
            {
                **dict(zip(r.index_names, c.indices)),
                "witnesses": list(c.witnesses),
                "note": c.note,
            }
            for c in r.counterexamples
        ],
        "notes": list(r.notes),
    }


# ---------------------------------------------------------------------------
# plain text


def _facts_plain(r: FactBasicReport) -> str:
    d = _facts_dict(r)
    lines = [f"index: {d['index']}"]
    lines.append(f"endpoints are 2: {'ok' if r.endpoints_ok else 'FAIL'}")
    for key, label in (("ones", "letter 1 count"), ("twos", "letter 2 count"),
                       ("length", "length"), ("entries", "replaceable entries")):
        e = d[key]
        lines.append(f"{label}: {e['observed']} (expected {e['expected']}): {'ok' if e['ok'] else 'FAIL'}")
    lines.append("all checks pass" if r.all_ok else "SOME CHECKS FAIL")
    return "\n".join(lines) + "\n"


def _align_plain(o: AlignOutput) -> str:
    al = o.alignment
    lines = [f"align {o.index_a} against {o.index_b}"]
    lines.append(f"replacements: {len(al.replacements)} (parity {al.parity})")
    for r in al.replacements:
        lines.append(
            f"  entry {r.index}: first word has {r.entry_a.kind} at offset {r.entry_a.start}, "
            f"second has {r.entry_b.kind} at offset {r.entry_b.start}"
        )
    lines.append(f"matched entries: {al.matched}")
    lines.append(f"residual of first word: {format_word(al.residual_a)}")
    lines.append(f"residual of second word: {format_word(al.residual_b)}")
    return "\n".join(lines) + "\n"


def _trace_plain(t: AuditTrace) -> str:
    d = _trace_dict(t)
    lines = [f"audit of pair {d['pair']['a']} vs {d['pair']['b']}"]
    lines.append(f"word A ({d['pair']['a']}): {d['word_a']}")
    lines.append(f"word B ({d['pair']['b']}): {d['word_b']}")
    lines.append(
        f"values: {d['markov_a']} vs {d['markov_b']}, difference {d['overall_difference']}"
    )
    lines.append("cut at the last replacement:")
    lines.append(f"  mu  = {d['odd_cut']['mu']}")
    lines.append(f"  mu' = {d['odd_cut']['mu_prime']}")
    lines.append(f"  nu  = {d['odd_cut']['nu']}")
    si = d["split_identity"]
    lines.append(
        f"split identity: {si['lhs']} = {si['rhs']} "
        f"({'holds' if si['holds'] else 'FAILS'}); reduced difference {si['main_term']}, "
        f"correction term {si['correction']}"
    )
    for lv in d["levels"]:
        base = " (base)" if lv["is_base"] else ""
        lines.append(f"level {lv['level']}{base}:")
        lines.append(f"  mu = {lv['mu']} | delta = {lv['delta']}")
        lines.append(f"  nu = {lv['nu']}")
        lines.append(f"  nu' = {lv['nu_prime']}")
        lines.append(
            f"  |mu| = {lv['mu_length']} ({lv['mu_length_parity']}); "
            f"q1 = {lv['q1']}; q2 = {lv['q2']}; q3 = {lv['q3']}"
        )
        if lv["cf_holds"] is not None:
            sign = "positive" if int(lv["q3"]) > 0 else ("zero" if int(lv["q3"]) == 0 else "negative")
            lines.append(
                f"  cf check: [reversed mu] = {lv['cf_reversed_mu']} < [nu'] = {lv['cf_nu_prime']} "
                f"-> {'holds' if lv['cf_holds'] else 'fails'} (q3 {sign})"
            )
        if not lv["is_base"] and (lv["mu_length_parity"] == "even" or lv["cf_holds"] is False):
            flags = []
            if lv["mu_length_parity"] == "even":
                flags.append("prefix length even")
            if lv["cf_holds"] is False:
                flags.append("CF inequality false")
                flags.append("q3 negative" if int(lv["q3"]) < 0 else "q3 zero")
            lines.append(f"  ** level {lv['level']} breaks the pattern: {', '.join(flags)} **")
        if lv["is_base"]:
            lines.append(f"  nu = nu'; base difference = {lv['base_difference']}")
    lines.append(f"verdict: {d['verdict']['description']}")
    return "\n".join(lines) + "\n"


def _scan_plain(r: ScanReport) -> str:
    lines = [f"scan: {r.scan}"]
    for k in sorted(r.params):
        lines.append(f"  {k} = {r.params[k]}")
    lines.append(f"pairs checked: {r.pairs_checked}")
    lines.append(f"counterexamples: {len(r.counterexamples)}")
    for c in r.counterexamples:
        where = ", ".join(f"{n}={v}" for n, v in zip(r.index_names, c.indices))
        witness = f" witnesses {', '.join(c.witnesses)}" if c.witnesses else ""
        note = f" ({c.note})" if c.note else ""
        lines.append(f"  {where}:{witness}{note}")
    for note in r.notes:
        lines.append(f"note: {note}")
    lines.append(f"verdict: {r.verdict}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# csv


def _csv_rows(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _scan_csv(r: ScanReport) -> str:
    header = list(r.index_names) + ["witnesses", "note"]
    rows = [header]
    for c in r.counterexamples:
        rows.append([str(i) for i in c.indices] + [";".join(c.witnesses), c.note])
    return _csv_rows(rows)


# ---------------------------------------------------------------------------
# dispatch


def render(obj, fmt: str) -> str:
    """Serialize any command payload in the requested format."""
    if fmt not in ("plain", "json", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, AuditTrace):
        if fmt == "csv":
            raise ValueError("trace requires json or plain")
        if fmt == "json":
            return json.dumps(_trace_dict(obj), indent=2) + "\n"
        return _trace_plain(obj)
    if isinstance(obj, ScanReport):
        if fmt == "json":
            return json.dumps(_scan_dict(obj), indent=2) + "\n"
        if fmt == "csv":
            return _scan_csv(obj)
        return _scan_plain(obj)
    if isinstance(obj, FactBasicReport):
        if fmt == "json":
            return json.dumps(_facts_dict(obj), indent=2) + "\n"
        if fmt == "csv":
            d = _facts_dict(obj)
            header = ["index", "endpoints_ok", "ones", "twos", "length", "entries", "all_ok"]
            row = [d["index"], str(d["endpoints_ok"]), str(d["ones"]["observed"]),
                   str(d["twos"]["observed"]), str(d["length"]["observed"]),
                   str(d["entries"]["observed"]), str(d["all_ok"])]
            return _csv_rows([header, row])
        return _facts_plain(obj)
    if isinstance(obj, AlignOutput):
        if fmt == "json":
            return json.dumps(_align_dict(obj), indent=2) + "\n"
        if fmt == "csv":
            rows = [["index", "offset_a", "offset_b", "kind_a", "kind_b"]]
            for r in obj.alignment.replacements:
                rows.append([str(r.index), str(r.entry_a.start), str(r.entry_b.start),
                             r.entry_a.kind, r.entry_b.kind])
            return _csv_rows(rows)
        return _align_plain(obj)
    if isinstance(obj, WordOutput):
        if fmt == "json":
            return json.dumps({"index": obj.index, "word": format_word(obj.letters)}, indent=2) + "\n"
        if fmt == "csv":
            return _csv_rows([[str(a) for a in obj.letters]])
        return format_word(obj.letters) + "\n"
    if isinstance(obj, MarkovOutput):
        if fmt == "json":
            return json.dumps({"index": obj.index, "markov": str(obj.value)}, indent=2) + "\n"
        if fmt == "csv":
            return _csv_rows([[obj.index, str(obj.value)]])
        return str(obj.value) + "\n"
    if isinstance(obj, CfOutput):
        if fmt == "json":
            return json.dumps(
                {
                    "word": format_word(obj.letters),
                    "value": _frac(obj.value),
                    "numerator": str(obj.value.numerator),
                    "denominator": str(obj.value.denominator),
                },
                indent=2,
            ) + "\n"
        if fmt == "csv":
            return _csv_rows([[str(obj.value.numerator), str(obj.value.denominator)]])
        return _frac(obj.value) + "\n"
    raise ValueError(f"cannot render object of type {type(obj).__name__}")


_SCANS = {
    "numerator": lambda max_q: scan_aigner(max_q, "numerator"),
    "denominator": lambda max_q: scan_aigner(max_q, "denominator"),
    "sum": lambda max_q: scan_aigner(max_q, "sum"),
    "facts": scan_facts,
    "theorem52": scan_theorem52,
    "oracle": oracle_cross_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain",
                        help="output format (default: plain)")
    common.add_argument("--out", metavar="FILE", default=None,
                        help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="markovwords",
        description="Exact continued-fraction words and monotonicity checks for "
                    "rational-indexed Markov numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", parents=[common], help="print the quotient word of index p/q")
    p.add_argument("index", metavar="p/q")

    p = sub.add_parser("markov", parents=[common], help="print the Markov number of index p/q")
    p.add_argument("index", metavar="p/q")

    p = sub.add_parser("facts", parents=[common], help="structural-count report for index p/q")
    p.add_argument("index", metavar="p/q")

    p = sub.add_parser("align", parents=[common], help="lockstep alignment of two snake words")
    p.add_argument("index_a", metavar="pA/qA")
    p.add_argument("index_b", metavar="pB/qB")

    p = sub.add_parser("audit", parents=[common],
                       help="replay the monotonicity induction for the pair (p/(q+1), p/q)")
    p.add_argument("index", metavar="p/q")

    p = sub.add_parser("scan", parents=[common], help="exhaustive scans over an index range")
    p.add_argument("target", choices=sorted(_SCANS))
    p.add_argument("--max-q", dest="max_q", type=int, default=150,
                   help="largest denominator to scan (default: 150)")

    p = sub.add_parser("cf", parents=[common], help="exact value of a continued fraction word")
    p.add_argument("letters", nargs="+", metavar="LETTER")

    return parser


def _run(args: argparse.Namespace):
    if args.command == "word":
        p, q = parse_fraction(args.index)
        return WordOutput(args.index, snake_word(p, q)), 0
    if args.command == "markov":
        p, q = parse_fraction(args.index)
        return MarkovOutput(args.index, markov_number(p, q)), 0
    if args.command == "facts":
        p, q = parse_fraction(args.index)
        report = fact_basic_report(p, q)
        return report, 0 if report.all_ok else 1
    if args.command == "align":
        pa, qa = parse_fraction(args.index_a)
        pb, qb = parse_fraction(args.index_b)
        out = AlignOutput(args.index_a, args.index_b, align(snake_word(pa, qa), snake_word(pb, qb)))
        return out, 0
    if args.command == "audit":
        p, q = parse_fraction(args.index)
        return audit_pair(p, q), 0
    if args.command == "scan":
        report = _SCANS[args.target](args.max_q)
        return report, 0 if report.verdict == "clean" else 1
    if args.command == "cf":
        w = parse_word(" ".join(args.letters))
        return CfOutput(w, cf_value(w)), 0
    raise ValueError(f"unknown command {args.command!r}")


def dispatch(argv: Sequence[str] | None = None, stdout=None) -> int:
    """Parse argv, run the command, write its output; returns the exit status."""
    stream = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        payload, code = _run(args)
        text = render(payload, args.format)
    except ValueError as exc:
        print(f"markovwords: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stream.write(text)
    return code


def main() -> None:
    sys.exit(dispatch())

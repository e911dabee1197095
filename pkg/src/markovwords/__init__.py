"""Exact-arithmetic toolkit for the continued-fraction words behind
rational-indexed Markov numbers: word construction, continuants, lockstep
alignment of neighbouring pairs, a mechanical replay of the one-step
monotonicity induction, and desk-scale exhaustive scans cross-checked
against an independent Markov-triple tree."""

from .align import (
    E2,
    E11,
    Alignment,
    AlignmentError,
    Entry,
    EvenFactorization,
    Fact2Result,
    OddFactorization,
    Replacement,
    align,
    decompose,
    even_factorization,
    fact2_check,
    fact3_check,
    odd_factorization,
)
from .audit import (
    AuditStep,
    AuditTrace,
    AuditVerdict,
    StepQuantities,
    audit_pair,
    base_difference,
    even_step_quantities,
    overall_difference,
)
from .scans import (
    Counterexample,
    ScanReport,
    oracle_cross_check,
    scan_aigner,
    scan_facts,
    scan_fixed_numerator,
    scan_theorem52,
    triple_path,
    triple_tree_oracle,
)
from .snake import (
    FactBasicReport,
    fact_basic_report,
    format_fraction,
    markov_number,
    parse_fraction,
    snake_word,
)
from .words import (
    EMPTY,
    Identity3Result,
    Word,
    cf_less,
    cf_value,
    continuant,
    format_word,
    identity3_check,
    parse_word,
    reverse,
    strip_first,
    strip_last,
    tail_slot,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "E2",
    "E11",
    "EMPTY",
    "Alignment",
    "AlignmentError",
    "AuditStep",
    "AuditTrace",
    "AuditVerdict",
    "Counterexample",
    "Entry",
    "EvenFactorization",
    "Fact2Result",
    "FactBasicReport",
    "Identity3Result",
    "OddFactorization",
    "Replacement",
    "ScanReport",
    "StepQuantities",
    "Word",
    "align",
    "audit_pair",
    "base_difference",
    "cf_less",
    "cf_value",
    "continuant",
    "decompose",
    "even_factorization",
    "even_step_quantities",
    "fact2_check",
    "fact3_check",
    "fact_basic_report",
    "format_fraction",
    "format_word",
    "identity3_check",
    "markov_number",
    "odd_factorization",
    "oracle_cross_check",
    "overall_difference",
    "parse_fraction",
    "parse_word",
    "reverse",
    "scan_aigner",
    "scan_facts",
    "scan_fixed_numerator",
    "scan_theorem52",
    "snake_word",
    "strip_first",
    "strip_last",
    "tail_slot",
    "triple_path",
    "triple_tree_oracle",
    "word",
]

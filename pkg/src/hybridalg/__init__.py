"""Exact arithmetic and property checks for small graded and hypercomplex algebras."""
from .algebra import (
    Element,
    MonomialTable,
    Parity,
    load_table,
    parity_of,
    polar_form,
    product,
    pseudo_norm,
    save_table,
    table_A,
    table_from_rows,
    table_quaternions,
)
from .brackets import ContractionOrder, check_delta_jl_axioms, evaluate, graded_bracket
from .cayley_dickson import CDAlgebra, cd_algebra, conjugate, euclid_norm_sq
from .compare import comparison_tables
from .exprlang import evaluate_text, parse, unparse
from .jacobi import check_all_jacobis, mixed_commutator_counterexample, residual_of
from .properties import (
    check_alternativity,
    check_associativity,
    check_commutativity,
    check_composition,
    check_flexibility,
    check_power_associativity,
    find_identities,
    find_nilpotents_and_idempotents,
    find_zero_divisors,
    regular_representations,
    signature_of,
)
from .reports import PropertyReport, Verdict, Witness
from .words import EngineOptions, SignedWord, evaluate_sum, evaluate_word, normalize, parse_word

__all__ = [
    "CDAlgebra",
    "ContractionOrder",
    "Element",
    "EngineOptions",
    "MonomialTable",
    "Parity",
    "PropertyReport",
    "SignedWord",
    "Verdict",
    "Witness",
    "cd_algebra",
    "check_all_jacobis",
    "check_alternativity",
    "check_associativity",
    "check_commutativity",
    "check_composition",
    "check_delta_jl_axioms",
    "check_flexibility",
    "check_power_associativity",
    "comparison_tables",
    "conjugate",
    "euclid_norm_sq",
    "evaluate",
    "evaluate_sum",
    "evaluate_text",
    "evaluate_word",
    "find_identities",
    "find_nilpotents_and_idempotents",
    "find_zero_divisors",
    "graded_bracket",
    "load_table",
    "mixed_commutator_counterexample",
    "normalize",
    "parity_of",
    "parse",
    "parse_word",
    "polar_form",
    "product",
    "pseudo_norm",
    "regular_representations",
    "residual_of",
    "save_table",
    "signature_of",
    "table_A",
    "table_from_rows",
    "table_quaternions",
    "unparse",
]

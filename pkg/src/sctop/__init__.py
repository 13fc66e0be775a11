"""Workbench for irreducible sets, the irreducibly-derived topology, and
strong completions of T0 spaces: exact finite computation, a symbolic
catalog of infinite spaces, and executable verification suites."""

from .errors import (CapExceeded, NotSIPlusContinuous, NotStronglyComplete,
                     ParseError, PosetAxiomError, SchemaError, SctopError,
                     SemanticError, SpaceMismatch, T0Violation, TopologyError,
                     UnsupportedCompletion, UnsupportedDescriptor,
                     UnsupportedForm)
from .order import DEFAULT_CAP, FinPoset
from .spaces import FinSpace, alexandroff, sierpinski
from .maps import (ContinuityReport, SpaceMap, classify, compose,
                   identity_map, is_continuous, is_i_continuous, is_monotone,
                   is_si_continuous, is_si_plus_continuous, preserves_irr_sups)
from .completion import (CompletionResult, GammaSI, check_uniqueness,
                         check_universal_property, extend, f_star, gamma_si,
                         k_map, psi, strong_completion)
from .catalog import (CATALOG, ChainTail, Cofinite, Column, FiniteSet,
                      SymbolicCompletion, SymbolicSpace, WholeSpace,
                      get_entry, sym_is_directed, sym_is_irreducible,
                      sym_is_si_open, sym_strong_completion, sym_sup,
                      truncate)
from .dsl import elaborate, elaborate_map, parse_map, parse_space, print_doc
from .jsonio import Family, from_json, to_json
from .dot import to_dot

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "NotSIPlusContinuous", "NotStronglyComplete", "ParseError",
    "PosetAxiomError", "SchemaError", "SctopError", "SemanticError",
    "SpaceMismatch", "T0Violation", "TopologyError", "UnsupportedCompletion",
    "UnsupportedDescriptor", "UnsupportedForm",
    "DEFAULT_CAP", "FinPoset", "FinSpace", "alexandroff", "sierpinski",
    "ContinuityReport", "SpaceMap", "classify", "compose", "identity_map",
    "is_continuous", "is_i_continuous", "is_monotone", "is_si_continuous",
    "is_si_plus_continuous", "preserves_irr_sups",
    "CompletionResult", "GammaSI", "check_uniqueness",
    "check_universal_property", "extend", "f_star", "gamma_si", "k_map",
    "psi", "strong_completion",
    "CATALOG", "ChainTail", "Cofinite", "Column", "FiniteSet",
    "SymbolicCompletion", "SymbolicSpace", "WholeSpace", "get_entry",
    "sym_is_directed", "sym_is_irreducible", "sym_is_si_open",
    "sym_strong_completion", "sym_sup", "truncate",
    "elaborate", "elaborate_map", "parse_map", "parse_space", "print_doc",
    "Family", "from_json", "to_json", "to_dot",
]

"""Well-ordering analysis and ordinal order types for binary DFAs."""

from .dfa import Dfa, Condensation, TrimReport, condense, from_json, is_trim, load
from .dfa import dump, loop_word, sink_of, to_json, trim
from .lexorder import (
    ChainAnalysis,
    LexRelation,
    analyze_chain,
    compare_lex,
    embed3to2,
    enumerate_words,
    extract_strict_chain,
    min_word,
    successor,
)
from .ordinal import Ordinal, format_ordinal, parse_ordinal
from .ordtype import LoopDecomposition, OrderTypeTable, order_type, rank, state_order_type
from .synth import synth, synth_mul_omega, synth_one, synth_sum, synth_zero
from .wellorder import CheckResult, Witness, check, verify_witness, witness_chain

__all__ = [
    "ChainAnalysis",
    "CheckResult",
    "Condensation",
    "Dfa",
    "LexRelation",
    "LoopDecomposition",
    "OrderTypeTable",
    "Ordinal",
    "TrimReport",
    "Witness",
    "analyze_chain",
    "check",
    "compare_lex",
    "condense",
    "dump",
    "embed3to2",
    "enumerate_words",
    "extract_strict_chain",
    "format_ordinal",
    "from_json",
    "is_trim",
    "load",
    "loop_word",
    "min_word",
    "order_type",
    "parse_ordinal",
    "rank",
    "sink_of",
    "state_order_type",
    "successor",
    "synth",
    "synth_mul_omega",
    "synth_one",
    "synth_sum",
    "synth_zero",
    "to_json",
    "trim",
    "verify_witness",
    "witness_chain",
]

__version__ = "0.1.0"

"""Constructivity decision and sequence synthesis for multivariable quantum
signal processing.

Given a pair (P, Q) of m-variable Laurent polynomials, decide whether it is
the top row of an n-step interleaved product of per-variable signal
operators and z-rotations, and when it is, extract one valid choice of angle
and index parameters realizing it.
"""

from .engine import (
    BaseAccept,
    DecisionTrace,
    IdentityPad,
    NecessaryReport,
    PhaseReduction,
    Reject,
    SynthesisResult,
    check_necessary,
    decide,
    find_phase,
    qsp1_characterize,
    reduce_step,
    run_decision,
    synthesize,
    term_bound,
)
from .laurent import EPS, LaurentPoly
from .oracle import (
    ANGLE_MODES,
    GENERATOR,
    OracleConfig,
    RoundtripReport,
    random_sequence,
    roundtrip_check,
)
from .su2 import (
    Mat2,
    MqspSequence,
    PQPair,
    evaluate_sequence,
    half_diff,
    half_sum,
    identity_matrix,
    pair_to_matrix,
    signal_operator,
    z_rotation,
)

__version__ = "0.1.0"

__all__ = [
    "ANGLE_MODES",
    "BaseAccept",
    "DecisionTrace",
    "EPS",
    "GENERATOR",
    "IdentityPad",
    "LaurentPoly",
    "Mat2",
    "MqspSequence",
    "NecessaryReport",
    "OracleConfig",
    "PhaseReduction",
    "PQPair",
    "Reject",
    "RoundtripReport",
    "SynthesisResult",
    "check_necessary",
    "decide",
    "evaluate_sequence",
    "find_phase",
    "half_diff",
    "half_sum",
    "identity_matrix",
    "pair_to_matrix",
    "qsp1_characterize",
    "random_sequence",
    "reduce_step",
    "roundtrip_check",
    "run_decision",
    "signal_operator",
    "synthesize",
    "term_bound",
    "z_rotation",
]

"""Dempster-Shafer evidential reasoning with a diagnostic consultation layer.

The core vocabulary: a Frame of discernment holds the candidate hypotheses;
a MassFunction spreads unit mass over subsets of the frame; Dempster's rule
combines independent mass functions; belief and plausibility bound the
probability of any subset. On top sits a symptom knowledge base and an
engine that folds selected symptoms into a ranked diagnosis.
"""

from .core import (
    BeliefInterval,
    CombinationOutcome,
    DenseLimitError,
    DuplicateLabelError,
    EmptyCombinationError,
    EmptyFocusError,
    EmptyFrameError,
    EvidenceError,
    FocalSet,
    Frame,
    FrameMismatchError,
    FrameTooLargeError,
    InvalidMassError,
    MassFunction,
    TotalConflictError,
    UnknownLabelError,
    combine,
    combine_all,
    validate_masses,
)
from .engine import (
    ConsultationStep,
    Diagnosis,
    DuplicateSymptomError,
    NoSymptomsError,
    RankRow,
    diagnose,
    rank_report,
)
from .kb import (
    KbIssue,
    KnowledgeBase,
    KnowledgeBaseError,
    Symptom,
    UnknownConditionError,
    UnknownSymptomError,
    default_kb,
    kb_to_text,
    parse_kb,
    validate_kb,
)

__version__ = "0.1.0"

__all__ = [
    "BeliefInterval",
    "CombinationOutcome",
    "ConsultationStep",
    "DenseLimitError",
    "Diagnosis",
    "DuplicateLabelError",
    "DuplicateSymptomError",
    "EmptyCombinationError",
    "EmptyFocusError",
    "EmptyFrameError",
    "EvidenceError",
    "FocalSet",
    "Frame",
    "FrameMismatchError",
    "FrameTooLargeError",
    "InvalidMassError",
    "KbIssue",
    "KnowledgeBase",
    "KnowledgeBaseError",
    "MassFunction",
    "NoSymptomsError",
    "RankRow",
    "Symptom",
    "TotalConflictError",
    "UnknownConditionError",
    "UnknownLabelError",
    "UnknownSymptomError",
    "combine",
    "combine_all",
    "default_kb",
    "diagnose",
    "kb_to_text",
    "parse_kb",
    "rank_report",
    "validate_kb",
    "validate_masses",
    "__version__",
]

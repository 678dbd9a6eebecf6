"""Consultation: selected symptoms become simple supports, folded into a ranked diagnosis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .core import (
    BeliefInterval,
    EvidenceError,
    MassFunction,
    TotalConflictError,
    combine,
)
from .kb import KnowledgeBase

# Singleton masses are compared for ranking after rounding to this many decimal
# places, so hypotheses whose support is identical up to floating-point
# reassociation rank as true ties and fall through to the lexicographic
# tie-break. Keeps the ranking stable under permutations of the evidence.
RANK_DECIMALS = 12


class DuplicateSymptomError(EvidenceError):
    """The same evidence counted twice would break the independence premise."""

    def __init__(self, name: str):
        super().__init__(f"duplicate symptom: {name}")
        self.name = name


class NoSymptomsError(EvidenceError):
    def __init__(self):
        super().__init__("no symptoms selected")


@dataclass(frozen=True)
class ConsultationStep:
    """One fold: the symptom's evidence, the conflict it raised, the running combination."""

    symptom: str
    evidence: MassFunction
    conflict: float
    combined: MassFunction


@dataclass(frozen=True)
class Diagnosis:
    condition: str
    symptoms: tuple[str, ...]
    steps: tuple[ConsultationStep, ...]
    final: MassFunction
    singleton_masses: dict[str, float]
    intervals: dict[str, BeliefInterval]
    ranking: tuple[str, ...]


class RankRow(NamedTuple):
    label: str
    mass: float
    bel: float
    pl: float


def diagnose(kb: KnowledgeBase, condition: str, symptoms: Iterable[str]) -> Diagnosis:
    """Fold the selected symptoms' evidence in order and rank the diseases.

    Each symptom contributes a simple support: its weight for ``condition`` on
    the diseases it points at, the remainder on the whole frame. The first
    symptom's mass is the initial accumulator (a fold into the vacuous mass,
    which cannot conflict, so its step records K = 0). Ranking is over
    singleton masses only; composite focal sets stay visible in the steps.
    """
    symptoms = tuple(symptoms)
    if not symptoms:
        raise NoSymptomsError()
    seen: set[str] = set()
    for name in symptoms:
        if name in seen:
            raise DuplicateSymptomError(name)
        seen.add(name)
    ci = kb.condition_index(condition)

    frame = kb.frame
    steps: list[ConsultationStep] = []
    current: MassFunction | None = None
    for name in symptoms:
        sym = kb.symptom(name)
        evidence = MassFunction.simple_support(frame, sym.supports, sym.bpa[ci])
        if current is None:
            current, conflict = evidence, 0.0
        else:
            try:
                outcome = combine(current, evidence)
            except TotalConflictError as err:
                raise TotalConflictError(err.conflict, step=len(steps)) from None
            current, conflict = outcome.result, outcome.conflict
        steps.append(ConsultationStep(name, evidence, conflict, current))

    final = current
    assert final is not None
    singleton_masses = {lab: final[frame.singleton(lab)] for lab in frame}
    intervals = {lab: final.interval(frame.singleton(lab)) for lab in frame}
    ranking = tuple(
        sorted(frame.labels, key=lambda lab: (-round(singleton_masses[lab], RANK_DECIMALS), lab))
    )
    return Diagnosis(
        condition=condition,
        symptoms=symptoms,
        steps=tuple(steps),
        final=final,
        singleton_masses=singleton_masses,
        intervals=intervals,
        ranking=ranking,
    )


def rank_report(d: Diagnosis) -> list[RankRow]:
    """Per-disease rows (label, singleton mass, belief, plausibility) in ranking order."""
    return [
        RankRow(lab, d.singleton_masses[lab], d.intervals[lab].bel, d.intervals[lab].pl)
        for lab in d.ranking
    ]

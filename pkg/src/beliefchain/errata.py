"""Audit of the published worked example's printed combination tables.

The built-in knowledge base comes from a published trypanosomiasis case study
whose combination chain is printed with every intermediate table rounded to
two decimals. The rounded rows drift from the arithmetic they describe (one
row sums to 0.90, breaking the unit-total rule), and the drift compounds down
the chain. This module replays the same chain at full precision with the
dense reference implementation and reports every place the printed values
disagree with the replay.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MassFunction
from .kb import KnowledgeBase, default_kb
from .oracle import DenseMass, oracle_combine

VALUE_TOL = 0.02     # printed-value deviation worth recording
ROW_SUM_TOL = 0.02   # a correctly rounded row should sum to 1 well within this
SUMMARY_TOL = 0.05   # published final per-condition values get this much slack

_SIX = ("AT", "B", "DF", "M", "R", "WN")
_FULL = ("AT", "B", "DF", "M", "R", "WN", "L")

# Printed post-normalization rows of the reference chain (condition 1),
# one entry per combination step; step 1 combines the first two symptoms.
# Rows printed as mass on the empty set are recorded here as mass on the
# full frame: the empty set may not carry mass, and the tables' own algebra
# only works that way.
PRINTED_STEPS: tuple[tuple[str, dict[tuple[str, ...], str]], ...] = (
    ("red-urine", {("B",): "0.65", _SIX: "0.23", _FULL: "0.12"}),
    ("skin-rash", {("B",): "0.43", _SIX: "0.19", ("L",): "0.19", _FULL: "0.09"}),
    ("paralysis", {("B",): "0.25", _SIX: "0.12", ("L",): "0.42", _FULL: "0.05"}),
    ("headache", {("B",): "0.2", _SIX: "0.1", ("L",): "0.33", ("M",): "0.1", _FULL: "0.04"}),
    (
        "bleeding-around-the-bite",
        {("B",): "0.14", _SIX: "0.06", ("L",): "0.23", ("M",): "0.06", ("R",): "0.11",
         _FULL: "0.03"},
    ),
    (
        "joint-pain",
        {("B",): "0.11", _SIX: "0.04", ("L",): "0.17", ("M",): "0.04", ("R",): "0.08",
         ("AT",): "0.05", _FULL: "0.03"},
    ),
    (
        "swollen-lymph-nodes",
        {("B",): "0.07", _SIX: "0.02", ("L",): "0.11", ("M",): "0.02", ("R",): "0.05",
         ("AT",): "0.09", _FULL: "0.02"},
    ),
    (
        "sleep-disturbances",
        {("B",): "0.03", _SIX: "0.01", ("L",): "0.06", ("M",): "0.01", ("R",): "0.02",
         ("AT",): "0.13", _FULL: "0.01"},
    ),
    (
        "meningitis",
        {("B",): "0.01", _SIX: "0.003", ("L",): "0.02", ("M",): "0.003", ("R",): "0.01",
         ("AT",): "0.06", ("WN",): "0.02", _FULL: "0.003"},
    ),
    (
        "arthritis",
        {("B",): "0.004", _SIX: "0.001", ("L",): "0.01", ("M",): "0.001", ("R",): "0.004",
         ("AT",): "0.03", ("WN",): "0.01", ("DF",): "0.003", _FULL: "0.001"},
    ),
)

# Published final "highest bpa" per condition (always African trypanosomiasis).
PRINTED_FINAL_AT: dict[str, str] = {
    "1": "0.03",
    "2": "0.02",
    "3": "0.07",
    "4": "0.07",
    "5": "0.02",
}


@dataclass(frozen=True)
class Erratum:
    """One recorded disagreement between a printed value and the replay."""

    kind: str  # "row-sum" | "value" | "summary"
    printed: float
    exact: float
    deviation: float
    step: int | None = None
    symptom: str | None = None
    set_labels: tuple[str, ...] | None = None
    condition: str | None = None


@dataclass(frozen=True)
class ErrataReport:
    entries: tuple[Erratum, ...]
    # context for rendering: every step's printed row sum and replay conflict
    row_sums: tuple[float, ...]
    step_conflicts: tuple[float, ...]
    # (condition, printed AT, exact AT, deviation) for every condition
    summary_rows: tuple[tuple[str, float, float, float], ...]

    def by_kind(self, kind: str) -> list[Erratum]:
        return [e for e in self.entries if e.kind == kind]


def _replay_chain(kb: KnowledgeBase, condition: str) -> tuple[list[DenseMass], list[float]]:
    ci = kb.condition_index(condition)
    supports = [
        DenseMass.from_mass_function(
            MassFunction.simple_support(kb.frame, s.supports, s.bpa[ci])
        )
        for s in kb.symptoms
    ]
    current = supports[0]
    steps = []
    conflicts = []
    for dense in supports[1:]:
        current, k = oracle_combine(current, dense)
        steps.append(current)
        conflicts.append(k)
    return steps, conflicts


def audit(kb: KnowledgeBase | None = None) -> ErrataReport:
    """Replay the reference chain and collect every printed-value disagreement."""
    kb = kb if kb is not None else default_kb()
    frame = kb.frame
    entries: list[Erratum] = []

    steps, conflicts = _replay_chain(kb, "1")
    row_sums = []
    for i, (symptom, printed_row) in enumerate(PRINTED_STEPS, start=1):
        exact = steps[i - 1]
        row_sum = sum(float(v) for v in printed_row.values())
        row_sums.append(row_sum)
        if abs(row_sum - 1.0) > ROW_SUM_TOL:
            entries.append(
                Erratum("row-sum", printed=row_sum, exact=1.0,
                        deviation=abs(row_sum - 1.0), step=i, symptom=symptom)
            )
        for labels, printed_text in printed_row.items():
            printed = float(printed_text)
            value = exact.values[frame.subset(labels).bits]
            dev = abs(printed - value)
            if dev > VALUE_TOL:
                entries.append(
                    Erratum("value", printed=printed, exact=value, deviation=dev,
                            step=i, symptom=symptom, set_labels=labels)
                )

    summary_rows = []
    for condition, printed_text in PRINTED_FINAL_AT.items():
        final = _replay_chain(kb, condition)[0][-1]
        exact_at = final.values[frame.singleton("AT").bits]
        printed = float(printed_text)
        dev = abs(printed - exact_at)
        summary_rows.append((condition, printed, exact_at, dev))
        if dev > SUMMARY_TOL:
            entries.append(
                Erratum("summary", printed=printed, exact=exact_at, deviation=dev,
                        condition=condition)
            )

    return ErrataReport(
        entries=tuple(entries),
        row_sums=tuple(row_sums),
        step_conflicts=tuple(conflicts),
        summary_rows=tuple(summary_rows),
    )


def _set_name(labels: tuple[str, ...]) -> str:
    return "Θ" if labels == _FULL else "{" + ", ".join(labels) + "}"


def render_markdown(report: ErrataReport) -> str:
    """The ERRATA document: what was printed, what the replay gives, where they part."""
    out = []
    w = out.append
    w("# Errata: printed combination tables vs full-precision replay\n")
    w(
        "The built-in knowledge base reproduces the combination chain of a published\n"
        "trypanosomiasis case study. That chain is printed with every intermediate\n"
        "table rounded to two decimals, and later steps are computed from the rounded\n"
        "rows, so the printed numbers drift from the arithmetic they describe. This\n"
        "document is generated by replaying the same chain at full precision with the\n"
        "dense reference combiner (`beliefchain errata` regenerates it).\n"
    )
    w("Conventions: rows printed as mass on the empty set are read as mass on the\n"
      "whole frame Θ, since mass on the empty set is forbidden by definition and the\n"
      "tables' own algebra only works with Θ. Steps are numbered by combination:\n"
      "step 1 folds the second symptom into the first.\n")

    w("## Printed row sums\n")
    w("A basic probability assignment must sum to 1. The printed rows stop doing so\n"
      "from step 2 on; the deficit is the mass lost to rounding and to stale\n"
      "normalizers, and it compounds down the chain.\n")
    w("| step | folded symptom | printed row sum | replay conflict K |")
    w("| ---: | :--- | ---: | ---: |")
    for i, (symptom, _row) in enumerate(PRINTED_STEPS, start=1):
        w(f"| {i} | {symptom} | {report.row_sums[i - 1]:.3f} | {report.step_conflicts[i - 1]:.6f} |")
    w("")

    w(f"## Printed values deviating by more than {VALUE_TOL}\n")
    values = report.by_kind("value")
    w("| step | folded symptom | set | printed | replay | deviation |")
    w("| ---: | :--- | :--- | ---: | ---: | ---: |")
    for e in values:
        w(
            f"| {e.step} | {e.symptom} | {_set_name(e.set_labels or ())} "
            f"| {e.printed:g} | {e.exact:.6f} | {e.deviation:.6f} |"
        )
    w("")

    w("## Published final summary vs replay\n")
    w(
        "The published summary reports the top-ranked disease's final mass per\n"
        f"condition. The replay agrees that African trypanosomiasis ranks first in\n"
        f"every condition, but not with the printed magnitudes (slack ±{SUMMARY_TOL}):\n"
    )
    w("| condition | printed AT mass | replay AT mass | deviation | within slack |")
    w("| :--- | ---: | ---: | ---: | :--- |")
    for condition, printed, exact, dev in report.summary_rows:
        ok = "yes" if dev <= SUMMARY_TOL else "no"
        w(f"| {condition} | {printed:g} | {exact:.6f} | {dev:.6f} | {ok} |")
    w("")

    w("## Highlights\n")
    w(
        "- Step 2 (skin-rash) is the first broken row: printed as {B} 0.43, the\n"
        "  six-disease set 0.19, {L} 0.19, Θ 0.09, which sums to 0.90. The replay\n"
        "  gives K = 0.570375 and m({B}) = 0.529532, and its row sums to 1 exactly.\n"
        "- Every printed row from step 2 on sums below 1; by the final step the\n"
        "  printed row retains only 0.064 of the unit mass.\n"
        "- The published per-condition finals (0.03 / 0.02 / 0.07 / 0.07 / 0.02) are\n"
        "  artifacts of the compounding rounding; the full-precision finals are an\n"
        "  order of magnitude larger. The ranking conclusion itself survives.\n"
    )
    return "\n".join(out)

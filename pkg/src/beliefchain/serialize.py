"""Rendering of diagnoses and knowledge bases for the CLI and the HTTP service.

Both surfaces go through the same functions so that the json CLI format and
the HTTP response body are byte-identical for identical inputs. Machine
formats (json, tsv) carry full float precision; the human table format rounds
masses to two decimals, mirroring how the published worked example prints its
combination tables.
"""

from __future__ import annotations

import json

from .core import FocalSet, Frame, MassFunction
from .engine import Diagnosis, rank_report
from .kb import KnowledgeBase


def set_key(frame: Frame, fs: FocalSet) -> str:
    """Stable string key for a focal set: comma-joined sorted labels."""
    return ",".join(sorted(frame.labels_of(fs)))


def masses_payload(m: MassFunction) -> dict[str, float]:
    return {set_key(m.frame, fs): value for fs, value in m.items()}


def kb_payload(kb: KnowledgeBase) -> dict:
    return {
        "frame": list(kb.frame.labels),
        "conditions": list(kb.conditions),
        "symptoms": [
            {
                "name": s.name,
                "supports": list(kb.frame.labels_of(s.supports)),
                "bpa": list(s.bpa),
            }
            for s in kb.symptoms
        ],
    }


def response_payload(d: Diagnosis, trace: bool) -> dict:
    payload: dict = {}
    if trace:
        payload["steps"] = [
            {
                "symptom": step.symptom,
                "conflict": step.conflict,
                "masses": masses_payload(step.combined),
            }
            for step in d.steps
        ]
    payload["final"] = masses_payload(d.final)
    payload["diseases"] = {
        label: {
            "mass": d.singleton_masses[label],
            "bel": d.intervals[label].bel,
            "pl": d.intervals[label].pl,
        }
        for label in d.ranking
    }
    payload["ranking"] = list(d.ranking)
    return payload


def to_json(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def _grid(rows: list[tuple[str, str]]) -> list[str]:
    width = max(len(name) for name, _ in rows)
    return [f"  {name.ljust(width)}  {value}" for name, value in rows]


def render_table(d: Diagnosis, trace: bool) -> str:
    """Human-readable report; masses display-rounded to 2 decimals."""
    frame = d.final.frame
    out: list[str] = []
    if trace:
        for i, step in enumerate(d.steps, start=1):
            out.append(f"step {i}: {step.symptom} (K = {step.conflict:.4f})")
            out.extend(
                _grid([(frame.format_set(fs), f"{v:.2f}") for fs, v in step.combined.items()])
            )
            out.append("")
    out.append(f"condition {d.condition}, {len(d.symptoms)} symptom(s)")
    rows = [("disease", "mass   bel    pl")]
    rows += [
        (row.label, f"{row.mass:.2f}   {row.bel:.2f}   {row.pl:.2f}")
        for row in rank_report(d)
    ]
    out.extend(_grid(rows))
    return "\n".join(out) + "\n"


def render_tsv(d: Diagnosis, trace: bool) -> str:
    """Machine-readable delimited report at full precision."""
    frame = d.final.frame
    lines: list[str] = []
    if trace:
        lines.append("step\tsymptom\tconflict\tset\tmass")
        for i, step in enumerate(d.steps, start=1):
            for fs, v in step.combined.items():
                lines.append(f"{i}\t{step.symptom}\t{step.conflict!r}\t{set_key(frame, fs)}\t{v!r}")
        lines.append("")
    lines.append("disease\tmass\tbel\tpl")
    for row in rank_report(d):
        lines.append(f"{row.label}\t{row.mass!r}\t{row.bel!r}\t{row.pl!r}")
    return "\n".join(lines) + "\n"

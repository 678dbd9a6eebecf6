"""Symptom/disease knowledge base: data model, line-oriented text format, fixture.

The file format is deliberately small::

    # comment
    frame: AT,B,DF,M,R,WN,L
    conditions: 1,2,3,4,5
    fever | AT,B,DF,M,R,WN | 0.65,0.65,0.65,0.65,0.45

The first two content lines declare the disease frame and the condition
names; every following line is one symptom with the diseases it supports and
one support weight per condition. Weights must lie strictly inside (0, 1):
a 0 or 1 in a knowledge base is almost always a typo, and it would create
degenerate vacuous or categorical evidence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import EvidenceError, FocalSet, Frame

_NAME_RE = re.compile(r"^[a-z0-9]+(?:-[a-z0-9]+)*$")


@dataclass(frozen=True)
class KbIssue:
    """One violation found while parsing or validating; ``line`` is 1-based."""

    code: str
    message: str
    line: int | None = None

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line is not None else ""
        return f"{where}{self.message} [{self.code}]"


class KnowledgeBaseError(EvidenceError):
    """Carries every issue found, not just the first."""

    def __init__(self, issues: list[KbIssue]):
        super().__init__("; ".join(str(i) for i in issues))
        self.issues = issues


class UnknownConditionError(EvidenceError):
    def __init__(self, name: str):
        super().__init__(f"unknown condition: {name}")
        self.name = name


class UnknownSymptomError(EvidenceError):
    def __init__(self, name: str):
        super().__init__(f"unknown symptom: {name}")
        self.name = name


@dataclass(frozen=True)
class Symptom:
    """A named piece of evidence: the diseases it points at, one weight per condition."""

    name: str
    supports: FocalSet
    bpa: tuple[float, ...]


@dataclass(frozen=True)
class KnowledgeBase:
    frame: Frame
    conditions: tuple[str, ...]
    symptoms: tuple[Symptom, ...]

    def condition_index(self, name: str) -> int:
        try:
            return self.conditions.index(name)
        except ValueError:
            raise UnknownConditionError(name) from None

    def symptom(self, name: str) -> Symptom:
        for s in self.symptoms:
            if s.name == name:
                return s
        raise UnknownSymptomError(name)

    def symptom_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.symptoms)


# Built-in trypanosomiasis fixture: 7 candidate diseases, 5 named bpa
# profiles ("conditions"), 11 symptoms. The conditions carry no semantics
# here; they are opaque columns of support weights.
_FIXTURE_FRAME = ("AT", "B", "DF", "M", "R", "WN", "L")
_FIXTURE_CONDITIONS = ("1", "2", "3", "4", "5")
_FIXTURE_ROWS = (
    ("fever", ("AT", "B", "DF", "M", "R", "WN"), (0.65, 0.65, 0.65, 0.65, 0.45)),
    ("red-urine", ("B",), (0.65, 0.65, 0.65, 0.45, 0.55)),
    ("skin-rash", ("L",), (0.65, 0.65, 0.45, 0.55, 0.45)),
    ("paralysis", ("L",), (0.65, 0.45, 0.55, 0.45, 0.45)),
    ("headache", ("M",), (0.45, 0.55, 0.45, 0.45, 0.55)),
    ("bleeding-around-the-bite", ("R",), (0.55, 0.45, 0.45, 0.55, 0.65)),
    ("joint-pain", ("AT",), (0.45, 0.45, 0.55, 0.65, 0.65)),
    ("swollen-lymph-nodes", ("AT",), (0.45, 0.55, 0.65, 0.65, 0.65)),
    ("sleep-disturbances", ("AT",), (0.55, 0.65, 0.65, 0.65, 0.65)),
    ("meningitis", ("WN",), (0.65, 0.65, 0.65, 0.65, 0.65)),
    ("arthritis", ("DF",), (0.65, 0.65, 0.65, 0.65, 0.65)),
)


def default_kb() -> KnowledgeBase:
    """The built-in African trypanosomiasis knowledge base."""
    frame = Frame(_FIXTURE_FRAME)
    symptoms = tuple(
        Symptom(name, frame.subset(supports), bpa) for name, supports, bpa in _FIXTURE_ROWS
    )
    return KnowledgeBase(frame, _FIXTURE_CONDITIONS, symptoms)


def _split_csv(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def parse_kb(text: str) -> KnowledgeBase:
    """Parse the text format; raises ``KnowledgeBaseError`` listing every problem found."""
    issues: list[KbIssue] = []
    frame: Frame | None = None
    conditions: tuple[str, ...] | None = None
    symptoms: list[Symptom] = []
    seen_names: set[str] = set()

    content: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            content.append((lineno, line))

    for pos, (lineno, line) in enumerate(content):
        if pos == 0:
            if not line.startswith("frame:"):
                issues.append(KbIssue("syntax", "first line must be 'frame: <label,...>'", lineno))
                continue
            try:
                frame = Frame(_split_csv(line[len("frame:"):]))
            except EvidenceError as err:
                issues.append(KbIssue("syntax", f"bad frame: {err}", lineno))
            continue
        if pos == 1:
            if not line.startswith("conditions:"):
                issues.append(
                    KbIssue("syntax", "second line must be 'conditions: <name,...>'", lineno)
                )
                continue
            names = _split_csv(line[len("conditions:"):])
            if not names:
                issues.append(KbIssue("syntax", "no condition names", lineno))
            elif len(set(names)) != len(names):
                issues.append(KbIssue("duplicate-condition", "condition names repeat", lineno))
            else:
                conditions = tuple(names)
            continue

        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            issues.append(
                KbIssue("syntax", "expected '<name> | <disease,...> | <bpa,...>'", lineno)
            )
            continue
        name, supports_text, bpa_text = parts
        if not _NAME_RE.match(name):
            issues.append(
                KbIssue("syntax", f"symptom name {name!r} must be lowercase-hyphenated", lineno)
            )
            continue
        if name in seen_names:
            issues.append(KbIssue("duplicate-symptom", f"symptom {name!r} repeats", lineno))
            continue
        seen_names.add(name)

        support_labels = _split_csv(supports_text)
        if not support_labels:
            issues.append(KbIssue("empty-supports", f"{name}: no supported diseases", lineno))
            continue
        supports = None
        if frame is not None:
            unknown = [lab for lab in support_labels if lab not in frame]
            if unknown:
                issues.append(
                    KbIssue("unknown-disease", f"{name}: unknown disease {unknown[0]!r}", lineno)
                )
            else:
                supports = frame.subset(support_labels)

        bpa: list[float] = []
        ok = True
        for tok in _split_csv(bpa_text):
            try:
                bpa.append(float(tok))
            except ValueError:
                issues.append(KbIssue("syntax", f"{name}: bad number {tok!r}", lineno))
                ok = False
                break
        if not ok:
            continue
        if conditions is not None and len(bpa) != len(conditions):
            issues.append(
                KbIssue(
                    "bpa-count-mismatch",
                    f"{name}: {len(bpa)} weights for {len(conditions)} conditions",
                    lineno,
                )
            )
            continue
        bad = [v for v in bpa if not 0.0 < v < 1.0]
        if bad:
            issues.append(
                KbIssue(
                    "bpa-out-of-range",
                    f"{name}: weight {bad[0]!r} outside the open interval (0, 1)",
                    lineno,
                )
            )
            continue
        if supports is not None:
            symptoms.append(Symptom(name, supports, tuple(bpa)))

    if frame is None and not issues:
        issues.append(KbIssue("syntax", "empty document", None))
    if issues:
        raise KnowledgeBaseError(issues)
    assert frame is not None and conditions is not None
    return KnowledgeBase(frame, conditions, tuple(symptoms))


def validate_kb(kb: KnowledgeBase) -> list[KbIssue]:
    """Structural check of an in-memory knowledge base; violations are data, not faults."""
    issues: list[KbIssue] = []
    if len(set(kb.conditions)) != len(kb.conditions):
        issues.append(KbIssue("duplicate-condition", "condition names repeat"))
    if any(not c for c in kb.conditions):
        issues.append(KbIssue("syntax", "empty condition name"))
    seen = set()
    for s in kb.symptoms:
        if s.name in seen:
            issues.append(KbIssue("duplicate-symptom", f"symptom {s.name!r} repeats"))
        seen.add(s.name)
        if s.supports.frame_size != len(kb.frame):
            issues.append(
                KbIssue("unknown-disease", f"{s.name}: supports a different frame")
            )
            continue
        if s.supports.is_empty:
            issues.append(KbIssue("empty-supports", f"{s.name}: no supported diseases"))
        if len(s.bpa) != len(kb.conditions):
            issues.append(
                KbIssue(
                    "bpa-count-mismatch",
                    f"{s.name}: {len(s.bpa)} weights for {len(kb.conditions)} conditions",
                )
            )
        for v in s.bpa:
            if not 0.0 < v < 1.0:
                issues.append(
                    KbIssue(
                        "bpa-out-of-range",
                        f"{s.name}: weight {v!r} outside the open interval (0, 1)",
                    )
                )
    return issues


def kb_to_text(kb: KnowledgeBase) -> str:
    """Canonical serialization; ``parse_kb`` round-trips it to an equal value."""
    lines = [
        "# symptom knowledge base",
        "# <name> | <supported diseases> | one support weight per condition",
        f"frame: {','.join(kb.frame.labels)}",
        f"conditions: {','.join(kb.conditions)}",
    ]
    for s in kb.symptoms:
        supports = ",".join(kb.frame.labels_of(s.supports))
        weights = ",".join(repr(v) for v in s.bpa)
        lines.append(f"{s.name} | {supports} | {weights}")
    return "\n".join(lines) + "\n"

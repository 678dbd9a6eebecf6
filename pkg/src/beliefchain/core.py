"""Frames, focal sets, mass functions, and Dempster's rule of combination.

Evidence lives on a fixed frame of discernment: an ordered list of hypothesis
labels. Subsets of the frame are encoded as bit words (label i owns bit i), so
set algebra is integer bit twiddling and mass functions stay sparse maps from
bit word to mass. All values are immutable after construction and every
operation is a pure function, so everything here is safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Iterable, Iterator, Mapping

MAX_FRAME = 64          # focal sets are packed into a 64-bit word
MAX_DENSE_FRAME = 20    # belief_all allocates 2**n floats
MASS_SUM_TOL = 1e-9     # admitted slack on sum(masses) == 1
TOTAL_CONFLICT_TOL = 1e-12  # combination refuses when 1 - K falls below this
PRUNE_TOL = 1e-15       # post-normalization masses below this are dropped


class EvidenceError(Exception):
    """Base class for all evidence-handling errors."""


class EmptyFrameError(EvidenceError):
    pass


class FrameTooLargeError(EvidenceError):
    pass


class DuplicateLabelError(EvidenceError):
    pass


class UnknownLabelError(EvidenceError):
    def __init__(self, label: str):
        super().__init__(f"unknown label: {label!r}")
        self.label = label


class EmptyFocusError(EvidenceError):
    pass


class FrameMismatchError(EvidenceError):
    pass


class InvalidMassError(EvidenceError):
    """Raised when a mass map violates the basic probability assignment rules."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class TotalConflictError(EvidenceError):
    """Two pieces of evidence ruled each other out completely (K ~ 1)."""

    def __init__(self, conflict: float, step: int | None = None):
        at = f" at step {step}" if step is not None else ""
        super().__init__(f"total conflict (K = {conflict!r}){at}: combination is undefined")
        self.conflict = conflict
        self.step = step


class EmptyCombinationError(EvidenceError):
    pass


class DenseLimitError(EvidenceError):
    pass


@dataclass(frozen=True)
class FocalSet:
    """A subset of a frame, packed into the low ``frame_size`` bits of a word."""

    bits: int
    frame_size: int

    def __post_init__(self):
        if not 1 <= self.frame_size <= MAX_FRAME:
            raise FrameTooLargeError(f"frame size {self.frame_size} outside 1..{MAX_FRAME}")
        if not 0 <= self.bits < (1 << self.frame_size):
            raise FrameMismatchError(
                f"bit word {self.bits:#x} does not fit a frame of size {self.frame_size}"
            )

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_full(self) -> bool:
        return self.bits == (1 << self.frame_size) - 1

    def _check(self, other: "FocalSet") -> None:
        if self.frame_size != other.frame_size:
            raise FrameMismatchError(
                f"focal sets from frames of size {self.frame_size} and {other.frame_size}"
            )

    def __and__(self, other: "FocalSet") -> "FocalSet":
        self._check(other)
        return FocalSet(self.bits & other.bits, self.frame_size)

    def __or__(self, other: "FocalSet") -> "FocalSet":
        self._check(other)
        return FocalSet(self.bits | other.bits, self.frame_size)

    def complement(self) -> "FocalSet":
        return FocalSet(self.bits ^ ((1 << self.frame_size) - 1), self.frame_size)

    def issubset(self, other: "FocalSet") -> bool:
        self._check(other)
        return self.bits & other.bits == self.bits

    def intersects(self, other: "FocalSet") -> bool:
        self._check(other)
        return self.bits & other.bits != 0

    def indices(self) -> Iterator[int]:
        """Yield the positions of the set bits, ascending."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    @property
    def sort_key(self) -> tuple[int, int]:
        """Canonical display order: ascending cardinality, then ascending bit word."""
        return (self.bits.bit_count(), self.bits)


class Frame:
    """Ordered, de-duplicated hypothesis labels. Label index i is bit i of a FocalSet."""

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise EmptyFrameError("a frame needs at least one hypothesis label")
        if len(labels) > MAX_FRAME:
            raise FrameTooLargeError(f"{len(labels)} labels exceed the {MAX_FRAME}-bit limit")
        seen = set()
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise EvidenceError(f"labels must be non-empty text, got {lab!r}")
            if lab in seen:
                raise DuplicateLabelError(f"duplicate label: {lab!r}")
            seen.add(lab)
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Frame) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"Frame({list(self._labels)!r})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def empty(self) -> FocalSet:
        return FocalSet(0, len(self._labels))

    def full(self) -> FocalSet:
        return FocalSet((1 << len(self._labels)) - 1, len(self._labels))

    def singleton(self, label: str) -> FocalSet:
        return FocalSet(1 << self.index(label), len(self._labels))

    def subset(self, labels: Iterable[str]) -> FocalSet:
        """Encode the named hypotheses as a FocalSet; order and duplicates are irrelevant."""
        bits = 0
        for lab in labels:
            bits |= 1 << self.index(lab)
        return FocalSet(bits, len(self._labels))

    def labels_of(self, s: FocalSet) -> tuple[str, ...]:
        """Member labels of ``s`` in frame order."""
        if s.frame_size != len(self._labels):
            raise FrameMismatchError("focal set does not belong to this frame")
        return tuple(self._labels[i] for i in s.indices())

    def format_set(self, s: FocalSet) -> str:
        """Human rendering: members in frame order, the full set shown as Θ."""
        if s.is_full:
            return "Θ"
        if s.is_empty:
            return "∅"
        return "{" + ", ".join(self.labels_of(s)) + "}"


@dataclass(frozen=True)
class BeliefInterval:
    """Lower (belief) and upper (plausibility) bound on a set's probability."""

    bel: float
    pl: float

    def __post_init__(self):
        # admit the same slack the mass-sum tolerance admits
        if not (-MASS_SUM_TOL <= self.bel <= self.pl <= 1.0 + MASS_SUM_TOL):
            raise EvidenceError(f"invalid belief interval [{self.bel!r}, {self.pl!r}]")

    @property
    def width(self) -> float:
        return self.pl - self.bel


def validate_masses(frame: Frame, masses: Mapping[FocalSet, float]) -> list[str]:
    """Check a candidate mass map against the bpa rules; violations come back as text.

    An empty list means the map is a valid basic probability assignment:
    nothing on the empty set, every stored mass positive, total mass 1 within
    ``MASS_SUM_TOL``. Entries with mass exactly 0 are treated as removable,
    not as violations.
    """
    violations = []
    n = len(frame)
    for s, v in masses.items():
        if s.frame_size != n:
            violations.append(f"focal set {s.bits:#x} does not belong to a frame of size {n}")
            continue
        if s.is_empty and v != 0.0:
            violations.append(f"mass {v!r} on the empty set")
        if v < 0.0:
            violations.append(f"negative mass {v!r} on {frame.format_set(s)}")
    total = fsum(masses.values())
    if abs(total - 1.0) > MASS_SUM_TOL:
        violations.append(f"masses sum to {total!r}, expected 1 within {MASS_SUM_TOL}")
    return violations


class MassFunction:
    """A sparse basic probability assignment over a frame.

    Invariants enforced at construction: no mass on the empty set, every
    stored mass strictly positive (zero entries are silently dropped), total
    mass 1 within ``MASS_SUM_TOL``. Focal sets iterate in canonical order
    (ascending cardinality, then ascending bit word).
    """

    __slots__ = ("_frame", "_masses")

    def __init__(self, frame: Frame, masses: Mapping[FocalSet, float]):
        nonzero = {s: v for s, v in masses.items() if v != 0.0}
        violations = validate_masses(frame, nonzero)
        if violations:
            raise InvalidMassError(violations)
        self._frame = frame
        self._masses = {
            s.bits: v for s, v in sorted(nonzero.items(), key=lambda kv: kv[0].sort_key)
        }

    @classmethod
    def _from_bits(cls, frame: Frame, bit_masses: dict[int, float]) -> "MassFunction":
        # internal fast path: caller guarantees the invariants
        m = object.__new__(cls)
        m._frame = frame
        m._masses = dict(sorted(bit_masses.items(), key=lambda kv: (kv[0].bit_count(), kv[0])))
        return m

    @classmethod
    def vacuous(cls, frame: Frame) -> "MassFunction":
        """Total ignorance: all mass on the full set. Neutral element of combination."""
        return cls(frame, {frame.full(): 1.0})

    @classmethod
    def simple_support(cls, frame: Frame, focus: FocalSet, w: float) -> "MassFunction":
        """Mass ``w`` on ``focus`` and the ``1 - w`` remainder on the full set.

        The remainder expresses ignorance, so it lives on Θ: putting it on the
        empty set would break the m(∅) = 0 rule. ``w = 0`` yields the vacuous
        assignment; ``focus = Θ`` collapses to the vacuous assignment too.
        """
        if focus.frame_size != len(frame):
            raise FrameMismatchError("focus does not belong to this frame")
        if focus.is_empty:
            raise EmptyFocusError("a simple support needs a non-empty focus")
        if not 0.0 <= w <= 1.0:
            raise ValueError(f"support weight {w!r} outside [0, 1]")
        if w == 0.0 or focus.is_full:
            return cls.vacuous(frame)
        masses = {focus: w}
        if w < 1.0:
            masses[frame.full()] = 1.0 - w
        return cls(frame, masses)

    @property
    def frame(self) -> Frame:
        return self._frame

    def __len__(self) -> int:
        return len(self._masses)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MassFunction)
            and self._frame == other._frame
            and self._masses == other._masses
        )

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{self._frame.format_set(s)}: {v:.4g}" for s, v in self.items()
        )
        return f"MassFunction({inner})"

    def __getitem__(self, s: FocalSet) -> float:
        if s.frame_size != len(self._frame):
            raise FrameMismatchError("focal set does not belong to this frame")
        return self._masses.get(s.bits, 0.0)

    def focal_sets(self) -> tuple[FocalSet, ...]:
        n = len(self._frame)
        return tuple(FocalSet(bits, n) for bits in self._masses)

    def items(self) -> Iterator[tuple[FocalSet, float]]:
        """(focal set, mass) pairs in canonical display order."""
        n = len(self._frame)
        for bits, v in self._masses.items():
            yield FocalSet(bits, n), v

    def total(self) -> float:
        return fsum(self._masses.values())

    def validate(self) -> list[str]:
        """Re-check the bpa invariants; always empty for a constructed instance."""
        n = len(self._frame)
        return validate_masses(self._frame, {FocalSet(b, n): v for b, v in self._masses.items()})

    def _require_member(self, s: FocalSet) -> None:
        if s.frame_size != len(self._frame):
            raise FrameMismatchError("focal set does not belong to this frame")

    def belief(self, s: FocalSet) -> float:
        """Total mass committed to subsets of ``s`` (lower probability bound)."""
        self._require_member(s)
        sbits = s.bits
        return fsum(v for bits, v in self._masses.items() if bits & sbits == bits)

    def plausibility(self, s: FocalSet) -> float:
        """Total mass of focal sets intersecting ``s`` (upper probability bound)."""
        self._require_member(s)
        sbits = s.bits
        return fsum(v for bits, v in self._masses.items() if bits & sbits)

    def interval(self, s: FocalSet) -> BeliefInterval:
        return BeliefInterval(self.belief(s), self.plausibility(s))

    def belief_all(self) -> list[float]:
        """Belief at every subset code, via the in-place subset-sum (zeta) transform.

        Scatters the masses into a dense array of size 2**n, then for each bit
        position adds the value of the subset with that bit cleared:
        n * 2**(n-1) additions total. Only frames up to ``MAX_DENSE_FRAME``
        are accepted, since the array is dense.
        """
        n = len(self._frame)
        if n > MAX_DENSE_FRAME:
            raise DenseLimitError(f"frame size {n} exceeds dense limit {MAX_DENSE_FRAME}")
        size = 1 << n
        acc = [0.0] * size
        for bits, v in self._masses.items():
            acc[bits] += v
        for i in range(n):
            bit = 1 << i
            for s_code in range(size):
                if s_code & bit:
                    acc[s_code] += acc[s_code ^ bit]
        return acc


@dataclass(frozen=True)
class CombinationOutcome:
    """Combined mass plus the conflict K that was normalized away."""

    result: MassFunction
    conflict: float


def combine(m1: MassFunction, m2: MassFunction) -> CombinationOutcome:
    """Dempster's rule: multiply masses onto intersections, renormalize by 1 - K.

    Every focal pair (A, B) contributes m1(A) * m2(B) to A ∩ B. The mass that
    lands on the empty set is the conflict K; every non-empty accumulation is
    divided by 1 - K. Complexity is the product of the two focal counts, never
    2**n.
    """
    if m1.frame != m2.frame:
        raise FrameMismatchError("cannot combine evidence from different frames")
    acc: dict[int, float] = {}
    for abits, av in m1._masses.items():
        for bbits, bv in m2._masses.items():
            key = abits & bbits
            acc[key] = acc.get(key, 0.0) + av * bv
    conflict = acc.pop(0, 0.0)
    if conflict >= 1.0 - TOTAL_CONFLICT_TOL:
        raise TotalConflictError(conflict)
    norm = 1.0 - conflict
    combined = {}
    for bits, v in acc.items():
        v /= norm
        if v >= PRUNE_TOL:
            combined[bits] = v
    return CombinationOutcome(MassFunction._from_bits(m1.frame, combined), conflict)


def combine_all(masses: Iterable[MassFunction]) -> tuple[MassFunction, list[float]]:
    """Left-to-right fold of ``combine``; returns the final mass and the K per step.

    The first mass is the initial accumulator, so a list of length k yields
    k - 1 conflict values. A ``TotalConflictError`` raised mid-fold carries the
    list index of the mass whose fold failed.
    """
    masses = list(masses)
    if not masses:
        raise EmptyCombinationError("no mass functions to combine")
    current = masses[0]
    conflicts = []
    for i, m in enumerate(masses[1:], start=1):
        try:
            outcome = combine(current, m)
        except TotalConflictError as err:
            raise TotalConflictError(err.conflict, step=i) from None
        current = outcome.result
        conflicts.append(outcome.conflict)
    return current, conflicts

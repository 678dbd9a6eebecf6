"""Deliberately naive dense reference implementations.

Ground truth for the sparse fast paths: everything here enumerates all 2**n
subset codes with plain loops so correctness is obvious on inspection. Kept
dense and quadratic on purpose; do not optimize. Small frames only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum

from .core import FrameMismatchError, MassFunction, TotalConflictError

ORACLE_MAX_FRAME = 8
ORACLE_SUM_TOL = 1e-12


@dataclass(frozen=True)
class DenseMass:
    """A mass function as a full array of 2**n values indexed by subset code."""

    frame_size: int
    values: tuple[float, ...]

    def __post_init__(self):
        if not 1 <= self.frame_size <= ORACLE_MAX_FRAME:
            raise ValueError(f"oracle frame size {self.frame_size} outside 1..{ORACLE_MAX_FRAME}")
        if len(self.values) != 1 << self.frame_size:
            raise ValueError(f"expected {1 << self.frame_size} values, got {len(self.values)}")
        if self.values[0] != 0.0:
            raise ValueError(f"mass {self.values[0]!r} on the empty set")
        if any(v < 0.0 for v in self.values):
            raise ValueError("negative mass")
        total = fsum(self.values)
        if abs(total - 1.0) > ORACLE_SUM_TOL:
            raise ValueError(f"masses sum to {total!r}")

    @classmethod
    def from_mass_function(cls, m: MassFunction) -> "DenseMass":
        n = len(m.frame)
        values = [0.0] * (1 << n)
        for s, v in m.items():
            values[s.bits] += v
        return cls(n, tuple(values))


def oracle_combine(a: DenseMass, b: DenseMass) -> tuple[DenseMass, float]:
    """Dempster's rule by the full double loop over all subset-code pairs."""
    if a.frame_size != b.frame_size:
        raise FrameMismatchError("cannot combine dense masses of different frame sizes")
    size = 1 << a.frame_size
    acc = [0.0] * size
    av = a.values
    bv = b.values
    for s in range(size):
        x = av[s]
        for t in range(size):
            acc[s & t] += x * bv[t]
    conflict = acc[0]
    if conflict >= 1.0 - 1e-12:
        raise TotalConflictError(conflict)
    norm = 1.0 - conflict
    acc[0] = 0.0
    for code in range(1, size):
        acc[code] /= norm
    return DenseMass(a.frame_size, tuple(acc)), conflict


def oracle_belief(a: DenseMass, s: int) -> float:
    """Belief at subset code ``s`` by testing every code for B ⊆ A."""
    size = 1 << a.frame_size
    return fsum(a.values[t] for t in range(size) if t & s == t)


def oracle_plausibility(a: DenseMass, s: int) -> float:
    """Plausibility at subset code ``s`` by testing every code for B ∩ A ≠ ∅."""
    size = 1 << a.frame_size
    return fsum(a.values[t] for t in range(size) if t & s)

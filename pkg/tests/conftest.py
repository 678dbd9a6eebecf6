import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # expected.py and helpers

from beliefchain.core import FocalSet, Frame, MassFunction
from beliefchain.kb import default_kb

FIXTURE_PATH = Path(__file__).parent.parent / "kb" / "trypanosomiasis.kb"
ERRATA_PATH = Path(__file__).parent.parent / "ERRATA.md"


@pytest.fixture(scope="session")
def kb():
    return default_kb()


@pytest.fixture(scope="session")
def frame7(kb):
    return kb.frame


@pytest.fixture()
def rng():
    return random.Random(20260816)


def random_mass(rng: random.Random, frame: Frame, max_focal: int = 16) -> MassFunction:
    """A random sparse mass function with 1..max_focal focal sets."""
    n = len(frame)
    count = rng.randint(1, min(max_focal, (1 << n) - 1))
    codes = rng.sample(range(1, 1 << n), count)
    weights = [rng.uniform(0.05, 1.0) for _ in codes]
    total = sum(weights)
    return MassFunction(
        frame, {FocalSet(c, n): w / total for c, w in zip(codes, weights)}
    )


def make_frame(n: int) -> Frame:
    return Frame([f"h{i}" for i in range(n)])

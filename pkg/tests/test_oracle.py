import pytest

from beliefchain.core import (
    FocalSet,
    FrameMismatchError,
    MassFunction,
    TotalConflictError,
    combine,
)
from beliefchain.oracle import (
    DenseMass,
    oracle_belief,
    oracle_combine,
    oracle_plausibility,
)
from conftest import make_frame, random_mass
from expected import CHAIN_TOL, M3, SIX


@pytest.fixture()
def dense_m3(frame7):
    fever = MassFunction.simple_support(frame7, frame7.subset(SIX), 0.65)
    urine = MassFunction.simple_support(frame7, frame7.singleton("B"), 0.65)
    a = DenseMass.from_mass_function(fever)
    b = DenseMass.from_mass_function(urine)
    return oracle_combine(a, b)[0]


class TestDenseMass:
    def test_invariants(self):
        with pytest.raises(ValueError):
            DenseMass(1, (0.1, 0.9))  # mass on the empty set
        with pytest.raises(ValueError):
            DenseMass(1, (0.0, 0.5))  # bad total
        with pytest.raises(ValueError):
            DenseMass(1, (0.0, -0.5, 1.5, 0.0))  # wrong length for n=1
        with pytest.raises(ValueError):
            DenseMass(2, (0.0, -0.5, 1.5, 0.0))  # negative mass
        with pytest.raises(ValueError):
            DenseMass(9, tuple([0.0] * 512))  # beyond the oracle cap

    def test_from_mass_function(self, frame7):
        fever = MassFunction.simple_support(frame7, frame7.subset(SIX), 0.65)
        dense = DenseMass.from_mass_function(fever)
        assert dense.frame_size == 7
        assert dense.values[0b0111111] == 0.65
        assert dense.values[0b1111111] == pytest.approx(0.35, abs=1e-15)
        assert sum(1 for v in dense.values if v) == 2


class TestOracleCombine:
    def test_table2_pair(self, dense_m3, frame7):
        for labels, value in M3.items():
            assert dense_m3.values[frame7.subset(labels).bits] == pytest.approx(
                value, abs=CHAIN_TOL
            )

    def test_vacuous_identity(self, frame7):
        fever = MassFunction.simple_support(frame7, frame7.subset(SIX), 0.65)
        dense = DenseMass.from_mass_function(fever)
        vac = DenseMass.from_mass_function(MassFunction.vacuous(frame7))
        result, conflict = oracle_combine(dense, vac)
        assert conflict == 0.0
        assert result.values == pytest.approx(dense.values, abs=1e-15)

    def test_total_conflict(self):
        a = DenseMass(2, (0.0, 1.0, 0.0, 0.0))
        b = DenseMass(2, (0.0, 0.0, 1.0, 0.0))
        with pytest.raises(TotalConflictError):
            oracle_combine(a, b)

    def test_size_mismatch(self):
        a = DenseMass(1, (0.0, 1.0))
        b = DenseMass(2, (0.0, 0.0, 0.0, 1.0))
        with pytest.raises(FrameMismatchError):
            oracle_combine(a, b)

    def test_matches_sparse_combine_on_random_pairs(self, rng):
        for _ in range(50):
            frame = make_frame(rng.randint(1, 6))
            m1 = random_mass(rng, frame)
            m2 = random_mass(rng, frame)
            try:
                outcome = combine(m1, m2)
            except TotalConflictError:
                with pytest.raises(TotalConflictError):
                    oracle_combine(
                        DenseMass.from_mass_function(m1),
                        DenseMass.from_mass_function(m2),
                    )
                continue
            dense, conflict = oracle_combine(
                DenseMass.from_mass_function(m1), DenseMass.from_mass_function(m2)
            )
            assert conflict == pytest.approx(outcome.conflict, abs=1e-12)
            n = len(frame)
            for code in range(1, 1 << n):
                assert dense.values[code] == pytest.approx(
                    outcome.result[FocalSet(code, n)], abs=1e-12
                )


class TestOracleBeliefPlausibility:
    def test_m3_values(self, dense_m3, frame7):
        b_code = frame7.singleton("B").bits
        assert oracle_belief(dense_m3, b_code) == pytest.approx(0.65, abs=CHAIN_TOL)
        assert oracle_plausibility(dense_m3, b_code) == pytest.approx(1.0, abs=CHAIN_TOL)
        l_code = frame7.singleton("L").bits
        assert oracle_plausibility(dense_m3, l_code) == pytest.approx(0.1225, abs=CHAIN_TOL)

    def test_boundaries(self, dense_m3):
        assert oracle_belief(dense_m3, 0) == 0.0
        assert oracle_plausibility(dense_m3, 0) == 0.0
        full = (1 << 7) - 1
        assert oracle_belief(dense_m3, full) == pytest.approx(1.0, abs=1e-12)
        assert oracle_plausibility(dense_m3, full) == pytest.approx(1.0, abs=1e-12)

    def test_matches_sparse_on_random_masses(self, rng):
        for _ in range(20):
            frame = make_frame(rng.randint(1, 6))
            m = random_mass(rng, frame)
            dense = DenseMass.from_mass_function(m)
            n = len(frame)
            for _ in range(30):
                code = rng.randrange(1 << n)
                fs = FocalSet(code, n)
                assert oracle_belief(dense, code) == pytest.approx(
                    m.belief(fs), abs=1e-12
                )
                assert oracle_plausibility(dense, code) == pytest.approx(
                    m.plausibility(fs), abs=1e-12
                )

import random
from fractions import Fraction
from functools import lru_cache

import pytest

from algebra.banded import BandedLowerTriangular, BandedN, safe_window
from algebra.errors import BadShape, BandViolation, ChainBroken, WindowTooLarge, ZeroAtShift, ZeroEdgeBand
from conftest import random_pipeline
from engine.recurrence import generate_sequence
from factorization.chain import BidiagonalChain, build_chain, u_diagonal_from_pd, verify_product_factorization
from factorization.connection import ConnectionPair, connection_lower, connection_n_matrix, connection_pair
from factorization.verify import chain_order, verify_n_factorization, verify_theorem3, verify_theorem4
from utils.instances import random_hessenberg

N = 15


@lru_cache(maxsize=None)
def pipeline(d, seed):
    return random_pipeline(d, N, seed)


def all_pass(reports):
    return all(report.passed for report in reports)


class TestConnection:
    def test_level_against_itself(self, classical):
        S = classical.base
        assert connection_lower(S, S, 0).dense(5) == BandedLowerTriangular.identity(5).dense()
        with pytest.raises(ZeroEdgeBand):
            connection_lower(S, S, 1)

    def test_classical_factors(self, classical):
        S0, S1 = classical.sequences
        L = connection_lower(S1, S0, 1)
        U = connection_n_matrix(S0, S1, 1, 1)
        assert all(L.gamma(n, n - 1) == Fraction(-1, 2) for n in range(1, L.size))
        assert U.diagonal() == [Fraction(-1, 2)] * U.size
        assert U.size == S1.max_degree

    def test_unrelated_sequences_break_the_band(self):
        rng = random.Random(9)
        S = generate_sequence(random_hessenberg(2, 8, rng), 8)
        T = generate_sequence(random_hessenberg(2, 8, rng), 8)
        with pytest.raises(BandViolation):
            connection_lower(T, S, 1)

    @pytest.mark.parametrize("d", [2, 3])
    def test_band_structure_for_every_pair(self, d):
        levels = pipeline(d, seed=d).sequences
        a = pipeline(d, seed=d).config.a
        for r in range(d):
            for q in range(1, d - r + 1):
                L = connection_lower(levels[r + q], levels[r], q)
                N_rq = connection_n_matrix(levels[r], levels[r + q], a, q)
                assert L.lower == q
                assert N_rq.lower == d - q
                for n in range(d - q, N_rq.size):
                    assert N_rq.entry(n, n - d + q) != 0

    def test_pair_checks_its_factors(self, classical):
        S0, S1 = classical.sequences
        pair = connection_pair(S0, S1, 0, 1, 1)
        with pytest.raises(BadShape):
            ConnectionPair(0, 2, pair.L, pair.N)
        assert pair.to_dict()["L"]["kind"] == "lower"


class TestTheorem4:
    def test_classical_swap(self, classical):
        J0, J1 = classical.J_levels
        S0, S1 = classical.sequences
        pair = connection_pair(S0, S1, 0, 1, 1)
        window = safe_window(J0.size, 1)
        assert window == 10
        reports = verify_theorem4(J0, J1, pair, 1, window)
        assert all_pass(reports)
        assert [r.to_dict()["pass"] for r in reports] == [True, True]

    def test_perturbed_factor_is_flagged(self, classical):
        J0, J1 = classical.J_levels
        S0, S1 = classical.sequences
        pair = connection_pair(S0, S1, 0, 1, 1)
        bands = [list(row) for row in pair.L.bands]
        bands[3][0] += 1
        tampered = ConnectionPair(0, 1, BandedLowerTriangular(1, bands), pair.N)
        reports = verify_theorem4(J0, J1, tampered, 1, 10)
        assert not all_pass(reports)
        mismatch = reports[0].mismatches[0]
        assert mismatch.to_dict()["lhs"] != mismatch.to_dict()["rhs"]

    def test_window_limit(self, classical):
        J0, J1 = classical.J_levels
        S0, S1 = classical.sequences
        with pytest.raises(WindowTooLarge):
            verify_theorem4(J0, J1, connection_pair(S0, S1, 0, 1, 1), 1, 11)

    @pytest.mark.parametrize("d", [2, 3])
    def test_pairs(self, d):
        p = pipeline(d, seed=d)
        levels, J_levels, a = p.sequences, p.J_levels, p.config.a
        window = safe_window(N + 1, d)
        for r, q in {(0, 1), (0, d), (1, d - 1)}:
            pair = connection_pair(levels[r], levels[r + q], r, q, a)
            assert all_pass(verify_theorem4(J_levels[r], J_levels[r + q], pair, a, window))


class TestChain:
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_build(self, d):
        p = pipeline(d, seed=10 + d)
        chain = build_chain(p.sequences, p.config.a)
        assert chain.d == d
        assert all(L.q == 1 for L in chain.L_factors)
        assert all(value != 0 for value in chain.U.diagonal())

    def test_product_factorization(self):
        p = pipeline(2, seed=12)
        chain = build_chain(p.sequences, p.config.a)
        reports = verify_product_factorization(p.sequences, chain.L_factors, safe_window(N + 1, 2))
        assert len(reports) == 1 and reports[0].passed

    def test_product_factorization_vacuous_for_one_functional(self, classical):
        chain = build_chain(classical.sequences, 1)
        assert verify_product_factorization(classical.sequences, chain.L_factors, 5) == []

    def test_irregular_level(self):
        p = pipeline(2, seed=12)
        levels = list(p.sequences)
        levels[1] = None
        with pytest.raises(ChainBroken) as info:
            build_chain(levels, p.config.a)
        assert info.value.m == 1

    def test_json(self):
        p = pipeline(2, seed=12)
        chain = build_chain(p.sequences, p.config.a)
        assert BidiagonalChain.from_dict(chain.to_dict()) == chain

    def test_rejects_wide_factor(self, classical):
        chain = build_chain(classical.sequences, 1)
        with pytest.raises(BadShape):
            BidiagonalChain(1, (BandedLowerTriangular.identity(4),), chain.U)

    def test_cyclic_order(self):
        p = pipeline(3, seed=13)
        chain = build_chain(p.sequences, p.config.a)
        assert chain_order(chain, 3) == [chain.factor(3), chain.factor(2), chain.factor(1), chain.U]
        assert chain_order(chain, 1) == [chain.factor(1), chain.U, chain.factor(3), chain.factor(2)]


class TestUDiagonal:
    def test_classical_values(self, classical):
        values = u_diagonal_from_pd(classical.sequences[1], 1)
        assert values == [Fraction(-1, 2)] * classical.sequences[1].max_degree

    @pytest.mark.parametrize("d", [2, 3])
    def test_matches_chain(self, d):
        p = pipeline(d, seed=10 + d)
        chain = build_chain(p.sequences, p.config.a)
        values = u_diagonal_from_pd(p.sequences[d], p.config.a, chain.U)
        assert values[0] == -p.sequences[d][1](p.config.a)
        assert values == chain.U.diagonal()

    def test_zero_at_shift(self, classical):
        with pytest.raises(ZeroAtShift) as info:
            u_diagonal_from_pd(classical.base, Fraction(1, 2))
        assert info.value.n == 2

    def test_disagreement(self, classical):
        U = BandedN(1, 1, [(1,)] * 10)
        with pytest.raises(ChainBroken):
            u_diagonal_from_pd(classical.sequences[1], 1, U)


class TestTheorem3:
    @pytest.mark.parametrize("seed", range(3))
    def test_two_functionals(self, seed):
        p = pipeline(2, seed=20 + seed)
        chain = build_chain(p.sequences, p.config.a)
        for window in (12, safe_window(N + 1, 2)):
            reports = verify_theorem3(p.J_levels, chain, p.config.a, window)
            assert len(reports) == 2
            assert all_pass(reports)

    def test_three_functionals(self):
        p = pipeline(3, seed=30)
        chain = build_chain(p.sequences, p.config.a)
        assert all_pass(verify_theorem3(p.J_levels, chain, p.config.a, safe_window(N + 1, 3)))
        assert all_pass(verify_n_factorization(p.sequences, chain, safe_window(N + 1, 3)))

    def test_one_functional_is_theorem4(self, classical):
        chain = build_chain(classical.sequences, 1)
        J0, J1 = classical.J_levels
        (report,) = verify_theorem3(classical.J_levels, chain, 1, 10)
        pair = connection_pair(classical.base, classical.sequences[1], 0, 1, 1)
        swapped = verify_theorem4(J0, J1, pair, 1, 10)[1]
        assert report.passed and swapped.passed

    def test_tampered_chain_fails(self):
        p = pipeline(2, seed=20)
        chain = build_chain(p.sequences, p.config.a)
        bands = [list(row) for row in chain.factor(2).bands]
        bands[4][0] *= 2
        tampered = BidiagonalChain(chain.a, (chain.factor(1), BandedLowerTriangular(1, bands)), chain.U)
        reports = verify_theorem3(p.J_levels, tampered, p.config.a, safe_window(N + 1, 2))
        assert not all_pass(reports)

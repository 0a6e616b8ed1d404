import random
from fractions import Fraction

import pytest

from algebra.errors import BadShape, DegeneracyFailure, HorizonExceeded, RegularityFailure, ZeroLowBand
from algebra.polynomial import Polynomial
from conftest import chebyshev_like, cubic_example
from engine.duality import (
    condition_index,
    dual_functional_vector,
    largest_solvable_degree,
    moment_budget,
    sequence_from_functionals,
)
from engine.orthogonality import verify_orthogonality
from engine.recurrence import generate_sequence, recurrence_from_sequence
from engine.sequence import FROM_MOMENTS, DOPSequence
from functionals.moments import FunctionalVector, MomentFunctional, pair, recombine_vector
from utils.instances import random_hessenberg, random_unitriangular


def monomials(d, N):
    return DOPSequence(d, tuple(Polynomial.monomial(n) for n in range(N + 1)))


class TestSequence:
    def test_rejects_non_monic(self):
        with pytest.raises(BadShape):
            DOPSequence(1, (Polynomial.constant(1), Polynomial((0, 2))))

    def test_json(self):
        S = generate_sequence(chebyshev_like(3), 2)
        data = S.to_dict()
        assert data["polynomials"][2] == ["-1/4", "0", "1"]
        assert DOPSequence.from_dict(data) == S


class TestRecurrence:
    def test_chebyshev_like(self):
        S = generate_sequence(chebyshev_like(3), 2)
        assert S[2] == Polynomial(("-1/4", 0, 1))

    def test_cubic_example(self):
        S = generate_sequence(cubic_example(4), 4)
        assert S[3] == Polynomial((-1, 0, 0, 1))
        assert S[4] == Polynomial((0, -2, 0, 0, 1))

    def test_section_too_short(self):
        with pytest.raises(BadShape):
            generate_sequence(cubic_example(3), 4)

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("seed", range(3))
    def test_round_trip(self, d, seed):
        J = random_hessenberg(d, 10, random.Random(seed))
        assert recurrence_from_sequence(generate_sequence(J, 10)) == J

    def test_recovers_cubic_example(self):
        J = recurrence_from_sequence(generate_sequence(cubic_example(8), 8))
        assert J == cubic_example(8)

    def test_monomials_have_no_low_band(self):
        with pytest.raises(ZeroLowBand):
            recurrence_from_sequence(monomials(1, 4))


class TestDuality:
    def test_condition_order(self):
        assert [condition_index(k, 2) for k in range(1, 6)] == [(0, 1), (0, 2), (1, 1), (1, 2), (2, 1)]

    def test_budget(self):
        assert moment_budget(15, 2) == 22
        assert moment_budget(4, 1) == 8

    def test_budget_is_exact_when_d_does_not_divide_n(self):
        S = generate_sequence(random_hessenberg(2, 4, random.Random(6)), 4)
        V = dual_functional_vector(S, 4)
        assert moment_budget(3, 2) == 4
        assert sequence_from_functionals(V, 3).same_polynomials(S.truncate(3))
        with pytest.raises(HorizonExceeded):
            sequence_from_functionals(V.truncate(3), 3)

    def test_chebyshev_like_moments(self):
        V = dual_functional_vector(generate_sequence(chebyshev_like(5), 4), 4)
        assert V[1].moments == (1, 0, Fraction(1, 4), 0, Fraction(1, 8))

    def test_cubic_example_moments(self):
        V = dual_functional_vector(generate_sequence(cubic_example(4), 3), 3)
        assert V[1].moments == (1, 0, 0, 1)

    def test_dual_equations(self):
        S = generate_sequence(random_hessenberg(3, 9, random.Random(5)), 9)
        V = dual_functional_vector(S, 9)
        for j in range(1, 4):
            for n in range(10):
                assert pair(V[j], S[n]) == (1 if n == j - 1 else 0)

    def test_horizon_beyond_sequence(self):
        with pytest.raises(HorizonExceeded):
            dual_functional_vector(generate_sequence(chebyshev_like(3), 2), 3)

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("seed", range(7))
    def test_oracle_reproduces_recurrence(self, d, seed):
        N = 15
        J = random_hessenberg(d, moment_budget(N, d), random.Random(100 * d + seed))
        top = moment_budget(N, d)
        S = generate_sequence(J, top)
        V = dual_functional_vector(S, top)
        oracle = sequence_from_functionals(V, N)
        assert oracle.source == FROM_MOMENTS
        assert oracle.same_polynomials(S.truncate(N))

    def test_oracle_needs_moments(self):
        V = FunctionalVector((MomentFunctional((1, 0, 1)),))
        with pytest.raises(HorizonExceeded):
            sequence_from_functionals(V, 2)

    def test_singular_hankel(self):
        V = FunctionalVector((MomentFunctional((1,) * 12),))
        with pytest.raises(RegularityFailure) as info:
            sequence_from_functionals(V, 5)
        assert info.value.n == 2
        assert not isinstance(info.value, DegeneracyFailure)

    def test_degenerate_pairing(self):
        # P_1 = x is solvable but <u_2, P_1> = 0
        V = FunctionalVector((MomentFunctional((1, 0, 0)), MomentFunctional((1, 0, 0))))
        with pytest.raises(DegeneracyFailure) as info:
            sequence_from_functionals(V, 1)
        assert (info.value.n, info.value.j, info.value.m) == (1, 2, 0)

    def test_degree_zero(self):
        V = FunctionalVector((MomentFunctional((3,)),))
        assert sequence_from_functionals(V, 0)[0] == Polynomial.constant(1)

    def test_largest_solvable_degree(self):
        V = FunctionalVector((MomentFunctional((1,) * 8), MomentFunctional((1,) * 8)))
        assert largest_solvable_degree(V) == 5

    @pytest.mark.parametrize("d", [2, 3])
    @pytest.mark.parametrize("seed", range(3))
    def test_recombination_invariance(self, d, seed):
        rng = random.Random(seed)
        N = 10
        top = moment_budget(N, d)
        S = generate_sequence(random_hessenberg(d, top, rng), top)
        V = dual_functional_vector(S, top)
        W = recombine_vector(V, random_unitriangular(d, rng))
        assert sequence_from_functionals(W, N).same_polynomials(sequence_from_functionals(V, N))


class TestOrthogonality:
    def test_dual_pair_passes(self):
        S = generate_sequence(random_hessenberg(2, 12, random.Random(2)), 12)
        report = verify_orthogonality(dual_functional_vector(S, 12), S)
        assert report.passed
        assert report.checks

    def test_perturbed_moment_fails(self):
        S = generate_sequence(random_hessenberg(2, 8, random.Random(3)), 8)
        V = dual_functional_vector(S, 8)
        moments = list(V[1].moments)
        moments[3] += 1
        W = FunctionalVector((MomentFunctional(tuple(moments)), V[2]))
        report = verify_orthogonality(W, S)
        assert any(c.kind == "zero" for c in report.failures)

    def test_monomials_fail_first_condition(self):
        V = FunctionalVector((MomentFunctional((1, 1, 1)),))
        report = verify_orthogonality(V, monomials(1, 2))
        failed = report.failures[0]
        assert (failed.j, failed.m, failed.n) == (1, 0, 1)
        assert report.to_list()[0] == {"j": 1, "m": 0, "n": 0, "kind": "nonzero", "pass": True, "value": "1"}

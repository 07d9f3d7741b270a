from math import comb

import pytest

from apolar.algebra.division import divide
from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.monomial import count_monomials, monomials_of_degree
from apolar.algebra.order import DIAGONAL_LEX
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import CeilingExceededError, RouteUnavailableError, UsageError, ZeroDivisorError
from apolar.groebner.buchberger import (
    buchberger_check,
    buchberger_complete,
    interreduce,
    is_minimal,
    is_reduced,
    ordered_pairs,
    s_polynomial,
    spot_check_members,
)
from apolar.groebner.monomial_ideal import MonomialIdeal, initial_ideal, standard_monomial_count
from apolar.groebner.permanental import items_in_unacceptable_ideal, permanental_basis, permanental_basis_items
from apolar.groebner.verify import verify_degree2_generation_via_groebner
from apolar.invariants.builder import build_invariant, degree2_candidates
from apolar.invariants.expansion import expand_permutations, unacceptable_monomials

CASES = 100


def d(grid, text):
    return Polynomial.from_text(text, Ring.S, grid)


def overlapping_pair(grid):
    """A permanent and a square sharing d_11 in their leading monomials."""
    return [d(grid, "d_{1,1}*d_{2,2} + d_{1,2}*d_{2,1}"), d(grid, "d_{1,1}^2")]


class TestSPolynomial:
    def test_self_pair_vanishes(self):
        grid = VariableGrid.generic(2)
        perm = d(grid, "d_{1,1}*d_{2,2} + d_{1,2}*d_{2,1}")
        assert s_polynomial(perm, perm).is_zero()

    def test_disjoint_permanents_reduce_to_zero(self):
        """Test coprime leading monomials give a zero remainder"""
        grid = VariableGrid.generic(4)
        f = expand_permutations(grid, Ring.S, (1, 2), (1, 2), signed=False)
        g = expand_permutations(grid, Ring.S, (3, 4), (3, 4), signed=False)
        assert DIAGONAL_LEX.leading_monomial(f).is_coprime(DIAGONAL_LEX.leading_monomial(g))
        assert divide(s_polynomial(f, g), [f, g]).remainder.is_zero()

    def test_overlap_leaves_unacceptable_remainder(self):
        grid = VariableGrid.generic(2)
        gens = overlapping_pair(grid)
        remainder = divide(s_polynomial(*gens), gens).remainder
        assert remainder == d(grid, "d_{1,1}*d_{1,2}*d_{2,1}")
        ideal = MonomialIdeal(unacceptable_monomials(grid), grid.variable_count)
        assert ideal.contains(next(iter(remainder.terms)))

    def test_zero_operand(self):
        grid = VariableGrid.generic(2)
        with pytest.raises(ZeroDivisorError):
            s_polynomial(Polynomial.zero(Ring.S, grid), d(grid, "d_{1,1}"))


class TestBuchbergerCheck:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_determinant_candidates_are_groebner(self, n):
        report = buchberger_check(degree2_candidates("det", n))
        assert report.is_groebner
        assert report.pairs == comb(report.generators, 2)
        assert report.reduced_to_zero + report.skipped == report.pairs

    @pytest.mark.slow
    def test_determinant_candidates_five(self):
        assert buchberger_check(degree2_candidates("det", 5), threads=4).is_groebner

    def test_engineered_failure(self):
        grid = VariableGrid.generic(2)
        report = buchberger_check(overlapping_pair(grid))
        assert not report.is_groebner
        assert len(report.failures) == 1
        failure = report.failures[0]
        assert failure.pair == [0, 1]
        assert d(grid, failure.remainder) == d(grid, "d_{1,1}*d_{1,2}*d_{2,1}")

    def test_skipping_coprime_pairs_changes_nothing(self):
        candidates = degree2_candidates("det", 3)
        skipping = buchberger_check(candidates)
        full = buchberger_check(candidates, skip_coprime=False)
        assert skipping.skipped > 0
        assert full.skipped == 0
        assert skipping.is_groebner and full.is_groebner
        assert full.reduced_to_zero == full.pairs

    def test_threads_agree(self):
        candidates = degree2_candidates("det", 3)
        assert buchberger_check(candidates, threads=4) == buchberger_check(candidates)

    def test_pairs_in_normal_order(self):
        gens = degree2_candidates("det", 2)
        leads = [DIAGONAL_LEX.leading_monomial(g) for g in gens]
        keys = [DIAGONAL_LEX.key(leads[a].lcm(leads[b])) for a, b in ordered_pairs(gens)]
        assert keys == sorted(keys)

    def test_empty_and_mixed_inputs(self):
        with pytest.raises(UsageError):
            buchberger_check([])
        mixed = [d(VariableGrid.generic(2), "d_{1,1}"), d(VariableGrid.generic(3), "d_{1,1}")]
        with pytest.raises(UsageError):
            buchberger_check(mixed)

    def test_ideal_members_reduce_to_zero(self, rng, random_poly):
        """Test elements of (candidates) reduce to zero against the candidates, seeded random combinations"""
        candidates = degree2_candidates("det", 3)
        grid = candidates[0].grid
        for _ in range(CASES):
            member = Polynomial.zero(Ring.S, grid)
            for g in rng.sample(candidates, 3):
                member = member + random_poly(Ring.S, grid, rng.randint(0, 2), terms=2) * g
            assert divide(member, candidates).remainder.is_zero()

    def test_spot_check_members(self):
        candidates = degree2_candidates("det", 3)
        assert spot_check_members(candidates, samples=50, seed=7) == 0
        assert spot_check_members(candidates, samples=0) == 0
        with pytest.raises(UsageError):
            spot_check_members(candidates, samples=-1)
        with pytest.raises(UsageError):
            spot_check_members([])

    def test_spot_check_is_seeded(self):
        """Test the same seed draws the same members, so the failure count repeats"""
        pair = overlapping_pair(VariableGrid.generic(2))
        assert spot_check_members(pair, samples=40, seed=3) == spot_check_members(pair, samples=40, seed=3)


class TestStandardMonomials:
    def test_det2_initial_ideal(self):
        ideal = initial_ideal(degree2_candidates("det", 2))
        assert len(ideal) == 9
        assert [ideal.standard_monomial_count(k) for k in range(4)] == [1, 4, 1, 0]

    @pytest.mark.parametrize("n", [3, 4])
    def test_counts_match_hilbert(self, n):
        """Test standard monomials of the initial ideal count C(n,k)^2"""
        ideal = initial_ideal(degree2_candidates("det", n))
        counts = [standard_monomial_count(ideal, k) for k in range(n + 2)]
        assert counts == [comb(n, k) ** 2 for k in range(n + 1)] + [0]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6])
    def test_counts_match_hilbert_large(self, n):
        ideal = initial_ideal(degree2_candidates("det", n))
        counts = [ideal.standard_monomial_count(k) for k in range(n + 2)]
        assert counts == [comb(n, k) ** 2 for k in range(n + 1)] + [0]

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_standard_and_ideal_pieces_fill_the_degree(self, k, grid3):
        ideal = initial_ideal(degree2_candidates("det", 3))
        inside = sum(1 for mono in monomials_of_degree(9, k) if ideal.contains(mono))
        assert ideal.standard_monomial_count(k) + inside == count_monomials(9, k)

    def test_minimal_generators(self):
        grid = VariableGrid.generic(2)
        squares = [next(iter(d(grid, text).terms)) for text in ("d_{1,1}", "d_{1,1}^2", "d_{2,2}^3")]
        ideal = MonomialIdeal(squares, grid.variable_count)
        assert len(ideal) == 2
        assert ideal.contains(next(iter(d(grid, "d_{1,1}*d_{1,2}").terms)))

    def test_search_ceiling(self):
        ideal = MonomialIdeal([], 9)
        with pytest.raises(CeilingExceededError):
            ideal.standard_monomial_count(3, max_nodes=10)


class TestGroebnerRoute:
    @pytest.mark.parametrize("n", [2, 3])
    def test_determinant_certified(self, n, options):
        report = verify_degree2_generation_via_groebner(
            build_invariant("det", n), degree2_candidates("det", n), options=options
        )
        assert report.passed
        assert report.groebner.is_groebner
        assert [check.expected for check in report.checks] == [comb(n, k) ** 2 for k in range(n + 1)] + [0]

    def test_determinant_four(self, options):
        report = verify_degree2_generation_via_groebner(
            build_invariant("det", 4), degree2_candidates("det", 4), options=options
        )
        assert report.passed
        assert [check.actual for check in report.checks] == [1, 16, 36, 16, 1, 0]

    def test_permanent_certified(self, options):
        """Test the permanent candidates on 3x3 certify through their initial ideal"""
        report = verify_degree2_generation_via_groebner(
            build_invariant("perm", 3), degree2_candidates("perm", 3), options=options
        )
        assert report.passed
        assert [check.actual for check in report.checks] == [1, 9, 9, 1, 0]

    def test_route_unavailable(self, options):
        form = build_invariant("det", 2)
        with pytest.raises(RouteUnavailableError) as error:
            verify_degree2_generation_via_groebner(form, overlapping_pair(form.grid), options=options)
        assert error.value.exit_code == 3


class TestCompletion:
    def test_completes_engineered_pair(self):
        grid = VariableGrid.generic(2)
        basis = buchberger_complete(overlapping_pair(grid))
        assert buchberger_check(basis).is_groebner
        assert is_reduced(basis)
        assert d(grid, "d_{1,1}*d_{1,2}*d_{2,1}") in basis

    def test_interreduce_drops_redundant_generators(self):
        grid = VariableGrid.generic(2)
        gens = [d(grid, "d_{1,1}"), d(grid, "d_{1,1}*d_{2,2}"), d(grid, "2*d_{2,2} + 4*d_{1,1}")]
        result = interreduce(gens)
        assert result == [d(grid, "d_{2,2}"), d(grid, "d_{1,1}")]

    def test_generator_ceiling(self):
        with pytest.raises(CeilingExceededError):
            buchberger_complete(overlapping_pair(VariableGrid.generic(2)), max_generators=2)


class TestPermanentalBasis:
    def test_item_counts(self):
        items = permanental_basis_items(3)
        assert [len(items[item]) for item in range(1, 7)] == [9, 3, 3, 3, 3, 3]

    def test_three_by_three(self):
        basis = permanental_basis(3)
        assert is_minimal(basis)
        assert is_reduced(basis)
        assert buchberger_check(basis).is_groebner

    @pytest.mark.slow
    def test_four_by_four(self):
        assert buchberger_check(permanental_basis(4), threads=4).is_groebner

    def test_monomial_items_are_unacceptable(self):
        assert items_in_unacceptable_ideal(3)
        assert items_in_unacceptable_ideal(2, 4)

import pytest

from apolar.algebra.contraction import annihilates
from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import UsageError
from apolar.invariants.builder import (
    InvariantBuilder,
    build_invariant,
    build_minors,
    candidate_span_dimension,
    degree2_candidates,
    expected_w_dimension,
    span_dimension,
)
from apolar.invariants.expansion import (
    grid_determinant,
    is_acceptable,
    perfect_matchings,
    permutation_sign,
    pfaffian_by_expansion,
    unacceptable_monomials,
)
from apolar.invariants.strategies.pfaffian import PfaffianStrategy
from apolar.store.models import InvariantKind


def r(grid, text):
    return Polynomial.from_text(text, Ring.R, grid)


class TestBuildInvariant:
    def test_determinant_2x2(self):
        """Test det of a generic 2x2 grid"""
        det = build_invariant("det", 2)
        assert det == r(VariableGrid.generic(2), "a_{1,1}*a_{2,2} - a_{1,2}*a_{2,1}")

    def test_permanent_2x2(self):
        perm = build_invariant(InvariantKind.PERMANENT, 2)
        assert perm == r(VariableGrid.generic(2), "a_{1,1}*a_{2,2} + a_{1,2}*a_{2,1}")

    def test_pfaffian_4x4(self):
        """Test Pf of a skew-symmetric 4x4 grid"""
        pf = build_invariant("pf", 2)
        assert pf == r(VariableGrid.skew(4), "x_{1,2}*x_{3,4} - x_{1,3}*x_{2,4} + x_{1,4}*x_{2,3}")

    def test_hafnian_4x4(self):
        hf = build_invariant("hf", 2)
        grid = VariableGrid.zero_diagonal_symmetric(4)
        assert hf == r(grid, "x_{1,2}*x_{3,4} + x_{1,3}*x_{2,4} + x_{1,4}*x_{2,3}")

    def test_term_counts(self):
        assert len(build_invariant("det", 3)) == 6
        assert len(build_invariant("pf", 3)) == 15
        assert len(build_invariant("hf", 3)) == 15

    def test_operator_side(self):
        det = build_invariant("det", 2, Ring.S)
        assert det.ring == Ring.S
        assert det.to_text().startswith("d_")

    def test_unknown_kind(self):
        with pytest.raises(UsageError):
            build_invariant("trace", 2)

    def test_builder_without_strategy(self):
        with pytest.raises(UsageError):
            InvariantBuilder().invariant(2)

    def test_builder_strategy_swap(self):
        builder = InvariantBuilder("det")
        builder.set_strategy(PfaffianStrategy())
        assert builder.invariant(2) == build_invariant("pf", 2)


class TestExpansion:
    def test_permutation_sign(self):
        assert permutation_sign([0, 1, 2]) == 1
        assert permutation_sign([1, 0, 2]) == -1
        assert permutation_sign([1, 2, 0]) == 1

    def test_matching_count(self):
        """Test (2n-1)!! perfect matchings"""
        assert len(list(perfect_matchings([1, 2, 3, 4]))) == 3
        assert len(list(perfect_matchings(list(range(1, 7))))) == 15

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pfaffian_recursion(self, n):
        """Test the first-row expansion against the matching sum"""
        grid = VariableGrid.skew(2 * n)
        assert pfaffian_by_expansion(grid, Ring.R, list(range(1, 2 * n + 1))) == build_invariant("pf", n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pfaffian_squares_to_determinant(self, n):
        pf = build_invariant("pf", n)
        assert pf * pf == grid_determinant(VariableGrid.skew(2 * n))

    def test_unacceptable_monomials_generic(self, grid3):
        """Test squares, same-row and same-column pairs of a 3x3 grid"""
        monomials = unacceptable_monomials(grid3)
        assert len(monomials) == 9 + 9 + 9
        assert len(set(monomials)) == len(monomials)
        assert not any(is_acceptable(grid3, m) for m in monomials)

    def test_acceptable_diagonal(self, grid3):
        diagonal = next(iter(r(grid3, "a_{1,1}*a_{2,2}*a_{3,3}").terms))
        assert is_acceptable(grid3, diagonal)

    def test_unacceptable_monomials_skew(self):
        grid = VariableGrid.skew(4)
        assert len(unacceptable_monomials(grid)) == 6 + 12


class TestMinors:
    def test_family_sizes(self):
        assert len(build_minors("det-minors", 3, 2)) == 9
        assert len(build_minors("pf-minors", 3, 4)) == 15
        assert len(build_minors("pf-minors", 3, 6)) == 1
        assert len(build_minors("det-minors", 2, 2, cols=3)) == 3

    def test_labels(self):
        family = build_minors("perm-minors", 3, 2)
        assert family.labels[0] == ((1, 2), (1, 2))
        assert len(family.labels) == len(family)

    def test_top_pfaffian_minor_is_the_pfaffian(self):
        assert build_minors("pf-minors", 2, 4).members == [build_invariant("pf", 2)]

    def test_minors_are_independent(self):
        assert span_dimension(list(build_minors("det-minors", 3, 2))) == 9
        assert span_dimension(list(build_minors("hf-minors", 3, 4))) == 15

    def test_size_out_of_range(self):
        with pytest.raises(UsageError):
            build_minors("det-minors", 2, 3)
        with pytest.raises(UsageError):
            build_minors("pf-minors", 3, 3)
        with pytest.raises(UsageError):
            build_minors("trace-minors", 3, 2)


class TestCandidates:
    @pytest.mark.parametrize("kind,n,count", [
        ("det", 2, 9), ("det", 3, 36), ("perm", 3, 36), ("pf", 2, 20), ("pf", 3, 105), ("hf", 3, 105),
    ])
    def test_candidate_counts(self, kind, n, count):
        """Test every candidate annihilates the form and the candidates are independent"""
        candidates = degree2_candidates(kind, n)
        form = build_invariant(kind, n)
        assert len(candidates) == count
        assert all(annihilates(g, form) for g in candidates)
        assert candidate_span_dimension(kind, n) == count

    def test_w_dimension_formula(self):
        assert expected_w_dimension(2) == 20
        assert expected_w_dimension(3) == 105
        assert candidate_span_dimension("pf", 4) == expected_w_dimension(4)

    def test_span_mod_p(self, mod_p_options):
        assert candidate_span_dimension("det", 3, prime=mod_p_options.prime) == 36

    def test_candidates_need_n_at_least_two(self):
        with pytest.raises(UsageError):
            degree2_candidates("det", 1)
        with pytest.raises(UsageError):
            degree2_candidates("pf", 1)

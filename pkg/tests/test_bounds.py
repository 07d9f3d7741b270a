import pytest

from apolar.apolarity.certify import certify_generating_degree
from apolar.bounds.ranks import (
    asymptotic_estimates,
    dehomogenized_diff_dimension,
    det_rank_upper_bound,
    det_singular_locus_dimension,
    general_lt_lower_bound,
    lt_lower_bound_det,
    matching_rank_upper_bound,
    monomial_ranks,
    pfaffian_cactus_bounds,
    rs_lower_bound,
)
from apolar.bounds.table import (
    assemble_table,
    bounds_report,
    compare_golden,
    load_golden,
    parse_range,
    render_table,
    table_row,
)
from apolar.core.errors import MissingSingularLocusError, UncertifiedDegreeError, UsageError
from apolar.invariants.builder import build_invariant
from apolar.store.models import GeneratorReport, InvariantKind, OutputFormat, TableRow

GOLDEN = {
    2: (3, 4, 4),
    3: (10, 14, 9),
    4: (35, 43, 36),
    5: (126, 116, 100),
    6: (462, 420, 400),
}


class TestClosedForms:
    def test_rs_lower_bound(self):
        assert rs_lower_bound(20, 2) == 10
        assert rs_lower_bound(35, 1) == 35
        assert rs_lower_bound(5, 2) == 3

    def test_rs_lower_bound_needs_certificate_when_strict(self):
        with pytest.raises(UncertifiedDegreeError):
            rs_lower_bound(20, 2, strict=True)
        certificate = GeneratorReport(mu={1: 0, 2: 9, 3: 0}, k_max=3)
        assert rs_lower_bound(6, 2, certificate, strict=True) == 3

    def test_rs_lower_bound_rejects_wrong_degree(self):
        certificate = GeneratorReport(mu={1: 0, 2: 9, 3: 1}, k_max=3)
        with pytest.raises(UncertifiedDegreeError):
            rs_lower_bound(6, 2, certificate)
        with pytest.raises(UsageError):
            rs_lower_bound(6, 0)

    @pytest.mark.parametrize("n", sorted(GOLDEN))
    def test_lt_lower_bound_det(self, n):
        assert lt_lower_bound_det(n) == GOLDEN[n][1]

    def test_lt_lower_bound_small_n(self):
        with pytest.raises(UsageError):
            lt_lower_bound_det(1)

    def test_singular_locus_dimension(self):
        assert det_singular_locus_dimension(4) == 6
        assert det_singular_locus_dimension(2) == -1

    def test_monomial_ranks(self):
        """Test rank prod(b_i + 1) without the smallest exponent, cactus rank without the largest"""
        assert monomial_ranks([1, 1, 1]) == (4, 4)
        assert monomial_ranks([1, 2]) == (3, 2)
        assert monomial_ranks([2, 3, 3]) == (16, 12)

    def test_monomial_ranks_input(self):
        with pytest.raises(UsageError):
            monomial_ranks([2, 1])
        with pytest.raises(UsageError):
            monomial_ranks([0, 1])
        with pytest.raises(UsageError):
            monomial_ranks([])

    def test_rank_upper_bounds(self):
        assert det_rank_upper_bound(3) == 24
        assert det_rank_upper_bound(4) == 192
        assert matching_rank_upper_bound(2) == 6
        assert matching_rank_upper_bound(3) == 60

    def test_pfaffian_cactus_bounds(self):
        assert pfaffian_cactus_bounds(2) == (4, 8)
        assert pfaffian_cactus_bounds(3) == (16, 32)

    def test_asymptotic_estimates(self):
        estimates = asymptotic_estimates(4)
        assert estimates.rs_lower_exact == 35
        assert estimates.l_diff_exact == 36
        assert estimates.rs_lower_asymptotic == pytest.approx(256 / (2 * (4 * 3.141592653589793) ** 0.5))
        assert estimates.cactus_upper_asymptotic == pytest.approx(2 * estimates.rs_lower_asymptotic)


class TestGeneralRankBound:
    @pytest.mark.parametrize("n", [4, 5])
    def test_middle_catalecticant(self, n, options):
        form = build_invariant("det", n)
        bound = general_lt_lower_bound(form, 2, det_singular_locus_dimension(n), options)
        assert bound == GOLDEN[n][1]

    def test_empty_singular_locus(self, options):
        assert general_lt_lower_bound(build_invariant("det", 2), 1, -1, options) == 4

    def test_missing_singular_locus(self, options):
        with pytest.raises(MissingSingularLocusError):
            general_lt_lower_bound(build_invariant("det", 3), 1, options=options)

    def test_degree_out_of_range(self, options):
        with pytest.raises(UsageError):
            general_lt_lower_bound(build_invariant("det", 3), 4, 0, options)


class TestDiffDimension:
    def test_dehomogenized_det3(self, options):
        """Test Diff of det(3x3) with a_11 = 1"""
        result = dehomogenized_diff_dimension(build_invariant("det", 3), options=options)
        assert result.total == 18
        assert result.graded == [1, 8, 8, 1]

    def test_structural_zero(self, options):
        with pytest.raises(UsageError):
            dehomogenized_diff_dimension(build_invariant("pf", 2), cell=(1, 1), options=options)


class TestBoundsReport:
    def test_determinant(self, options):
        report = bounds_report("det", 4, options=options)
        assert (report.rs_lower, report.lt_lower, report.l_diff) == GOLDEN[4]
        assert report.length == 70
        assert report.cactus_upper == 70
        assert not report.certified
        assert not report.rs_beats_l_diff

    def test_pfaffian(self, options):
        report = bounds_report(InvariantKind.PFAFFIAN, 3, options=options)
        assert report.rs_lower == 16
        assert report.l_diff == 15
        assert report.cactus_upper == 32
        assert report.lt_lower is None
        assert report.rank_upper == 60
        assert report.rs_beats_l_diff

    def test_strict_without_certificate(self, options):
        with pytest.raises(UncertifiedDegreeError):
            bounds_report("det", 3, strict=True, options=options)

    def test_with_certificate(self, options):
        certificate = GeneratorReport(mu={1: 0, 2: 36, 3: 0, 4: 0}, k_max=4)
        report = bounds_report("det", 3, certificate=certificate, strict=True, options=options)
        assert report.certified
        assert report.notes == []


class TestTable:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_rows(self, n, options):
        row = table_row(n, options=options)
        assert (row.rs_lower, row.lt_lower, row.l_diff) == GOLDEN[n]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6])
    def test_rows_large(self, n, options):
        row = table_row(n, options=options)
        assert (row.rs_lower, row.lt_lower, row.l_diff) == GOLDEN[n]

    def test_certified_rows(self, options):
        rows = assemble_table([2, 3], certify=True, options=options)
        assert [(row.rs_lower, row.lt_lower, row.l_diff) for row in rows] == [GOLDEN[2], GOLDEN[3]]

    @pytest.mark.parametrize("n,beats", [(2, False), (3, True), (4, False)])
    def test_crossover(self, n, beats, options):
        """Test which columns have the cactus bound above the differential length"""
        assert bounds_report("det", n, options=options).rs_beats_l_diff is beats

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6])
    def test_crossover_large(self, n, mod_p_options):
        assert bounds_report("det", n, options=mod_p_options).rs_beats_l_diff

    def test_rows_start_at_two(self, options):
        with pytest.raises(UsageError):
            assemble_table([1], options=options)

    def test_parse_range(self):
        assert parse_range("2..6") == [2, 3, 4, 5, 6]
        assert parse_range("2,4") == [2, 4]
        assert parse_range("3") == [3]
        with pytest.raises(UsageError):
            parse_range("two")

    def test_render_csv(self):
        text = render_table([TableRow(n=2, rs_lower=3, lt_lower=4, l_diff=4)])
        assert text == "n,rs_lower,lt_lower,l_diff\n2,3,4,4"

    def test_render_table(self):
        text = render_table([TableRow(n=2, rs_lower=3, lt_lower=4, l_diff=4)], OutputFormat.TABLE)
        assert text.splitlines()[-1] == "| 2 | 3 | 4 | 4 |"

    def test_golden_file(self, golden_table_path):
        golden = load_golden(golden_table_path)
        assert [row.n for row in golden] == [2, 3, 4, 5, 6]
        assert {row.n: (row.rs_lower, row.lt_lower, row.l_diff) for row in golden} == GOLDEN

    def test_golden_comparison(self, golden_table_path, options):
        golden = load_golden(golden_table_path)
        rows = assemble_table([2, 3], options=options)
        assert compare_golden(rows, golden) == []
        wrong = [TableRow(n=3, rs_lower=11, lt_lower=14, l_diff=9), TableRow(n=9, rs_lower=1, lt_lower=1, l_diff=1)]
        problems = compare_golden(wrong, golden)
        assert len(problems) == 2
        assert problems[1] == "n=9: no golden row"

    def test_missing_golden_file(self, tmp_path):
        with pytest.raises(UsageError):
            load_golden(str(tmp_path / "absent.csv"))


class TestPfaffianSeries:
    @pytest.mark.parametrize("n,rs,beats", [(1, 1, False), (2, 4, False), (3, 16, True), (4, 64, False)])
    def test_rs_lower_and_crossover(self, n, rs, beats, options):
        """Test rs_lower = 4^(n-1) and its comparison with the differential length"""
        report = bounds_report("pf", n, options=options)
        assert report.rs_lower == rs
        assert report.rs_beats_l_diff is beats

    @pytest.mark.slow
    def test_ten_by_ten(self, mod_p_options):
        report = bounds_report("pf", 5, options=mod_p_options)
        assert report.rs_lower == 256
        assert report.l_diff == 210
        assert report.rs_beats_l_diff

    @pytest.mark.slow
    def test_eight_by_eight_certified(self, options):
        certificate = certify_generating_degree("pf", 4, options=options)
        report = bounds_report("pf", 4, certificate=certificate, strict=True, options=options)
        assert report.certified
        assert report.rs_lower == 64

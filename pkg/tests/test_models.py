import pytest
from pydantic import ValidationError

from apolar.store.models import (
    BoundsReport,
    DegreeCheck,
    GeneratorReport,
    GroebnerReport,
    HilbertFunction,
    InvariantKind,
    Mode,
    OutputFormat,
    PairFailure,
    Route,
    RunConfig,
    VerificationReport,
)


class TestModels:
    def test_hilbert_function(self):
        """Test length, differential length and symmetry"""
        h = HilbertFunction(invariant=InvariantKind.DETERMINANT, n=3, values=[1, 9, 9, 1])
        assert h.length == 20
        assert h.l_diff == 9
        assert h.is_symmetric
        assert h.model_dump()["length"] == 20

    def test_generator_report(self):
        report = GeneratorReport(mu={1: 0, 2: 9, 3: 0}, k_max=3)
        assert report.max_degree == 2
        assert GeneratorReport(mu={1: 0}, k_max=1).max_degree == 0

    def test_generator_counts_are_nonnegative(self):
        with pytest.raises(ValidationError):
            GeneratorReport(mu={2: -1}, k_max=2)

    def test_groebner_report_aliases(self):
        report = GroebnerReport(generators=2, pairs=1, skipped=0, reducedToZero=0, minimal=True, reduced=False,
                                failures=[PairFailure(pair=[0, 1], remainder="d_{1,1}")])
        dumped = report.model_dump(by_alias=True)
        assert dumped["reducedToZero"] == 0
        assert dumped["isGroebner"] is False
        assert GroebnerReport(generators=1, pairs=0, skipped=0, reduced_to_zero=0, minimal=True,
                              reduced=True).is_groebner

    def test_verification_report(self):
        checks = [DegreeCheck(degree=1, expected=0, actual=0), DegreeCheck(degree=2, expected=9, actual=9)]
        assert VerificationReport(route=Route.DIRECT, checks=checks).passed
        assert not VerificationReport(route=Route.DIRECT, checks=checks, fill_check=False).passed
        short = checks + [DegreeCheck(degree=3, expected=20, actual=19)]
        assert not VerificationReport(route=Route.DIRECT, checks=short).passed

    def test_bounds_chain(self):
        """Test a lower bound above the cactus upper bound is rejected"""
        with pytest.raises(ValidationError):
            BoundsReport(invariant=InvariantKind.DETERMINANT, n=2, generating_degree=2, length=6, rs_lower=7,
                         l_diff=4, cactus_upper=6)

    def test_run_config_defaults(self):
        config = RunConfig(n=3)
        assert config.invariant == InvariantKind.DETERMINANT
        assert config.mode == Mode.RATIONAL
        assert config.output == OutputFormat.JSON

    def test_run_config_validation(self):
        with pytest.raises(ValidationError):
            RunConfig(n=0)
        with pytest.raises(ValidationError):
            RunConfig(n=3, mode="mod-p", prime=5)
        assert RunConfig(n=3, mode="mod-p", prime=7).prime == 7
        with pytest.raises(ValidationError):
            RunConfig(n=2, invariant="trace")

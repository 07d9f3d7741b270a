from typing import Optional, Union

from apolar.algebra.monomial import count_monomials
from apolar.apolarity.engine import minimal_generator_degrees, mode_of, resolve_options
from apolar.core.errors import VerificationError
from apolar.core.logger import logger
from apolar.core.options import EngineOptions
from apolar.groebner.verify import verify_degree2_generation_via_groebner
from apolar.invariants.builder import build_invariant, degree2_candidates
from apolar.store.models import GeneratorReport, InvariantKind, Route


def certify_generating_degree(kind: Union[InvariantKind, str], n: int, route: Route = Route.DIRECT,
                              options: Optional[EngineOptions] = None,
                              k_max: Optional[int] = None) -> GeneratorReport:
    """Minimal generator counts of Ann(F), by direct kernels or through the Groebner certificate.

    The Groebner route proves Ann(F) = (candidates); all candidates are quadrics, so
    mu_2 = dim Ann(F)_2 = dim S_2 - h_2 and every other mu_k vanishes.
    """
    options = resolve_options(options)
    kind = InvariantKind(kind)
    form = build_invariant(kind, n)
    if route == Route.DIRECT:
        return minimal_generator_degrees(form, k_max, options)

    k_max = form.degree + 1 if k_max is None else k_max
    report = verify_degree2_generation_via_groebner(
        form, degree2_candidates(kind, n), options=options, invariant=kind, n=n
    )
    if not report.passed:
        raise VerificationError(f"standard-monomial counts of {kind.value} n={n} differ from its Hilbert function")
    variables = form.grid.variable_count
    hilbert = {check.degree: check.expected for check in report.checks}
    mu = {k: 0 for k in range(1, k_max + 1)}
    mu[1] = count_monomials(variables, 1) - hilbert[1]
    if k_max >= 2:
        mu[2] = count_monomials(variables, 2) - hilbert[2]
    logger.info(f"Groebner certificate for {kind.value} n={n}: generated in degree 2, mu_2 = {mu.get(2)}")
    return GeneratorReport(mu=mu, k_max=k_max, route=Route.GROEBNER, mode=mode_of(options))

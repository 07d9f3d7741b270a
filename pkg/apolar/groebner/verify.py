from typing import Optional, Sequence

from apolar.algebra.order import DIAGONAL_LEX, TermOrder
from apolar.algebra.polynomial import Polynomial
from apolar.apolarity.engine import (
    catalecticant_rank,
    check_candidates,
    mode_of,
    require_form,
    resolve_options,
)
from apolar.core.errors import RouteUnavailableError
from apolar.core.logger import logger
from apolar.core.options import EngineOptions
from apolar.core.progress import progress
from apolar.groebner.buchberger import buchberger_check
from apolar.groebner.monomial_ideal import initial_ideal
from apolar.store.models import DegreeCheck, InvariantKind, Route, VerificationReport


def verify_degree2_generation_via_groebner(form: Polynomial, candidates: Sequence[Polynomial],
                                           order: TermOrder = DIAGONAL_LEX,
                                           options: Optional[EngineOptions] = None,
                                           k_max: Optional[int] = None,
                                           invariant: Optional[InvariantKind] = None,
                                           n: Optional[int] = None) -> VerificationReport:
    """Certify (candidates) = Ann(F) through a Groebner basis of the candidates.

    With a Groebner basis in hand, the standard monomials of degree k count
    dim S_k / (candidates)_k. Since the candidates annihilate F, equality with h_k in
    every degree up to deg F + 1 (where both vanish) forces the two ideals to agree.
    """
    options = resolve_options(options)
    require_form(form, options)
    check_candidates(form, candidates)
    groebner = buchberger_check(candidates, order, threads=options.threads)
    if not groebner.is_groebner:
        logger.warning(f"{len(groebner.failures)} S-pairs leave a remainder; the Groebner route is unavailable")
        raise RouteUnavailableError(
            f"candidates are not a Groebner basis ({len(groebner.failures)} failing S-pairs)"
        )

    k_max = form.degree + 1 if k_max is None else k_max
    ideal = initial_ideal(candidates, order)
    checks = []
    for k in range(k_max + 1):
        count = ideal.standard_monomial_count(k, max_nodes=options.max_ambient)
        h = catalecticant_rank(form, k, options) if k <= form.degree else 0
        checks.append(DegreeCheck(degree=k, expected=h, actual=count))
        progress.notify("standard monomials", degree=k, count=count, hilbert=h)
    return VerificationReport(
        invariant=invariant, n=n, route=Route.GROEBNER, checks=checks, groebner=groebner, mode=mode_of(options)
    )

"""Buchberger's criterion for proposed bases, plus a small completion routine."""

import random
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from apolar.algebra.division import LeadingTermIndex, divide
from apolar.algebra.monomial import Monomial
from apolar.algebra.order import DIAGONAL_LEX, TermOrder
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import CeilingExceededError, UsageError, ZeroDivisorError
from apolar.core.logger import logger
from apolar.core.progress import progress
from apolar.store.models import GroebnerReport, PairFailure
from apolar.tasks.pool import parallel_map

Pair = Tuple[int, int]


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = DIAGONAL_LEX) -> Polynomial:
    """(L/LT(f)) f - (L/LT(g)) g with L the lcm of the leading monomials; leading terms cancel."""
    if f.is_zero() or g.is_zero():
        raise ZeroDivisorError("S-polynomial of the zero polynomial")
    lmf, lcf = order.leading_term(f)
    lmg, lcg = order.leading_term(g)
    lcm = lmf.lcm(lmg)
    return f.mul_term(lcm.quotient(lmf), 1 / lcf) - g.mul_term(lcm.quotient(lmg), 1 / lcg)


def ordered_pairs(gens: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX) -> List[Pair]:
    """All index pairs, smallest lcm of leading monomials first (normal selection)."""
    leads = [order.leading_monomial(g) for g in gens]

    def key(pair: Pair):
        lcm = leads[pair[0]].lcm(leads[pair[1]])
        return order.key(lcm), pair

    return sorted(combinations(range(len(gens)), 2), key=key)


def is_minimal(gens: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX) -> bool:
    leads = [order.leading_monomial(g) for g in gens]
    return not any(
        a != b and leads[a].divides(leads[b]) for a in range(len(leads)) for b in range(len(leads))
    )


def is_reduced(gens: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX) -> bool:
    """Minimal, monic, and no trailing term divisible by a leading monomial."""
    if not is_minimal(gens, order):
        return False
    index = LeadingTermIndex(gens, order)
    for g, lead, coeff in zip(gens, index.leads, index.lead_coeffs):
        if coeff != 1:
            return False
        if any(index.find(mono) is not None for mono in g.terms if mono != lead):
            return False
    return True


def buchberger_check(gens: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX,
                     skip_coprime: bool = True, threads: int = 1) -> GroebnerReport:
    """Reduce every S-pair against ``gens``; the set is a Groebner basis iff all remainders vanish.

    Pairs whose leading monomials are coprime reduce to zero by Buchberger's first
    criterion and are skipped unless ``skip_coprime`` is off.
    """
    gens = list(gens)
    if not gens:
        raise UsageError("empty generator list")
    for g in gens[1:]:
        if g.ring != gens[0].ring or g.grid != gens[0].grid:
            raise UsageError("generators live in different rings")
    index = LeadingTermIndex(gens, order)
    pairs = ordered_pairs(gens, order)
    work: List[Pair] = []
    skipped = 0
    for a, b in pairs:
        if skip_coprime and index.leads[a].is_coprime(index.leads[b]):
            skipped += 1
        else:
            work.append((a, b))
    logger.info(f"Buchberger check: {len(gens)} generators, {len(pairs)} pairs, {skipped} coprime")

    def reduce_pair(pair: Pair) -> Polynomial:
        return divide(s_polynomial(gens[pair[0]], gens[pair[1]], order), gens, order, index).remainder

    remainders = parallel_map(reduce_pair, work, threads)
    failures = [
        PairFailure(pair=list(pair), remainder=r.to_text()) for pair, r in zip(work, remainders) if not r.is_zero()
    ]
    progress.notify("buchberger", pairs=len(pairs), skipped=skipped, failures=len(failures))
    minimal = is_minimal(gens, order)
    return GroebnerReport(
        generators=len(gens),
        pairs=len(pairs),
        skipped=skipped,
        reduced_to_zero=len(work) - len(failures),
        failures=failures,
        minimal=minimal,
        reduced=minimal and is_reduced(gens, order),
    )


def _monic(poly: Polynomial, order: TermOrder) -> Polynomial:
    return poly.scale(1 / order.leading_term(poly)[1])


def interreduce(gens: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX) -> List[Polynomial]:
    """The reduced basis of a Groebner basis: drop redundant leads, then reduce each tail."""
    minimal: List[Polynomial] = []
    for g in sorted(gens, key=lambda h: order.key(order.leading_monomial(h))):
        lead = order.leading_monomial(g)
        if all(not order.leading_monomial(kept).divides(lead) for kept in minimal):
            minimal.append(g)
    result = []
    for position, g in enumerate(minimal):
        others = minimal[:position] + minimal[position + 1:]
        lead, coeff = order.leading_term(g)
        tail = g - Polynomial.monomial(g.ring, g.grid, lead, coeff)
        remainder = divide(tail, others, order).remainder if others else tail
        result.append(_monic(remainder + Polynomial.monomial(g.ring, g.grid, lead, coeff), order))
    return sorted(result, key=lambda h: order.leading_monomial(h).desc_key)


def buchberger_complete(gens: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX,
                        max_generators: Optional[int] = None) -> List[Polynomial]:
    """Classical Buchberger completion with normal selection; returns the reduced basis."""
    basis = [_monic(g, order) for g in gens if not g.is_zero()]
    if not basis:
        raise UsageError("empty generator list")
    pending = set(combinations(range(len(basis)), 2))
    while pending:
        leads = [order.leading_monomial(g) for g in basis]
        pair = min(pending, key=lambda p: (order.key(leads[p[0]].lcm(leads[p[1]])), p))
        pending.remove(pair)
        a, b = pair
        if leads[a].is_coprime(leads[b]):
            continue
        remainder = divide(s_polynomial(basis[a], basis[b], order), basis, order).remainder
        if remainder.is_zero():
            continue
        basis.append(_monic(remainder, order))
        if max_generators is not None and len(basis) > max_generators:
            raise CeilingExceededError("Groebner completion generators", len(basis), max_generators)
        pending.update((i, len(basis) - 1) for i in range(len(basis) - 1))
    logger.debug(f"Completion finished with {len(basis)} generators before interreduction")
    return interreduce(basis, order)


def spot_check_members(gens: Sequence[Polynomial], samples: int = 100, seed: int = 0,
                       order: TermOrder = DIAGONAL_LEX) -> int:
    """Divide seeded random members of (gens) by ``gens``; returns how many leave a remainder.

    Each member is sum c_i * m_i * g_i over three generators, with m_i a random monomial of
    degree at most 2 and c_i a small nonzero integer. A Groebner basis leaves none.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise UsageError("empty generator list")
    if samples < 0:
        raise UsageError(f"sample count must be nonnegative, got {samples}")
    rng = random.Random(seed)
    grid, ring = gens[0].grid, gens[0].ring
    index = LeadingTermIndex(gens, order)
    failures = 0
    for _ in range(samples):
        member = Polynomial.zero(ring, grid)
        for g in rng.sample(gens, min(3, len(gens))):
            mono = Monomial.from_indices(rng.randrange(grid.variable_count) for _ in range(rng.randint(0, 2)))
            member = member + g.mul_term(mono, rng.choice([-3, -2, -1, 1, 2, 3]))
        if not divide(member, gens, order, index).remainder.is_zero():
            failures += 1
    progress.notify("spot-check", samples=samples, seed=seed, failures=failures)
    return failures

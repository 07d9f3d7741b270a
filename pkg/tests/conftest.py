import os
import random
import sys

import pytest

# Add the project root to the Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.monomial import Monomial
from apolar.algebra.polynomial import Polynomial
from apolar.core.config import settings
from apolar.core.options import EngineOptions

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: larger acceptance sizes; run with pytest -m slow")


@pytest.fixture
def options():
    """Rational arithmetic with the default ceilings"""
    return EngineOptions()


@pytest.fixture
def mod_p_options():
    return EngineOptions(prime=settings.PRIME)


@pytest.fixture
def rng():
    """Seeded generator for the property suites"""
    return random.Random(settings.SEED)


@pytest.fixture
def grid3():
    return VariableGrid.generic(3)


@pytest.fixture
def random_poly(rng):
    """Factory for small random polynomials: random_poly(ring, grid, degree, terms)."""

    def make(ring: Ring, grid: VariableGrid, degree: int, terms: int = 3, homogeneous: bool = True) -> Polynomial:
        result = {}
        for _ in range(terms):
            d = degree if homogeneous else rng.randint(0, degree)
            mono = Monomial.from_indices(rng.randrange(grid.variable_count) for _ in range(d))
            result[mono] = result.get(mono, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
        return Polynomial(ring, grid, result)

    return make


@pytest.fixture
def golden_table_path():
    return os.path.join(GOLDEN_DIR, "determinant_bounds.csv")

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator


class InvariantKind(str, Enum):
    DETERMINANT = "det"
    PERMANENT = "perm"
    PFAFFIAN = "pf"
    HAFNIAN = "hf"


class Mode(str, Enum):
    RATIONAL = "rational"
    MOD_P = "mod-p"


class Route(str, Enum):
    DIRECT = "direct"
    GROEBNER = "groebner"
    BOTH = "both"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"
    TEXT_POLY = "text-poly"


class HilbertFunction(BaseModel):
    invariant: Optional[InvariantKind] = None
    n: Optional[int] = None
    values: List[int]
    mode: Mode = Mode.RATIONAL

    @computed_field
    @property
    def length(self) -> int:
        return sum(self.values)

    @property
    def l_diff(self) -> int:
        return max(self.values) if self.values else 0

    @property
    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]


class GeneratorReport(BaseModel):
    """Minimal generator counts mu_k of Ann(F), k = 1..k_max."""

    mu: Dict[int, int]
    k_max: int
    route: Route = Route.DIRECT
    mode: Mode = Mode.RATIONAL

    @field_validator("mu")
    @classmethod
    def counts_are_nonnegative(cls, mu: Dict[int, int]) -> Dict[int, int]:
        if any(count < 0 for count in mu.values()):
            raise ValueError("minimal generator counts cannot be negative")
        return mu

    @computed_field
    @property
    def max_degree(self) -> int:
        degrees = [k for k, count in self.mu.items() if count > 0]
        return max(degrees) if degrees else 0


class DegreeCheck(BaseModel):
    degree: int
    expected: int
    actual: int

    @computed_field
    @property
    def equal(self) -> bool:
        return self.expected == self.actual


class PairFailure(BaseModel):
    pair: List[int]
    remainder: str


class GroebnerReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    generators: int
    pairs: int
    skipped: int
    reduced_to_zero: int = Field(alias="reducedToZero")
    failures: List[PairFailure] = []
    minimal: bool
    reduced: bool

    @computed_field(alias="isGroebner")
    @property
    def is_groebner(self) -> bool:
        return not self.failures


class VerificationReport(BaseModel):
    invariant: Optional[InvariantKind] = None
    n: Optional[int] = None
    route: Route
    checks: List[DegreeCheck] = []
    fill_check: Optional[bool] = None
    groebner: Optional[GroebnerReport] = None
    mode: Mode = Mode.RATIONAL

    @computed_field
    @property
    def passed(self) -> bool:
        if self.groebner is not None and not self.groebner.is_groebner:
            return False
        return all(check.equal for check in self.checks) and self.fill_check is not False


class BoundsReport(BaseModel):
    invariant: InvariantKind
    n: int
    generating_degree: int
    length: int
    rs_lower: int
    lt_lower: Optional[int] = None
    l_diff: int
    cactus_upper: int
    rank_upper: Optional[int] = None
    certified: bool = True
    notes: List[str] = []

    @model_validator(mode="after")
    def chain_is_consistent(self):
        if self.l_diff > self.cactus_upper or self.rs_lower > self.cactus_upper:
            raise ValueError("lower bounds exceed the cactus upper bound")
        return self

    @property
    def rs_beats_l_diff(self) -> bool:
        return self.rs_lower > self.l_diff


class TableRow(BaseModel):
    n: int
    rs_lower: int
    lt_lower: int
    l_diff: int


class AsymptoticEstimates(BaseModel):
    n: int
    rs_lower_exact: int
    rs_lower_asymptotic: float = Field(description="4^n / (2 sqrt(n pi)), cactus-rank lower bound")
    lt_lower_asymptotic: float = Field(description="2 * 4^n / (n pi), rank lower bound")
    l_diff_exact: int = Field(description="binom(n, n//2)^2, differential length")
    rank_upper_asymptotic: float = Field(description="sqrt(2 pi n) (n/e)^n 2^(n-1), rank upper bound")
    cactus_upper_asymptotic: float = Field(description="4^n / sqrt(n pi), cactus-rank upper bound")


class DiffDimension(BaseModel):
    total: int
    graded: List[int]


class RunConfig(BaseModel):
    invariant: InvariantKind = InvariantKind.DETERMINANT
    n: int = Field(ge=1)
    mode: Mode = Mode.RATIONAL
    prime: int = 2147483647
    max_ambient: int = Field(default=200000, gt=0)
    max_pivots: int = Field(default=50000, gt=0)
    output: OutputFormat = OutputFormat.JSON
    route: Route = Route.DIRECT
    seed: int = 0
    threads: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def prime_exceeds_degree(self):
        if self.mode == Mode.MOD_P and self.prime <= 2 * self.n:
            raise ValueError(f"prime {self.prime} must exceed 2n = {2 * self.n} in mod-p mode")
        return self

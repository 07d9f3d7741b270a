from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from apolar.core.config import settings
from apolar.core.errors import UsageError


class EngineOptions(BaseModel):
    """Arithmetic mode and resource ceilings shared by the rank computations."""

    model_config = ConfigDict(frozen=True)

    prime: Optional[int] = None
    max_ambient: int = Field(default=200000, gt=0)
    max_pivots: int = Field(default=50000, gt=0)
    threads: int = Field(default=1, ge=1)
    dense_threshold: int = Field(default=4096, ge=0)

    @classmethod
    def from_settings(cls) -> "EngineOptions":
        return cls(
            prime=settings.PRIME if settings.MODE == "mod-p" else None,
            max_ambient=settings.CEILING,
            max_pivots=settings.MAX_PIVOTS,
            threads=settings.THREADS,
            dense_threshold=settings.DENSE_THRESHOLD,
        )

    @property
    def mode(self) -> str:
        return "mod-p" if self.prime else "rational"

    def check_prime(self, degree: int):
        if self.prime is not None and self.prime <= 2 * degree:
            raise UsageError(f"prime {self.prime} must exceed 2 * deg F = {2 * degree}")

from dataclasses import dataclass
import secrets
from typing import ClassVar, Mapping, Optional, Tuple

from .exceptions import BoundError, UsageError
from .models.common import Filepath, Natural, Positive, Seed


@dataclass
class Config:
    # Version of the JSON report layout.
    SCHEMA_VERSION: ClassVar[str] = "1"

    COMMANDS: ClassVar[Tuple[str, ...]] = (
        "cauchy",
        "stirling",
        "density",
        "verify",
        "montecarlo",
    )
    FORMATS: ClassVar[Tuple[str, ...]] = ("json", "csv", "markdown")

    # Above this many terms, C(mu+m-1, m-1) * C(n+m-1, m-1), the brute-force
    # double sum of a verification cell is skipped and the skip recorded.
    MAX_DOUBLE_SUM_TERMS: ClassVar[int] = 10 ** 6

    # Largest Stirling table a single run may ask for.
    MAX_TABLE_BOUND: ClassVar[int] = 512

    DEFAULT_SAMPLES: ClassVar[int] = 10 ** 6

    # Significant digits for floating-point Monte Carlo fields.
    FLOAT_DIGITS: ClassVar[int] = 17

    # Default seed when --seed is absent.
    SEED_ENV_VAR: ClassVar[str] = "CAUCHY_CONV_SEED"

    command: str = "verify"
    output_format: str = "markdown"
    # Where to write the report; None means standard output.
    output_path: Optional[Filepath] = None

    m: int = 1
    mu: int = 0
    n: int = 0
    m_max: int = 1
    mu_max: int = 0
    n_max: int = 0
    kind: str = "first"
    at: str = "0"

    samples: int = DEFAULT_SAMPLES
    seed: Optional[int] = None

    parallelism: int = 1
    double_sum_budget: int = MAX_DOUBLE_SUM_TERMS

    # verify only: also compare m-fold Cauchy powers with factorial moments.
    egf: bool = False
    order: Optional[int] = None

    def __post_init__(self) -> None:
        if self.command not in self.COMMANDS:
            raise UsageError(f"unknown command: {self.command}")
        if self.output_format not in self.FORMATS:
            raise UsageError(f"unknown format: {self.output_format}")
        try:
            for name in ("mu", "n", "mu_max", "n_max", "double_sum_budget"):
                Natural(getattr(self, name))
            for name in ("m", "m_max", "parallelism"):
                Positive(getattr(self, name))
            if self.samples < 2:
                raise ValueError(f"samples = {self.samples} < 2")
            if self.seed is not None:
                Seed(self.seed)
            if self.order is not None:
                Natural(self.order)
        except (TypeError, ValueError) as e:
            raise UsageError(str(e)) from e

    def table_bound(self) -> int:
        """The Stirling table bound this run needs."""
        if self.command == "verify":
            bound = self.m_max + self.mu_max + self.n_max
            if self.egf:
                bound = max(bound, self.egf_order())
        elif self.command in ("cauchy", "stirling"):
            bound = self.n_max
        elif self.command == "montecarlo":
            bound = self.m + self.mu + self.n
        else:
            # No table for density; m is capped instead.
            if self.m > self.MAX_TABLE_BOUND:
                raise BoundError(f"m = {self.m} exceeds {self.MAX_TABLE_BOUND}")
            bound = 0

        if bound > self.MAX_TABLE_BOUND:
            raise BoundError(
                f"Stirling table bound {bound} exceeds {self.MAX_TABLE_BOUND}"
            )
        return bound

    def egf_order(self) -> int:
        if self.order is not None:
            return self.order
        return self.mu_max + self.n_max

    def resolve_seed(self, environ: Mapping[str, str]) -> int:
        """--seed, else the environment variable, else fresh OS entropy."""
        if self.seed is not None:
            return self.seed
        value = environ.get(self.SEED_ENV_VAR)
        if value is not None and value.strip():
            try:
                return Seed(value.strip()).value
            except (TypeError, ValueError) as e:
                raise UsageError(f"{self.SEED_ENV_VAR}={value!r}: {e}") from e
        return secrets.randbits(Seed.BITS)

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .common import Json, Rational
from .sequences import EgfSequence


# __eq__ and __repr__ autogenerated by dataclass.
@dataclass(frozen=True)
class IdentityReport:
    """Every independently computed value of the convolution identity for one
    (m, mu, n) cell."""

    m: int
    mu: int
    n: int
    # None when the brute-force double sum was over budget.
    lhs_double_sum: Optional[Rational]
    lhs_single_sum: Rational
    integral_value: Rational
    stirling_sum_value: Rational
    all_equal: bool

    @classmethod
    def of(
        cls,
        m: int,
        mu: int,
        n: int,
        lhs_double_sum: Optional[Rational],
        lhs_single_sum: Rational,
        integral_value: Rational,
        stirling_sum_value: Rational,
    ) -> "IdentityReport":
        values = [lhs_single_sum, integral_value, stirling_sum_value]
        if lhs_double_sum is not None:
            values.append(lhs_double_sum)
        all_equal = all(v == values[0] for v in values)
        return cls(
            m,
            mu,
            n,
            lhs_double_sum,
            lhs_single_sum,
            integral_value,
            stirling_sum_value,
            all_equal,
        )

    @property
    def cell(self) -> Tuple[int, int, int]:
        return self.m, self.mu, self.n

    @property
    def double_sum_skipped(self) -> bool:
        return self.lhs_double_sum is None

    @property
    def mu_zero_case(self) -> bool:
        # Cells without a derivative part.
        return self.mu == 0


@dataclass(frozen=True)
class MonteCarloReport:
    m: int
    mu: int
    n: int
    samples: int
    estimate: float
    standard_error: float
    exact_value: Rational
    z_score: float
    seed: int


@dataclass(frozen=True)
class EgfReport:
    """The m-fold binomial power of the Cauchy sequence next to the factorial
    moments of a sum of m uniforms, both truncated at the same order."""

    m: int
    order: int
    convolution_power: EgfSequence
    factorial_moments: EgfSequence

    @property
    def equal(self) -> bool:
        return self.convolution_power == self.factorial_moments


@dataclass(frozen=True)
class CauchyCheck:
    n: int
    stirling_sum: Rational
    integral: Rational
    reciprocal: Rational

    @property
    def equal(self) -> bool:
        return self.stirling_sum == self.integral == self.reciprocal


Row = Dict[str, Any]


@dataclass
class Document:
    """A rendered-format-neutral report: one command, fixed columns, rows of
    JSON-compatible scalars (exact values already in canonical text)."""

    command: str
    columns: Tuple[str, ...]
    rows: List[Row] = field(default_factory=list)
    summary: Optional[Json] = None

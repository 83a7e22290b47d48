"""Verification of the higher-order Cauchy convolution identity.

For m >= 1 and mu, n >= 0, with p = mu + n, four quantities must coincide:

    1. the double sum over compositions l of mu and k of n of
       (mu; l) (n; k) c_(k_1 + l_1) ... c_(k_m + l_m)
    2. the p-th term of the m-fold binomial power of the Cauchy sequence
    3. the factorial moment E (S_m)_p, integrated against the exact density
    4. sum_k s(p, k) S(m + k, m) / C(m + k, m)

The four paths share nothing but the Stirling table."""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
import logging
import math
import time
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .combinatorics import (
    build_stirling_table,
    cauchy_number,
    cauchy_number_via_integral,
    cauchy_number_via_reciprocal,
    cauchy_sequence,
)
from .config import Config
from .convolution import composition_count, convolve_power, leibniz_split
from .exactnum import binomial
from .exceptions import BoundError, Error, SweepCellError
from .irwinhall import factorial_moment, factorial_moment_sequence
from .models.common import Rational, Seed
from .models.reports import CauchyCheck, EgfReport, IdentityReport, MonteCarloReport
from .models.stirling import StirlingTable

logger = logging.getLogger(__name__)

Cell = Tuple[int, int, int]


def stirling_sum_rhs(p: int, m: int, table: StirlingTable) -> Rational:
    """sum_(k=0..p) s(p, k) S(m + k, m) / C(m + k, m)."""
    if m < 1:
        raise ValueError(f"{m} < 1")
    if p < 0:
        raise ValueError(f"{p} < 0")
    if m + p > table.bound:
        raise BoundError(f"{m} + {p} exceeds Stirling table bound {table.bound}")
    return sum(
        (
            Fraction(table.first(p, k) * table.second(m + k, m), binomial(m + k, m))
            for k in range(p + 1)
        ),
        Fraction(0),
    )


def double_sum_terms(m: int, mu: int, n: int) -> int:
    """Number of (l, k) composition pairs in the brute-force double sum."""
    return composition_count(mu, m) * composition_count(n, m)


def verify_identity(
    m: int,
    mu: int,
    n: int,
    table: StirlingTable,
    budget: int = Config.MAX_DOUBLE_SUM_TERMS,
) -> IdentityReport:
    """Compute every side of the identity for one cell; the double sum is
    skipped (and left as None) when it has more than `budget` terms."""
    if m < 1:
        raise ValueError(f"{m} < 1")
    if mu < 0 or n < 0:
        raise ValueError(f"negative index in ({mu}, {n})")
    p = mu + n
    if m + p > table.bound:
        raise BoundError(
            f"cell ({m}, {mu}, {n}) needs Stirling table bound {m + p} > {table.bound}"
        )

    cauchy = cauchy_sequence(p, table)

    lhs_double_sum: Optional[Rational] = None
    terms = double_sum_terms(m, mu, n)
    if terms <= budget:
        lhs_double_sum = leibniz_split(cauchy, m, mu, n)
    else:
        logger.debug("skipping double sum of %d terms at (%d, %d, %d)", terms, m, mu, n)

    return IdentityReport.of(
        m,
        mu,
        n,
        lhs_double_sum,
        convolve_power(cauchy, m)[p],
        factorial_moment(m, p, table),
        stirling_sum_rhs(p, m, table),
    )


def sweep_cells(m_max: int, mu_max: int, n_max: int) -> List[Cell]:
    """Every cell in (m, mu, n) order, m from 1, mu and n from 0."""
    return [
        (m, mu, n)
        for m in range(1, m_max + 1)
        for mu in range(mu_max + 1)
        for n in range(n_max + 1)
    ]


def _verify_cell(cell: Cell, table: StirlingTable, budget: int) -> IdentityReport:
    m, mu, n = cell
    try:
        return verify_identity(m, mu, n, table, budget)
    except (Error, ValueError) as e:
        raise SweepCellError(m, mu, n, str(e)) from e


def sweep(
    m_max: int,
    mu_max: int,
    n_max: int,
    table: StirlingTable,
    parallelism: int = 1,
    budget: int = Config.MAX_DOUBLE_SUM_TERMS,
) -> List[IdentityReport]:
    """Verify every cell of the box; reports come back in (m, mu, n) order
    whatever the number of workers."""
    cells = sweep_cells(m_max, mu_max, n_max)
    if m_max + mu_max + n_max > table.bound:
        raise BoundError(
            f"sweep ({m_max}, {mu_max}, {n_max}) needs Stirling table bound "
            f"{m_max + mu_max + n_max} > {table.bound}"
        )
    logger.info("verifying %d cells with %d worker(s)", len(cells), parallelism)
    started = time.perf_counter()

    verify_cell = partial(_verify_cell, table=table, budget=budget)
    if parallelism == 1:
        reports = [verify_cell(cell) for cell in cells]
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as executor:
            # map() yields in submission order.
            reports = list(executor.map(verify_cell, cells))

    for report in reports:
        if not report.all_equal:
            logger.warning("identity violated at cell %s: %s", report.cell, report)
    logger.info(
        "verified %d cells in %.3f s", len(reports), time.perf_counter() - started
    )
    return reports


def verify_cauchy(n_max: int, table: StirlingTable) -> List[CauchyCheck]:
    """c_n three ways: Stirling sum, integrated polynomial, inverse series."""
    return [
        CauchyCheck(
            n,
            cauchy_number(n, table),
            cauchy_number_via_integral(n, table),
            cauchy_number_via_reciprocal(n),
        )
        for n in range(n_max + 1)
    ]


def verify_egf_power(m: int, order: int, table: StirlingTable) -> EgfReport:
    """The m-fold power of the Cauchy sequence against E (S_m)_p, p <= order."""
    return EgfReport(
        m,
        order,
        convolve_power(cauchy_sequence(order, table), m),
        factorial_moment_sequence(m, order, table),
    )


def cell_seed(master: int, m: int, mu: int, n: int) -> int:
    """A 64-bit seed for one cell, derived only from the master seed and the
    cell, so every cell has its own stream in any evaluation order."""
    sequence = np.random.SeedSequence([Seed(master).value, m, mu, n])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def _z_score(estimate: float, exact: float, standard_error: float) -> float:
    if standard_error > 0:
        return (estimate - exact) / standard_error
    if estimate == exact:
        return 0.0
    return math.copysign(math.inf, estimate - exact)


def monte_carlo_check(
    m: int,
    mu: int,
    n: int,
    samples: int,
    seed: int,
    table: Optional[StirlingTable] = None,
) -> MonteCarloReport:
    """Estimate E (S_m)_(mu+n) from `samples` draws of a sum of m uniforms.

    Draws come from numpy's PCG64 generator seeded with cell_seed(seed, m, mu,
    n); the same arguments always give a bit-identical report."""
    if m < 1:
        raise ValueError(f"{m} < 1")
    if samples < 2:
        raise ValueError(f"samples = {samples} < 2")
    p = mu + n
    if table is None:
        table = build_stirling_table(p)
    exact = factorial_moment(m, p, table)

    stream = cell_seed(seed, m, mu, n)
    logger.debug("cell (%d, %d, %d) draws from seed %d", m, mu, n, stream)
    rng = np.random.Generator(np.random.PCG64(stream))
    sums = rng.random((samples, m)).sum(axis=1)

    statistic = np.ones(samples)
    for j in range(p):
        statistic *= sums - j

    estimate = float(statistic.mean())
    standard_error = float(statistic.std(ddof=1) / math.sqrt(samples))
    return MonteCarloReport(
        m,
        mu,
        n,
        samples,
        estimate,
        standard_error,
        exact,
        _z_score(estimate, float(exact), standard_error),
        seed,
    )


def monte_carlo_sweep(
    m_max: int,
    p_max: int,
    samples: int,
    seed: int,
    table: Optional[StirlingTable] = None,
) -> List[MonteCarloReport]:
    """One report per (m, 0, p) with m <= m_max and p <= p_max."""
    if table is None:
        table = build_stirling_table(p_max)
    return [
        monte_carlo_check(m, 0, p, samples, seed, table)
        for m in range(1, m_max + 1)
        for p in range(p_max + 1)
    ]


def all_equal(reports: Iterable[IdentityReport]) -> bool:
    return all(report.all_equal for report in reports)

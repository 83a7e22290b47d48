import logging
import os
import sys
import time
from typing import Any, Dict, Optional, Tuple, Type

from .combinatorics import build_stirling_table, cauchy_numbers
from .config import Config
from .exactnum import parse_rational, render_rational
from .exceptions import BoundError, UsageError
from .irwinhall import density_eval, irwin_hall_density
from .models.reports import Document, IdentityReport, MonteCarloReport, Row
from .models.stirling import StirlingTable
from .readers import CSVReaderMixIn, JSONReaderMixIn, ReaderMixIn
from .verify import monte_carlo_check, sweep, verify_egf_power
from .writers import (
    CSVWriterMixIn,
    JSONWriterMixIn,
    MarkdownWriterMixIn,
    WriterMixIn,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IDENTITY_VIOLATION = 1
EXIT_USAGE = 2

VERIFY_COLUMNS = (
    "m",
    "mu",
    "n",
    "lhs_double_sum",
    "lhs_single_sum",
    "integral_value",
    "stirling_sum_value",
    "all_equal",
    "double_sum_skipped",
    "mu_zero_case",
)

MONTECARLO_COLUMNS = (
    "m",
    "mu",
    "n",
    "samples",
    "seed",
    "estimate",
    "standard_error",
    "exact_value",
    "z_score",
)


def float_text(value: float) -> str:
    """At most FLOAT_DIGITS significant digits, always with a decimal point."""
    text = format(value, f".{Config.FLOAT_DIGITS}g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def identity_row(report: IdentityReport) -> Row:
    return {
        "m": report.m,
        "mu": report.mu,
        "n": report.n,
        "lhs_double_sum": (
            None
            if report.lhs_double_sum is None
            else render_rational(report.lhs_double_sum)
        ),
        "lhs_single_sum": render_rational(report.lhs_single_sum),
        "integral_value": render_rational(report.integral_value),
        "stirling_sum_value": render_rational(report.stirling_sum_value),
        "all_equal": report.all_equal,
        "double_sum_skipped": report.double_sum_skipped,
        "mu_zero_case": report.mu_zero_case,
    }


def monte_carlo_row(report: MonteCarloReport) -> Row:
    return {
        "m": report.m,
        "mu": report.mu,
        "n": report.n,
        "samples": report.samples,
        "seed": report.seed,
        "estimate": float_text(report.estimate),
        "standard_error": float_text(report.standard_error),
        "exact_value": render_rational(report.exact_value),
        "z_score": float_text(report.z_score),
    }


# A Session owns the configuration and the shared Stirling table of one run;
# the output format comes from its mixins.
class Session(WriterMixIn, ReaderMixIn):
    """A class to run one command and render its report.

    Do not instantiate this class."""

    def __init__(self, config: Config, table: Optional[StirlingTable] = None):
        self.config = config
        self.__table = table

    @property
    def table(self) -> StirlingTable:
        bound = self.config.table_bound()
        if self.__table is None:
            logger.info("building Stirling table up to row %d", bound)
            self.__table = build_stirling_table(bound)
        elif self.__table.bound < bound:
            raise BoundError(f"table bound {self.__table.bound} < {bound}")
        return self.__table

    def cauchy(self) -> Document:
        values = cauchy_numbers(self.config.n_max, self.table)
        return Document(
            "cauchy",
            ("n", "c_n"),
            [{"n": n, "c_n": render_rational(c)} for n, c in enumerate(values)],
        )

    def stirling(self) -> Document:
        kind, n_max = self.config.kind, self.config.n_max
        if kind not in ("first", "second"):
            raise UsageError(f"unknown Stirling kind: {kind}")
        columns = ("n",) + tuple(f"k={k}" for k in range(n_max + 1))
        rows = []
        for n in range(n_max + 1):
            row: Dict[str, Any] = {"n": n}
            for k, value in enumerate(self.table.row(kind, n)):
                row[f"k={k}"] = str(value)
            rows.append(row)
        return Document("stirling", columns, rows)

    def density(self) -> Document:
        try:
            at = parse_rational(self.config.at)
        except (TypeError, ValueError) as e:
            raise UsageError(f"--at: {e}") from e
        self.config.table_bound()
        m = self.config.m
        value = density_eval(irwin_hall_density(m), at)
        return Document(
            "density",
            ("m", "at", "density"),
            [{"m": m, "at": render_rational(at), "density": render_rational(value)}],
        )

    def verify(self) -> Tuple[Document, bool]:
        config = self.config
        started = time.perf_counter()
        reports = sweep(
            config.m_max,
            config.mu_max,
            config.n_max,
            self.table,
            parallelism=config.parallelism,
            budget=config.double_sum_budget,
        )
        unequal = sum(1 for report in reports if not report.all_equal)
        summary: Dict[str, Any] = {"cells": len(reports), "unequal": unequal}

        egf_equal = True
        if config.egf:
            order = config.egf_order()
            egf_equal = all(
                verify_egf_power(m, order, self.table).equal
                for m in range(1, config.m_max + 1)
            )
            summary["egf_order"] = order
            summary["egf_equal"] = egf_equal

        elapsed = time.perf_counter() - started
        summary["elapsed_seconds"] = f"{elapsed:.3f}"
        print(
            f"cells={len(reports)} unequal={unequal} elapsed={elapsed:.3f}s",
            file=sys.stderr,
        )
        document = Document(
            "verify", VERIFY_COLUMNS, [identity_row(r) for r in reports], summary
        )
        return document, unequal == 0 and egf_equal

    def montecarlo(self) -> Document:
        config = self.config
        seed = config.resolve_seed(os.environ)
        report = monte_carlo_check(
            config.m, config.mu, config.n, config.samples, seed, self.table
        )
        return Document("montecarlo", MONTECARLO_COLUMNS, [monte_carlo_row(report)])

    def run(self) -> int:
        """Run the configured command, write its report, and return the exit
        code."""
        status = EXIT_OK
        command = self.config.command
        if command == "cauchy":
            document = self.cauchy()
        elif command == "stirling":
            document = self.stirling()
        elif command == "density":
            document = self.density()
        elif command == "verify":
            document, ok = self.verify()
            if not ok:
                status = EXIT_IDENTITY_VIOLATION
        elif command == "montecarlo":
            document = self.montecarlo()
        else:
            raise UsageError(f"unknown command: {command}")

        self.write_document(document, self.config.output_path)
        return status


class JSONSession(Session, JSONWriterMixIn, JSONReaderMixIn):
    """Instantiate this class to emit JSON reports."""

    pass


class CSVSession(Session, CSVWriterMixIn, CSVReaderMixIn):
    """Instantiate this class to emit CSV reports."""

    pass


class MarkdownSession(Session, MarkdownWriterMixIn):
    """Instantiate this class to emit Markdown pipe tables."""

    pass


SESSIONS: Dict[str, Type[Session]] = {
    "json": JSONSession,
    "csv": CSVSession,
    "markdown": MarkdownSession,
}


def open_session(config: Config, table: Optional[StirlingTable] = None) -> Session:
    return SESSIONS[config.output_format](config, table)

# coding=utf-8
"""Command-line entry point running the verification suites, moments and oracle checks."""

# Standard library imports:
import argparse
from collections.abc import Sequence
import logging
from pathlib import Path
import sys
from time import time
from typing import Any

# Third party imports:
import numpy
import pandas

# Local application imports:
from photon_tools.algebra.mode_algebra import verify_transverse_commutators
from photon_tools.config import RunConfig, load_config
from photon_tools.constants import ORDER_SAMPLES, TOL_GAUGE
from photon_tools.errors import ConfigError, DomainError, PhotonToolsError
from photon_tools.fields.moments import MOMENT_COLUMNS, raw_moments, uncertainty
from photon_tools.fields.realspace_oracle import cross_check
from photon_tools.geometry.connection import verify_connection_identities
from photon_tools.geometry.polarization import verify_basis_identities
from photon_tools.numerics.sampling import sample_wave_vectors
from photon_tools.reports import IdentityReport, format_timing, render_table
from photon_tools.reports import write_records

# Set constants:
COMMANDS = ("verify", "moments", "oracle", "algebra", "all")
EXIT_PASSED, EXIT_FAILED, EXIT_ERROR = 0, 1, 2

logger = logging.getLogger(__name__)


class Outcome:
    """Tables and records produced by one subcommand, with its overall verdict."""
    __slots__ = ["title", "passed", "tables", "records", "timing"]

    def __init__(self, title: str, passed: bool, tables: list[pandas.DataFrame],
                 records: list[dict[str, Any]], timing: str = ""):
        self.title = title
        self.passed = passed
        self.tables = tables
        self.records = records
        self.timing = timing

    def __repr__(self) -> str:
        return f"Outcome({self.title!r}, passed={self.passed})"

    def print_tables(self):
        """Print the summary tables of this outcome."""
        print(f"{self.title}: {'PASS' if self.passed else 'FAIL'} ({self.timing})")
        for table in self.tables:
            print(render_table(frame=table))
            print()


def run_verify(cfg: RunConfig) -> Outcome:
    """Run the basis and connection identity suites over random guarded wave vectors."""
    start = time()
    rng = numpy.random.default_rng(seed=cfg.seed)
    tol = cfg.tolerances
    k_basis = sample_wave_vectors(rng=rng, count=cfg.samples, guard=cfg.guard)
    basis = IdentityReport.combine(
        name="polarization", reports=(verify_basis_identities(k=k, tol=tol.identity,
                                                              guard=cfg.guard)
                                      for k in k_basis))
    k_connection = sample_wave_vectors(rng=rng, count=cfg.connection_samples,
                                       guard=cfg.guard)
    connection = IdentityReport.combine(name="connection", reports=(
        verify_connection_identities(
            k=k, h=cfg.step, tol_fd=tol.finite_difference, tol_cross=tol.cross_term,
            tol_identity=tol.identity, guard=cfg.guard,
            order_step=cfg.order_step if n < ORDER_SAMPLES else None)
        for n, k in enumerate(k_connection)))
    for report in (basis, connection):
        logger.info("%s suite: %s", report.name,
                    "PASS" if report.passed else f"FAIL on {report.failures}")
        skipped = {name: check.skipped for name, check in report.checks.items()
                   if check.skipped}
        if skipped:
            logger.warning("%s suite skipped some checks at guarded wave vectors: %s",
                           report.name, skipped)
    return Outcome(title="verify", passed=basis.passed and connection.passed,
                   tables=[basis.to_frame(), connection.to_frame()],
                   records=basis.to_records() + connection.to_records(),
                   timing=format_timing(value=time() - start))


def run_moments(cfg: RunConfig) -> Outcome:
    """Compute the moment report of every configured packet, in both gauges."""
    start = time()
    reports, rows = [], []
    gauge = IdentityReport(name="gauge invariance")
    for packet in cfg.packets:
        report = uncertainty(p=packet, quad=cfg.quadrature, tol_imag=cfg.tolerances.imaginary,
                             reference_nodes=cfg.reference_nodes, guard=cfg.guard)
        reports.append(report)
        rows.append(report.to_row())
        plain = raw_moments(p=packet, quad=cfg.quadrature, guard=cfg.guard)
        identity = f"gauge rotation of {report.name}"
        try:
            rotated = raw_moments(p=packet, quad=cfg.quadrature, gauge=True, guard=cfg.guard)
        except DomainError as error:
            # Odd node counts put a node on the k3 axis, where the gauge phase is undefined.
            logger.warning("%s skipped: %s", identity, error)
            gauge.skip(identity, TOL_GAUGE, reason=str(error))
            continue
        gauge.add(identity, plain.deviation(other=rotated), TOL_GAUGE)
    passed = all(report.passed for report in reports) and gauge.passed
    records = [report.to_record() for report in reports] + gauge.to_records()
    return Outcome(title="moments", passed=passed,
                   tables=[pandas.DataFrame(data=rows, columns=MOMENT_COLUMNS),
                           gauge.to_frame()],
                   records=records, timing=format_timing(value=time() - start))


def run_oracle(cfg: RunConfig) -> Outcome:
    """Compare the k-space moments of every configured packet with the real-space oracle."""
    start = time()
    reports = [cross_check(p=packet, quad=cfg.quadrature, grid=cfg.grid,
                           tol_rel=cfg.tolerances.oracle, tol_imag=cfg.tolerances.imaginary)
               for packet in cfg.packets]
    table = pandas.concat(objs=[report.to_frame() for report in reports],
                          ignore_index=True)
    records = [record for report in reports for record in report.to_records()]
    return Outcome(title="oracle", passed=all(report.passed for report in reports),
                   tables=[table], records=records,
                   timing=format_timing(value=time() - start))


def run_algebra() -> Outcome:
    """Derive the commutator table of the helicity operators."""
    start = time()
    report = verify_transverse_commutators()
    return Outcome(title="algebra", passed=report.passed, tables=[report.to_frame()],
                   records=report.to_records(), timing=format_timing(value=time() - start))


def build_parser() -> argparse.ArgumentParser:
    """Define the command-line interface."""
    parser = argparse.ArgumentParser(
        prog="photon-tools",
        description="Verify photon polarization identities and energy-density moments.")
    parser.add_argument("command", choices=COMMANDS, help="Checks to run.")
    parser.add_argument("--config", type=Path, default=None,
                        help="INI run configuration (defaults to the packaged one).")
    parser.add_argument("--seed", type=int, default=None, help="Random seed.")
    parser.add_argument("--samples", type=int, default=None,
                        help="Number of random wave vectors for the basis identities.")
    parser.add_argument("--nodes", type=int, default=None,
                        help="Gauss-Legendre nodes per k-space axis.")
    parser.add_argument("--tol", type=float, default=None,
                        help="Tolerance of the algebraic identities.")
    parser.add_argument("--out", type=Path, default=None,
                        help="Write the JSON-lines records here instead of stdout.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages.")
    return parser


def run(command: str, cfg: RunConfig) -> list[Outcome]:
    """Run one subcommand, or all of them in order."""
    runners = {"verify": lambda: run_verify(cfg=cfg), "moments": lambda: run_moments(cfg=cfg),
               "oracle": lambda: run_oracle(cfg=cfg), "algebra": run_algebra}
    names = list(runners) if command == "all" else [command]
    return [runners[name]() for name in names]


def main(argv: Sequence[str] = None) -> int:
    """Parse the arguments, run the checks and return 0 only if every check passed."""
    args = build_parser().parse_args(args=argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = load_config(config_file=args.config).with_overrides(
            seed=args.seed, samples=args.samples, nodes=args.nodes, tol=args.tol)
        outcomes = run(command=args.command, cfg=cfg)
    except ConfigError as error:
        logger.error("Invalid configuration: %s", error)
        return EXIT_ERROR
    except PhotonToolsError as error:
        logger.error("%s aborted: %s", args.command, error)
        return EXIT_ERROR

    for outcome in outcomes:
        outcome.print_tables()
    records = [record for outcome in outcomes for record in outcome.records]
    if args.out is None:
        write_records(records=records, stream=sys.stdout)
    else:
        with open(file=args.out, mode="w", encoding="utf-8") as file:
            write_records(records=records, stream=file)
    return EXIT_PASSED if all(outcome.passed for outcome in outcomes) else EXIT_FAILED

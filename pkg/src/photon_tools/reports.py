# coding=utf-8
"""Result records, summary tables and timing strings shared by every check."""

# Standard library imports:
from collections.abc import Iterable
import json
import math
from typing import Any, TextIO

# Third party imports:
import numpy
import pandas

# Local application imports:
from photon_tools.constants import FORMAT_VERSION, ROW_SKIPPED


def format_timing(value: float) -> str:
    """Format a time value in seconds into a time string with sensitive units."""
    if value >= 1.5 * 3600:
        return f"{value / 3600:.2f} h"
    elif value >= 1.5 * 60:
        return f"{value / 60:.2f} min"
    elif value <= 1e-4:
        return f"{value * 1e6:.2f} μs"
    elif value <= 1e-1:
        return f"{value * 1e3:.2f} ms"
    else:
        return f"{value:.2f} s"


def format_number(value: float) -> str:
    """Format a residual or a moment in scientific notation for summary tables."""
    return "-" if value is None or math.isnan(value) else f"{value:.3e}"


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars and arrays (real or complex) into JSON-compatible values."""
    if isinstance(value, dict):
        return {key: to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, numpy.ndarray)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, (complex, numpy.complexfloating)):
        return {"real": float(value.real), "imag": float(value.imag)}
    if isinstance(value, numpy.bool_):
        return bool(value)
    if isinstance(value, numpy.integer):
        return int(value)
    if isinstance(value, numpy.floating):
        value = float(value)
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def make_record(kind: str, name: str, passed: bool, **fields) -> dict[str, Any]:
    """Build a self-describing result record tagged with the report format version."""
    record = {"format_version": FORMAT_VERSION, "kind": kind, "name": name,
              "passed": bool(passed)}
    record.update({key: to_jsonable(value) for key, value in fields.items()})
    return record


def write_records(records: Iterable[dict[str, Any]], stream: TextIO):
    """Write result records as JSON lines with sorted keys."""
    for record in records:
        stream.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")


def render_table(frame: pandas.DataFrame) -> str:
    """Render a summary table as a pipe-formatted markdown table."""
    return frame.to_markdown(index=False, tablefmt="pipe")


class IdentityCheck:
    """Worst residual of one identity over all the wave vectors where it was evaluated."""
    __slots__ = ["identity", "residual", "tolerance", "evaluated", "skipped", "note"]

    def __init__(self, identity: str, residual: float, tolerance: float,
                 evaluated: int = 1, skipped: int = 0, note: str = ""):
        self.identity = identity
        self.residual = residual
        self.tolerance = tolerance
        self.evaluated = evaluated
        self.skipped = skipped
        self.note = note

    def __repr__(self) -> str:
        return f"{self.identity}: {self.residual:.3e} (tol {self.tolerance:.1e})"

    @property
    def passed(self) -> bool:
        """Check if the residual meets the tolerance (skipped-only checks pass)."""
        if self.evaluated == 0:
            return True
        return bool(self.residual <= self.tolerance)

    @property
    def status(self) -> str:
        """Describe the check outcome for summary tables."""
        if self.evaluated == 0:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


class IdentityReport:
    """Residuals of a group of identities, evaluated at one or many wave vectors."""
    def __init__(self, name: str, checks: list[IdentityCheck] = None):
        self.name = name
        self.checks = {check.identity: check for check in checks or []}

    def __repr__(self) -> str:
        return f"IdentityReport({self.name!r}, {len(self.checks)} checks, " \
               f"passed={self.passed})"

    def __getitem__(self, identity: str) -> IdentityCheck:
        return self.checks[identity]

    def __contains__(self, identity: str) -> bool:
        return identity in self.checks

    def add(self, identity: str, residual: float, tolerance: float):
        """Register the residual of an evaluated identity."""
        self.checks[identity] = IdentityCheck(
            identity=identity, residual=float(residual), tolerance=tolerance)

    def skip(self, identity: str, tolerance: float, reason: str):
        """Register an identity that could not be evaluated here."""
        self.checks[identity] = IdentityCheck(
            identity=identity, residual=math.nan, tolerance=tolerance, evaluated=0,
            skipped=1, note=ROW_SKIPPED.substitute(reason=reason))

    @property
    def passed(self) -> bool:
        """Check if every evaluated identity meets its tolerance."""
        return all(check.passed for check in self.checks.values())

    @property
    def failures(self) -> list[str]:
        """List the identities whose residual exceeds the tolerance."""
        return [name for name, check in self.checks.items() if not check.passed]

    @classmethod
    def combine(cls, name: str, reports: Iterable["IdentityReport"]) -> "IdentityReport":
        """Merge many reports, keeping the worst residual found for each identity."""
        merged: dict[str, IdentityCheck] = {}
        for report in reports:
            for identity, check in report.checks.items():
                if identity not in merged:
                    merged[identity] = IdentityCheck(
                        identity=identity, residual=math.nan,
                        tolerance=check.tolerance, evaluated=0, note=check.note)
                worst = merged[identity]
                worst.skipped += check.skipped
                if check.evaluated:
                    residual = check.residual
                    if worst.evaluated == 0 or math.isnan(residual) \
                            or residual > worst.residual:
                        worst.residual = residual
                    worst.evaluated += check.evaluated
        return IdentityReport(name=name, checks=list(merged.values()))

    def to_frame(self) -> pandas.DataFrame:
        """Summarise the report as a table with one row per identity."""
        rows = [[c.identity, format_number(c.residual), f"{c.tolerance:.1e}",
                 c.evaluated, c.skipped, c.status] for c in self.checks.values()]
        return pandas.DataFrame(
            data=rows,
            columns=["Identity", "Worst residual", "Tolerance", "Evaluated", "Skipped",
                     "Status"])

    def to_records(self) -> list[dict[str, Any]]:
        """Describe each identity check as a result record."""
        return [make_record(
            kind="identities", name=self.name, passed=c.passed, identity=c.identity,
            residual=c.residual, tolerance=c.tolerance, evaluated=c.evaluated,
            skipped=c.skipped) for c in self.checks.values()]


class ComparisonRow:
    """One quantity computed along two independent paths."""
    __slots__ = ["quantity", "reference", "candidate", "deviation", "tolerance"]

    def __init__(self, quantity: str, reference: Any, candidate: Any, deviation: float,
                 tolerance: float):
        self.quantity = quantity
        self.reference = reference
        self.candidate = candidate
        self.deviation = float(deviation)
        self.tolerance = tolerance

    def __repr__(self) -> str:
        return f"{self.quantity}: deviation {self.deviation:.3e}"

    @property
    def passed(self) -> bool:
        """Check if the relative deviation meets the tolerance."""
        return bool(self.deviation <= self.tolerance)


class ComparisonReport:
    """Relative deviations between k-space moments and their real-space oracle."""
    def __init__(self, name: str, rows: list[ComparisonRow] = None,
                 diagnostics: dict[str, float] = None):
        self.name = name
        self.rows = {row.quantity: row for row in rows or []}
        self.diagnostics = diagnostics or {}

    def __repr__(self) -> str:
        return f"ComparisonReport({self.name!r}, passed={self.passed})"

    def __getitem__(self, quantity: str) -> ComparisonRow:
        return self.rows[quantity]

    def add(self, quantity: str, reference: Any, candidate: Any, deviation: float,
            tolerance: float):
        """Register the relative deviation found for one quantity."""
        self.rows[quantity] = ComparisonRow(
            quantity=quantity, reference=reference, candidate=candidate,
            deviation=deviation, tolerance=tolerance)

    @property
    def passed(self) -> bool:
        """Check if every compared quantity meets its tolerance."""
        return all(row.passed for row in self.rows.values())

    def to_frame(self) -> pandas.DataFrame:
        """Summarise the report as a table with one row per compared quantity."""
        rows = [[self.name, r.quantity, format_number(r.deviation), f"{r.tolerance:.1e}",
                 "PASS" if r.passed else "FAIL"] for r in self.rows.values()]
        return pandas.DataFrame(
            data=rows, columns=["Packet", "Quantity", "Deviation", "Tolerance", "Status"])

    def to_records(self) -> list[dict[str, Any]]:
        """Describe the whole comparison as a single result record."""
        rows = {q: {"k_space": r.reference, "real_space": r.candidate,
                    "deviation": r.deviation, "tolerance": r.tolerance}
                for q, r in self.rows.items()}
        return [make_record(kind="oracle", name=self.name, passed=self.passed,
                            rows=rows, diagnostics=self.diagnostics)]


class AlgebraRow:
    """One derived commutator next to its expected exact value."""
    __slots__ = ["commutator", "derived", "expected", "residual"]

    def __init__(self, commutator: str, derived: str, expected: str, residual: str):
        self.commutator = commutator
        self.derived = derived
        self.expected = expected
        self.residual = residual

    def __repr__(self) -> str:
        return f"{self.commutator} = {self.derived}"

    @property
    def passed(self) -> bool:
        """Check if the symbolic residual is exactly zero."""
        return self.residual == "0"


class AlgebraReport:
    """Table of commutators derived from the mode algebra."""
    def __init__(self, name: str, rows: list[AlgebraRow] = None):
        self.name = name
        self.rows = rows or []

    def __repr__(self) -> str:
        return f"AlgebraReport({self.name!r}, {len(self.rows)} rows, passed={self.passed})"

    def __iter__(self):
        return iter(self.rows)

    @property
    def passed(self) -> bool:
        """Check if every derived commutator matches its expected value exactly."""
        return all(row.passed for row in self.rows)

    def to_frame(self) -> pandas.DataFrame:
        """Summarise the report as a table with one row per commutator."""
        rows = [[r.commutator, r.derived, r.expected, r.residual,
                 "PASS" if r.passed else "FAIL"] for r in self.rows]
        return pandas.DataFrame(
            data=rows, columns=["Commutator", "Derived", "Expected", "Residual", "Status"])

    def to_records(self) -> list[dict[str, Any]]:
        """Describe each commutator as a result record."""
        return [make_record(kind="algebra", name=self.name, passed=r.passed,
                            commutator=r.commutator, derived=r.derived,
                            expected=r.expected, residual=r.residual) for r in self.rows]

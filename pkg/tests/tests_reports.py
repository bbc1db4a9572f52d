# coding=utf-8
"""Tests for the result records and summary tables."""

# Standard library imports:
import io
import json
import math
import unittest

# Third party imports:
import numpy

# Local application imports:
from photon_tools.reports import AlgebraReport, AlgebraRow, ComparisonReport, IdentityReport
from photon_tools.reports import format_timing, make_record, render_table, to_jsonable
from photon_tools.reports import write_records


class FormattingTests(unittest.TestCase):
    def test_format_timing(self):
        """Assert time values are shown with sensible units."""
        self.assertEqual("12.00 μs", format_timing(value=1.2e-5))
        self.assertEqual("25.00 ms", format_timing(value=0.025))
        self.assertEqual("3.00 s", format_timing(value=3.0))
        self.assertEqual("2.00 min", format_timing(value=120.0))
        self.assertEqual("2.00 h", format_timing(value=7200.0))

    def test_to_jsonable(self):
        """Assert numpy values, complex numbers and NaN become JSON-compatible."""
        value = {"a": numpy.array([1.0, 2.0]), "b": numpy.complex128(1 - 2j),
                 "c": numpy.float64(math.nan), "d": numpy.bool_(True), "e": numpy.int64(4)}
        self.assertEqual({"a": [1.0, 2.0], "b": {"real": 1.0, "imag": -2.0}, "c": None,
                          "d": True, "e": 4}, to_jsonable(value=value))

    def test_sorted_records(self):
        """Assert records are written as JSON lines with sorted keys."""
        stream = io.StringIO()
        write_records(records=[make_record(kind="test", name="x", passed=True, z=1, a=2)],
                      stream=stream)
        line = stream.getvalue()
        self.assertTrue(line.endswith("\n"))
        self.assertEqual(["a", "format_version", "kind", "name", "passed", "z"],
                         list(json.loads(line)))


class IdentityReportTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.first = IdentityReport(name="first")
        self.first.add("orthonormality", 1e-15, 1e-12)
        self.first.skip("gauge", 1e-10, reason="on the k3 axis")
        self.second = IdentityReport(name="second")
        self.second.add("orthonormality", 3e-13, 1e-12)
        self.second.add("gauge", 2e-11, 1e-10)

    def test_skipped_check_passes(self):
        """Assert skipped checks neither fail nor count as evaluated."""
        self.assertTrue(self.first.passed)
        self.assertEqual("SKIP", self.first["gauge"].status)
        self.assertEqual("skipped: on the k3 axis", self.first["gauge"].note)

    def test_combine_keeps_worst(self):
        """Assert merged reports keep the worst residual and add the counts."""
        merged = IdentityReport.combine(name="merged", reports=[self.first, self.second])
        self.assertEqual(3e-13, merged["orthonormality"].residual)
        self.assertEqual((1, 1), (merged["gauge"].evaluated, merged["gauge"].skipped))
        self.assertEqual(2e-11, merged["gauge"].residual)

    def test_nan_is_sticky(self):
        """Assert a NaN residual fails the merged check."""
        broken = IdentityReport(name="broken")
        broken.add("orthonormality", math.nan, 1e-12)
        merged = IdentityReport.combine(name="merged",
                                        reports=[self.second, broken, self.first])
        self.assertTrue(math.isnan(merged["orthonormality"].residual))
        self.assertEqual(["orthonormality"], merged.failures)

    def test_table_and_records(self):
        """Assert one table row and one record per identity."""
        table = render_table(frame=self.second.to_frame())
        self.assertTrue(table.startswith("| Identity"))
        records = self.second.to_records()
        self.assertEqual(2, len(records))
        self.assertEqual({"identities"}, {record["kind"] for record in records})


class ComparisonReportTests(unittest.TestCase):
    def test_single_record(self):
        """Assert a comparison is described by one record holding every row."""
        report = ComparisonReport(name="A", diagnostics={"tail_estimate": 1e-5})
        report.add(quantity="M0", reference=1.0, candidate=1.0002, deviation=2e-4,
                   tolerance=1e-3)
        report.add(quantity="M1", reference=numpy.zeros(3), candidate=numpy.ones(3),
                   deviation=2.0, tolerance=1e-3)
        self.assertFalse(report.passed)
        self.assertEqual(["PASS", "FAIL"], report.to_frame()["Status"].tolist())
        (record,) = report.to_records()
        self.assertEqual("oracle", record["kind"])
        self.assertEqual([1.0, 1.0, 1.0], record["rows"]["M1"]["real_space"])


class AlgebraReportTests(unittest.TestCase):
    def test_exact_residuals(self):
        """Assert rows pass only when their symbolic residual is exactly zero."""
        report = AlgebraReport(name="test", rows=[
            AlgebraRow(commutator="[x, y]", derived="0", expected="0", residual="0"),
            AlgebraRow(commutator="[y, z]", derived="ω", expected="0", residual="ω")])
        self.assertFalse(report.passed)
        self.assertEqual(["PASS", "FAIL"], report.to_frame()["Status"].tolist())
        self.assertEqual(2, len(report.to_records()))

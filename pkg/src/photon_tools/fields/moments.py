# coding=utf-8
"""Energy-density moments M0, M1, M2 and the position spread Δr from k-space amplitudes."""

# Standard library imports:
import logging
import math
from time import time
from typing import Any

# Third party imports:
import numpy

# Local application imports:
from photon_tools.constants import DOMAIN_GUARD, QUAD_REFERENCE_NODES, TOL_IMAG
from photon_tools.errors import QuadratureError
from photon_tools.fields.amplitudes import GaussianPacket, check_coverage, check_support
from photon_tools.fields.amplitudes import eval_amplitude, gauge_rotated_sample
from photon_tools.geometry.connection import closed_form
from photon_tools.geometry.polarization import gauge_phase_gradient
from photon_tools.numerics.quadrature import QuadratureSpec
from photon_tools.reports import format_timing, make_record

logger = logging.getLogger(__name__)


class RawMoments:
    """Complex moment integrals, split into envelope and polarization-induced parts.

    The envelope ("scalar") parts are the same integrals with A = 0 and without
    the 1/|k|² term. Their imaginary parts are quadrature or implementation errors.
    """
    __slots__ = ["m0", "m1", "m2", "m1_scalar", "m2_scalar", "m2_intrinsic"]

    def __init__(self, m0: float, m1: numpy.ndarray, m1_scalar: numpy.ndarray,
                 m2_scalar: complex, m2_intrinsic: complex):
        self.m0 = m0
        self.m1 = m1
        self.m1_scalar = m1_scalar
        self.m2_scalar = m2_scalar
        self.m2_intrinsic = m2_intrinsic
        self.m2 = m2_scalar + m2_intrinsic

    def __repr__(self) -> str:
        return f"RawMoments(M0={self.m0:.6g}, M1={self.m1.real}, M2={self.m2.real:.6g})"

    @property
    def residual_imag(self) -> float:
        """Provide the largest imaginary part found in M1 or M2."""
        return max(float(numpy.max(numpy.abs(self.m1.imag))), abs(self.m2.imag))

    def deviation(self, other: "RawMoments") -> float:
        """Compute the largest relative difference between two evaluations."""
        scale_1 = max(float(numpy.linalg.norm(self.m1.real)),
                      math.sqrt(abs(self.m0 * self.m2.real)))
        return max(abs(self.m0 - other.m0) / self.m0,
                   float(numpy.linalg.norm(self.m1.real - other.m1.real)) / scale_1,
                   abs(self.m2.real - other.m2.real) / self.m2.real)


def raw_moments(p: GaussianPacket, quad: QuadratureSpec, gauge: bool = False,
                guard: float = DOMAIN_GUARD) -> RawMoments:
    """Integrate the moment densities with D_k = ∂/∂k - iA over the k-space box.

    With gauge set, the basis, both amplitudes and the connection are evaluated in
    the rotated gauge: a₊₁ → exp(-iθ) a₊₁, a₋₁ → exp(iθ) a₋₁ and A → A + ∂θ/∂k.
    """
    check_support(p=p, quad=quad, guard=guard)
    grid = quad.build(centre=p.center.array, width=p.width)
    points = grid.points
    plus = eval_amplitude(p=p, k=points, helicity=1)
    minus = eval_amplitude(p=p, k=points, helicity=-1)
    connection, _ = closed_form(k=points)
    if gauge:
        plus = gauge_rotated_sample(sample=plus, k=points, helicity=1)
        minus = gauge_rotated_sample(sample=minus, k=points, helicity=-1)
        connection = connection + gauge_phase_gradient(k=points)
    v1, g1, l1 = plus.value, plus.gradient, plus.laplacian
    v2, g2, l2 = minus.value, minus.gradient, minus.laplacian
    density = numpy.abs(v1) ** 2 + numpy.abs(v2) ** 2
    inverse_k2 = 1 / numpy.sum(points ** 2, axis=-1)
    connection2 = numpy.sum(connection ** 2, axis=-1)

    m1_scalar = -1j * (v1[..., None] * g1.conj() - v2.conj()[..., None] * g2)
    m1_connection = -connection * (numpy.abs(v1) ** 2 - numpy.abs(v2) ** 2)[..., None]
    m2_scalar = -(v1 * l1.conj() + v2.conj() * l2)
    m2_intrinsic = density * (inverse_k2 + connection2) + 2j * (
        v1 * numpy.sum(connection * g1.conj(), axis=-1)
        + v2.conj() * numpy.sum(connection * g2, axis=-1))

    m0 = float(grid.integrate(values=density))
    check_coverage(p=p, quad=quad, grid_norm=m0)
    m1_scalar = grid.integrate(values=m1_scalar)
    m1 = m1_scalar + grid.integrate(values=m1_connection)
    return RawMoments(m0=m0, m1=m1, m1_scalar=m1_scalar,
                      m2_scalar=complex(grid.integrate(values=m2_scalar)),
                      m2_intrinsic=complex(grid.integrate(values=m2_intrinsic)))


def moment0(p: GaussianPacket, quad: QuadratureSpec = None) -> float:
    """Compute the energy M0 = ∫d³k (|a₊₁|² + |a₋₁|²)."""
    return raw_moments(p=p, quad=quad or QuadratureSpec()).m0


def moment1(p: GaussianPacket, quad: QuadratureSpec = None) -> numpy.ndarray:
    """Compute M1 = -i∫d³k [a₁ D_k a₁* - a₋₁* D_k a₋₁], discarding imaginary parts."""
    return raw_moments(p=p, quad=quad or QuadratureSpec()).m1.real


def moment2(p: GaussianPacket, quad: QuadratureSpec = None) -> float:
    """Compute M2 = ∫d³k {(|a₁|² + |a₋₁|²)/|k|² - [a₁ D_k² a₁* + a₋₁* D_k² a₋₁]}."""
    return raw_moments(p=p, quad=quad or QuadratureSpec()).m2.real


class MomentReport:
    """Energy moments of a packet, with ⟨rⁿ⟩ = Mₙ/M0 and (Δr)² = ⟨r²⟩ - |⟨r⟩|².

    Besides Δr, the report splits (Δr)² into the envelope spread of the amplitudes
    and the intrinsic spread induced by the k-dependence of the polarization basis.
    """
    __slots__ = ["name", "gauge", "m0", "m1", "m2", "r_mean", "r2_mean", "delta_r",
                 "residual_imag", "convergence_delta", "m1_scalar", "m2_scalar",
                 "delta_r_scalar", "r_mean_intrinsic", "r2_mean_intrinsic",
                 "delta_r_intrinsic", "timing", "tol_imag"]

    def __init__(self, name: str, raw: RawMoments, convergence_delta: float = math.nan,
                 gauge: bool = False, timing: str = "", tol_imag: float = TOL_IMAG):
        self.name = name
        self.tol_imag = tol_imag
        self.gauge = gauge
        self.timing = timing
        self.convergence_delta = convergence_delta
        self.residual_imag = raw.residual_imag
        self.m0 = raw.m0
        self.m1 = raw.m1.real
        self.m2 = raw.m2.real
        self.m1_scalar = raw.m1_scalar.real
        self.m2_scalar = raw.m2_scalar.real
        self.r_mean = self.m1 / self.m0
        self.r2_mean = self.m2 / self.m0
        r_scalar = self.m1_scalar / self.m0
        self.r_mean_intrinsic = self.r_mean - r_scalar
        self.r2_mean_intrinsic = raw.m2_intrinsic.real / self.m0
        variance = self.r2_mean - self.r_mean @ self.r_mean
        variance_scalar = self.m2_scalar / self.m0 - r_scalar @ r_scalar
        variance_intrinsic = variance - variance_scalar
        self.delta_r = math.sqrt(max(variance, 0.0))
        self.delta_r_scalar = math.sqrt(max(variance_scalar, 0.0))
        self.delta_r_intrinsic = math.sqrt(max(variance_intrinsic, 0.0))

    def __repr__(self) -> str:
        return f"MomentReport({self.name!r}: M0={self.m0:.6g}, ⟨r⟩={self.r_mean}, " \
               f"⟨r²⟩={self.r2_mean:.6g}, Δr={self.delta_r:.6g})"

    @property
    def passed(self) -> bool:
        """Check the structural properties M0 > 0, M2 ≥ 0 and real M1."""
        return bool(self.m0 > 0 and self.m2 >= 0
                    and self.residual_imag <= self.tol_imag * self.m0)

    def to_row(self) -> list[Any]:
        """Summarise the report as a row of the moments table."""
        return [self.name, f"{self.m0:.6g}", numpy.array2string(self.r_mean, precision=4),
                f"{self.r2_mean:.6g}", f"{self.delta_r:.6g}",
                f"{self.delta_r_intrinsic:.6g}", f"{self.residual_imag:.1e}",
                f"{self.convergence_delta:.1e}", self.timing]

    def to_record(self) -> dict[str, Any]:
        """Describe the report as a result record (without its timing)."""
        return make_record(
            kind="moments", name=self.name, passed=self.passed, gauge=self.gauge,
            M0=self.m0, M1=self.m1, M2=self.m2, r_mean=self.r_mean,
            r2_mean=self.r2_mean, delta_r=self.delta_r, residual_imag=self.residual_imag,
            convergence_delta=self.convergence_delta, M1_scalar=self.m1_scalar,
            M2_scalar=self.m2_scalar, delta_r_scalar=self.delta_r_scalar,
            r_mean_intrinsic=self.r_mean_intrinsic,
            r2_mean_intrinsic=self.r2_mean_intrinsic,
            delta_r_intrinsic=self.delta_r_intrinsic)


MOMENT_COLUMNS = ["Packet", "M0", "⟨r⟩", "⟨r²⟩", "Δr", "Δr intrinsic", "Imag residual",
                  "Convergence", "Time"]


def uncertainty(p: GaussianPacket, quad: QuadratureSpec = None, gauge: bool = False,
                tol_imag: float = TOL_IMAG,
                reference_nodes: int | None = QUAD_REFERENCE_NODES,
                guard: float = DOMAIN_GUARD) -> MomentReport:
    """Compute the moment report of a packet, checking its structural properties.

    The convergence delta compares against the same box with reference_nodes
    nodes per axis; pass None to skip it.
    """
    quad = quad or QuadratureSpec()
    start = time()
    raw = raw_moments(p=p, quad=quad, gauge=gauge, guard=guard)
    name = p.name or repr(p)
    if not raw.m0 > 0:
        raise QuadratureError(f"The energy M0 = {raw.m0:.3e} of {name} is not positive.")
    if raw.residual_imag > tol_imag * raw.m0:
        raise QuadratureError(f"The moments of {name} have an imaginary residual "
                              f"{raw.residual_imag:.3e} above {tol_imag:.1e}·M0.")
    if raw.m2.real < 0:
        raise QuadratureError(f"The second moment M2 = {raw.m2.real:.3e} of {name} "
                              f"is negative.")
    convergence = math.nan
    if reference_nodes is not None:
        reference = raw_moments(p=p, quad=quad.with_nodes(reference_nodes), gauge=gauge,
                                guard=guard)
        convergence = raw.deviation(other=reference)
    timing = format_timing(value=time() - start)
    report = MomentReport(name=name, raw=raw, convergence_delta=convergence, gauge=gauge,
                          timing=timing, tol_imag=tol_imag)
    variance = report.r2_mean - report.r_mean @ report.r_mean
    if variance < -tol_imag * report.r2_mean:
        raise QuadratureError(f"The variance (Δr)² = {variance:.3e} of {name} is negative.")
    logger.debug("Moments of %s computed in %s", name, timing)
    return report

# coding=utf-8
"""Real-space oracle: synthesize F⁽±¹⁾(r, 0) on a grid and integrate the moments directly."""

# Standard library imports:
import logging
import math
from time import time

# Third party imports:
import numpy

# Local application imports:
from photon_tools.constants import DOMAIN_GUARD, GRID_REFERENCE_OFFSET, MIN_NODES
from photon_tools.constants import TOL_IMAG, TOL_ORACLE, TOL_TAIL
from photon_tools.errors import TailBoundError
from photon_tools.fields.amplitudes import GaussianPacket, check_coverage, check_support
from photon_tools.fields.amplitudes import energy_density, eval_amplitude
from photon_tools.fields.moments import MomentReport, uncertainty
from photon_tools.geometry.polarization import circular_vectors
from photon_tools.geometry.polarization import riemann_silberstein_fields
from photon_tools.numerics.quadrature import QuadratureSpec, SpatialGrid, TensorGrid
from photon_tools.reports import ComparisonReport, format_timing

# Set constants:
FOURIER_NORM = (2 * math.pi) ** -1.5

logger = logging.getLogger(__name__)


class FieldSample:
    """Riemann-Silberstein pair F⁽¹⁾, F⁽⁻¹⁾ at one or many positions, at t = 0."""
    __slots__ = ["r", "f_plus", "f_minus"]

    def __init__(self, r: numpy.ndarray, f_plus: numpy.ndarray, f_minus: numpy.ndarray):
        self.r = r
        self.f_plus = f_plus
        self.f_minus = f_minus

    def __repr__(self) -> str:
        return f"FieldSample(r={self.r}, F⁽¹⁾={self.f_plus}, F⁽⁻¹⁾={self.f_minus})"

    @property
    def energy_density(self) -> numpy.ndarray:
        """Compute ½(|F⁽¹⁾|² + |F⁽⁻¹⁾|²)."""
        return 0.5 * numpy.sum(numpy.abs(self.f_plus) ** 2 + numpy.abs(self.f_minus) ** 2,
                               axis=-1)

    @property
    def modulus_residual(self) -> float:
        """Compute the largest ||F⁽¹⁾| - |F⁽⁻¹⁾||, relative to the largest |F⁽¹⁾|."""
        plus = numpy.linalg.norm(self.f_plus, axis=-1)
        minus = numpy.linalg.norm(self.f_minus, axis=-1)
        scale = numpy.max(plus)
        return float(numpy.max(numpy.abs(plus - minus)) / scale) if scale > 0 else 0.0

    @property
    def realness_residual(self) -> float:
        """Compute the largest imaginary part of E and B, relative to the largest |F⁽¹⁾|."""
        e_field, b_field = riemann_silberstein_fields(f_plus=self.f_plus,
                                                      f_minus=self.f_minus)
        scale = numpy.max(numpy.abs(self.f_plus))
        if scale == 0:
            return 0.0
        return float(max(numpy.max(numpy.abs(e_field.imag)),
                         numpy.max(numpy.abs(b_field.imag))) / scale)


def field_realness(sample: FieldSample) -> float:
    """Check E and B for realness and the moduli of the field pair for equality."""
    return max(sample.realness_residual, sample.modulus_residual)


def _spectral_weights(p: GaussianPacket, quad: QuadratureSpec, guard: float) \
        -> tuple[TensorGrid, dict[int, tuple[numpy.ndarray, numpy.ndarray]]]:
    """Weigh the basis vectors by the amplitudes at every k node.

    For each helicity λ, the pair holds the (2π)^(-3/2)-scaled quadrature weights
    times e_λ(k) a_λ(k) and times e_λ(k) a*_{-λ}(k), the coefficients of the
    exp(ik·r) and exp(-ik·r) terms of F⁽λ⁾(r, 0).
    """
    check_support(p=p, quad=quad, guard=guard)
    grid = quad.build(centre=p.center.array, width=p.width)
    check_coverage(p=p, quad=quad,
                   grid_norm=float(grid.integrate(values=energy_density(p=p, grid=grid))))
    points = grid.points
    weights = FOURIER_NORM * grid.weights
    amplitudes = {h: eval_amplitude(p=p, k=points, helicity=h).value for h in (1, -1)}
    spectra = {}
    for helicity in (1, -1):
        vectors = circular_vectors(k=points, helicity=helicity)
        positive = (weights * amplitudes[helicity])[..., None] * vectors
        negative = (weights * amplitudes[-helicity].conj())[..., None] * vectors
        spectra[helicity] = positive, negative
    return grid, spectra


def synthesize_field(p: GaussianPacket, r: numpy.ndarray, quad: QuadratureSpec = None,
                     guard: float = DOMAIN_GUARD) -> FieldSample:
    """Evaluate F⁽λ⁾(r, 0) = ∫d³k/(2π)^(3/2) e_λ [a_λ exp(ik·r) + a*_{-λ} exp(-ik·r)]."""
    quad = quad or QuadratureSpec()
    r = numpy.asarray(r, dtype=float)
    grid, spectra = _spectral_weights(p=p, quad=quad, guard=guard)
    points = grid.points.reshape(-1, 3)
    phases = numpy.exp(1j * r.reshape(-1, 3) @ points.T)
    fields = {}
    for helicity, (positive, negative) in spectra.items():
        field = phases @ positive.reshape(-1, 3) + phases.conj() @ negative.reshape(-1, 3)
        fields[helicity] = field.reshape(r.shape)
    return FieldSample(r=r, f_plus=fields[1], f_minus=fields[-1])


class FieldGrid:
    """Field pair synthesized at every node of a real-space Gauss-Legendre grid."""
    __slots__ = ["grid", "sample"]

    def __init__(self, grid: TensorGrid, sample: FieldSample):
        self.grid = grid
        self.sample = sample

    def __repr__(self) -> str:
        return f"FieldGrid({self.grid!r})"

    def moment(self, n: int) -> float | numpy.ndarray:
        """Integrate Mₙ = ½∫d³r rⁿ (|F⁽¹⁾|² + |F⁽⁻¹⁾|²) for n = 0, 1, 2."""
        density = self.sample.energy_density
        if n == 0:
            return float(self.grid.integrate(values=density))
        elif n == 1:
            return self.grid.integrate(values=density[..., None] * self.sample.r)
        elif n == 2:
            radius2 = numpy.sum(self.sample.r ** 2, axis=-1)
            return float(self.grid.integrate(values=density * radius2))
        raise ValueError(f"Only the moments n = 0, 1, 2 are defined, got {n}.")

    def spread(self) -> float:
        """Compute Δr from the real-space moments."""
        m0, m1, m2 = self.moment(n=0), self.moment(n=1), self.moment(n=2)
        r_mean = m1 / m0
        return math.sqrt(max(m2 / m0 - r_mean @ r_mean, 0.0))


def tail_fraction(half_width: float) -> float:
    """Estimate the share of M0 or M2 lost outside a cube of half-width c/σ.

    The energy density envelope of the packet has a standard deviation 1/(2σ) per
    axis, so the cube edge lies t = 2c standard deviations away from its centre.
    """
    t = 2 * half_width
    tail = math.erfc(t / math.sqrt(2))
    mass = -math.expm1(3 * math.log1p(-tail))
    second_moment = 2 * (t * math.exp(-t ** 2 / 2) / math.sqrt(2 * math.pi) + tail / 2)
    return max(mass, second_moment)


def required_nodes(p: GaussianPacket, grid: SpatialGrid) -> float:
    """Estimate the nodes per axis needed to resolve the fastest oscillation of |F|²."""
    bandwidth = 2 * (p.center.norm + 3 * p.width)
    return bandwidth * grid.half_width / p.width / 2 + 24


def synthesize_grid(p: GaussianPacket, grid: SpatialGrid = None,
                    quad: QuadratureSpec = None, guard: float = DOMAIN_GUARD,
                    tol_tail: float = TOL_TAIL, warn: bool = True) -> FieldGrid:
    """Synthesize the field pair on a real-space grid around the packet displacement.

    The plane-wave kernel factorises per axis, so the k-sum is done by successive
    one-axis contractions instead of one exponential per (r, k) pair.
    """
    grid = grid or SpatialGrid()
    quad = quad or QuadratureSpec()
    tail = tail_fraction(half_width=grid.half_width)
    if tail > tol_tail:
        raise TailBoundError(
            f"The real-space cube of half-width {grid.half_width:g}/σ truncates an "
            f"estimated fraction {tail:.3e} of the energy moments (limit {tol_tail:.1e}).",
            truncated_mass=tail)
    if warn and grid.nodes_per_axis < required_nodes(p=p, grid=grid):
        logger.warning("%r may under-resolve the carrier of %r: %d nodes per axis, "
                       "about %.0f needed.", grid, p, grid.nodes_per_axis,
                       required_nodes(p=p, grid=grid))
    k_grid, spectra = _spectral_weights(p=p, quad=quad, guard=guard)
    r_grid = grid.build(centre=p.displacement, width=p.width)
    kernels = [numpy.exp(1j * numpy.outer(x, k)) for x, k in zip(r_grid.axes, k_grid.axes)]
    conjugates = [kernel.conj() for kernel in kernels]
    fields = {}
    for helicity, (positive, negative) in spectra.items():
        fields[helicity] = \
            numpy.einsum("ijlc,ai,bj,dl->abdc", positive, *kernels, optimize=True) \
            + numpy.einsum("ijlc,ai,bj,dl->abdc", negative, *conjugates, optimize=True)
    sample = FieldSample(r=r_grid.points, f_plus=fields[1], f_minus=fields[-1])
    return FieldGrid(grid=r_grid, sample=sample)


def realspace_moment(p: GaussianPacket, grid: SpatialGrid = None, n: int = 0,
                     quad: QuadratureSpec = None) -> float | numpy.ndarray:
    """Integrate the moment Mₙ of the synthesized field in real space."""
    return synthesize_grid(p=p, grid=grid, quad=quad).moment(n=n)


def _deviations(k_space: MomentReport, field: FieldGrid) -> dict[str, tuple]:
    """Compare moments and spread computed along both paths, as relative deviations."""
    m0, m1, m2 = field.moment(n=0), field.moment(n=1), field.moment(n=2)
    scale_1 = max(float(numpy.linalg.norm(k_space.m1)), math.sqrt(k_space.m0 * k_space.m2))
    delta_r = field.spread()
    return {
        "M0": (k_space.m0, m0, abs(m0 - k_space.m0) / k_space.m0),
        "M1": (k_space.m1, m1, float(numpy.linalg.norm(m1 - k_space.m1)) / scale_1),
        "M2": (k_space.m2, m2, abs(m2 - k_space.m2) / k_space.m2),
        "Δr": (k_space.delta_r, delta_r, abs(delta_r - k_space.delta_r) / k_space.delta_r)}


def cross_check(p: GaussianPacket, quad: QuadratureSpec = None, grid: SpatialGrid = None,
                tol_rel: float = TOL_ORACLE, tol_imag: float = TOL_IMAG,
                reference_offset: int = GRID_REFERENCE_OFFSET) -> ComparisonReport:
    """Compare the k-space moments of a packet with the real-space oracle.

    Diagnostics hold the convergence deltas of both sides: the k-space one from
    the moment report and the real-space one from a grid with reference_offset
    fewer nodes per axis.
    """
    quad = quad or QuadratureSpec()
    grid = grid or SpatialGrid()
    start = time()
    k_space = uncertainty(p=p, quad=quad)
    field = synthesize_grid(p=p, grid=grid, quad=quad)
    report = ComparisonReport(name=k_space.name)
    for quantity, (reference, candidate, deviation) in _deviations(
            k_space=k_space, field=field).items():
        report.add(quantity=quantity, reference=reference, candidate=candidate,
                   deviation=deviation, tolerance=tol_rel)
    report.add(quantity="E, B real", reference=0.0,
               candidate=field.sample.realness_residual,
               deviation=field.sample.realness_residual, tolerance=tol_imag)
    report.add(quantity="|F+| = |F-|", reference=0.0,
               candidate=field.sample.modulus_residual,
               deviation=field.sample.modulus_residual, tolerance=tol_imag)

    coarse_nodes = max(grid.nodes_per_axis - reference_offset, MIN_NODES)
    coarse = synthesize_grid(p=p, grid=grid.with_nodes(coarse_nodes), quad=quad, warn=False)
    report.diagnostics = {
        "k_convergence_delta": k_space.convergence_delta,
        "r_convergence_delta": max(
            deviation for _, _, deviation in _deviations(k_space=k_space,
                                                         field=coarse).values()),
        "tail_estimate": tail_fraction(half_width=grid.half_width)}
    logger.info("Oracle for %s in %s: %s", report.name, format_timing(value=time() - start),
                "PASS" if report.passed else f"FAIL {report.diagnostics}")
    return report

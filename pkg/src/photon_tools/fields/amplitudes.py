# coding=utf-8
"""Gaussian amplitude families a₊₁(k), a₋₁(k) with analytic derivatives."""

# Standard library imports:
from collections.abc import Sequence
import logging
import math

# Third party imports:
import numpy

# Local application imports:
from photon_tools.constants import DOMAIN_GUARD, TOL_COVERAGE
from photon_tools.errors import CoverageError, DomainError
from photon_tools.geometry.polarization import KLike, KVec, gauge_phase
from photon_tools.geometry.polarization import gauge_phase_gradient, wave_vectors
from photon_tools.numerics.quadrature import QuadratureSpec, TensorGrid

logger = logging.getLogger(__name__)


class GaussianPacket:
    """Isotropic Gaussian packet a_λ(k) = c_λ N exp(-|k - k0|²/(4σ²) - i k·r0).

    The displacement r0 is where the packet sits in real space at t = 0. With
    normalize set, N = (2πσ²)^(-3/4) so that the energy equals |c₊|² + |c₋|².
    """
    __slots__ = ["name", "center", "width", "weight_plus", "weight_minus", "displacement",
                 "normalize"]

    def __init__(self, center: KLike, width: float, weight_plus: complex = 1.0,
                 weight_minus: complex = 0.0,
                 displacement: Sequence[float] = (0.0, 0.0, 0.0), normalize: bool = True,
                 name: str = ""):
        if not width > 0:
            raise ValueError(f"The packet width must be positive, got {width}.")
        self.name = name
        self.center = KVec.of(center)
        self.width = float(width)
        self.weight_plus = complex(weight_plus)
        self.weight_minus = complex(weight_minus)
        self.displacement = numpy.asarray(displacement, dtype=float)
        self.normalize = normalize

    def __repr__(self) -> str:
        return f"GaussianPacket({self.name or 'unnamed'}: k0={self.center!r}, " \
               f"σ={self.width:g}, c₊={self.weight_plus:g}, c₋={self.weight_minus:g}, " \
               f"r0={self.displacement.tolist()})"

    @property
    def normalization(self) -> float:
        """Provide the prefactor N shared by both helicity amplitudes."""
        return (2 * math.pi * self.width ** 2) ** -0.75 if self.normalize else 1.0

    @property
    def energy(self) -> float:
        """Compute the exact ∫d³k (|a₊₁|² + |a₋₁|²) over the whole k-space."""
        weights = abs(self.weight_plus) ** 2 + abs(self.weight_minus) ** 2
        return weights * self.normalization ** 2 * (2 * math.pi * self.width ** 2) ** 1.5

    def weight(self, helicity: int) -> complex:
        """Provide the weight c_λ of the target helicity."""
        if helicity == 1:
            return self.weight_plus
        elif helicity == -1:
            return self.weight_minus
        raise ValueError(f"Packets only carry helicities ±1, got {helicity}.")

    def scaled(self, factor: complex) -> "GaussianPacket":
        """Copy this packet with both weights multiplied by a common factor."""
        return GaussianPacket(
            center=self.center, width=self.width, weight_plus=factor * self.weight_plus,
            weight_minus=factor * self.weight_minus, displacement=self.displacement,
            normalize=self.normalize, name=self.name)

    def displaced(self, displacement: Sequence[float]) -> "GaussianPacket":
        """Copy this packet with a different real-space displacement r0."""
        return GaussianPacket(
            center=self.center, width=self.width, weight_plus=self.weight_plus,
            weight_minus=self.weight_minus, displacement=displacement,
            normalize=self.normalize, name=self.name)


class AmplitudeSample:
    """Value, gradient ∂a/∂k and Laplacian ∂²a/∂k² of an amplitude at some k."""
    __slots__ = ["value", "gradient", "laplacian"]

    def __init__(self, value: numpy.ndarray, gradient: numpy.ndarray,
                 laplacian: numpy.ndarray):
        self.value = value
        self.gradient = gradient
        self.laplacian = laplacian

    def __repr__(self) -> str:
        return f"AmplitudeSample(value={self.value}, gradient={self.gradient}, " \
               f"laplacian={self.laplacian})"


def eval_amplitude(p: GaussianPacket, k: KLike, helicity: int) -> AmplitudeSample:
    """Evaluate a_λ and its analytic derivatives at one or many wave vectors."""
    k = wave_vectors(k=k)
    offset = k - p.center.array
    variance = p.width ** 2
    exponent = -numpy.sum(offset ** 2, axis=-1) / (4 * variance) - 1j * k @ p.displacement
    value = p.weight(helicity=helicity) * p.normalization * numpy.exp(exponent)
    slope = -offset / (2 * variance) - 1j * p.displacement
    gradient = value[..., None] * slope
    laplacian = value * (numpy.sum(slope * slope, axis=-1) - 3 / (2 * variance))
    return AmplitudeSample(value=value, gradient=gradient, laplacian=laplacian)


def gauge_rotated_sample(sample: AmplitudeSample, k: KLike, helicity: int) \
        -> AmplitudeSample:
    """Transform an amplitude sample into exp(-iλθ) a_λ, with θ of the rotated gauge.

    The phase θ is harmonic away from the k3 axis, so its Laplacian does not appear.
    """
    k = wave_vectors(k=k)
    factor = gauge_phase(k=k).conj() ** helicity
    slope = -1j * helicity * gauge_phase_gradient(k=k)
    value = factor * sample.value
    gradient = factor[..., None] * (sample.gradient + slope * sample.value[..., None])
    laplacian = factor * (sample.laplacian + 2 * numpy.sum(slope * sample.gradient, axis=-1)
                          + numpy.sum(slope * slope, axis=-1) * sample.value)
    return AmplitudeSample(value=value, gradient=gradient, laplacian=laplacian)


def clipped_fraction(box_half_width: float) -> float:
    """Fraction of a Gaussian packet's energy outside a cube of half-width b·σ."""
    outside = math.erfc(box_half_width / math.sqrt(2))
    return -math.expm1(3 * math.log1p(-outside))


def check_support(p: GaussianPacket, quad: QuadratureSpec, guard: float = DOMAIN_GUARD):
    """Check that the whole quadrature box keeps away from k = 0 and the guarded cap."""
    centre = p.center.array
    radius = math.sqrt(3) * quad.box_half_width * p.width
    norm = p.center.norm
    if radius >= norm:
        raise DomainError(f"The k-space box of {p!r} reaches k = 0.")
    polar = math.acos(max(-1.0, min(1.0, centre[2] / norm)))
    widest = min(math.pi, polar + math.asin(radius / norm))
    if 1 + math.cos(widest) < guard:
        raise DomainError(f"The k-space box of {p!r} enters the domain guard around "
                          f"the negative k3 axis.")


def check_coverage(p: GaussianPacket, quad: QuadratureSpec, grid_norm: float,
                   tol: float = TOL_COVERAGE):
    """Compare the quadrature norm with the exact norm of the clipped Gaussian."""
    clipped = clipped_fraction(box_half_width=quad.box_half_width)
    if clipped > tol:
        raise CoverageError(f"The box of {quad.box_half_width:g}σ clips a fraction "
                            f"{clipped:.3e} of the packet energy (limit {tol:.1e}).")
    expected = p.energy * (1 - clipped)
    if abs(grid_norm - expected) > tol * expected:
        raise CoverageError(f"The quadrature norm {grid_norm:.12g} of {p!r} disagrees "
                            f"with the exact {expected:.12g} (tolerance {tol:.1e}).")


def norm_squared(p: GaussianPacket, quad: QuadratureSpec = None,
                 guard: float = DOMAIN_GUARD) -> float:
    """Integrate |a₊₁|² + |a₋₁|² over the quadrature box of the packet."""
    quad = quad or QuadratureSpec()
    check_support(p=p, quad=quad, guard=guard)
    grid = quad.build(centre=p.center.array, width=p.width)
    value = float(grid.integrate(values=energy_density(p=p, grid=grid)))
    logger.debug("Norm of %r on %r: %.15g", p, grid, value)
    check_coverage(p=p, quad=quad, grid_norm=value)
    return value


def energy_density(p: GaussianPacket, grid: TensorGrid) -> numpy.ndarray:
    """Evaluate |a₊₁|² + |a₋₁|² at every node of a k-space grid."""
    points = grid.points
    plus = eval_amplitude(p=p, k=points, helicity=1).value
    minus = eval_amplitude(p=p, k=points, helicity=-1).value
    return numpy.abs(plus) ** 2 + numpy.abs(minus) ** 2

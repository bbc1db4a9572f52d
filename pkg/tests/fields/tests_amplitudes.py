# coding=utf-8
"""Tests for the Gaussian packet amplitudes and their k-space support checks."""

# Standard library imports:
import math
import unittest

# Third party imports:
import numpy

# Local application imports:
from photon_tools.errors import CoverageError, DomainError
from photon_tools.fields.amplitudes import GaussianPacket, clipped_fraction, eval_amplitude
from photon_tools.fields.amplitudes import gauge_rotated_sample, norm_squared
from photon_tools.geometry.polarization import gauge_phase
from photon_tools.numerics.finite_differences import central_gradient, central_laplacian
from photon_tools.numerics.quadrature import QuadratureSpec


class GaussianPacketTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.packet = GaussianPacket(center=(0.0, 0.0, 2.0), width=0.1, weight_plus=0.6,
                                     weight_minus=0.8j, displacement=(1.0, -0.5, 0.2),
                                     name="test")

    def test_non_positive_width(self):
        """Assert packets need a positive width."""
        with self.assertRaises(ValueError):
            GaussianPacket(center=(0.0, 0.0, 1.0), width=0.0)

    def test_energy(self):
        """Assert a normalized packet carries the energy |c₊|² + |c₋|²."""
        self.assertAlmostEqual(1.0, self.packet.energy, places=14)
        unnormalized = GaussianPacket(center=(0.0, 0.0, 1.0), width=0.5, normalize=False)
        self.assertAlmostEqual((2 * math.pi * 0.25) ** 1.5, unnormalized.energy)

    def test_weights(self):
        """Assert only the helicities ±1 carry weights."""
        self.assertEqual(0.6, self.packet.weight(helicity=1))
        self.assertEqual(0.8j, self.packet.weight(helicity=-1))
        with self.assertRaises(ValueError):
            self.packet.weight(helicity=0)

    def test_copies(self):
        """Assert scaled and displaced copies keep everything else unchanged."""
        scaled = self.packet.scaled(factor=2.0)
        self.assertEqual((1.2, 1.6j), (scaled.weight_plus, scaled.weight_minus))
        self.assertAlmostEqual(4.0, scaled.energy, places=13)
        displaced = self.packet.displaced(displacement=(0.0, 0.0, 0.0))
        numpy.testing.assert_array_equal(displaced.displacement, numpy.zeros(3))
        self.assertEqual(self.packet.center, displaced.center)


class EvalAmplitudeTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.packet = GaussianPacket(center=(0.3, -0.2, 2.0), width=0.1,
                                     displacement=(1.0, 2.0, -0.5))
        self.k = numpy.array([0.35, -0.12, 2.05])

    def test_value_at_centre(self):
        """Assert an unphased packet peaks at its centre with a null gradient."""
        packet = GaussianPacket(center=(0.0, 0.0, 2.0), width=0.1)
        sample = eval_amplitude(p=packet, k=(0.0, 0.0, 2.0), helicity=1)
        self.assertAlmostEqual(packet.normalization, complex(sample.value).real)
        numpy.testing.assert_allclose(sample.gradient, numpy.zeros(3), atol=1e-15)
        self.assertAlmostEqual(-150 * packet.normalization, complex(sample.laplacian).real,
                               places=8)

    def test_gradient_matches_finite_differences(self):
        """Assert the analytic gradient of a phased packet matches central differences."""
        sample = eval_amplitude(p=self.packet, k=self.k, helicity=1)
        estimate = central_gradient(
            func=lambda x: eval_amplitude(p=self.packet, k=x, helicity=1).value,
            x=self.k, step=1e-6)
        numpy.testing.assert_allclose(estimate, sample.gradient, rtol=1e-6)

    def test_laplacian_matches_finite_differences(self):
        """Assert the analytic Laplacian of a phased packet matches central differences."""
        sample = eval_amplitude(p=self.packet, k=self.k, helicity=1)
        estimate = central_laplacian(
            func=lambda x: eval_amplitude(p=self.packet, k=x, helicity=1).value,
            x=self.k, step=1e-4)
        self.assertAlmostEqual(0.0, abs(complex(estimate - sample.laplacian))
                               / abs(complex(sample.laplacian)), delta=1e-5)

    def test_vectorized(self):
        """Assert amplitudes are evaluated at many wave vectors at once."""
        k = numpy.stack([self.k, self.k + 0.01])
        sample = eval_amplitude(p=self.packet, k=k, helicity=-1)
        self.assertEqual((2,), sample.value.shape)
        self.assertEqual((2, 3), sample.gradient.shape)

    def test_gauge_rotated_sample(self):
        """Assert the rotated sample holds exp(-iθ)a and its analytic derivatives."""
        sample = eval_amplitude(p=self.packet, k=self.k, helicity=1)
        rotated = gauge_rotated_sample(sample=sample, k=self.k, helicity=1)

        def rotated_value(x: numpy.ndarray) -> numpy.ndarray:
            value = eval_amplitude(p=self.packet, k=x, helicity=1).value
            return gauge_phase(k=x).conj() * value

        numpy.testing.assert_allclose(rotated.value, rotated_value(self.k))
        numpy.testing.assert_allclose(
            central_gradient(func=rotated_value, x=self.k, step=1e-6), rotated.gradient,
            rtol=1e-5)
        laplacian = central_laplacian(func=rotated_value, x=self.k, step=1e-4)
        self.assertLess(abs(complex(laplacian - rotated.laplacian))
                        / abs(complex(rotated.laplacian)), 1e-5)


class SupportTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.packet = GaussianPacket(center=(0.0, 0.0, 2.0), width=0.1,
                                     weight_plus=0.7071067811865476,
                                     weight_minus=0.7071067811865476)

    def test_clipped_fraction(self):
        """Assert the clipped energy outside a cube of half-width bσ."""
        self.assertAlmostEqual(1 - math.erf(1 / math.sqrt(2)) ** 3,
                               clipped_fraction(box_half_width=1.0))
        self.assertLess(clipped_fraction(box_half_width=8.0), 1e-14)

    def test_norm(self):
        """Assert the quadrature norm of a normalized packet is 1."""
        self.assertAlmostEqual(1.0, norm_squared(p=self.packet), places=10)

    def test_box_reaching_origin(self):
        """Assert packets whose box reaches k = 0 are rejected."""
        packet = GaussianPacket(center=(0.0, 0.0, 0.5), width=0.1)
        with self.assertRaises(DomainError):
            norm_squared(p=packet)

    def test_box_entering_guard(self):
        """Assert packets whose box enters the guarded cap are rejected."""
        packet = GaussianPacket(center=(0.05, 0.0, -2.0), width=0.1)
        with self.assertRaises(DomainError):
            norm_squared(p=packet)

    def test_narrow_box(self):
        """Assert a box clipping too much of the packet raises a coverage error."""
        with self.assertRaises(CoverageError):
            norm_squared(p=self.packet, quad=QuadratureSpec(box_half_width=2.0))

    def test_too_few_nodes(self):
        """Assert an under-resolved quadrature raises a coverage error."""
        with self.assertRaises(CoverageError):
            norm_squared(p=self.packet, quad=QuadratureSpec(nodes_per_axis=8))

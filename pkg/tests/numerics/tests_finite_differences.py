# coding=utf-8
"""Tests for the central finite-difference estimators."""

# Standard library imports:
import math
import unittest

# Third party imports:
import numpy

# Local application imports:
from photon_tools.numerics.finite_differences import central_divergence
from photon_tools.numerics.finite_differences import central_gradient
from photon_tools.numerics.finite_differences import central_laplacian
from photon_tools.numerics.finite_differences import observed_order, richardson


class CentralDifferencesTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.x = numpy.array([1.0, 2.0, 3.0])

    def test_gradient_of_scalar(self):
        """Assert the gradient of x1²·x2 at (1, 2, 3) is (4, 1, 0)."""
        gradient = central_gradient(func=lambda x: x[0] ** 2 * x[1], x=self.x, step=1e-4)
        numpy.testing.assert_allclose(gradient, [4.0, 1.0, 0.0], atol=1e-8)

    def test_gradient_of_vector(self):
        """Assert a vector gradient has shape (3, 3) with ∂f_i/∂x_j at [j, i]."""
        gradient = central_gradient(func=lambda x: numpy.array([x[1], 0.0, x[0] * x[2]]),
                                    x=self.x, step=1e-4)
        expected = numpy.array([[0.0, 0.0, 3.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
        numpy.testing.assert_allclose(gradient, expected, atol=1e-8)

    def test_laplacian_of_squared_norm(self):
        """Assert the Laplacian of |x|² is 6."""
        laplacian = central_laplacian(func=lambda x: x @ x, x=self.x, step=1e-3)
        self.assertAlmostEqual(6.0, float(laplacian), delta=1e-6)

    def test_divergence_of_identity(self):
        """Assert the divergence of f(x) = x is 3."""
        self.assertAlmostEqual(3.0, central_divergence(func=lambda x: x, x=self.x, step=1e-4),
                               delta=1e-8)


class RichardsonTests(unittest.TestCase):
    def test_extrapolation_improves_second_derivative(self):
        """Assert extrapolating the second difference of sin cancels its O(h²) error."""
        def estimate(step: float) -> float:
            return (math.sin(0.5 + step) - 2 * math.sin(0.5)
                    + math.sin(0.5 - step)) / step ** 2

        plain = abs(estimate(0.1) + math.sin(0.5))
        extrapolated = abs(richardson(estimator=estimate, step=0.1) + math.sin(0.5))
        self.assertGreater(plain, 1e-4)
        self.assertLess(extrapolated, 1e-6)


class ObservedOrderTests(unittest.TestCase):
    def test_second_order(self):
        """Assert errors divided by four when halving the step give order 2."""
        self.assertAlmostEqual(2.0, observed_order(error_coarse=1e-4, error_fine=2.5e-5))

    def test_custom_ratio(self):
        """Assert the step ratio can be changed."""
        self.assertAlmostEqual(2.0, observed_order(error_coarse=9e-4, error_fine=1e-4,
                                                   ratio=3.0))

    def test_null_error(self):
        """Assert null errors give an undefined order."""
        self.assertTrue(math.isnan(observed_order(error_coarse=1e-4, error_fine=0.0)))

# coding=utf-8
"""Second-order central differences of functions of a single wave vector."""

# Standard library imports:
from collections.abc import Callable
import math

# Third party imports:
import numpy

# Define custom types:
VectorFunc = Callable[[numpy.ndarray], numpy.ndarray]
Estimator = Callable[[float], numpy.ndarray]

# Set constants:
UNIT_STEPS = numpy.eye(3)


def central_gradient(func: VectorFunc, x: numpy.ndarray, step: float) -> numpy.ndarray:
    """Estimate ∂f/∂x_j for each axis j, returned with shape (3, *f.shape)."""
    x = numpy.asarray(x, dtype=float)
    return numpy.stack([
        (func(x + step * unit) - func(x - step * unit)) / (2 * step)
        for unit in UNIT_STEPS])


def central_laplacian(func: VectorFunc, x: numpy.ndarray, step: float) -> numpy.ndarray:
    """Estimate Σ_j ∂²f/∂x_j² using the 7-point stencil."""
    x = numpy.asarray(x, dtype=float)
    centre = func(x)
    return sum(
        (func(x + step * unit) - 2 * centre + func(x - step * unit)) / step ** 2
        for unit in UNIT_STEPS)


def central_divergence(func: VectorFunc, x: numpy.ndarray, step: float) -> float:
    """Estimate Σ_j ∂f_j/∂x_j of a vector field f with three components."""
    jacobian = central_gradient(func=func, x=x, step=step)
    return numpy.trace(jacobian).item()


def richardson(estimator: Estimator, step: float) -> numpy.ndarray:
    """Cancel the O(h²) error of a second-order estimate using the steps h and h/2."""
    return (4 * estimator(step / 2) - estimator(step)) / 3


def observed_order(error_coarse: float, error_fine: float, ratio: float = 2.0) -> float:
    """Compute the convergence order observed when the step is divided by ratio."""
    if error_coarse <= 0 or error_fine <= 0:
        return math.nan
    return math.log(error_coarse / error_fine) / math.log(ratio)

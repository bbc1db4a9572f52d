# coding=utf-8
"""Momentum-space connection A(k) and scalar L(k) of the circular polarization basis."""

# Standard library imports:
import logging

# Third party imports:
import numpy

# Local application imports:
from photon_tools.constants import DOMAIN_GUARD, FD_CROSS_STEP, FD_ORDER_STEP, FD_STEP
from photon_tools.constants import TOL_CROSS_TERM, TOL_FINITE_DIFF, TOL_IDENTITY
from photon_tools.constants import TOL_ORDER
from photon_tools.geometry.polarization import KLike, KVec, check_domain
from photon_tools.geometry.polarization import circular_vectors, gauge_phase
from photon_tools.geometry.polarization import gauge_phase_gradient, guard_ratio
from photon_tools.geometry.polarization import norm_and_sum, wave_vectors
from photon_tools.numerics.finite_differences import central_divergence
from photon_tools.numerics.finite_differences import central_gradient
from photon_tools.numerics.finite_differences import central_laplacian
from photon_tools.numerics.finite_differences import observed_order, richardson
from photon_tools.reports import IdentityReport

# Set constants:
ORDER_NOISE_FLOOR = 1e-12

logger = logging.getLogger(__name__)


def closed_form(k: numpy.ndarray) -> tuple[numpy.ndarray, numpy.ndarray]:
    """Compute A = (-k2, k1, 0)/(|k|(|k| + k3)) and L = -2/(|k|(|k| + k3))."""
    norm, total = norm_and_sum(k=k)
    scale = norm * total
    zeros = numpy.zeros_like(norm)
    connection = numpy.stack([-k[..., 1], k[..., 0], zeros], axis=-1) / scale[..., None]
    return connection, -2 / scale


class ConnectionSample:
    """Connection vector A (a length) and scalar L (an area) at one wave vector."""
    __slots__ = ["k", "connection", "scalar"]

    def __init__(self, k: KLike, guard: float = DOMAIN_GUARD):
        self.k = KVec.of(k)
        array = self.k.array
        check_domain(k=array, guard=guard)
        self.connection, scalar = closed_form(k=array)
        self.scalar = float(scalar)

    def __repr__(self) -> str:
        return f"ConnectionSample({self.k!r}, A={self.connection}, L={self.scalar:.6g})"

    @property
    def identity_residual(self) -> float:
        """Compute the relative residual of L + |A|² = -1/|k|²."""
        norm2 = self.k.norm ** 2
        return abs((self.scalar + self.connection @ self.connection) * norm2 + 1)


def berry_connection(k: KLike, helicity: int = 1, guard: float = DOMAIN_GUARD) \
        -> numpy.ndarray:
    """Compute A_λ(k) = λ A(k) = i [∂e_λ†/∂k] e_λ for λ = ±1."""
    if helicity not in (-1, 1):
        raise ValueError(f"The connection is defined for helicities ±1, got {helicity}.")
    k = wave_vectors(k=k)
    check_domain(k=k, guard=guard)
    return helicity * closed_form(k=k)[0]


def connection_scalar(k: KLike, guard: float = DOMAIN_GUARD) -> numpy.ndarray | float:
    """Compute L(k) = [∂²e₁†/∂k²] e₁ = -2/(|k|(|k| + k3))."""
    k = wave_vectors(k=k)
    check_domain(k=k, guard=guard)
    scalar = closed_form(k=k)[1]
    return float(scalar) if scalar.ndim == 0 else scalar


def gauge_rotated_connection(k: KLike, guard: float = DOMAIN_GUARD) -> numpy.ndarray:
    """Compute A + ∂θ/∂k, the connection of exp(iθ) e₊₁."""
    k = wave_vectors(k=k)
    check_domain(k=k, guard=guard)
    return closed_form(k=k)[0] + gauge_phase_gradient(k=k)


def singular_distance(k: numpy.ndarray) -> float:
    """Distance from k to where e₊₁ stops being analytic: |k| above the k1-k2 plane."""
    return float(numpy.linalg.norm(k) if k[2] >= 0 else numpy.hypot(k[0], k[1]))


def _connection_error(k: numpy.ndarray, step: float) -> float:
    """Compute the scaled finite-difference error of i [∂e₁†/∂k] e₁."""
    distance = singular_distance(k=k)
    e_plus = circular_vectors(k=k, helicity=1)
    gradient = central_gradient(
        func=lambda x: circular_vectors(k=x, helicity=1).conj(), x=k,
        step=step * distance)
    estimate = 1j * gradient @ e_plus
    return float(numpy.max(numpy.abs(estimate - closed_form(k=k)[0]))) * distance


def _scalar_error(k: numpy.ndarray, step: float, extrapolate: bool) -> float:
    """Compute the scaled finite-difference error of [∂²e₁†/∂k²] e₁."""
    distance = singular_distance(k=k)
    e_plus = circular_vectors(k=k, helicity=1)

    def estimate(absolute_step: float) -> numpy.ndarray:
        laplacian = central_laplacian(
            func=lambda x: circular_vectors(k=x, helicity=1).conj(), x=k,
            step=absolute_step)
        return laplacian @ e_plus

    if extrapolate:
        value = richardson(estimator=estimate, step=step * distance)
    else:
        value = estimate(absolute_step=step * distance)
    return abs(complex(value) - float(closed_form(k=k)[1])) * distance ** 2


def observed_orders(k: KLike, h: float = FD_ORDER_STEP) -> dict[str, float]:
    """Measure the convergence order of the A and L finite differences when h is halved."""
    k = wave_vectors(k=k)
    check_domain(k=k, guard=DOMAIN_GUARD)
    orders = {}
    for name, error in (
            ("connection", lambda s: _connection_error(k=k, step=s)),
            ("connection scalar", lambda s: _scalar_error(k=k, step=s, extrapolate=False))):
        coarse, fine = error(h), error(h / 2)
        orders[name] = observed_order(error_coarse=coarse, error_fine=fine) \
            if fine > ORDER_NOISE_FLOOR else numpy.nan
    return orders


def _cross_terms(k: numpy.ndarray, helicity: int, step: float) \
        -> tuple[float, float, float]:
    """Evaluate e_λ†(-k)e_λ(k) and the same contraction of its k-derivatives."""
    rho = float(numpy.hypot(k[0], k[1]))
    e_k = circular_vectors(k=k, helicity=helicity)

    def flipped(x: numpy.ndarray) -> numpy.ndarray:
        return circular_vectors(k=-x, helicity=helicity).conj()

    overlap = abs(flipped(k) @ e_k)
    gradient = richardson(
        estimator=lambda s: central_gradient(func=flipped, x=k, step=s) @ e_k,
        step=step * rho)
    laplacian = richardson(
        estimator=lambda s: central_laplacian(func=flipped, x=k, step=s) @ e_k,
        step=step * rho)
    return (float(overlap), float(numpy.max(numpy.abs(gradient))) * rho,
            abs(complex(laplacian)) * rho ** 2)


def verify_connection_identities(k: KLike, h: float = FD_STEP,
                                 tol_fd: float = TOL_FINITE_DIFF,
                                 tol_cross: float = TOL_CROSS_TERM,
                                 tol_identity: float = TOL_IDENTITY,
                                 guard: float = DOMAIN_GUARD,
                                 cross_step: float = FD_CROSS_STEP,
                                 order_step: float | None = None) -> IdentityReport:
    """Evaluate the residuals of the connection identities at a single wave vector.

    Finite-difference steps are relative to the distance d from k to the nearest
    singular axis, and each residual is made dimensionless with the matching power
    of d. Second derivatives are Richardson-extrapolated from the steps 10h and 5h.
    The cross terms with e_λ(-k) are only evaluated where -k satisfies the guard.
    """
    sample = ConnectionSample(k=k, guard=guard)
    k = sample.k.array
    distance = singular_distance(k=k)
    rho = float(numpy.hypot(k[0], k[1]))
    report = IdentityReport(name=f"connection identities at {sample.k!r}")

    report.add("connection = i(de+)'e+", _connection_error(k=k, step=h), tol_fd)
    e_minus = circular_vectors(k=k, helicity=-1)
    gradient = central_gradient(
        func=lambda x: circular_vectors(k=x, helicity=-1).conj(), x=k, step=h * distance)
    report.add("connection of helicity -1",
               numpy.max(numpy.abs(1j * gradient @ e_minus + sample.connection)) * distance,
               tol_fd)
    report.add("scalar = (d2e+)'e+", _scalar_error(k=k, step=10 * h, extrapolate=True),
               tol_fd)
    report.add("L + |A|^2 = -1/|k|^2", sample.identity_residual, tol_identity)
    divergence = central_divergence(
        func=lambda x: closed_form(k=x)[0], x=k, step=h * distance)
    report.add("connection divergence-free", abs(divergence) * distance ** 2, tol_fd)

    if rho > 0:
        rotated = central_gradient(
            func=lambda x: (gauge_phase(k=x) * circular_vectors(k=x, helicity=1)).conj(),
            x=k, step=h * rho)
        estimate = 1j * rotated @ (gauge_phase(k=k) * circular_vectors(k=k, helicity=1))
        expected = sample.connection + gauge_phase_gradient(k=k)
        report.add("rotated connection = A + dtheta",
                   numpy.max(numpy.abs(estimate - expected)) * rho, tol_fd)
    else:
        report.skip("rotated connection = A + dtheta", tol_fd, reason="k on the k3 axis")

    flipped_valid = rho > 0 and float(guard_ratio(-k)) >= guard
    for helicity in (1, -1):
        names = [f"cross overlap ({helicity:+d})", f"cross gradient ({helicity:+d})",
                 f"cross laplacian ({helicity:+d})"]
        if flipped_valid:
            for name, residual in zip(names, _cross_terms(k=k, helicity=helicity,
                                                          step=cross_step)):
                report.add(name, residual, tol_cross)
        else:
            logger.debug("Skipping cross terms at %r: -k is inside the guard.", sample.k)
            for name in names:
                report.skip(name, tol_cross, reason="-k inside the domain guard")

    if order_step is not None:
        for name, order in observed_orders(k=k, h=order_step).items():
            identity = f"finite-difference order of {name}"
            if numpy.isnan(order):
                report.skip(identity, TOL_ORDER, reason="error below round-off")
            else:
                report.add(identity, abs(order - 2), TOL_ORDER)
    return report


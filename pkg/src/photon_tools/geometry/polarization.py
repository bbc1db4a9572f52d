# coding=utf-8
"""Linear and circular polarization bases, spin matrices and helicity of photons."""

# Standard library imports:
from collections.abc import Iterator, Sequence

# Third party imports:
import numpy

# Local application imports:
from photon_tools.constants import DOMAIN_GUARD, TOL_IDENTITY
from photon_tools.errors import DomainError
from photon_tools.reports import IdentityReport

# Set constants:
SQRT_HALF = numpy.sqrt(0.5)
HELICITIES = (-1, 0, 1)


class KVec:
    """Real wave vector (k1, k2, k3), with ω = |k| in natural units."""
    __slots__ = ["k1", "k2", "k3"]

    def __init__(self, k1: float, k2: float, k3: float):
        self.k1 = float(k1)
        self.k2 = float(k2)
        self.k3 = float(k3)

    def __repr__(self) -> str:
        return f"KVec({self.k1:g}, {self.k2:g}, {self.k3:g})"

    def __iter__(self) -> Iterator[float]:
        return iter((self.k1, self.k2, self.k3))

    def __eq__(self, other: "KVec") -> bool:
        return tuple(self) == tuple(other)

    def __hash__(self) -> int:
        return hash(tuple(self))

    def __neg__(self) -> "KVec":
        return KVec(k1=-self.k1, k2=-self.k2, k3=-self.k3)

    @property
    def array(self) -> numpy.ndarray:
        """Provide the components as a float array of shape (3,)."""
        return numpy.array([self.k1, self.k2, self.k3])

    @property
    def norm(self) -> float:
        """Compute |k|, which is also the angular frequency ω."""
        return float(numpy.linalg.norm(self.array))

    @property
    def guard_ratio(self) -> float:
        """Compute (|k| + k3)/|k|, which vanishes on the negative k3 axis."""
        return float(guard_ratio(self.array))

    @classmethod
    def of(cls, value: "KLike") -> "KVec":
        """Build a KVec from another KVec or from any three-item sequence."""
        if isinstance(value, KVec):
            return value
        k1, k2, k3 = numpy.asarray(value, dtype=float)
        return KVec(k1=k1, k2=k2, k3=k3)


# Define custom types:
KLike = KVec | Sequence[float] | numpy.ndarray


def wave_vectors(k: KLike) -> numpy.ndarray:
    """Convert a KVec or an array-like of shape (..., 3) into a float array."""
    if isinstance(k, KVec):
        return k.array
    k = numpy.asarray(k, dtype=float)
    if k.shape[-1:] != (3,):
        raise ValueError(f"Wave vectors need three components, got shape {k.shape}.")
    return k


def norm_and_sum(k: numpy.ndarray) -> tuple[numpy.ndarray, numpy.ndarray]:
    """Compute |k| and |k| + k3, the latter without cancellation when k3 < 0."""
    k1, k2, k3 = k[..., 0], k[..., 1], k[..., 2]
    norm = numpy.sqrt(k1 ** 2 + k2 ** 2 + k3 ** 2)
    with numpy.errstate(divide="ignore", invalid="ignore"):
        lower = (k1 ** 2 + k2 ** 2) / (norm - k3)
    return norm, numpy.where(k3 >= 0, norm + k3, lower)


def guard_ratio(k: numpy.ndarray) -> numpy.ndarray:
    """Compute (|k| + k3)/|k| for every wave vector."""
    norm, total = norm_and_sum(k=k)
    with numpy.errstate(divide="ignore", invalid="ignore"):
        return total / norm


def check_domain(k: numpy.ndarray, guard: float = 0.0):
    """Reject null wave vectors, the negative k3 axis and the guarded cap around it."""
    norm, total = norm_and_sum(k=k)
    if numpy.any(norm == 0):
        raise DomainError("The wave vector k = 0 has no polarization basis.")
    if numpy.any(~(total > 0)):
        raise DomainError("The polarization basis is singular on the negative k3 axis.")
    if guard > 0 and numpy.any(total / norm < guard):
        worst = float(numpy.min(total / norm))
        raise DomainError(f"The wave vector violates the domain guard: "
                          f"(|k| + k3)/|k| = {worst:.3e} < {guard:g}.")


def linear_basis(k: numpy.ndarray) -> numpy.ndarray:
    """Compute ε(k, 1), ε(k, 2), ε(k, 3) stacked as (..., 3, 3), without validation.

    The transverse vectors are written with |k| + k3 in the denominator, which
    gives the exact limits (1, 0, 0) and (0, 1, 0) on the positive k3 axis.
    """
    k1, k2, k3 = k[..., 0], k[..., 1], k[..., 2]
    norm, total = norm_and_sum(k=k)
    eps1 = numpy.stack([norm - k1 ** 2 / total, -k1 * k2 / total, -k1], axis=-1)
    eps2 = numpy.stack([-k1 * k2 / total, norm - k2 ** 2 / total, -k2], axis=-1)
    eps3 = numpy.stack([k1, k2, k3], axis=-1)
    return numpy.stack([eps1, eps2, eps3], axis=-2) / norm[..., None, None]


def circular_vectors(k: numpy.ndarray, helicity: int) -> numpy.ndarray:
    """Compute e_λ(k) with shape (..., 3), without validation."""
    eps = linear_basis(k=k)
    if helicity == 0:
        return eps[..., 2, :].astype(complex)
    e_plus = SQRT_HALF * (eps[..., 0, :] + 1j * eps[..., 1, :])
    if helicity == 1:
        return e_plus
    elif helicity == -1:
        return e_plus.conj()
    raise ValueError(f"The helicity must be -1, 0 or 1, got {helicity}.")


def linear_polarization(k: KLike, i: int) -> numpy.ndarray:
    """Compute the linear polarization vector ε(k, i) for i = 1, 2, 3."""
    if i not in (1, 2, 3):
        raise ValueError(f"The linear polarization index must be 1, 2 or 3, got {i}.")
    k = wave_vectors(k=k)
    check_domain(k=k)
    return linear_basis(k=k)[..., i - 1, :]


def circular_polarization(k: KLike, helicity: int, guard: float = DOMAIN_GUARD) \
        -> numpy.ndarray:
    """Compute the circular polarization vector e_λ(k) for λ = -1, 0, 1."""
    k = wave_vectors(k=k)
    check_domain(k=k, guard=guard)
    return circular_vectors(k=k, helicity=helicity)


class PolarizationBasis:
    """Linear and circular polarization vectors at a single wave vector."""
    __slots__ = ["k", "eps1", "eps2", "eps3", "e_plus", "e_minus", "e_zero"]

    def __init__(self, k: KLike, guard: float = DOMAIN_GUARD):
        self.k = KVec.of(k)
        array = self.k.array
        check_domain(k=array, guard=guard)
        self.eps1, self.eps2, self.eps3 = linear_basis(k=array)
        self.e_plus = circular_vectors(k=array, helicity=1)
        self.e_minus = circular_vectors(k=array, helicity=-1)
        self.e_zero = circular_vectors(k=array, helicity=0)

    def __repr__(self) -> str:
        return f"PolarizationBasis({self.k!r})"

    @property
    def linear(self) -> numpy.ndarray:
        """Stack ε(k, 1), ε(k, 2), ε(k, 3) as the rows of a 3x3 array."""
        return numpy.stack([self.eps1, self.eps2, self.eps3])

    @property
    def circular(self) -> dict[int, numpy.ndarray]:
        """Map each helicity to its circular polarization vector."""
        return {1: self.e_plus, -1: self.e_minus, 0: self.e_zero}


def spin_matrices() -> numpy.ndarray:
    """Build τ1, τ2, τ3 with (τ_j)_kl = -i ε_jkl, stacked as a (3, 3, 3) array."""
    levi_civita = numpy.zeros((3, 3, 3))
    for j, k, l in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        levi_civita[j, k, l] = 1
        levi_civita[j, l, k] = -1
    return -1j * levi_civita


def helicity_apply(k: KLike, v: numpy.ndarray) -> numpy.ndarray:
    """Apply the helicity operator τ·k/|k| to the complex vector(s) v."""
    k = wave_vectors(k=k)
    norm = numpy.linalg.norm(k, axis=-1)
    if numpy.any(norm == 0):
        raise DomainError("The helicity operator is undefined at k = 0.")
    direction = k / norm[..., None]
    operator = numpy.einsum("...j,jkl->...kl", direction, spin_matrices())
    return numpy.einsum("...kl,...l->...k", operator, v)


def gauge_phase(k: KLike) -> numpy.ndarray:
    """Compute the unit phase exp(iθ) = -(k1 - i k2)/√(k1² + k2²)."""
    k = wave_vectors(k=k)
    rho = numpy.hypot(k[..., 0], k[..., 1])
    if numpy.any(rho == 0):
        raise DomainError("The gauge phase is undefined on the k3 axis.")
    return -(k[..., 0] - 1j * k[..., 1]) / rho


def gauge_phase_gradient(k: KLike) -> numpy.ndarray:
    """Compute ∂θ/∂k = (k2, -k1, 0)/(k1² + k2²) for the phase of gauge_phase."""
    k = wave_vectors(k=k)
    rho2 = k[..., 0] ** 2 + k[..., 1] ** 2
    if numpy.any(rho2 == 0):
        raise DomainError("The gauge phase is undefined on the k3 axis.")
    zeros = numpy.zeros_like(rho2)
    return numpy.stack([k[..., 1], -k[..., 0], zeros], axis=-1) / rho2[..., None]


def gauge_rotated_polarization(k: KLike) -> numpy.ndarray:
    """Compute exp(iθ) e₊₁(k), the positive helicity vector in the rotated gauge."""
    k = wave_vectors(k=k)
    phase = gauge_phase(k=k)
    return phase[..., None] * circular_vectors(k=k, helicity=1)


def riemann_silberstein_fields(f_plus: numpy.ndarray, f_minus: numpy.ndarray) \
        -> tuple[numpy.ndarray, numpy.ndarray]:
    """Recover E = (F⁽¹⁾ + F⁽⁻¹⁾)/√2 and B = (F⁽¹⁾ - F⁽⁻¹⁾)/(i√2)."""
    e_field = SQRT_HALF * (f_plus + f_minus)
    b_field = SQRT_HALF * (f_plus - f_minus) / 1j
    return e_field, b_field


def verify_basis_identities(k: KLike, tol: float = TOL_IDENTITY,
                            guard: float = DOMAIN_GUARD) -> IdentityReport:
    """Evaluate the residuals of every algebraic identity of the polarization bases."""
    basis = PolarizationBasis(k=k, guard=guard)
    k = basis.k.array
    norm = numpy.linalg.norm(k)
    direction = k / norm
    identity = numpy.eye(3)
    eps = basis.linear
    circular = numpy.stack([basis.circular[h] for h in HELICITIES])
    tau = spin_matrices()

    def worst(value: numpy.ndarray) -> float:
        return float(numpy.max(numpy.abs(value)))

    report = IdentityReport(name=f"basis identities at {basis.k!r}")
    report.add("linear orthonormality", worst(eps @ eps.T - identity), tol)
    report.add("linear completeness", worst(eps.T @ eps - identity), tol)
    report.add("circular orthonormality",
               worst(circular.conj() @ circular.T - identity), tol)
    report.add("circular completeness",
               worst(numpy.einsum("li,lj->ij", circular, circular.conj()) - identity), tol)
    report.add("e(-1) = conj e(+1)", worst(basis.e_minus - basis.e_plus.conj()), tol)
    for helicity in HELICITIES:
        vector = basis.circular[helicity]
        report.add(f"helicity {helicity:+d} eigenvector",
                   worst(helicity_apply(k=k, v=vector) - helicity * vector), tol)
    report.add("eps1 x eps2 = k/|k|", worst(numpy.cross(eps[0], eps[1]) - direction), tol)
    report.add("k x eps1 = |k| eps2",
               worst(numpy.cross(direction, eps[0]) - eps[1]), tol)
    report.add("k x eps2 = -|k| eps1",
               worst(numpy.cross(direction, eps[1]) + eps[0]), tol)
    report.add("k x eps3 = 0", worst(numpy.cross(direction, eps[2])), tol)
    report.add("spin matrices hermitian",
               worst(tau - numpy.conj(numpy.transpose(tau, axes=(0, 2, 1)))), tol)
    commutators = numpy.einsum("aij,bjk->abik", tau, tau)
    commutators = commutators - numpy.transpose(commutators, axes=(1, 0, 2, 3))
    expected = 1j * numpy.einsum("abc,cik->abik", 1j * tau, tau)
    report.add("spin algebra", worst(commutators - expected), tol)
    return report

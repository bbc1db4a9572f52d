# coding=utf-8
"""Exceptions raised by the photon_tools package."""


class PhotonToolsError(Exception):
    """Base class for all errors raised by photon_tools."""


class DomainError(PhotonToolsError, ValueError):
    """A wave vector lies outside the domain where a quantity is defined."""


class CoverageError(PhotonToolsError, ValueError):
    """A k-space quadrature box does not cover the effective support of a packet."""


class TailBoundError(PhotonToolsError, ValueError):
    """A real-space grid truncates too much of the field energy."""
    def __init__(self, message: str, truncated_mass: float):
        super().__init__(message)
        self.truncated_mass = truncated_mass


class QuadratureError(PhotonToolsError, ValueError):
    """A quadrature result violates a structural property of the moments."""


class ConfigError(PhotonToolsError, ValueError):
    """A run configuration file is malformed or holds an invalid value."""


class AlgebraMismatchError(PhotonToolsError, AssertionError):
    """A derived commutator differs from its expected exact value."""
    def __init__(self, message: str, residual):
        super().__init__(f"{message}: residual {residual}")
        self.residual = residual

# coding=utf-8
"""Reproducible random wave vectors outside the guarded cap around the -k3 axis."""

# Third party imports:
import numpy

# Local application imports:
from photon_tools.constants import DOMAIN_GUARD, K_NORM_RANGE


def sample_wave_vectors(rng: numpy.random.Generator, count: int,
                        norm_range: tuple[float, float] = K_NORM_RANGE,
                        guard: float = DOMAIN_GUARD, two_sided: bool = False) \
        -> numpy.ndarray:
    """Draw wave vectors with log-uniform norm and a uniform, guarded direction.

    The guard keeps (|k| + k3)/|k| = 1 + cos(polar angle) above its value, so the
    polar cosine is drawn from [guard - 1, 1]. With two_sided set, the same cap is
    also removed around the +k3 axis, which keeps -k valid as well.
    """
    low, high = numpy.log(norm_range[0]), numpy.log(norm_range[1])
    norms = numpy.exp(rng.uniform(low=low, high=high, size=count))
    upper = 1 - guard if two_sided else 1.0
    cos_polar = rng.uniform(low=guard - 1, high=upper, size=count)
    azimuth = rng.uniform(low=0, high=2 * numpy.pi, size=count)
    sin_polar = numpy.sqrt(1 - cos_polar ** 2)
    directions = numpy.stack([
        sin_polar * numpy.cos(azimuth), sin_polar * numpy.sin(azimuth), cos_polar],
        axis=-1)
    return norms[:, None] * directions

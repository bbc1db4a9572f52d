# coding=utf-8
"""Verification tools for photon polarization algebra and energy-density moments."""

from photon_tools.config import RunConfig, load_config
from photon_tools.fields import GaussianPacket, cross_check, uncertainty
from photon_tools.geometry.polarization import PolarizationBasis
from photon_tools import algebra, fields, geometry, numerics

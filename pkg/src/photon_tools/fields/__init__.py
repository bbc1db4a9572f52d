# coding=utf-8
"""Gaussian photon packets, their energy-density moments and the real-space oracle."""

from photon_tools.fields.amplitudes import GaussianPacket
from photon_tools.fields.moments import MomentReport, uncertainty
from photon_tools.fields.realspace_oracle import cross_check

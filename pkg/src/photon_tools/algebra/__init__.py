# coding=utf-8
"""Exact symbolic verification of the photon mode commutators."""

from photon_tools.algebra.mode_algebra import verify_transverse_commutators

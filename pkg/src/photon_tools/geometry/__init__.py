# coding=utf-8
"""Polarization bases of photons and their momentum-space connection."""

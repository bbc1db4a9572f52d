# coding=utf-8
"""Tests for the PhotonMomentTools codebase."""

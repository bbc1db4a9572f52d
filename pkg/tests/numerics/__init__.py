# coding=utf-8
"""Tests for the quadrature, finite-difference and sampling tools."""

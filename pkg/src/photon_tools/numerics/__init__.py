# coding=utf-8
"""Quadrature rules, finite differences and sampling shared by all checks."""

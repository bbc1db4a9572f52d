# coding=utf-8
"""Tests for the symbolic mode algebra."""

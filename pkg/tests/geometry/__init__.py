# coding=utf-8
"""Tests for the polarization bases and their momentum-space connection."""

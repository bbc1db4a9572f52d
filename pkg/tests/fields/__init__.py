# coding=utf-8
"""Tests for the packet amplitudes, their moments and the real-space oracle."""

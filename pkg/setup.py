# coding=utf-8
"""Setup module."""

# Third party imports:
import setuptools


if __name__ == "__main__":
    setuptools.setup()

# coding=utf-8
"""Run the photon-tools command line with `python -m photon_tools`."""

# Standard library imports:
import sys

# Local application imports:
from photon_tools.cli import main

if __name__ == "__main__":
    sys.exit(main())

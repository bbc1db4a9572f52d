# coding=utf-8
"""Constant values, default settings and string templates used in other modules."""

# Standard library imports:
from string import Template

FORMAT_VERSION = 1

# Default tolerances:
TOL_IDENTITY = 1e-12
TOL_FINITE_DIFF = 1e-6
TOL_CROSS_TERM = 1e-8
TOL_ORACLE = 1e-3
TOL_IMAG = 1e-10
TOL_GAUGE = 1e-10
TOL_TAIL = 1e-4
TOL_ORDER = 0.2
TOL_COVERAGE = 1e-6

# Default domain guard and finite-difference steps (relative to the axis distance):
DOMAIN_GUARD = 1e-3
FD_STEP = 1e-4
FD_ORDER_STEP = 1e-2
FD_CROSS_STEP = 5e-3

# Default k-space and r-space quadrature settings:
QUAD_NODES = 32
QUAD_REFERENCE_NODES = 24
BOX_HALF_WIDTH = 8.0
GRID_NODES = 96
GRID_HALF_WIDTH = 2.5
GRID_REFERENCE_OFFSET = 16
MIN_NODES = 8

# Default random sampling settings:
SEED = 20240917
SAMPLES = 10_000
CONNECTION_SAMPLES = 1_000
ORDER_SAMPLES = 8
K_NORM_RANGE = (1e-2, 1e2)

# Report templates:
ROW_SKIPPED = Template("skipped: $reason")
PACKET_SECTION = Template("packet.$name")

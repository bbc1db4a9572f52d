# coding=utf-8
"""Tensor-product Gauss-Legendre rules over cubes in k-space and in real space."""

# Standard library imports:
import logging

# Third party imports:
import numpy
from numpy.polynomial.legendre import leggauss

# Local application imports:
from photon_tools.constants import BOX_HALF_WIDTH, GRID_HALF_WIDTH, GRID_NODES
from photon_tools.constants import MIN_NODES, QUAD_NODES

logger = logging.getLogger(__name__)


def gauss_legendre_axis(centre: float, half_width: float, nodes: int) \
        -> tuple[numpy.ndarray, numpy.ndarray]:
    """Map the Gauss-Legendre rule with the given nodes onto [centre ± half_width]."""
    locs, weights = leggauss(nodes)
    return centre + half_width * locs, half_width * weights


class TensorGrid:
    """Tensor-product Gauss-Legendre rule over an axis-aligned cube."""
    __slots__ = ["centre", "half_width", "nodes", "axes", "axis_weights"]

    def __init__(self, centre: numpy.ndarray, half_width: float, nodes: int):
        self.centre = numpy.asarray(centre, dtype=float)
        self.half_width = float(half_width)
        self.nodes = nodes
        rules = [gauss_legendre_axis(centre=c, half_width=self.half_width, nodes=nodes)
                 for c in self.centre]
        self.axes = tuple(locs for locs, _ in rules)
        self.axis_weights = tuple(weights for _, weights in rules)

    def __repr__(self) -> str:
        return f"TensorGrid({self.nodes}^3 nodes, centre={self.centre}, " \
               f"half_width={self.half_width:g})"

    @property
    def points(self) -> numpy.ndarray:
        """Provide all nodes as a (nodes, nodes, nodes, 3) array, axes in 'ij' order."""
        return numpy.stack(numpy.meshgrid(*self.axes, indexing="ij"), axis=-1)

    @property
    def weights(self) -> numpy.ndarray:
        """Provide the product weights as a (nodes, nodes, nodes) array."""
        wx, wy, wz = self.axis_weights
        return wx[:, None, None] * wy[None, :, None] * wz[None, None, :]

    def integrate(self, values: numpy.ndarray) -> numpy.ndarray:
        """Integrate nodal values of shape (nodes, nodes, nodes, ...) over the cube."""
        return numpy.einsum("abc,abc...->...", self.weights, values)


class QuadratureSpec:
    """Gauss-Legendre k-space rule, with the box half-width measured in packet widths."""
    __slots__ = ["nodes_per_axis", "box_half_width"]

    def __init__(self, nodes_per_axis: int = QUAD_NODES,
                 box_half_width: float = BOX_HALF_WIDTH):
        if nodes_per_axis < MIN_NODES:
            raise ValueError(f"At least {MIN_NODES} nodes per axis are required, "
                             f"got {nodes_per_axis}.")
        if box_half_width <= 0:
            raise ValueError(f"The box half-width must be positive, got {box_half_width}.")
        self.nodes_per_axis = nodes_per_axis
        self.box_half_width = box_half_width

    def __repr__(self) -> str:
        return f"QuadratureSpec(nodes_per_axis={self.nodes_per_axis}, " \
               f"box_half_width={self.box_half_width:g})"

    def with_nodes(self, nodes_per_axis: int) -> "QuadratureSpec":
        """Copy this rule with a different number of nodes per axis."""
        return QuadratureSpec(nodes_per_axis=nodes_per_axis,
                              box_half_width=self.box_half_width)

    def build(self, centre: numpy.ndarray, width: float) -> TensorGrid:
        """Build the k-space grid for a packet with the given centre and width."""
        grid = TensorGrid(centre=centre, half_width=self.box_half_width * width,
                          nodes=self.nodes_per_axis)
        logger.debug("Built k-space %r", grid)
        return grid


class SpatialGrid:
    """Gauss-Legendre real-space rule, with the cube half-width measured in 1/width."""
    __slots__ = ["nodes_per_axis", "half_width"]

    def __init__(self, nodes_per_axis: int = GRID_NODES,
                 half_width: float = GRID_HALF_WIDTH):
        if nodes_per_axis < MIN_NODES:
            raise ValueError(f"At least {MIN_NODES} nodes per axis are required, "
                             f"got {nodes_per_axis}.")
        if half_width <= 0:
            raise ValueError(f"The grid half-width must be positive, got {half_width}.")
        self.nodes_per_axis = nodes_per_axis
        self.half_width = half_width

    def __repr__(self) -> str:
        return f"SpatialGrid(nodes_per_axis={self.nodes_per_axis}, " \
               f"half_width={self.half_width:g})"

    def with_nodes(self, nodes_per_axis: int) -> "SpatialGrid":
        """Copy this rule with a different number of nodes per axis."""
        return SpatialGrid(nodes_per_axis=nodes_per_axis, half_width=self.half_width)

    def build(self, centre: numpy.ndarray, width: float) -> TensorGrid:
        """Build the real-space grid around a packet's centroid for a k-space width."""
        grid = TensorGrid(centre=centre, half_width=self.half_width / width,
                          nodes=self.nodes_per_axis)
        logger.debug("Built real-space %r", grid)
        return grid

# coding=utf-8
"""Load and validate run configurations from INI files."""

# Standard library imports:
from collections.abc import Callable
import configparser
import copy
import logging
from pathlib import Path
from typing import Any

# Local application imports:
from photon_tools.constants import PACKET_SECTION
from photon_tools.errors import ConfigError
from photon_tools.fields.amplitudes import GaussianPacket
from photon_tools.numerics.quadrature import QuadratureSpec, SpatialGrid

# Set constants:
DATA_PATH = Path(__file__).parent / "data"
DEFAULT_CONFIG = DATA_PATH / "default_config.ini"

logger = logging.getLogger(__name__)


class Tolerances:
    """Pass thresholds of every check run from the command line."""
    __slots__ = ["identity", "finite_difference", "cross_term", "oracle", "imaginary"]

    def __init__(self, identity: float, finite_difference: float, cross_term: float,
                 oracle: float, imaginary: float):
        self.identity = identity
        self.finite_difference = finite_difference
        self.cross_term = cross_term
        self.oracle = oracle
        self.imaginary = imaginary
        for name in self.__slots__:
            if not getattr(self, name) > 0:
                raise ValueError(f"The {name} tolerance must be positive, "
                                 f"got {getattr(self, name)}.")

    def __repr__(self) -> str:
        return "Tolerances(" + ", ".join(
            f"{name}={getattr(self, name):.1e}" for name in self.__slots__) + ")"


class RunConfig:
    """Everything a batch run needs: sampling, tolerances, grids and packets."""
    __slots__ = ["seed", "samples", "connection_samples", "tolerances", "quadrature",
                 "reference_nodes", "grid", "step", "order_step", "guard", "packets",
                 "source"]

    def __init__(self, seed: int, samples: int, connection_samples: int,
                 tolerances: Tolerances, quadrature: QuadratureSpec, reference_nodes: int,
                 grid: SpatialGrid, step: float, order_step: float, guard: float,
                 packets: list[GaussianPacket], source: str = ""):
        self.seed = seed
        self.samples = samples
        self.connection_samples = connection_samples
        self.tolerances = tolerances
        self.quadrature = quadrature
        self.reference_nodes = reference_nodes
        self.grid = grid
        self.step = step
        self.order_step = order_step
        self.guard = guard
        self.packets = packets
        self.source = source

    def __repr__(self) -> str:
        return f"RunConfig({self.source or 'defaults'}: seed={self.seed}, " \
               f"samples={self.samples}, {len(self.packets)} packets)"

    def with_overrides(self, seed: int = None, samples: int = None, nodes: int = None,
                       tol: float = None) -> "RunConfig":
        """Copy this configuration, replacing the values given from the command line."""
        config = copy.copy(self)
        if seed is not None:
            config.seed = seed
        if samples is not None:
            if samples < 1:
                raise ConfigError(f"At least one sample is required, got {samples}.")
            config.samples = samples
        if nodes is not None:
            try:
                config.quadrature = self.quadrature.with_nodes(nodes_per_axis=nodes)
            except ValueError as error:
                raise ConfigError(f"Invalid --nodes override: {error}") from error
        if tol is not None:
            if not tol > 0:
                raise ConfigError(f"The identity tolerance must be positive, got {tol}.")
            config.tolerances = copy.copy(self.tolerances)
            config.tolerances.identity = tol
        return config


def _read_parser(config_file: Path | None) -> configparser.ConfigParser:
    """Read the packaged defaults, then the user file on top of them."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    with open(file=DEFAULT_CONFIG, mode="r", encoding="utf-8") as file:
        parser.read_file(file, source=str(DEFAULT_CONFIG))
    if config_file is not None:
        try:
            with open(file=config_file, mode="r", encoding="utf-8") as file:
                parser.read_file(file, source=str(config_file))
        except OSError as error:
            raise ConfigError(f"Cannot read the config file {config_file}: {error}") \
                from error
        except configparser.ParsingError as error:
            lines = ", ".join(str(line) for line, _ in error.errors)
            raise ConfigError(f"Malformed config file {config_file} at line(s) "
                              f"{lines}.") from error
        except configparser.Error as error:
            raise ConfigError(f"Malformed config file {config_file}: {error}") from error
    return parser


def _get(parser: configparser.ConfigParser, section: str, field: str,
         convert: Callable[[str], Any]) -> Any:
    """Read one field, naming its section and field in any error."""
    try:
        return convert(parser.get(section, field))
    except (configparser.NoSectionError, configparser.NoOptionError) as error:
        raise ConfigError(f"Missing field [{section}] {field}.") from error
    except ValueError as error:
        raise ConfigError(f"Invalid value for [{section}] {field}: {error}") from error


def _vector(value: str) -> tuple[float, float, float]:
    """Parse a comma-separated 3-vector."""
    components = tuple(float(item) for item in value.split(","))
    if len(components) != 3:
        raise ValueError(f"expected three comma-separated numbers, got {value!r}")
    return components


def _names(value: str) -> list[str]:
    """Parse a comma-separated list of names."""
    return [item.strip() for item in value.split(",") if item.strip()]


def _boolean(value: str) -> bool:
    """Parse a boolean the way configparser does."""
    states = configparser.ConfigParser.BOOLEAN_STATES
    if value.lower() not in states:
        raise ValueError(f"expected a boolean, got {value!r}")
    return states[value.lower()]


def _load_packet(parser: configparser.ConfigParser, name: str) -> GaussianPacket:
    """Build the packet described in a [packet.NAME] section."""
    section = PACKET_SECTION.substitute(name=name)
    if not parser.has_section(section):
        raise ConfigError(f"Packet {name!r} is listed in [run] packets but has no "
                          f"[{section}] section.")
    fields = {"center": _get(parser, section, "center", _vector),
              "width": _get(parser, section, "sigma", float),
              "weight_plus": _get(parser, section, "weight_plus", complex),
              "weight_minus": _get(parser, section, "weight_minus", complex),
              "displacement": _get(parser, section, "displacement", _vector),
              "normalize": _get(parser, section, "normalize", _boolean)}
    try:
        return GaussianPacket(name=name, **fields)
    except ValueError as error:
        raise ConfigError(f"Invalid [{section}]: {error}") from error


def load_config(config_file: Path | str = None) -> RunConfig:
    """Load a run configuration, falling back to the packaged defaults field by field."""
    config_file = Path(config_file) if config_file is not None else None
    parser = _read_parser(config_file=config_file)
    try:
        tolerances = Tolerances(**{
            name: _get(parser, "tolerances", name, float) for name in Tolerances.__slots__})
        quadrature = QuadratureSpec(
            nodes_per_axis=_get(parser, "quadrature", "nodes", int),
            box_half_width=_get(parser, "quadrature", "box", float))
        grid = SpatialGrid(nodes_per_axis=_get(parser, "grid", "nodes", int),
                           half_width=_get(parser, "grid", "half_width", float))
    except ConfigError:
        raise
    except ValueError as error:
        raise ConfigError(str(error)) from error
    reference_nodes = _get(parser, "quadrature", "reference_nodes", int)
    if reference_nodes < 8:
        raise ConfigError(f"Invalid value for [quadrature] reference_nodes: at least 8 "
                          f"nodes per axis are required, got {reference_nodes}.")
    guard = _get(parser, "finite_differences", "domain_guard", float)
    step = _get(parser, "finite_differences", "step", float)
    order_step = _get(parser, "finite_differences", "order_step", float)
    for field, value in (("domain_guard", guard), ("step", step), ("order_step", order_step)):
        if not value > 0:
            raise ConfigError(f"Invalid value for [finite_differences] {field}: "
                              f"it must be positive, got {value}.")
    config = RunConfig(
        seed=_get(parser, "run", "seed", int),
        samples=_get(parser, "run", "samples", int),
        connection_samples=_get(parser, "run", "connection_samples", int),
        tolerances=tolerances, quadrature=quadrature, reference_nodes=reference_nodes,
        grid=grid, step=step, order_step=order_step, guard=guard,
        packets=[_load_packet(parser=parser, name=name)
                 for name in _get(parser, "run", "packets", _names)],
        source=str(config_file or ""))
    logger.debug("Loaded %r", config)
    return config

# coding=utf-8
"""Tests for loading run configurations from INI files."""

# Standard library imports:
from pathlib import Path
import unittest

# Local application imports:
from photon_tools.config import load_config
from photon_tools.constants import CONNECTION_SAMPLES, SAMPLES, SEED
from photon_tools.errors import ConfigError

# Set constants:
DATA_PATH = Path(__file__).parent / "data"


class DefaultConfigTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.config = load_config()

    def test_run_settings(self):
        """Assert the packaged defaults hold the reference seed and sample counts."""
        self.assertEqual(SEED, self.config.seed)
        self.assertEqual(SAMPLES, self.config.samples)
        self.assertEqual(CONNECTION_SAMPLES, self.config.connection_samples)

    def test_tolerances(self):
        """Assert the packaged default tolerances."""
        tolerances = self.config.tolerances
        self.assertEqual((1e-12, 1e-6, 1e-8, 1e-3, 1e-10),
                         (tolerances.identity, tolerances.finite_difference,
                          tolerances.cross_term, tolerances.oracle, tolerances.imaginary))

    def test_grids(self):
        """Assert the packaged quadrature and real-space grid settings."""
        self.assertEqual(32, self.config.quadrature.nodes_per_axis)
        self.assertEqual(8.0, self.config.quadrature.box_half_width)
        self.assertEqual(24, self.config.reference_nodes)
        self.assertEqual((96, 2.5), (self.config.grid.nodes_per_axis,
                                     self.config.grid.half_width))

    def test_reference_packets(self):
        """Assert the three reference packets A, B and C."""
        self.assertEqual(["A", "B", "C"], [packet.name for packet in self.config.packets])
        packet_b, packet_c = self.config.packets[1:]
        self.assertEqual(0.7071067811865476, packet_b.weight_minus)
        self.assertEqual(1.0, float(packet_c.displacement[0]))
        self.assertTrue(all(packet.width == 0.1 for packet in self.config.packets))


class UserConfigTests(unittest.TestCase):
    def test_partial_file(self):
        """Assert fields left out of a user file fall back to the defaults."""
        config = load_config(config_file=DATA_PATH / "small_config.ini")
        self.assertEqual((1, 50, 5), (config.seed, config.samples, config.connection_samples))
        self.assertEqual(["A"], [packet.name for packet in config.packets])
        self.assertEqual(1e-12, config.tolerances.identity)
        self.assertIn("small_config.ini", config.source)

    def test_custom_packet(self):
        """Assert packets, tolerances and nodes are read from a user file."""
        config = load_config(config_file=str(DATA_PATH / "custom_packet.ini"))
        packet = config.packets[0]
        self.assertEqual("tilted", packet.name)
        self.assertEqual(0.8j, packet.weight_minus)
        self.assertFalse(packet.normalize)
        self.assertEqual(2e-3, config.tolerances.oracle)
        self.assertEqual(28, config.quadrature.nodes_per_axis)

    def test_overrides(self):
        """Assert command-line overrides replace values without touching the original."""
        config = load_config()
        override = config.with_overrides(seed=7, samples=12, nodes=40, tol=1e-9)
        self.assertEqual((7, 12, 40, 1e-9), (override.seed, override.samples,
                                              override.quadrature.nodes_per_axis,
                                              override.tolerances.identity))
        self.assertEqual(1e-12, config.tolerances.identity)
        self.assertEqual(32, config.quadrature.nodes_per_axis)

    def test_invalid_overrides(self):
        """Assert invalid overrides raise configuration errors."""
        config = load_config()
        for override in ({"samples": 0}, {"nodes": 4}, {"tol": -1.0}):
            with self.assertRaises(ConfigError, msg=str(override)):
                config.with_overrides(**override)


class InvalidConfigTests(unittest.TestCase):
    def test_missing_file(self):
        """Assert an unreadable file raises a configuration error."""
        with self.assertRaises(ConfigError):
            load_config(config_file=DATA_PATH / "no_such_config.ini")

    def test_malformed_file(self):
        """Assert a line without '=' is reported with its line number."""
        with self.assertRaises(ConfigError) as context:
            load_config(config_file=DATA_PATH / "malformed_config.ini")
        self.assertIn("line(s) 3", str(context.exception))

    def test_invalid_packet(self):
        """Assert a packet with a negative width is rejected with its section name."""
        with self.assertRaises(ConfigError) as context:
            load_config(config_file=DATA_PATH / "invalid_packet.ini")
        self.assertIn("[packet.narrow]", str(context.exception))

    def test_missing_packet(self):
        """Assert packets listed without a section are rejected."""
        with self.assertRaises(ConfigError) as context:
            load_config(config_file=DATA_PATH / "missing_packet.ini")
        self.assertIn("packet.D", str(context.exception))

    def test_bad_vector(self):
        """Assert a centre with two components names the offending field."""
        with self.assertRaises(ConfigError) as context:
            load_config(config_file=DATA_PATH / "bad_vector.ini")
        self.assertIn("[packet.A] center", str(context.exception))

    def test_config_error_is_value_error(self):
        """Assert configuration errors can be caught as ValueError."""
        with self.assertRaises(ValueError):
            load_config(config_file=DATA_PATH / "bad_vector.ini")

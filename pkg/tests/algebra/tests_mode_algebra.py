# coding=utf-8
"""Tests for the exact commutator algebra of the photon mode operators."""

# Standard library imports:
import unittest

# Third party imports:
import sympy

# Local application imports:
from photon_tools.algebra.mode_algebra import OMEGA, OMEGA_PRIME, DeltaExpr, Generator
from photon_tools.algebra.mode_algebra import ModeExpr, bracket, build_a, build_b
from photon_tools.algebra.mode_algebra import commutator_table, dagger, generator, unify
from photon_tools.algebra.mode_algebra import verify_transverse_commutators
from photon_tools.errors import AlgebraMismatchError


class GeneratorTests(unittest.TestCase):
    def test_invalid_labels(self):
        """Assert only s = 0..3 and the momenta k, k′ are accepted."""
        with self.assertRaises(ValueError):
            Generator(s=4)
        with self.assertRaises(ValueError):
            Generator(s=1, label="q")

    def test_adjoint(self):
        """Assert the adjoint flips only the dagger."""
        tag = Generator(s=2, label="k′")
        self.assertEqual(Generator(s=2, label="k′", dagger=True), tag.adjoint())
        self.assertEqual(tag, tag.adjoint().adjoint())
        self.assertEqual("c†(k′,2)", repr(tag.adjoint()))


class ModeExprTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.x = generator(s=1) * sympy.I + generator(s=0, label="k′", dagger=True) * OMEGA

    def test_cancellation(self):
        """Assert terms with vanishing coefficients are dropped."""
        self.assertEqual("0", repr(self.x - self.x))
        self.assertEqual(ModeExpr(), generator(s=3) - generator(s=3))

    def test_coefficient(self):
        """Assert coefficients are read back per generator."""
        self.assertEqual(sympy.I, self.x.coefficient(tag=Generator(s=1)))
        self.assertEqual(0, self.x.coefficient(tag=Generator(s=2)))

    def test_dagger_is_involution(self):
        """Assert the adjoint of the adjoint is the expression itself."""
        self.assertEqual(self.x, dagger(dagger(self.x)))
        adjoint = dagger(self.x)
        self.assertEqual(-sympy.I, adjoint.coefficient(tag=Generator(s=1, dagger=True)))


class BracketTests(unittest.TestCase):
    def test_spatial_generators(self):
        """Assert [ĉ(k,1), ĉ†(k′,1)] = δ³(k − k′)."""
        derived = bracket(x=generator(s=1), y=generator(s=1, label="k′", dagger=True))
        self.assertEqual(DeltaExpr(coefficient=1), derived)
        self.assertEqual("δ³(k − k′)", repr(derived))

    def test_scalar_generator(self):
        """Assert [ĉ(k,0), ĉ†(k′,0)] = -δ³(k − k′) with the (+, -, -, -) metric."""
        derived = bracket(x=generator(s=0), y=generator(s=0, label="k′", dagger=True))
        self.assertEqual("-δ³(k − k′)", repr(derived))

    def test_vanishing_brackets(self):
        """Assert two annihilators, or different mode labels, commute."""
        self.assertTrue(bracket(x=generator(s=1), y=generator(s=1, label="k′")).is_zero)
        self.assertTrue(bracket(x=generator(s=1),
                                y=generator(s=2, label="k′", dagger=True)).is_zero)

    def test_antisymmetry(self):
        """Assert [y, x] = -[x, y]."""
        x, y = build_a(helicity=1), dagger(build_a(helicity=1, label="k′"))
        self.assertEqual(-bracket(x=x, y=y), bracket(x=y, y=x))


class BuildTests(unittest.TestCase):
    def test_build_b(self):
        """Assert b̂(k,3) = i[ĉ(k,3) - ĉ(k,0)]."""
        b = build_b(i=3)
        self.assertEqual(sympy.I, b.coefficient(tag=Generator(s=3)))
        self.assertEqual(-sympy.I, b.coefficient(tag=Generator(s=0)))
        with self.assertRaises(ValueError):
            build_b(i=0)

    def test_build_a(self):
        """Assert â₊₁(k) = √(ω/2)[iĉ(k,1) + ĉ(k,2)]."""
        a = build_a(helicity=1)
        factor = sympy.sqrt(OMEGA / 2)
        plus = a.coefficient(tag=Generator(s=1))
        self.assertEqual(0, sympy.simplify(plus - sympy.I * factor))
        self.assertEqual(0, sympy.simplify(a.coefficient(tag=Generator(s=2)) - factor))
        with self.assertRaises(ValueError):
            build_a(helicity=2)

    def test_unify(self):
        """Assert ω′ is replaced by ω and unifying twice changes nothing."""
        expression = sympy.sqrt(OMEGA * OMEGA_PRIME)
        self.assertEqual(OMEGA, unify(expression=expression))
        self.assertEqual(unify(expression=expression), unify(expression=unify(expression)))

    def test_delta_coefficient_is_expanded(self):
        """Assert products of frequency roots collapse to ω once ω′ is unified."""
        factor = sympy.sqrt(OMEGA / 2) * sympy.sqrt(OMEGA_PRIME / 2)
        self.assertEqual(OMEGA, DeltaExpr(coefficient=2 * factor).coefficient)
        self.assertTrue(DeltaExpr(coefficient=OMEGA - OMEGA_PRIME).is_zero)
        self.assertTrue((DeltaExpr(coefficient=sympy.I * factor)
                         - DeltaExpr(coefficient=sympy.I * OMEGA / 2)).is_zero)

    def test_helicity_commutator(self):
        """Assert [â₊₁(k), â₊₁†(k′)] = ωδ³(k − k′)."""
        derived = bracket(x=build_a(helicity=1), y=dagger(build_a(helicity=1, label="k′")))
        self.assertEqual(DeltaExpr(coefficient=OMEGA), derived)


class TransverseCommutatorsTests(unittest.TestCase):
    def setUp(self) -> None:
        """Define objects to be tested."""
        self.report = verify_transverse_commutators()

    def test_table_passes(self):
        """Assert every derived commutator matches its expected value."""
        self.assertTrue(self.report.passed)
        self.assertEqual(27, len(self.report.rows))
        self.assertTrue(all(row.residual == "0" for row in self.report))

    def test_longitudinal_commutator(self):
        """Assert the scalar and longitudinal contributions to [â₀, â₀†] cancel."""
        rows = {row.commutator: row for row in self.report}
        self.assertEqual("0", rows["[a(+0,k), a†(+0,k′)]"].derived)
        self.assertEqual("ω·δ³(k − k′)", rows["[a(-1,k), a†(-1,k′)]"].derived)

    def test_table_names(self):
        """Assert the table covers the three kinds of commutators."""
        names = [name for name, _, _ in commutator_table()]
        self.assertIn("[a(+1,k), a(-1,k′)]", names)
        self.assertIn("[a†(+1,k), a†(+1,k′)]", names)
        self.assertEqual(len(names), len(set(names)))

    def test_euclidean_metric(self):
        """Assert a Euclidean metric breaks the table and strict mode raises."""
        self.assertFalse(verify_transverse_commutators(metric=(1, 1, 1, 1)).passed)
        with self.assertRaises(AlgebraMismatchError) as context:
            verify_transverse_commutators(strict=True, metric=(1, 1, 1, 1))
        self.assertNotEqual(0, context.exception.residual)

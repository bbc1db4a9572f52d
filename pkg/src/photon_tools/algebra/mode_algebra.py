# coding=utf-8
"""Exact commutator algebra of the photon mode operators ĉ(k, s), b̂(k, i) and â_λ(k)."""

# Standard library imports:
from collections.abc import Iterator, Sequence
import logging

# Third party imports:
import sympy

# Local application imports:
from photon_tools.errors import AlgebraMismatchError
from photon_tools.reports import AlgebraReport, AlgebraRow

# Define custom types:
Coefficient = sympy.Expr

# Set constants:
OMEGA = sympy.Symbol("ω", positive=True)
OMEGA_PRIME = sympy.Symbol("ω′", positive=True)
FREQUENCIES = {"k": OMEGA, "k′": OMEGA_PRIME}
METRIC = (1, -1, -1, -1)
HELICITIES = (1, -1, 0)

logger = logging.getLogger(__name__)


class Generator:
    """Tag of one generator: ĉ(label, s) or its adjoint ĉ†(label, s)."""
    __slots__ = ["dagger", "s", "label"]

    def __init__(self, s: int, label: str = "k", dagger: bool = False):
        if s not in range(4):
            raise ValueError(f"Mode labels run over s = 0, 1, 2, 3, got {s}.")
        if label not in FREQUENCIES:
            raise ValueError(f"Momentum labels are 'k' or 'k′', got {label!r}.")
        self.s = s
        self.label = label
        self.dagger = dagger

    def __repr__(self) -> str:
        return f"c{'†' if self.dagger else ''}({self.label},{self.s})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Generator) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def key(self) -> tuple[str, bool, int]:
        """Provide the canonical sorting key (momentum label, dagger, s)."""
        return self.label, self.dagger, self.s

    def adjoint(self) -> "Generator":
        """Swap a creation generator for the annihilation one, or vice versa."""
        return Generator(s=self.s, label=self.label, dagger=not self.dagger)


class ModeExpr:
    """Linear combination of generators with exact symbolic coefficients."""
    __slots__ = ["terms"]

    def __init__(self, terms: dict[Generator, Coefficient] = None):
        self.terms = {}
        for tag, coefficient in (terms or {}).items():
            coefficient = sympy.expand(sympy.sympify(coefficient))
            if coefficient != 0:
                self.terms[tag] = coefficient

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({coefficient})·{tag}" for tag, coefficient in self)

    def __iter__(self) -> Iterator[tuple[Generator, Coefficient]]:
        return iter(sorted(self.terms.items(), key=lambda item: item[0].key))

    def __eq__(self, other) -> bool:
        return isinstance(other, ModeExpr) and not (self - other).terms

    def __add__(self, other: "ModeExpr") -> "ModeExpr":
        terms = dict(self.terms)
        for tag, coefficient in other.terms.items():
            terms[tag] = terms.get(tag, 0) + coefficient
        return ModeExpr(terms=terms)

    def __neg__(self) -> "ModeExpr":
        return ModeExpr(terms={tag: -coefficient for tag, coefficient in self.terms.items()})

    def __sub__(self, other: "ModeExpr") -> "ModeExpr":
        return self + (-other)

    def __mul__(self, factor: Coefficient) -> "ModeExpr":
        return ModeExpr(terms={tag: factor * coefficient
                               for tag, coefficient in self.terms.items()})

    __rmul__ = __mul__

    def coefficient(self, tag: Generator) -> Coefficient:
        """Provide the coefficient of one generator (zero if it does not appear)."""
        return self.terms.get(tag, sympy.Integer(0))


class DeltaExpr:
    """Exact multiple of the formal symbol δ³(k − k′), with ω′ unified to ω."""
    __slots__ = ["coefficient"]

    def __init__(self, coefficient: Coefficient = 0):
        self.coefficient = sympy.expand(unify(expression=sympy.sympify(coefficient)))

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        elif self.coefficient == 1:
            return "δ³(k − k′)"
        elif self.coefficient == -1:
            return "-δ³(k − k′)"
        return f"{self.coefficient}·δ³(k − k′)"

    def __eq__(self, other) -> bool:
        return isinstance(other, DeltaExpr) and (self - other).is_zero

    def __add__(self, other: "DeltaExpr") -> "DeltaExpr":
        return DeltaExpr(coefficient=self.coefficient + other.coefficient)

    def __neg__(self) -> "DeltaExpr":
        return DeltaExpr(coefficient=-self.coefficient)

    def __sub__(self, other: "DeltaExpr") -> "DeltaExpr":
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        """Check if the expression vanishes identically."""
        return self.coefficient == 0


def unify(expression: Coefficient) -> Coefficient:
    """Apply δ³(k − k′) to a coefficient, replacing ω′ by ω."""
    return expression.subs(OMEGA_PRIME, OMEGA)


def generator(s: int, label: str = "k", dagger: bool = False) -> ModeExpr:
    """Build the expression made of the single generator ĉ(label, s) or ĉ†(label, s)."""
    return ModeExpr(terms={Generator(s=s, label=label, dagger=dagger): 1})


def dagger(x: ModeExpr) -> ModeExpr:
    """Take the Hermitian adjoint, conjugating every coefficient."""
    return ModeExpr(terms={tag.adjoint(): sympy.conjugate(coefficient)
                           for tag, coefficient in x.terms.items()})


def _generator_bracket(x: Generator, y: Generator, metric: Sequence[int]) -> int:
    """Bracket two generators, in units of δ³(k − k′)."""
    if x.dagger == y.dagger or x.s != y.s:
        return 0
    return metric[x.s] if x.dagger else -metric[x.s]


def bracket(x: ModeExpr, y: ModeExpr, metric: Sequence[int] = METRIC) -> DeltaExpr:
    """Compute [x, y] from [ĉ(k′,s′), ĉ†(k,s)] = -g_ss′ δ³(k − k′), extended bilinearly."""
    total = sympy.Integer(0)
    for x_tag, x_coefficient in x:
        for y_tag, y_coefficient in y:
            sign = _generator_bracket(x=x_tag, y=y_tag, metric=metric)
            if sign:
                total += sign * x_coefficient * y_coefficient
    return DeltaExpr(coefficient=total)


def build_b(i: int, label: str = "k") -> ModeExpr:
    """Build b̂(k,1) = iĉ(k,1), b̂(k,2) = iĉ(k,2) or b̂(k,3) = i[ĉ(k,3) - ĉ(k,0)]."""
    if i in (1, 2):
        return generator(s=i, label=label) * sympy.I
    elif i == 3:
        return (generator(s=3, label=label) - generator(s=0, label=label)) * sympy.I
    raise ValueError(f"The b̂ operators are numbered 1 to 3, got {i}.")


def build_a(helicity: int, label: str = "k") -> ModeExpr:
    """Build â±₁(k) = √(ω/2)[b̂(k,1) ∓ ib̂(k,2)] or â₀(k) = √(ω/2) b̂(k,3)."""
    factor = sympy.sqrt(FREQUENCIES[label] / 2)
    if helicity in (1, -1):
        return (build_b(i=1, label=label)
                - build_b(i=2, label=label) * (helicity * sympy.I)) * factor
    elif helicity == 0:
        return build_b(i=3, label=label) * factor
    raise ValueError(f"Helicities are +1, -1 or 0, got {helicity}.")


def _expected(kind: str, helicity: int, other: int) -> DeltaExpr:
    """Provide the exact value of a commutator of helicity operators."""
    if kind == "mixed" and helicity == other and helicity != 0:
        return DeltaExpr(coefficient=OMEGA)
    return DeltaExpr()


def commutator_table(metric: Sequence[int] = METRIC) \
        -> Iterator[tuple[str, DeltaExpr, DeltaExpr]]:
    """Derive every commutator of the helicity operators at k and k′.

    Yields the name of each commutator with its derived and its expected value,
    for [â, â†], [â, â] and [â†, â†] over all pairs of helicities +1, -1 and 0.
    """
    for helicity in HELICITIES:
        a = build_a(helicity=helicity, label="k")
        for other in HELICITIES:
            a_prime = build_a(helicity=other, label="k′")
            pairs = {
                "mixed": (f"[a({helicity:+d},k), a†({other:+d},k′)]", a, dagger(a_prime)),
                "annihilators": (f"[a({helicity:+d},k), a({other:+d},k′)]", a, a_prime),
                "creators": (f"[a†({helicity:+d},k), a†({other:+d},k′)]",
                             dagger(a), dagger(a_prime))}
            for kind, (name, x, y) in pairs.items():
                derived = bracket(x=x, y=y, metric=metric)
                yield name, derived, _expected(kind=kind, helicity=helicity, other=other)


def verify_transverse_commutators(strict: bool = False, metric: Sequence[int] = METRIC) \
        -> AlgebraReport:
    """Check that only [â_λ(k), â_λ†(k′)] = ωδ³(k − k′) survives for λ = ±1.

    With strict set, the first mismatch raises an AlgebraMismatchError carrying
    the symbolic residual.
    """
    report = AlgebraReport(name="helicity commutators")
    for name, derived, expected in commutator_table(metric=metric):
        residual = derived - expected
        report.rows.append(AlgebraRow(commutator=name, derived=repr(derived),
                                      expected=repr(expected), residual=repr(residual)))
        if strict and not residual.is_zero:
            raise AlgebraMismatchError(f"{name} = {derived!r} instead of {expected!r}",
                                       residual=residual.coefficient)
    logger.info("Derived %d commutators: %s", len(report.rows),
                "PASS" if report.passed else "FAIL")
    return report

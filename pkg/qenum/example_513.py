"""
The [[5,1,3]] Reference Pipeline

C is the F4 span of the check matrix of the [5,3,3] quaternary Hamming code (a [5,2,4] code)
and its symplectic dual is the Hamming code itself. The six enumerators below are the
published reference values for this pair.
"""
from dataclasses import dataclass, field
from typing import Optional

import sympy

from mcp.server.fastmcp.utilities.logging import get_logger

from qenum.enumerators import (
    DistributionTables,
    EnumeratorKind,
    EnumeratorPolynomial,
    IdentityCheck,
    check_identities,
    enumerate_from_additive_code,
    enumerate_from_projector,
)
from qenum.errors import IdentityFailureError
from qenum.gf4_codes import AdditiveCode, parse_code
from qenum.pauli import projector_from_stabilizers, stabilizer_generators

logger = get_logger(__name__)

CHECK_MATRIX = """\
n=5 format=f4
1 0 1 w2 w2
0 1 w2 w2 1
"""

EXPECTED = {
    "B": (EnumeratorKind.B, "X**5 + 15*X*Y**4"),
    "B⊥": (EnumeratorKind.B, "X**5 + 30*X**2*Y**3 + 15*X*Y**4 + 18*Y**5"),
    "C": (EnumeratorKind.C, "X**5*Z**5 + 5*X**3*Y**2*Z**3*W**2 + 5*X**3*Y**2*Z*W**4 + 5*X*Y**4*Z**3*W**2"),
    "C⊥": (
        EnumeratorKind.C,
        "X**5*Z**5 + X**5*W**5"
        " + 5*X**4*Y*Z**3*W**2 + 5*X**4*Y*Z**2*W**3"
        " + 5*X**3*Y**2*Z**4*W + 5*X**3*Y**2*Z**3*W**2 + 5*X**3*Y**2*Z**2*W**3 + 5*X**3*Y**2*Z*W**4"
        " + 5*X**2*Y**3*Z**4*W + 5*X**2*Y**3*Z**3*W**2 + 5*X**2*Y**3*Z**2*W**3 + 5*X**2*Y**3*Z*W**4"
        " + 5*X*Y**4*Z**3*W**2 + 5*X*Y**4*Z**2*W**3"
        " + Y**5*Z**5 + Y**5*W**5",
    ),
    "D": (EnumeratorKind.D, "W**5 + 5*W*X**2*Y**2 + 5*W*X**2*Z**2 + 5*W*Y**2*Z**2"),
    "D⊥": (
        EnumeratorKind.D,
        "W**5 + X**5 + Y**5 + Z**5"
        " + 5*W**2*X**2*Y + 5*W**2*X**2*Z + 5*W**2*X*Y**2 + 5*W**2*X*Z**2 + 5*W**2*Y**2*Z + 5*W**2*Y*Z**2"
        " + 5*W*X**2*Y**2 + 5*W*X**2*Z**2 + 5*W*Y**2*Z**2"
        " + 5*X**2*Y**2*Z + 5*X**2*Y*Z**2 + 5*X*Y**2*Z**2",
    ),
}


def five_qubit_code() -> AdditiveCode:
    return parse_code(CHECK_MATRIX)


def expected_polynomial(name: str) -> EnumeratorPolynomial:
    kind, text = EXPECTED[name]
    symbols = {s: sympy.Symbol(s) for s in "XYZW"}
    return EnumeratorPolynomial.from_sympy(kind, 5, sympy.sympify(text, locals=symbols))


def computed_polynomials(primal: DistributionTables, dual: DistributionTables) -> dict[str, EnumeratorPolynomial]:
    return {
        "B": primal.B_polynomial(),
        "B⊥": dual.B_polynomial(),
        "C": primal.C_polynomial(),
        "C⊥": dual.C_polynomial(),
        "D": primal.D_polynomial(),
        "D⊥": dual.D_polynomial(),
    }


@dataclass(frozen=True)
class PolynomialComparison:
    name: str
    computed: EnumeratorPolynomial
    expected: EnumeratorPolynomial

    @property
    def matches(self) -> bool:
        return self.computed == self.expected


@dataclass(frozen=True)
class ExampleReport:
    primal: DistributionTables
    dual: DistributionTables
    comparisons: list[PolynomialComparison] = field(default_factory=list)
    identities: list[IdentityCheck] = field(default_factory=list)
    projector_matches: Optional[bool] = None

    @property
    def all_hold(self) -> bool:
        return (
            all(c.matches for c in self.comparisons)
            and all(check.holds for check in self.identities)
            and self.projector_matches is not False
        )


def reproduce_example(check_projector: bool = False, strict: bool = False) -> ExampleReport:
    """Enumerate the [[5,1,3]] code, diff against the reference polynomials and run the identity suite."""
    code = five_qubit_code()
    primal, dual = enumerate_from_additive_code(code)
    comparisons = [
        PolynomialComparison(name, computed, expected_polynomial(name))
        for name, computed in computed_polynomials(primal, dual).items()
    ]
    identities = check_identities(primal, dual)

    projector_matches = None
    if check_projector:
        projector = projector_from_stabilizers(stabilizer_generators(code), code.n)
        projector_primal, projector_dual = enumerate_from_projector(projector)
        projector_matches = (projector_primal.B, projector_primal.C, projector_primal.D) == (
            primal.B,
            primal.C,
            primal.D,
        ) and (projector_dual.B, projector_dual.C, projector_dual.D) == (dual.B, dual.C, dual.D)

    report = ExampleReport(primal, dual, comparisons, identities, projector_matches)
    for comparison in comparisons:
        if not comparison.matches:
            logger.error(f"{comparison.name} differs: computed {comparison.computed}, expected {comparison.expected}")
    if strict and not report.all_hold:
        raise IdentityFailureError("The [[5,1,3]] pipeline does not reproduce the reference enumerators")
    return report

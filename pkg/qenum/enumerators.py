"""
Quantum Weight Enumerators

The weight (B), double weight (C) and complete weight (D) enumerators of a quantum code and
of its dual, computed exactly and related through the quaternary MacWilliams identities.

Key Features:
- EnumeratorPolynomial: exact-rational coefficients keyed by exponent tuples, with sympy
  conversion and a pretty printer
- DistributionTables: the B, C and D distributions of one side (primal or dual)
- enumerate_from_projector: traces Tr²(eP) and Tr(ePeP) over all 4^n Pauli errors
- enumerate_from_additive_code: exact codeword counting for stabilizer (additive) codes
- Specializations B = D(Y,Y,Y,X) and C = D(YZ,YW,XW,XZ)
- MacWilliams transforms for B, C and D in both directions
- Krawtchouk transforms of the double weight table in both directions
- Distance extraction (symmetric d and the asymmetric Pareto frontier) and the identity suite

Variables are ordered (X, Y) for B and (X, Y, Z, W) for C and D. B_i multiplies X^{n-i}Y^i,
C_{i,j} multiplies X^{n-i}Y^iZ^{n-j}W^j and D_{i,j,k} multiplies X^iY^jZ^kW^{n-i-j-k}, where
D is indexed by the Pauli counts (N_x, N_y, N_z).
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Sequence

import numpy as np
import sympy

from mcp.server.fastmcp.utilities.logging import get_logger

from qenum import config
from qenum.errors import BudgetExceededError, NegativeCoefficientError, RoundingResidueError
from qenum.gf4_codes import AdditiveCode, iter_codeword_masks, symplectic_dual
from qenum.krawtchouk import krawtchouk_table
from qenum.pauli import Projector, canonical_error, trace_eP, trace_ePeP

logger = get_logger(__name__)

X, Y, Z, W = sympy.symbols("X Y Z W")


class EnumeratorKind(str, Enum):
    B = "B"
    C = "C"
    D = "D"


_GENERATORS = {EnumeratorKind.B: (X, Y), EnumeratorKind.C: (X, Y, Z, W), EnumeratorKind.D: (X, Y, Z, W)}


@dataclass(frozen=True)
class EnumeratorPolynomial:
    """An enumerator as a map from exponent tuples to exact rationals (zero terms omitted)."""

    kind: EnumeratorKind
    n: int
    coefficients: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", {tuple(e): Fraction(c) for e, c in self.coefficients.items() if c != 0}
        )

    @property
    def generators(self) -> tuple[sympy.Symbol, ...]:
        return _GENERATORS[self.kind]

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.coefficients.get(tuple(exponents), Fraction(0))

    def is_homogeneous(self) -> bool:
        n = self.n
        for exps in self.coefficients:
            if any(e < 0 for e in exps):
                return False
            if self.kind == EnumeratorKind.B and sum(exps) != n:
                return False
            if self.kind == EnumeratorKind.C and (exps[0] + exps[1] != n or exps[2] + exps[3] != n):
                return False
            if self.kind == EnumeratorKind.D and sum(exps) != n:
                return False
        return True

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients.values())

    def to_sympy(self) -> sympy.Expr:
        terms = []
        for exps, c in self.coefficients.items():
            monomial = sympy.Mul(*(g**e for g, e in zip(self.generators, exps)))
            terms.append(sympy.Rational(c.numerator, c.denominator) * monomial)
        return sympy.Add(*terms)

    @classmethod
    def from_sympy(cls, kind: EnumeratorKind, n: int, expr: sympy.Expr) -> "EnumeratorPolynomial":
        poly = sympy.Poly(sympy.expand(expr), *_GENERATORS[kind], domain=sympy.QQ)
        coefficients = {}
        for monomial, coeff in poly.terms():
            value = poly.domain.to_sympy(coeff)
            if value != 0:
                coefficients[tuple(monomial)] = Fraction(int(value.p), int(value.q))
        return cls(kind, n, coefficients)

    def _ordered_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        if self.kind == EnumeratorKind.B:
            return sorted(self.coefficients.items(), key=lambda item: item[0][1])
        if self.kind == EnumeratorKind.C:
            return sorted(self.coefficients.items(), key=lambda item: (item[0][1], item[0][3]))
        # D: fewest distinct variables first, then lexicographically descending in (W, X, Y, Z)
        def key(item):
            x, y, z, w = item[0]
            wxyz = (w, x, y, z)
            return (sum(1 for e in wxyz if e), tuple(-e for e in wxyz))

        return sorted(self.coefficients.items(), key=key)

    def format(self) -> str:
        """Render the polynomial in the conventional monomial order, e.g. 'X^5 + 15 X Y^4'."""
        if not self.coefficients:
            return "0"
        names = ("X", "Y") if self.kind == EnumeratorKind.B else ("X", "Y", "Z", "W")
        order = (0, 1) if self.kind == EnumeratorKind.B else (3, 0, 1, 2) if self.kind == EnumeratorKind.D else (0, 1, 2, 3)
        pieces = []
        for exps, c in self._ordered_terms():
            factors = [names[v] if exps[v] == 1 else f"{names[v]}^{exps[v]}" for v in order if exps[v]]
            magnitude = abs(c)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            pieces.append(("-" if c < 0 else "+", " ".join(factors)))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class DistributionTables:
    """B, C and D distributions of one side of a code pair."""

    n: int
    K: Fraction
    B: tuple[Fraction, ...]
    C: tuple[tuple[Fraction, ...], ...]
    D: Mapping[tuple[int, int, int], Fraction] = field(hash=False)
    dual: bool = False
    self_orthogonal: bool = True

    def __post_init__(self):
        object.__setattr__(self, "K", Fraction(self.K))
        object.__setattr__(self, "D", {tuple(k): Fraction(v) for k, v in self.D.items() if v != 0})

    def B_polynomial(self) -> EnumeratorPolynomial:
        return EnumeratorPolynomial(EnumeratorKind.B, self.n, {(self.n - i, i): v for i, v in enumerate(self.B)})

    def C_polynomial(self) -> EnumeratorPolynomial:
        n = self.n
        return EnumeratorPolynomial(
            EnumeratorKind.C,
            n,
            {(n - i, i, n - j, j): self.C[i][j] for i in range(n + 1) for j in range(n + 1)},
        )

    def D_polynomial(self) -> EnumeratorPolynomial:
        n = self.n
        return EnumeratorPolynomial(
            EnumeratorKind.D, n, {(i, j, k, n - i - j - k): v for (i, j, k), v in self.D.items()}
        )

    @classmethod
    def from_polynomials(
        cls,
        K: Fraction | int,
        B: EnumeratorPolynomial,
        C: EnumeratorPolynomial,
        D: EnumeratorPolynomial,
        dual: bool = False,
    ) -> "DistributionTables":
        n = B.n
        return cls(
            n=n,
            K=Fraction(K),
            B=tuple(B.coefficient((n - i, i)) for i in range(n + 1)),
            C=tuple(tuple(C.coefficient((n - i, i, n - j, j)) for j in range(n + 1)) for i in range(n + 1)),
            D={(i, j, k): c for (i, j, k, _), c in D.coefficients.items()},
            dual=dual,
        )

    def is_nonnegative(self) -> bool:
        return (
            all(v >= 0 for v in self.B)
            and all(v >= 0 for row in self.C for v in row)
            and all(v >= 0 for v in self.D.values())
        )

    def marginals_consistent(self) -> bool:
        """B and C agree with the projections of D."""
        n = self.n
        b_from_d = [Fraction(0)] * (n + 1)
        c_from_d = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
        for (nx, ny, nz), v in self.D.items():
            b_from_d[nx + ny + nz] += v
            c_from_d[nx + ny][ny + nz] += v
        return tuple(b_from_d) == self.B and tuple(map(tuple, c_from_d)) == self.C


# --- Counting path ---


def _count_masks(masks, n: int) -> tuple[list[int], list[list[int]], dict[tuple[int, int, int], int]]:
    low = (1 << n) - 1
    b_counts = [0] * (n + 1)
    c_counts = [[0] * (n + 1) for _ in range(n + 1)]
    d_counts: dict[tuple[int, int, int], int] = {}
    for mask in masks:
        a, b = mask & low, mask >> n
        nx, ny, nz = (a & ~b & low).bit_count(), (a & b).bit_count(), (b & ~a & low).bit_count()
        b_counts[nx + ny + nz] += 1
        c_counts[nx + ny][ny + nz] += 1
        d_counts[(nx, ny, nz)] = d_counts.get((nx, ny, nz), 0) + 1
    return b_counts, c_counts, d_counts


def _tables_from_counts(n, K, counts, dual, self_orthogonal) -> DistributionTables:
    b_counts, c_counts, d_counts = counts
    return DistributionTables(
        n=n,
        K=K,
        B=tuple(Fraction(v) for v in b_counts),
        C=tuple(tuple(Fraction(v) for v in row) for row in c_counts),
        D={cell: Fraction(v) for cell, v in d_counts.items()},
        dual=dual,
        self_orthogonal=self_orthogonal,
    )


def enumerate_from_additive_code(code: AdditiveCode) -> tuple[DistributionTables, DistributionTables]:
    """Exact tables of the code (primal) and of its symplectic dual (dual)."""
    n = code.n
    dual_code = symplectic_dual(code)
    self_orthogonal = code.is_self_orthogonal()
    if not self_orthogonal:
        logger.warning(f"Code with g={code.g} on n={n} is not symplectic self-orthogonal; counting classically")
    K = Fraction(2**n, code.size)
    primal = _tables_from_counts(n, K, _count_masks(iter_codeword_masks(code), n), False, self_orthogonal)
    dual = _tables_from_counts(n, K, _count_masks(iter_codeword_masks(dual_code), n), True, self_orthogonal)
    logger.info(f"Counted enumerators for n={n}, g={code.g}, K={K}")
    return primal, dual


# --- Projector path ---


@dataclass
class _TraceAccumulator:
    """Float sums of Tr²(eP) (primal) and Tr(ePeP) (dual) per cell."""

    n: int
    primal_b: np.ndarray = None
    dual_b: np.ndarray = None
    primal_c: np.ndarray = None
    dual_c: np.ndarray = None
    primal_d: dict = None
    dual_d: dict = None

    def __post_init__(self):
        size = self.n + 1
        self.primal_b, self.dual_b = np.zeros(size), np.zeros(size)
        self.primal_c, self.dual_c = np.zeros((size, size)), np.zeros((size, size))
        self.primal_d, self.dual_d = {}, {}

    def add(self, cell: tuple[int, int, int], trace_squared: float, trace_twisted: float) -> None:
        nx, ny, nz = cell
        self.primal_b[nx + ny + nz] += trace_squared
        self.dual_b[nx + ny + nz] += trace_twisted
        self.primal_c[nx + ny, ny + nz] += trace_squared
        self.dual_c[nx + ny, ny + nz] += trace_twisted
        self.primal_d[cell] = self.primal_d.get(cell, 0.0) + trace_squared
        self.dual_d[cell] = self.dual_d.get(cell, 0.0) + trace_twisted

    def merge(self, other: "_TraceAccumulator") -> "_TraceAccumulator":
        self.primal_b += other.primal_b
        self.dual_b += other.dual_b
        self.primal_c += other.primal_c
        self.dual_c += other.dual_c
        for target, source in ((self.primal_d, other.primal_d), (self.dual_d, other.dual_d)):
            for cell, value in source.items():
                target[cell] = target.get(cell, 0.0) + value
        return self


def _accumulate(projector: Projector, a_vectors: Sequence[tuple[int, ...]]) -> _TraceAccumulator:
    n = projector.n
    accumulator = _TraceAccumulator(n)
    for a in a_vectors:
        for b in product((0, 1), repeat=n):
            e = canonical_error(a, b)
            accumulator.add((e.n_x, e.n_y, e.n_z), trace_eP(e, projector) ** 2, trace_ePeP(e, projector))
    return accumulator


def _snap(value: float, divisor: int, where: str) -> Fraction:
    nearest = round(value)
    if abs(value - nearest) > config.ROUNDING_TOL:
        raise RoundingResidueError(f"Accumulator {where} = {value!r} is {abs(value - nearest):.3e} from an integer")
    return Fraction(int(nearest), divisor)


def enumerate_from_projector(
    projector: Projector, workers: Optional[int] = None
) -> tuple[DistributionTables, DistributionTables]:
    """Tables from B_i = (1/K²) Σ Tr²(eP) and B⊥_i = (1/K) Σ Tr(ePeP) and their C, D analogues."""
    n, K = projector.n, projector.K
    if n > config.MAX_PROJECTOR_N:
        raise BudgetExceededError(f"Projector enumeration needs n <= {config.MAX_PROJECTOR_N} (QENUM_MAX_N), got n={n}")
    workers = workers or config.WORKERS
    a_vectors = list(product((0, 1), repeat=n))
    if workers > 1:
        chunks = [a_vectors[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda chunk: _accumulate(projector, chunk), chunks))
        accumulator = parts[0]
        for part in parts[1:]:
            accumulator.merge(part)
    else:
        accumulator = _accumulate(projector, a_vectors)

    size = n + 1
    primal = DistributionTables(
        n=n,
        K=Fraction(K),
        B=tuple(_snap(accumulator.primal_b[i], K * K, f"B[{i}]") for i in range(size)),
        C=tuple(tuple(_snap(accumulator.primal_c[i, j], K * K, f"C[{i},{j}]") for j in range(size)) for i in range(size)),
        D={cell: _snap(v, K * K, f"D{cell}") for cell, v in accumulator.primal_d.items()},
    )
    dual = DistributionTables(
        n=n,
        K=Fraction(K),
        B=tuple(_snap(accumulator.dual_b[i], K, f"B⊥[{i}]") for i in range(size)),
        C=tuple(tuple(_snap(accumulator.dual_c[i, j], K, f"C⊥[{i},{j}]") for j in range(size)) for i in range(size)),
        D={cell: _snap(v, K, f"D⊥{cell}") for cell, v in accumulator.dual_d.items()},
        dual=True,
    )
    logger.info(f"Projector enumeration over 4^{n} errors finished for K={K}")
    return primal, dual


# --- Specializations and MacWilliams transforms ---


def _substitute(
    poly: EnumeratorPolynomial, kind: EnumeratorKind, mapping: dict, scale: Fraction | int = 1
) -> EnumeratorPolynomial:
    scale = Fraction(scale)
    expr = poly.to_sympy().xreplace(mapping) * sympy.Rational(scale.numerator, scale.denominator)
    return EnumeratorPolynomial.from_sympy(kind, poly.n, expr)


def _require_nonnegative(poly: EnumeratorPolynomial, name: str) -> EnumeratorPolynomial:
    negative = [exps for exps, c in poly.coefficients.items() if c < 0]
    if negative:
        raise NegativeCoefficientError(f"{name} has negative coefficient on monomial {negative[0]}")
    return poly


def specialize_D_to_B(D: EnumeratorPolynomial) -> EnumeratorPolynomial:
    return _substitute(D, EnumeratorKind.B, {X: Y, Y: Y, Z: Y, W: X})


def specialize_D_to_C(D: EnumeratorPolynomial) -> EnumeratorPolynomial:
    return _substitute(D, EnumeratorKind.C, {X: Y * Z, Y: Y * W, Z: X * W, W: X * Z})


_B_SUBSTITUTION = {X: (X + 3 * Y) / 2, Y: (X - Y) / 2}
_C_SUBSTITUTION = {X: Z + W, Y: Z - W, Z: (X + Y) / 2, W: (X - Y) / 2}
_D_SUBSTITUTION = {
    X: (X - Y - Z + W) / 2,
    Y: (-X + Y - Z + W) / 2,
    Z: (-X - Y + Z + W) / 2,
    W: (X + Y + Z + W) / 2,
}


def macwilliams_B(B_dual: EnumeratorPolynomial, K: Fraction | int) -> EnumeratorPolynomial:
    """B(X,Y) = (1/K) B⊥((X+3Y)/2, (X-Y)/2)."""
    return _require_nonnegative(_substitute(B_dual, EnumeratorKind.B, _B_SUBSTITUTION, 1 / Fraction(K)), "B")


def inverse_macwilliams_B(B: EnumeratorPolynomial, K: Fraction | int) -> EnumeratorPolynomial:
    return _require_nonnegative(_substitute(B, EnumeratorKind.B, _B_SUBSTITUTION, K), "B⊥")


def macwilliams_C(C_dual: EnumeratorPolynomial, K: Fraction | int) -> EnumeratorPolynomial:
    """C(X,Y,Z,W) = (1/K) C⊥(Z+W, Z-W, (X+Y)/2, (X-Y)/2)."""
    return _require_nonnegative(_substitute(C_dual, EnumeratorKind.C, _C_SUBSTITUTION, 1 / Fraction(K)), "C")


def inverse_macwilliams_C(C: EnumeratorPolynomial, K: Fraction | int) -> EnumeratorPolynomial:
    return _require_nonnegative(_substitute(C, EnumeratorKind.C, _C_SUBSTITUTION, K), "C⊥")


def macwilliams_D(D_dual: EnumeratorPolynomial, K: Fraction | int) -> EnumeratorPolynomial:
    return _require_nonnegative(_substitute(D_dual, EnumeratorKind.D, _D_SUBSTITUTION, 1 / Fraction(K)), "D")


def inverse_macwilliams_D(D: EnumeratorPolynomial, K: Fraction | int) -> EnumeratorPolynomial:
    return _require_nonnegative(_substitute(D, EnumeratorKind.D, _D_SUBSTITUTION, K), "D⊥")


# --- Coefficient-level transforms ---

Table = tuple[tuple[Fraction, ...], ...]


def krawtchouk_transform_C(C_dual: Sequence[Sequence[Fraction]], K: Fraction | int) -> Table:
    """C_{i,j} = (1/(2^n K)) Σ_{r,s} P_i(s) P_j(r) C⊥_{r,s}."""
    n = len(C_dual) - 1
    table = krawtchouk_table(n)
    scale = 1 / (Fraction(2**n) * Fraction(K))
    return tuple(
        tuple(
            scale
            * sum(
                (table.value(i, s) * table.value(j, r) * Fraction(C_dual[r][s]) for r in range(n + 1) for s in range(n + 1)),
                Fraction(0),
            )
            for j in range(n + 1)
        )
        for i in range(n + 1)
    )


def inverse_krawtchouk_transform_C(C: Sequence[Sequence[Fraction]], K: Fraction | int) -> Table:
    """C⊥_{r,s} = (K/2^n) Σ_{i,j} P_r(j) P_s(i) C_{i,j}."""
    n = len(C) - 1
    table = krawtchouk_table(n)
    scale = Fraction(K) / 2**n
    return tuple(
        tuple(
            scale
            * sum(
                (table.value(r, j) * table.value(s, i) * Fraction(C[i][j]) for i in range(n + 1) for j in range(n + 1)),
                Fraction(0),
            )
            for s in range(n + 1)
        )
        for r in range(n + 1)
    )


# --- Distances ---


@dataclass(frozen=True)
class DistanceReport:
    symmetric_d: int
    asymmetric_frontier: tuple[tuple[int, int], ...]


def extract_distances(primal: DistributionTables, dual: DistributionTables) -> DistanceReport:
    if primal.n != dual.n:
        raise ValueError(f"Tables have different lengths: {primal.n} vs {dual.n}")
    n = primal.n
    symmetric_d = n + 1
    for i in range(n + 1):
        if primal.B[i] != dual.B[i]:
            symmetric_d = i
            break

    mismatches = [(i, j) for i in range(n + 1) for j in range(n + 1) if primal.C[i][j] != dual.C[i][j]]
    # largest t_z admissible for each t_x: every mismatch (i, j) with i < t_x needs j >= t_z
    reach = {t_x: min([j for i, j in mismatches if i < t_x], default=n + 1) for t_x in range(1, n + 2)}
    frontier = []
    for t_x in range(1, n + 2):
        t_z = reach[t_x]
        if t_z == 0:
            break
        if t_x == n + 1 or reach[t_x + 1] < t_z:
            frontier.append((t_x, t_z))
    logger.debug(f"Distances: symmetric d={symmetric_d}, frontier={frontier}")
    return DistanceReport(symmetric_d, tuple(frontier))


def dominance_holds(primal: DistributionTables, dual: DistributionTables) -> bool:
    """C_{i,j} <= C⊥_{i,j} entrywise with C_{0,0} = C⊥_{0,0} = 1."""
    n = primal.n
    if primal.C[0][0] != 1 or dual.C[0][0] != 1:
        return False
    return all(primal.C[i][j] <= dual.C[i][j] for i in range(n + 1) for j in range(n + 1))


# --- Identity suite ---


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    detail: str = ""


def _compare(name: str, computed, expected) -> IdentityCheck:
    if computed == expected:
        return IdentityCheck(name, True)
    return IdentityCheck(name, False, f"computed {computed} but expected {expected}")


def check_identities(primal: DistributionTables, dual: DistributionTables) -> list[IdentityCheck]:
    """Specializations, MacWilliams identities and Krawtchouk transforms on a primal/dual pair."""
    K = primal.K
    B, C, D = primal.B_polynomial(), primal.C_polynomial(), primal.D_polynomial()
    B_dual, C_dual, D_dual = dual.B_polynomial(), dual.C_polynomial(), dual.D_polynomial()
    suite = [
        ("B = D(Y,Y,Y,X)", lambda: specialize_D_to_B(D), B),
        ("C = D(YZ,YW,XW,XZ)", lambda: specialize_D_to_C(D), C),
        ("B⊥ = D⊥(Y,Y,Y,X)", lambda: specialize_D_to_B(D_dual), B_dual),
        ("C⊥ = D⊥(YZ,YW,XW,XZ)", lambda: specialize_D_to_C(D_dual), C_dual),
        ("MacWilliams B from B⊥", lambda: macwilliams_B(B_dual, K), B),
        ("MacWilliams C from C⊥", lambda: macwilliams_C(C_dual, K), C),
        ("MacWilliams D from D⊥", lambda: macwilliams_D(D_dual, K), D),
        ("MacWilliams B⊥ from B", lambda: inverse_macwilliams_B(B, K), B_dual),
        ("MacWilliams C⊥ from C", lambda: inverse_macwilliams_C(C, K), C_dual),
        ("MacWilliams D⊥ from D", lambda: inverse_macwilliams_D(D, K), D_dual),
        ("Krawtchouk transform C from C⊥", lambda: krawtchouk_transform_C(dual.C, K), primal.C),
        ("Krawtchouk transform C⊥ from C", lambda: inverse_krawtchouk_transform_C(primal.C, K), dual.C),
    ]
    results = []
    for name, compute, expected in suite:
        try:
            results.append(_compare(name, compute(), expected))
        except NegativeCoefficientError as e:
            results.append(IdentityCheck(name, False, str(e)))
    failed = [check.name for check in results if not check.holds]
    if failed:
        logger.warning(f"Identity failures: {failed}")
    else:
        logger.info(f"All {len(results)} identities hold for n={primal.n}, K={K}")
    return results

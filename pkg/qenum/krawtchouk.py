"""
Krawtchouk Polynomial Machinery

Binary Krawtchouk polynomials P_i(x) = sum_j (-1)^j C(x, j) C(n-x, i-j) and the identities
the bound certificates rely on.

Key Features:
- Exact integer values (defining sum) cross-checked by the three-term recurrence
- Real evaluation for root finding and the LP certificate
- Smallest root r_t by an integer sign scan followed by a bracketed root solve
- Product expansion P_i P_j = sum_k C(n-k, (i+j-k)/2) C(k, (i-j+k)/2) P_k
- The α_i(d) coefficients of A(x) = 2^{n-d+1} prod_{r=d}^{n} (1 - x/r)
- Checkers for reciprocity, orthogonality, the generating function, the recurrence,
  Christoffel-Darboux, the product expansion and the binomial-sum identity

Binomials with a fractional or out-of-range lower index are zero throughout.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, sqrt

import sympy
from scipy import optimize, special

from mcp.server.fastmcp.utilities.logging import get_logger

from qenum.errors import BracketError, DomainError

logger = get_logger(__name__)


def half_binomial(top: int, twice_bottom: int) -> int:
    """C(top, twice_bottom / 2), zero when the lower index is fractional or out of range."""
    if twice_bottom % 2 or top < 0:
        return 0
    bottom = twice_bottom // 2
    if bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def _check_range(n: int, i: int, x: int | None = None) -> None:
    if n < 0 or not 0 <= i <= n:
        raise DomainError(f"Krawtchouk index i={i} out of range for n={n}")
    if x is not None and not 0 <= x <= n:
        raise DomainError(f"Integer point x={x} out of range for n={n}")


def eval_integer(n: int, i: int, x: int) -> int:
    _check_range(n, i, x)
    return sum((-1) ** j * comb(x, j) * comb(n - x, i - j) for j in range(i + 1))


def eval_recurrence(n: int, i: int, x: int) -> int:
    """P_i(x) from (i+1)P_{i+1} = (n-2x)P_i - (n-i+1)P_{i-1}."""
    _check_range(n, i, x)
    previous, current = Fraction(1), Fraction(n - 2 * x)
    if i == 0:
        return 1
    for m in range(1, i):
        previous, current = current, ((n - 2 * x) * current - (n - m + 1) * previous) / (m + 1)
    if current.denominator != 1:
        raise DomainError(f"Recurrence produced a non-integer P_{i}({x}) = {current} for n={n}")
    return int(current)


@dataclass(frozen=True)
class KrawtchoukTable:
    """Exact values P_i(x) for 0 <= i, x <= n; values[i][x] = P_i(x)."""

    n: int
    values: tuple[tuple[int, ...], ...]

    def value(self, i: int, x: int) -> int:
        _check_range(self.n, i, x)
        return self.values[i][x]

    def column(self, x: int) -> tuple[int, ...]:
        return tuple(row[x] for row in self.values)


@lru_cache(maxsize=64)
def krawtchouk_table(n: int) -> KrawtchoukTable:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return KrawtchoukTable(n, tuple(tuple(eval_integer(n, i, x) for x in range(n + 1)) for i in range(n + 1)))


def eval_real(n: int, i: int, x: float) -> float:
    """Degree-i polynomial at real x, through the three-term recurrence in i."""
    _check_range(n, i)
    if i == 0:
        return 1.0
    previous, current = 1.0, n - 2.0 * x
    for m in range(1, i):
        previous, current = current, ((n - 2.0 * x) * current - (n - m + 1) * previous) / (m + 1)
    return current


def eval_real_sum(n: int, i: int, x: float) -> float:
    """Same polynomial from the defining sum with generalized binomials."""
    _check_range(n, i)
    return float(sum((-1) ** j * special.binom(x, j) * special.binom(n - x, i - j) for j in range(i + 1)))


def smallest_root(n: int, t: int) -> float:
    """Smallest real root r_t of P_t."""
    if not 1 <= t <= n:
        raise DomainError(f"Root index t={t} out of range for n={n}")
    for k in range(1, n + 1):
        value = eval_integer(n, t, k)
        if value == 0:
            return float(k)
        if value < 0:
            root = optimize.brentq(lambda x: eval_real(n, t, x), k - 1, k, xtol=1e-12)
            logger.debug(f"r_{t} = {root:.12f} for n={n}")
            return root
    raise BracketError(f"No sign change of P_{t} found on [0, {n}] for n={n}")


def asymptotic_smallest_root(tau: float) -> float:
    """Limit of r_t / n for t / n -> tau: 1/2 - sqrt(tau (1 - tau))."""
    return 0.5 - sqrt(tau * (1.0 - tau))


def ratio_estimate(n: int, t: int, x: int) -> float:
    """Closed-form estimate of P_t(x+1) / P_t(x) below the smallest root."""
    discriminant = (n - 2 * t) ** 2 - 4 * x * (n - x)
    if discriminant < 0:
        raise DomainError(f"x={x} lies beyond the oscillation edge for n={n}, t={t}")
    return ((n - 2 * t) + sqrt(discriminant)) / (2 * (n - x))


def product_expansion(n: int, i: int, j: int) -> tuple[int, ...]:
    """Coefficients c_k with P_i(x) P_j(x) = sum_k c_k P_k(x)."""
    _check_range(n, i)
    _check_range(n, j)
    return tuple(half_binomial(n - k, i + j - k) * half_binomial(k, i - j + k) for k in range(n + 1))


@dataclass(frozen=True)
class AlphaCoefficients:
    """Krawtchouk coefficients α_i of A(x) = 2^{n-d+1} prod_{r=d}^{n} (1 - x/r)."""

    n: int
    d: int
    values: tuple[Fraction, ...]

    def evaluate(self, x: int) -> Fraction:
        table = krawtchouk_table(self.n)
        return sum((alpha * table.value(i, x) for i, alpha in enumerate(self.values)), Fraction(0))


def alpha_coefficients(n: int, d: int) -> AlphaCoefficients:
    if not 1 <= d <= n + 1:
        raise DomainError(f"Distance d={d} out of range 1..{n + 1}")
    denominator = comb(n, n - d + 1)
    return AlphaCoefficients(n, d, tuple(Fraction(comb(n - i, d - 1), denominator) for i in range(n + 1)))


def a_polynomial(n: int, d: int, x: int | Fraction) -> Fraction:
    value = Fraction(2 ** (n - d + 1))
    for r in range(d, n + 1):
        value *= 1 - Fraction(x) / r
    return value


def binomial_sum_identity(n: int, j: int, x: int) -> tuple[int, int]:
    """Both sides of sum_i C(n-i, n-j) P_i(x) = 2^j C(n-x, j)."""
    _check_range(n, j, x)
    table = krawtchouk_table(n)
    lhs = sum(comb(n - i, n - j) * table.value(i, x) for i in range(j + 1))
    return lhs, 2**j * comb(n - x, j)


# --- Identity checkers ---


def reciprocity_holds(n: int) -> bool:
    table = krawtchouk_table(n)
    return all(
        comb(n, i) * table.value(s, i) == comb(n, s) * table.value(i, s) for i in range(n + 1) for s in range(n + 1)
    )


def orthogonality_holds(n: int) -> bool:
    table = krawtchouk_table(n)
    for r in range(n + 1):
        for s in range(n + 1):
            total = sum(table.value(r, i) * table.value(i, s) for i in range(n + 1))
            if total != (2**n if r == s else 0):
                return False
    return True


def generating_function_holds(n: int) -> bool:
    """Coefficients of (X+Y)^{n-r} (X-Y)^r reproduce column r of the table."""
    X, Y = sympy.symbols("X Y")
    table = krawtchouk_table(n)
    for r in range(n + 1):
        poly = sympy.Poly(sympy.expand((X + Y) ** (n - r) * (X - Y) ** r), X, Y)
        for i in range(n + 1):
            if int(poly.coeff_monomial(X ** (n - i) * Y**i)) != table.value(i, r):
                return False
    return True


def recurrence_holds(n: int) -> bool:
    table = krawtchouk_table(n)
    for x in range(n + 1):
        for i in range(1, n):
            lhs = (i + 1) * table.value(i + 1, x)
            rhs = (n - 2 * x) * table.value(i, x) - (n - i + 1) * table.value(i - 1, x)
            if lhs != rhs:
                logger.warning(f"Three-term recurrence fails at n={n}, i={i}, x={x}: {lhs} != {rhs}")
                return False
    return True


def x_recurrence_holds(n: int) -> bool:
    """(n-x) P_t(x+1) = (n-2t) P_t(x) - x P_t(x-1), the recurrence in the argument."""
    table = krawtchouk_table(n)
    return all(
        (n - x) * table.value(t, x + 1) == (n - 2 * t) * table.value(t, x) - x * table.value(t, x - 1)
        for t in range(n + 1)
        for x in range(1, n)
    )


def christoffel_darboux_holds(n: int) -> bool:
    table = krawtchouk_table(n)
    for t in range(n):
        for x in range(n + 1):
            for a in range(n + 1):
                if x == a:
                    continue
                lhs = table.value(t + 1, x) * table.value(t, a) - table.value(t, x) * table.value(t + 1, a)
                kernel = sum(
                    (Fraction(table.value(i, x) * table.value(i, a), comb(n, i)) for i in range(t + 1)), Fraction(0)
                )
                if lhs != Fraction(2 * (a - x), t + 1) * comb(n, t) * kernel:
                    return False
    return True


def product_expansion_holds(n: int) -> bool:
    table = krawtchouk_table(n)
    for i in range(n + 1):
        for j in range(n + 1):
            coefficients = product_expansion(n, i, j)
            for x in range(n + 1):
                expanded = sum(c * table.value(k, x) for k, c in enumerate(coefficients))
                if expanded != table.value(i, x) * table.value(j, x):
                    return False
    return True


def alpha_expansion_holds(n: int) -> bool:
    for d in range(1, n + 2):
        coefficients = alpha_coefficients(n, d)
        if any(coefficients.evaluate(x) != a_polynomial(n, d, x) for x in range(n + 1)):
            return False
    return True

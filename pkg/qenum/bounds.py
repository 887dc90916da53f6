"""
Bounds on Asymmetric Quantum Codes

Key Features:
- KeyInequalityCertificate and check_key_inequality: the three sign conditions on a
  polynomial f(x, y) = Σ α_{i,j} P_i(y) P_j(x) and the resulting bound
  K <= (1/2^n) max f(i,j)/α_{i,j} over the primal box i < d_x, j < d_z
- Singleton certificate (exact), Hamming-type certificate in even-factored mode (exact,
  computed through two independent paths), first LP certificate (floating point)
- Asymptotic Hamming-type and LP bounds through Ω_τ and Γ_τ, with the corollary closed forms,
  their validity predicates and a numerical re-derivation of the validity thresholds
- bound_curve for (δ, bound) tables behind the CLI's --emit-curve

Exact certificates carry Fractions and are checked without a tolerance band; floating-point
certificates carry a band of config.CONDITION_TOL scaled by the largest magnitude involved.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, comb, sqrt
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy import integrate, optimize, special

from mcp.server.fastmcp.utilities.logging import get_logger

from qenum import config
from qenum.errors import BracketError, DomainError, IdentityFailureError, KeyInequalityViolation, ValidityWindowError
from qenum.krawtchouk import (
    a_polynomial,
    alpha_coefficients,
    asymptotic_smallest_root,
    eval_real,
    krawtchouk_table,
    product_expansion,
    smallest_root,
)

logger = get_logger(__name__)

Number = Union[Fraction, float, int]
Grid = tuple[tuple[Number, ...], ...]

_CLAMP_TOL = 1e-12
HAMMING_COROLLARY_LIMIT = 0.2
LP_COROLLARY_LIMIT = 0.1865


class CertificateMode(str, Enum):
    STRICT = "strict"
    EVEN_FACTORED = "even_factored"


@dataclass(frozen=True)
class KeyInequalityCertificate:
    """
    A polynomial certificate for the key inequality.

    alpha_grid[i][j] is the coefficient of P_i(y) P_j(x) and f_values[r][s] = f(r, s), with r
    the X-weight axis and s the Z-weight axis. In even-factored mode f(x, y) = f1(x) f2(y) and
    α_{i,j} = α_i β_j; the factors are carried so the parity conditions can be checked.
    """

    n: int
    dx: int
    dz: int
    alpha_grid: Grid
    f_values: Grid
    mode: CertificateMode = CertificateMode.STRICT
    tolerance: float = 0.0
    z_coefficients: Optional[tuple[Number, ...]] = None
    x_coefficients: Optional[tuple[Number, ...]] = None
    x_values: Optional[tuple[Number, ...]] = None
    z_values: Optional[tuple[Number, ...]] = None
    label: str = ""
    degrees: Optional[tuple[int, int]] = None

    def __post_init__(self):
        size = self.n + 1
        if not (1 <= self.dx <= size and 1 <= self.dz <= size):
            raise DomainError(f"Distances must lie in 1..{size}, got d_x={self.dx}, d_z={self.dz}")
        for name, grid in (("alpha_grid", self.alpha_grid), ("f_values", self.f_values)):
            if len(grid) != size or any(len(row) != size for row in grid):
                raise DomainError(f"{name} must be a {size}x{size} grid")

    @property
    def exact(self) -> bool:
        return self.tolerance == 0


@dataclass(frozen=True)
class KeyInequalityResult:
    bound: Number
    cell: tuple[int, int]
    ratio: Number


def _band(certificate: KeyInequalityCertificate, values) -> float:
    if certificate.exact:
        return 0.0
    return certificate.tolerance * max([1.0] + [abs(float(v)) for v in values])


def _flatten(grid: Grid) -> list[Number]:
    return [v for row in grid for v in row]


def _check_even_factored(certificate: KeyInequalityCertificate) -> None:
    factors = (
        ("α", certificate.z_coefficients),
        ("β", certificate.x_coefficients),
        ("f1", certificate.x_values),
        ("f2", certificate.z_values),
    )
    for name, factor in factors:
        if factor is None or len(factor) != certificate.n + 1:
            raise DomainError(f"Even-factored certificate needs {name} with {certificate.n + 1} entries")
    for name, factor in factors[:2]:
        for i, value in enumerate(factor):
            if value < 0:
                raise KeyInequalityViolation(1, i, f"{name}_{i} = {value} is negative")
    for name, values, limit in (("f1", certificate.x_values, certificate.dx), ("f2", certificate.z_values, certificate.dz)):
        for r in range(limit):
            if r % 2 and values[r] != 0:
                raise KeyInequalityViolation(2, r, f"{name}({r}) = {values[r]} must vanish at odd points")
            if not r % 2 and values[r] <= 0:
                raise KeyInequalityViolation(2, r, f"{name}({r}) = {values[r]} must be positive at even points")


def _vanishing_factor(certificate: KeyInequalityCertificate, i: int, j: int) -> str:
    """Names the squared Krawtchouk factor that is zero, for certificates built from P_θ(i)² P_φ(j)²."""
    if certificate.degrees is None:
        return ""
    theta, phi = certificate.degrees
    factors = ((theta, i, certificate.z_coefficients[i]), (phi, j, certificate.x_coefficients[j]))
    zeros = [f"P_{degree}({point}) = 0" for degree, point, coefficient in factors if coefficient == 0]
    return f" ({', '.join(zeros)})" if zeros else ""


def check_key_inequality(certificate: KeyInequalityCertificate) -> KeyInequalityResult:
    """Verify the three conditions and return the resulting bound on K."""
    n, dx, dz = certificate.n, certificate.dx, certificate.dz
    size = n + 1
    alpha, f = certificate.alpha_grid, certificate.f_values
    alpha_band = _band(certificate, _flatten(alpha))
    f_band = _band(certificate, _flatten(f))

    for i in range(size):
        for j in range(size):
            if alpha[i][j] < -alpha_band:
                raise KeyInequalityViolation(1, (i, j), f"α = {alpha[i][j]} is negative")

    if certificate.mode == CertificateMode.EVEN_FACTORED:
        _check_even_factored(certificate)
    for r in range(dx):
        for s in range(dz):
            value = f[r][s]
            inside_ok = value >= 0 if certificate.mode == CertificateMode.EVEN_FACTORED else value > 0
            if not inside_ok:
                raise KeyInequalityViolation(2, (r, s), f"f = {value} inside the primal box")

    for r in range(size):
        for s in range(size):
            if (r >= dx or s >= dz) and f[r][s] > f_band:
                raise KeyInequalityViolation(3, (r, s), f"f = {f[r][s]} is positive outside the primal box")

    best: Optional[KeyInequalityResult] = None
    for i in range(dx):
        for j in range(dz):
            a, value = alpha[i][j], f[i][j]
            if abs(a) <= alpha_band:
                if value > f_band:
                    detail = f"α vanishes where f = {value} is positive" + _vanishing_factor(certificate, i, j)
                    raise KeyInequalityViolation(1, (i, j), detail)
                continue
            ratio = Fraction(value) / Fraction(a) if certificate.exact else float(value) / float(a)
            if best is None or ratio > best.ratio:
                best = KeyInequalityResult(ratio / 2**n, (i, j), ratio)
    if best is None:
        raise KeyInequalityViolation(2, (0, 0), "no cell of the primal box has a nonzero coefficient")
    logger.info(f"Key inequality {certificate.label or certificate.mode.value}: K <= {best.bound} at cell {best.cell}")
    return best


# --- Singleton ---


def singleton_g(n: int, i: int, d: int) -> Fraction:
    """g(i; d) = C(n-i, n-d+1) / C(n-i, d-1)."""
    denominator = comb(n - i, d - 1)
    if not 0 <= i <= n or denominator == 0:
        raise DomainError(f"g({i}; {d}) is undefined for n={n}")
    return Fraction(comb(n - i, n - d + 1), denominator)


def singleton_certificate(n: int, dx: int, dz: int) -> KeyInequalityCertificate:
    """α_{i,j} = α_i(d_z) α_j(d_x) and f(x, y) = A_{d_x}(x) A_{d_z}(y)."""
    if dx > n / 2 + 1 or dz > n / 2 + 1:
        logger.debug(f"d_x={dx}, d_z={dz} exceed n/2+1 for n={n}; the maximum may leave the origin")
    x_alpha, z_alpha = alpha_coefficients(n, dx), alpha_coefficients(n, dz)
    size = n + 1
    x_values = [a_polynomial(n, dx, r) for r in range(size)]
    z_values = [a_polynomial(n, dz, s) for s in range(size)]
    return KeyInequalityCertificate(
        n=n,
        dx=dx,
        dz=dz,
        alpha_grid=tuple(tuple(z_alpha.values[i] * x_alpha.values[j] for j in range(size)) for i in range(size)),
        f_values=tuple(tuple(x_values[r] * z_values[s] for s in range(size)) for r in range(size)),
        label="singleton",
    )


def singleton_bound(n: int, dx: int, dz: int) -> Fraction:
    return check_key_inequality(singleton_certificate(n, dx, dz)).bound


def singleton_check(n: int, k: int, dx: int, dz: int) -> bool:
    """n >= k + d_x + d_z - 2."""
    return k <= n - dx - dz + 2


def singleton_asymptotic_bound(delta_x: float, delta_z: float) -> float:
    return 1.0 - delta_x - delta_z


# --- Hamming-type (finite) ---


def _expansion_values(n: int, coefficients: Sequence[int]) -> tuple[int, ...]:
    table = krawtchouk_table(n)
    return tuple(sum(c * table.value(j, x) for j, c in enumerate(coefficients)) for x in range(n + 1))


def hamming_finite_certificate(n: int, dx: int, dz: int) -> KeyInequalityCertificate:
    """α_i = P_θ(i)², β_j = P_φ(j)² with φ = ⌊(d_x-1)/2⌋, θ = ⌊(d_z-1)/2⌋."""
    if not (1 <= dx <= n + 1 and 1 <= dz <= n + 1):
        raise DomainError(f"Distances must lie in 1..{n + 1}, got d_x={dx}, d_z={dz}")
    phi, theta = (dx - 1) // 2, (dz - 1) // 2
    table = krawtchouk_table(n)
    size = n + 1
    z_coefficients = tuple(table.value(theta, i) ** 2 for i in range(size))
    x_coefficients = tuple(table.value(phi, j) ** 2 for j in range(size))

    axes = []
    for coefficients, degree in ((x_coefficients, phi), (z_coefficients, theta)):
        expanded = _expansion_values(n, coefficients)
        closed = tuple(2**n * c for c in product_expansion(n, degree, degree))
        if expanded != closed:
            raise IdentityFailureError(f"Squared Krawtchouk expansion disagrees with the closed form for n={n}, degree {degree}")
        axes.append(closed)
    x_values, z_values = axes

    return KeyInequalityCertificate(
        n=n,
        dx=dx,
        dz=dz,
        alpha_grid=tuple(tuple(Fraction(z_coefficients[i] * x_coefficients[j]) for j in range(size)) for i in range(size)),
        f_values=tuple(tuple(Fraction(x_values[r] * z_values[s]) for s in range(size)) for r in range(size)),
        mode=CertificateMode.EVEN_FACTORED,
        z_coefficients=z_coefficients,
        x_coefficients=x_coefficients,
        x_values=x_values,
        z_values=z_values,
        label="hamming",
        degrees=(theta, phi),
    )


def hamming_finite_bound(n: int, dx: int, dz: int) -> Fraction:
    return check_key_inequality(hamming_finite_certificate(n, dx, dz)).bound


# --- First LP bound (finite) ---


@dataclass(frozen=True)
class LPParameters:
    """Degree t and the point a in (r_{t+1}, r_t) where P_t(a) = -P_{t+1}(a)."""

    n: int
    t: int
    a: float

    @property
    def residue(self) -> float:
        return abs(eval_real(self.n, self.t, self.a) / eval_real(self.n, self.t + 1, self.a) + 1)


def lp_root(n: int, t: int) -> LPParameters:
    if not 1 <= t < n:
        raise DomainError(f"LP degree t={t} out of range 1..{n - 1}")
    lower, upper = smallest_root(n, t + 1), smallest_root(n, t)

    def shifted(x: float) -> float:
        return eval_real(n, t, x) + eval_real(n, t + 1, x)

    if shifted(lower) * shifted(upper) > 0:
        raise BracketError(f"P_{t} + P_{t + 1} has no sign change on ({lower}, {upper}) for n={n}")
    a = optimize.brentq(shifted, lower, upper, xtol=1e-12)
    return LPParameters(n, t, a)


def lp_parameters(n: int, delta: float) -> LPParameters:
    """t = round(n (1/2 - sqrt(δ(1-δ)))) and its root a."""
    if not 0 <= delta <= 0.5:
        raise DomainError(f"Relative distance δ={delta} must lie in [0, 1/2]")
    t = round(n * asymptotic_smallest_root(delta))
    return lp_root(n, t)


def lp_F_coefficients(params: LPParameters) -> tuple[float, ...]:
    """Krawtchouk coefficients F_j of F(x) = P_t(a)² (P_{t+1}(x) + P_t(x))² / (a - x)."""
    n, t, a = params.n, params.t, params.a
    scale = 2 / (t + 1) * comb(n, t) * eval_real(n, t, a)
    kernel = [eval_real(n, i, a) / comb(n, i) for i in range(t + 1)]
    upper = [product_expansion(n, t + 1, i) for i in range(t + 1)]
    lower = [product_expansion(n, t, i) for i in range(t + 1)]
    return tuple(scale * sum(kernel[i] * (upper[i][j] + lower[i][j]) for i in range(t + 1)) for j in range(n + 1))


def lp_F_value(params: LPParameters, x: float) -> float:
    """F(x) in Christoffel-Darboux form, finite at x = a."""
    n, t, a = params.n, params.t, params.a
    kernel = sum(eval_real(n, i, x) * eval_real(n, i, a) / comb(n, i) for i in range(t + 1))
    return 2 / (t + 1) * comb(n, t) * eval_real(n, t, a) * (eval_real(n, t + 1, x) + eval_real(n, t, x)) * kernel


def lp_F_direct(params: LPParameters, x: float) -> float:
    n, t, a = params.n, params.t, params.a
    if x == a:
        raise DomainError("The direct form of F is singular at x = a")
    return eval_real(n, t, a) ** 2 * (eval_real(n, t + 1, x) + eval_real(n, t, x)) ** 2 / (a - x)


def _check_F_expansion(params: LPParameters, coefficients: Sequence[float], values: Sequence[float]) -> None:
    table = krawtchouk_table(params.n)
    scale = max([1.0] + [abs(v) for v in values])
    for x, value in enumerate(values):
        expanded = sum(c * table.value(j, x) for j, c in enumerate(coefficients))
        if abs(expanded - value) > 1e-6 * scale:
            raise IdentityFailureError(f"Σ F_j P_j({x}) = {expanded} but F({x}) = {value} for t={params.t}")


def lp_axis_candidates(n: int, d: int) -> list[LPParameters]:
    """Degrees whose root a falls in (d-1, d]: t0-1, t0, t0+1 first, every t if none fits."""
    t0 = round(n * asymptotic_smallest_root(min(d / n, 0.5)))

    def fitting(degrees) -> list[LPParameters]:
        found = []
        for t in degrees:
            if not 1 <= t < n:
                continue
            try:
                params = lp_root(n, t)
            except BracketError:
                continue
            if d - 1 < params.a <= d:
                found.append(params)
        return found

    candidates = fitting((t0, t0 - 1, t0 + 1))
    if not candidates:
        logger.debug(f"No neighbour of t0={t0} fits d={d} at n={n}; scanning every degree")
        candidates = fitting(range(1, n))
    if not candidates:
        raise BracketError(f"No LP degree places a in ({d - 1}, {d}] for n={n}")
    return candidates


def finite_lp_certificate(n: int, x_params: LPParameters, z_params: LPParameters, dx: int, dz: int) -> KeyInequalityCertificate:
    """f(x, y) = F(x) G(y) with α_{i,j} = G_i F_j."""
    size = n + 1
    F, G = lp_F_coefficients(x_params), lp_F_coefficients(z_params)
    F_values = [lp_F_value(x_params, r) for r in range(size)]
    G_values = [lp_F_value(z_params, s) for s in range(size)]
    _check_F_expansion(x_params, F, F_values)
    _check_F_expansion(z_params, G, G_values)
    return KeyInequalityCertificate(
        n=n,
        dx=dx,
        dz=dz,
        alpha_grid=tuple(tuple(G[i] * F[j] for j in range(size)) for i in range(size)),
        f_values=tuple(tuple(F_values[r] * G_values[s] for s in range(size)) for r in range(size)),
        tolerance=config.CONDITION_TOL,
        label=f"lp(t={x_params.t}, s={z_params.t})",
    )


def _box_ratio(certificate: KeyInequalityCertificate) -> float:
    ratios = [
        certificate.f_values[i][j] / certificate.alpha_grid[i][j]
        for i in range(certificate.dx)
        for j in range(certificate.dz)
        if certificate.alpha_grid[i][j] > 0
    ]
    return max(ratios) / 2**certificate.n


@dataclass(frozen=True)
class LPBoundReport:
    """Outcome of the finite LP certificate; bound is None when the checker rejected every choice."""

    n: int
    dx: int
    dz: int
    x_params: LPParameters
    z_params: LPParameters
    bound: Optional[float]
    box_bound: float
    singleton: Fraction
    violation: Optional[str] = None

    @property
    def exceeds_singleton(self) -> bool:
        return (self.bound if self.bound is not None else self.box_bound) > self.singleton


def finite_lp_bound(n: int, dx: int, dz: int) -> LPBoundReport:
    """Best LP certificate over the candidate degree pairs, compared with the Singleton bound."""
    singleton = check_key_inequality(singleton_certificate(n, dx, dz)).bound
    best: Optional[LPBoundReport] = None
    for x_params in lp_axis_candidates(n, dx):
        for z_params in lp_axis_candidates(n, dz):
            certificate = finite_lp_certificate(n, x_params, z_params, dx, dz)
            box_bound = _box_ratio(certificate)
            try:
                bound, violation = float(check_key_inequality(certificate).bound), None
            except KeyInequalityViolation as e:
                bound, violation = None, str(e)
            report = LPBoundReport(n, dx, dz, x_params, z_params, bound, box_bound, singleton, violation)
            if best is None or _rank(report) < _rank(best):
                best = report
    if best.violation:
        logger.warning(f"LP certificate for n={n}, d_x={dx}, d_z={dz} rejected: {best.violation}")
    if best.exceeds_singleton:
        logger.warning(f"LP bound {best.bound or best.box_bound:.4f} exceeds the Singleton bound {singleton} at n={n}")
    return best


def _rank(report: LPBoundReport) -> tuple[int, float]:
    return (0, report.bound) if report.bound is not None else (1, report.box_bound)


# --- Asymptotics ---


def binary_entropy(x: float) -> float:
    if not 0 <= x <= 1:
        raise DomainError(f"Binary entropy needs 0 <= x <= 1, got {x}")
    return float((special.entr(x) + special.entr(1 - x)) / np.log(2))


def h_function(x: float) -> float:
    """h(x) = 2x + sqrt(x(1-x)) - 1/2, increasing on [0, 1/2]."""
    return 2 * x + sqrt(x * (1 - x)) - 0.5


def _log_ratio(tau: float, z: float) -> float:
    discriminant = (1 - 2 * tau) ** 2 - 4 * z * (1 - z)
    if discriminant < 0:
        if discriminant < -_CLAMP_TOL:
            raise ValidityWindowError(f"Integrand is complex at z={z} for τ={tau}")
        discriminant = 0.0
    return float(np.log2((1 - 2 * tau + sqrt(discriminant)) / (2 * (1 - z))))


def log_ratio_integral(tau: float, upper: float, lower: float = 0.0) -> float:
    if upper == lower:
        return 0.0
    value, _ = integrate.quad(lambda z: _log_ratio(tau, z), lower, upper, epsabs=config.QUAD_TOL, limit=200)
    return value


def _inner_entropy(tau: float, xi: float) -> float:
    if not 0 <= xi < 1:
        raise DomainError(f"ξ={xi} must lie in [0, 1)")
    u = (tau - xi / 2) / (1 - xi)
    if -_CLAMP_TOL < u < 0:
        u = 0.0
    return (1 - xi) * binary_entropy(u)


def _omega_from(tau: float, xi: float, integral: float) -> float:
    return xi + _inner_entropy(tau, xi) - 2 * binary_entropy(tau) - 2 * integral


def _gamma_from(tau: float, xi: float, integral: float) -> float:
    return 2 * binary_entropy(tau) + 2 * integral - _inner_entropy(tau, xi) - xi


def omega(tau: float, xi: float) -> float:
    return _omega_from(tau, xi, log_ratio_integral(tau, xi))


def gamma(tau: float, xi: float) -> float:
    return _gamma_from(tau, xi, log_ratio_integral(tau, xi))


@dataclass(frozen=True)
class AxisMaximum:
    value: float
    argmax: float


def _grid(tau: float, upper: float, objective: Callable, step: float) -> tuple[np.ndarray, np.ndarray]:
    count = max(1, ceil(upper / step - 1e-9))
    points = np.linspace(0.0, upper, count + 1)
    pieces = [log_ratio_integral(tau, points[k + 1], points[k]) for k in range(count)]
    integrals = np.concatenate(([0.0], np.cumsum(pieces)))
    values = np.array([objective(tau, float(x), float(i)) for x, i in zip(points, integrals)])
    return points, values


def maximize(objective: Callable, tau: float, upper: float, step: Optional[float] = None) -> AxisMaximum:
    """Maximum of objective(τ, ξ, ∫₀^ξ) over [0, upper]: dense grid, then bounded refinement."""
    step = step or config.GRID_STEP
    if upper <= 0:
        return AxisMaximum(objective(tau, 0.0, 0.0), 0.0)
    points, values = _grid(tau, upper, objective, step)
    k = int(np.argmax(values))
    best_xi, best_value = float(points[k]), float(values[k])
    lower_edge, upper_edge = float(points[max(k - 1, 0)]), float(points[min(k + 1, len(points) - 1)])
    refined = optimize.minimize_scalar(
        lambda x: -objective(tau, x, log_ratio_integral(tau, x)),
        bounds=(lower_edge, upper_edge),
        method="bounded",
        options={"xatol": config.REFINE_TOL},
    )
    if refined.success and -refined.fun > best_value:
        best_xi = float(refined.x)
    value = objective(tau, best_xi, log_ratio_integral(tau, best_xi))
    logger.debug(f"Maximum {value:.8f} at ξ={best_xi:.6f} for τ={tau:.6f} on [0, {upper:.6f}]")
    return AxisMaximum(value, best_xi)


class BoundKind(str, Enum):
    SINGLETON = "singleton"
    HAMMING = "hamming"
    LP = "lp"


@dataclass(frozen=True)
class AsymptoticParams:
    """Relative distances and the derived τ, σ, with the ξ/η search intervals."""

    kind: BoundKind
    delta_x: float
    delta_z: float
    tau: float
    sigma: float

    @property
    def xi_upper(self) -> float:
        return self._upper(self.delta_x, self.tau)

    @property
    def eta_upper(self) -> float:
        return self._upper(self.delta_z, self.sigma)

    def _upper(self, delta: float, tau: float) -> float:
        if self.kind == BoundKind.HAMMING:
            return 2 * tau
        # the inner entropy argument stays in [0, 1] only for ξ <= 2τ
        return min(delta, 2 * tau)

    @classmethod
    def hamming(cls, delta_x: float, delta_z: float) -> "AsymptoticParams":
        for delta in (delta_x, delta_z):
            if not 0 <= delta <= 1:
                raise DomainError(f"Relative distance {delta} must lie in [0, 1]")
            tau = delta / 2
            if 2 * tau > asymptotic_smallest_root(tau) + _CLAMP_TOL:
                raise ValidityWindowError(
                    f"δ={delta} is outside the Hamming-type window 2τ <= 1/2 - sqrt(τ(1-τ)) (δ <= 0.2)"
                )
        return cls(BoundKind.HAMMING, delta_x, delta_z, delta_x / 2, delta_z / 2)

    @classmethod
    def lp(cls, delta_x: float, delta_z: float) -> "AsymptoticParams":
        for delta in (delta_x, delta_z):
            if not 0 <= delta <= 0.5:
                raise ValidityWindowError(f"δ={delta} is outside the LP window [0, 1/2]")
        return cls(BoundKind.LP, delta_x, delta_z, asymptotic_smallest_root(delta_x), asymptotic_smallest_root(delta_z))


@dataclass(frozen=True)
class AsymptoticBound:
    params: AsymptoticParams
    value: float
    xi: float
    eta: float

    @property
    def at_origin(self) -> bool:
        return self.xi == 0 and self.eta == 0


def _axis_maxima(params: AsymptoticParams, objective: Callable, step: Optional[float]) -> tuple[AxisMaximum, AxisMaximum]:
    x_max = maximize(objective, params.tau, params.xi_upper, step)
    if params.delta_z == params.delta_x:
        return x_max, x_max
    return x_max, maximize(objective, params.sigma, params.eta_upper, step)


def hamming_asymptotic_bound(delta_x: float, delta_z: float, step: Optional[float] = None) -> AsymptoticBound:
    """1 + max Ω_τ(ξ) + max Ω_σ(η) over ξ in [0, 2τ], η in [0, 2σ]."""
    params = AsymptoticParams.hamming(delta_x, delta_z)
    x_max, z_max = _axis_maxima(params, _omega_from, step)
    bound = AsymptoticBound(params, 1 + x_max.value + z_max.value, x_max.argmax, z_max.argmax)
    logger.info(f"Hamming-type rate bound {bound.value:.6f} at δ_x={delta_x}, δ_z={delta_z}")
    return bound


def lp_asymptotic_bound(delta_x: float, delta_z: float, step: Optional[float] = None) -> AsymptoticBound:
    """-1 + max Γ_τ(ξ) + max Γ_σ(η) over ξ in [0, δ_x), η in [0, δ_z)."""
    params = AsymptoticParams.lp(delta_x, delta_z)
    x_max, z_max = _axis_maxima(params, _gamma_from, step)
    bound = AsymptoticBound(params, -1 + x_max.value + z_max.value, x_max.argmax, z_max.argmax)
    logger.info(f"LP rate bound {bound.value:.6f} at δ_x={delta_x}, δ_z={delta_z}")
    return bound


def hamming_corollary_applies(delta: float) -> bool:
    return 0 <= delta <= HAMMING_COROLLARY_LIMIT


def lp_corollary_applies(delta: float) -> bool:
    return 0 <= delta <= LP_COROLLARY_LIMIT


def hamming_corollary_bound(delta_x: float, delta_z: float) -> float:
    return 1 - binary_entropy(delta_x / 2) - binary_entropy(delta_z / 2)


def lp_corollary_bound(delta_x: float, delta_z: float) -> float:
    return binary_entropy(asymptotic_smallest_root(delta_x)) + binary_entropy(asymptotic_smallest_root(delta_z)) - 1


def hamming_validity_threshold() -> float:
    """2τ* where h(τ*) = 0."""
    return 2 * optimize.brentq(h_function, 0.0, 0.5, xtol=1e-14)


def _lp_maximum_at_origin(delta: float, step: float) -> bool:
    params = AsymptoticParams.lp(delta, delta)
    if params.xi_upper <= 0:
        return True
    _, values = _grid(params.tau, params.xi_upper, _gamma_from, step)
    return int(np.argmax(values)) == 0


def lp_validity_threshold(lower: float = 0.1, upper: float = 0.25, step: float = 1e-3, tol: float = 1e-4) -> float:
    """Largest δ (to tol) whose Γ maximum over [0, δ) stays at ξ = 0, by bisection."""
    if not _lp_maximum_at_origin(lower, step) or _lp_maximum_at_origin(upper, step):
        raise BracketError(f"The Γ maximum does not leave the origin inside [{lower}, {upper}]")
    while upper - lower > tol:
        middle = (lower + upper) / 2
        if _lp_maximum_at_origin(middle, step):
            lower = middle
        else:
            upper = middle
    logger.info(f"LP validity threshold re-derived as δ ≈ {lower:.4f}")
    return lower


def bound_curve(kind: BoundKind | str, step: float = 0.005, grid_step: float = 1e-3) -> list[tuple[float, float]]:
    """(δ, rate bound) pairs for δ_x = δ_z = δ across the range where the bound is defined."""
    kind = BoundKind(kind)
    upper = HAMMING_COROLLARY_LIMIT if kind == BoundKind.HAMMING else 0.5
    curve = []
    for delta in np.arange(0.0, upper + step / 2, step):
        delta = round(float(delta), 10)
        if kind == BoundKind.SINGLETON:
            value = singleton_asymptotic_bound(delta, delta)
        elif kind == BoundKind.HAMMING:
            value = hamming_asymptotic_bound(delta, delta, grid_step).value
        else:
            value = lp_asymptotic_bound(delta, delta, grid_step).value
        curve.append((delta, value))
    return curve

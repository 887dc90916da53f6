"""
GF(4) Arithmetic and Additive Codes

This module represents words over GF(4) through the binary split c = a·α + b·α² and
provides the additive (F2-linear) codes that feed the counting-based enumerators.

Key Features:
- GF4Element / GF4Vector value types with field arithmetic on the (a, b) split
- AdditiveCode with F2-independent generators, canonical RREF form and equality
- Symplectic dual under <(a,b),(a',b')> = a·b' + a'·b (mod 2)
- Gray-code enumeration of all 2^g codewords behind a size guard
- Composition, Hamming weight and (Σa, Σb) statistics of codewords
- Text format for code files ("n=<int> format=<f4|ab>" header, one generator per line)
- Seeded random additive and symplectic self-orthogonal codes for property suites

Binary linear algebra (rank, row reduction, null spaces) is done over galois.GF(2).
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import galois
import numpy as np

from mcp.server.fastmcp.utilities.logging import get_logger

from qenum import config
from qenum.errors import BudgetExceededError, CodeParseError, DependentGeneratorsError, DomainError

logger = get_logger(__name__)

GF2 = galois.GF(2)

_HEADER_PATTERN = re.compile(r"^n\s*=\s*(\d+)\s+format\s*=\s*(f4|ab)\s*$")

# Discrete logarithms of the nonzero elements with respect to α; 1 = α³ = α + α².
_LOG = {(1, 0): 1, (0, 1): 2, (1, 1): 0}
_EXP = {1: (1, 0), 2: (0, 1), 0: (1, 1)}
_SYMBOLS = {"0": (0, 0), "w": (1, 0), "w2": (0, 1), "1": (1, 1)}


@dataclass(frozen=True)
class GF4Element:
    """An element a·α + b·α² of GF(4)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise DomainError(f"GF(4) components must be bits, got ({self.a}, {self.b})")

    @classmethod
    def from_symbol(cls, symbol: str) -> "GF4Element":
        try:
            return cls(*_SYMBOLS[symbol])
        except KeyError:
            raise CodeParseError(f"Unknown GF(4) symbol '{symbol}' (expected one of 0, 1, w, w2)")

    @property
    def symbol(self) -> str:
        return {pair: name for name, pair in _SYMBOLS.items()}[(self.a, self.b)]

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other: "GF4Element") -> "GF4Element":
        return GF4Element(self.a ^ other.a, self.b ^ other.b)

    def __mul__(self, other: "GF4Element") -> "GF4Element":
        if self.is_zero() or other.is_zero():
            return GF4Element(0, 0)
        return GF4Element(*_EXP[(_LOG[(self.a, self.b)] + _LOG[(other.a, other.b)]) % 3])


ZERO = GF4Element(0, 0)
ALPHA = GF4Element(1, 0)
ALPHA_SQUARED = GF4Element(0, 1)
ONE = GF4Element(1, 1)


@dataclass(frozen=True)
class Composition:
    """Counts of coordinates equal to α, α², α³ = 1 and 0."""

    k1: int
    k2: int
    k3: int
    k0: int

    @property
    def n(self) -> int:
        return self.k1 + self.k2 + self.k3 + self.k0


@dataclass(frozen=True)
class GF4Vector:
    """A length-n word over GF(4) stored as its binary split (a | b)."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"Length must be positive, got {self.n}")
        if len(self.a) != self.n or len(self.b) != self.n:
            raise DomainError(f"Split parts must have length {self.n}, got {len(self.a)} and {len(self.b)}")
        if any(bit not in (0, 1) for bit in self.a + self.b):
            raise DomainError("Split parts must be binary")

    @classmethod
    def zeros(cls, n: int) -> "GF4Vector":
        return cls(n, (0,) * n, (0,) * n)

    @classmethod
    def from_elements(cls, elements: Sequence[GF4Element]) -> "GF4Vector":
        return cls(len(elements), tuple(e.a for e in elements), tuple(e.b for e in elements))

    @classmethod
    def from_bits(cls, n: int, bits: Sequence[int]) -> "GF4Vector":
        """Build from a concatenated (a | b) bit sequence of length 2n."""
        bits = [int(bit) for bit in bits]
        if len(bits) != 2 * n:
            raise DomainError(f"Expected {2 * n} bits, got {len(bits)}")
        return cls(n, tuple(bits[:n]), tuple(bits[n:]))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "GF4Vector":
        """Inverse of ``mask``: bit s holds a_s, bit n + s holds b_s."""
        return cls(n, tuple((mask >> s) & 1 for s in range(n)), tuple((mask >> (n + s)) & 1 for s in range(n)))

    @property
    def mask(self) -> int:
        value = 0
        for s in range(self.n):
            value |= self.a[s] << s
            value |= self.b[s] << (self.n + s)
        return value

    @property
    def bits(self) -> tuple[int, ...]:
        return self.a + self.b

    def elements(self) -> tuple[GF4Element, ...]:
        return tuple(GF4Element(a, b) for a, b in zip(self.a, self.b))

    def __add__(self, other: "GF4Vector") -> "GF4Vector":
        if other.n != self.n:
            raise DomainError(f"Length mismatch: {self.n} vs {other.n}")
        return GF4Vector(
            self.n,
            tuple(x ^ y for x, y in zip(self.a, other.a)),
            tuple(x ^ y for x, y in zip(self.b, other.b)),
        )

    def scale(self, factor: GF4Element) -> "GF4Vector":
        return GF4Vector.from_elements([factor * element for element in self.elements()])

    def symplectic_product(self, other: "GF4Vector") -> int:
        if other.n != self.n:
            raise DomainError(f"Length mismatch: {self.n} vs {other.n}")
        return (sum(x * y for x, y in zip(self.a, other.b)) + sum(x * y for x, y in zip(other.a, self.b))) % 2

    def __str__(self) -> str:
        return "".join(map(str, self.a)) + "|" + "".join(map(str, self.b))


def composition(c: GF4Vector) -> Composition:
    k1 = sum(1 for a, b in zip(c.a, c.b) if a and not b)
    k2 = sum(1 for a, b in zip(c.a, c.b) if b and not a)
    k3 = sum(1 for a, b in zip(c.a, c.b) if a and b)
    return Composition(k1, k2, k3, c.n - k1 - k2 - k3)


def hamming_weight(c: GF4Vector) -> int:
    return sum(1 for a, b in zip(c.a, c.b) if a or b)


def ab_weights(c: GF4Vector) -> tuple[int, int]:
    return sum(c.a), sum(c.b)


def _as_gf2(rows: Sequence[Sequence[int]], width: int) -> galois.FieldArray:
    if not rows:
        return GF2.Zeros((0, width))
    return GF2(np.array(rows, dtype=np.uint8).reshape(len(rows), width))


@dataclass(frozen=True, eq=False)
class AdditiveCode:
    """An F2-linear subset of GF(4)^n given by an F2-basis of generators."""

    n: int
    generators: tuple[GF4Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.n < 1:
            raise DomainError(f"Code length must be positive, got {self.n}")
        for generator in self.generators:
            if generator.n != self.n:
                raise CodeParseError(f"Generator {generator} has length {generator.n}, expected {self.n}")
        if self.generators and int(np.linalg.matrix_rank(self.matrix())) != len(self.generators):
            raise DependentGeneratorsError(f"{len(self.generators)} generators of length {self.n} are F2-dependent")

    @classmethod
    def trivial(cls, n: int) -> "AdditiveCode":
        return cls(n, ())

    @classmethod
    def full_space(cls, n: int) -> "AdditiveCode":
        return cls(n, tuple(GF4Vector.from_bits(n, row) for row in np.eye(2 * n, dtype=int)))

    @classmethod
    def from_f4_rows(cls, n: int, rows: Sequence[Sequence[GF4Element]]) -> "AdditiveCode":
        """Expand each row r of an F4 generator matrix into the F2 pair {r, α·r}."""
        generators = []
        for row in rows:
            vector = GF4Vector.from_elements(row)
            if vector.n != n:
                raise CodeParseError(f"Row of length {vector.n} in a length-{n} code")
            generators.extend([vector, vector.scale(ALPHA)])
        return cls(n, tuple(generators))

    @property
    def g(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 2**self.g

    def matrix(self) -> galois.FieldArray:
        return _as_gf2([generator.bits for generator in self.generators], 2 * self.n)

    def canonical(self) -> "AdditiveCode":
        """The same code with generators in reduced row echelon form over F2."""
        if not self.generators:
            return self
        reduced = self.matrix().row_reduce()
        rows = [row for row in reduced.view(np.ndarray).astype(int) if row.any()]
        return AdditiveCode(self.n, tuple(GF4Vector.from_bits(self.n, row) for row in rows))

    def contains(self, c: GF4Vector) -> bool:
        if not self.generators:
            return not any(c.bits)
        stacked = _as_gf2([generator.bits for generator in self.generators] + [c.bits], 2 * self.n)
        return int(np.linalg.matrix_rank(stacked)) == self.g

    def is_self_orthogonal(self) -> bool:
        return all(
            x.symplectic_product(y) == 0 for i, x in enumerate(self.generators) for y in self.generators[i:]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return self.n == other.n and self.canonical().generators == other.canonical().generators

    def __hash__(self) -> int:
        return hash((self.n, self.canonical().generators))


def iter_codeword_masks(code: AdditiveCode) -> Iterator[int]:
    """Yield every codeword as an integer mask (see GF4Vector.mask), in Gray-code order."""
    if code.g > config.MAX_GENERATORS:
        raise BudgetExceededError(
            f"Enumerating 2^{code.g} codewords exceeds the guard of 2^{config.MAX_GENERATORS} (QENUM_MAX_GENERATORS)"
        )
    masks = [generator.mask for generator in code.generators]
    current = 0
    yield current
    for step in range(1, 2**code.g):
        current ^= masks[(step & -step).bit_length() - 1]
        yield current


def enumerate_codewords(code: AdditiveCode) -> Iterator[GF4Vector]:
    for mask in iter_codeword_masks(code):
        yield GF4Vector.from_mask(code.n, mask)


def symplectic_dual(code: AdditiveCode) -> AdditiveCode:
    """Dual under the symplectic form; has 2^(2n-g) elements."""
    n = code.n
    if not code.generators:
        return AdditiveCode.full_space(n)
    # <x, g> = x_a·g_b + x_b·g_a, so the dual is the kernel of the rows (g_b | g_a).
    swapped = _as_gf2([generator.b + generator.a for generator in code.generators], 2 * n)
    kernel = swapped.null_space()
    rows = [row for row in kernel.view(np.ndarray).astype(int) if row.any()]
    dual = AdditiveCode(n, tuple(GF4Vector.from_bits(n, row) for row in rows))
    logger.debug(f"Symplectic dual of a g={code.g} code on n={n}: g={dual.g}")
    return dual


# --- Text format ---


def _parse_f4_row(line: str, n: int) -> list[GF4Element]:
    tokens = line.split()
    if len(tokens) != n:
        raise CodeParseError(f"F4 row '{line}' has {len(tokens)} symbols, expected {n}")
    return [GF4Element.from_symbol(token) for token in tokens]


def _parse_ab_row(line: str, n: int) -> GF4Vector:
    parts = line.replace(" ", "").split("|")
    if len(parts) != 2:
        raise CodeParseError(f"(a|b) row '{line}' must contain exactly one '|'")
    a_part, b_part = parts
    if len(a_part) != n or len(b_part) != n:
        raise CodeParseError(f"(a|b) row '{line}' has parts of length {len(a_part)}|{len(b_part)}, expected {n}")
    if set(a_part + b_part) - {"0", "1"}:
        raise CodeParseError(f"(a|b) row '{line}' contains a symbol other than 0 and 1")
    return GF4Vector(n, tuple(int(ch) for ch in a_part), tuple(int(ch) for ch in b_part))


def parse_code(text: str) -> AdditiveCode:
    """Parse the code text format; rows may also be separated by '/' on one line."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise CodeParseError("Empty code description")
    match = _HEADER_PATTERN.match(lines[0])
    if match is None:
        raise CodeParseError(f"Malformed header '{lines[0]}', expected 'n=<int> format=<f4|ab>'")
    n, fmt = int(match.group(1)), match.group(2)
    if n < 1:
        raise CodeParseError("Code length must be positive")
    rows = [row.strip() for line in lines[1:] for row in line.split("/") if row.strip()]
    if fmt == "f4":
        return AdditiveCode.from_f4_rows(n, [_parse_f4_row(row, n) for row in rows])
    return AdditiveCode(n, tuple(_parse_ab_row(row, n) for row in rows))


def serialize_code(code: AdditiveCode) -> str:
    """Canonical (a|b) text form; parse_code(serialize_code(c)) == c.canonical()."""
    lines = [f"n={code.n} format=ab"]
    lines.extend(str(generator) for generator in code.canonical().generators)
    return "\n".join(lines) + "\n"


def load_code(path: Path | str) -> AdditiveCode:
    return parse_code(Path(path).read_text(encoding="utf-8"))


# --- Random codes ---


def _random_vector(n: int, rng: np.random.Generator) -> GF4Vector:
    return GF4Vector.from_bits(n, rng.integers(0, 2, size=2 * n))


def random_additive_code(n: int, g: int, rng: np.random.Generator) -> AdditiveCode:
    """A uniformly drawn F2-basis of g independent words of length n."""
    if not 0 <= g <= 2 * n:
        raise DomainError(f"Need 0 <= g <= 2n, got g={g}, n={n}")
    generators: list[GF4Vector] = []
    while len(generators) < g:
        candidate = _random_vector(n, rng)
        if not AdditiveCode(n, tuple(generators)).contains(candidate):
            generators.append(candidate)
    return AdditiveCode(n, tuple(generators))


def random_self_orthogonal_code(n: int, g: int, rng: np.random.Generator) -> AdditiveCode:
    """A random code with g generators contained in its own symplectic dual (g <= n)."""
    if not 0 <= g <= n:
        raise DomainError(f"Self-orthogonal codes need 0 <= g <= n, got g={g}, n={n}")
    code = AdditiveCode.trivial(n)
    while code.g < g:
        dual = symplectic_dual(code)
        coefficients = rng.integers(0, 2, size=dual.g)
        candidate = GF4Vector.zeros(n)
        for bit, generator in zip(coefficients, dual.generators):
            if bit:
                candidate = candidate + generator
        if not code.contains(candidate):
            code = AdditiveCode(n, code.generators + (candidate,))
    return code

"""
Pauli Errors, Code Projectors and Trace Primitives

This module models n-qubit Pauli errors e = i^phase · X(a)Z(b), builds stabilizer code
subspaces, and evaluates the two traces that define the quantum enumerators.

Key Features:
- PauliOperator with the weights N_x, N_y, N_z, w_X, w_Z, w_Q
- canonical_error(a, b) with the Hermitian phase i^{a·b}
- Streaming of all 4^n canonical errors behind a size guard
- Action on computational basis states without materializing 2^n x 2^n matrices
- Projector (orthonormal basis of a K-dimensional code space) and the stabilizer
  construction prod_j (I + g_j)/2
- Tr(eP) in O(K·2^n) and Tr(ePeP) in O(K²·2^n)

Qubit s is bit s of a basis index j, so X(a)|j> = |j xor a> and Z(b)|j> = (-1)^{b·j}|j>.
"""
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence

import numpy as np

from mcp.server.fastmcp.utilities.logging import get_logger

from qenum import config
from qenum.errors import (
    BudgetExceededError,
    DomainError,
    EmptyEigenspaceError,
    NonCommutingGeneratorsError,
    RoundingResidueError,
)
from qenum.gf4_codes import AdditiveCode, GF4Vector

logger = get_logger(__name__)

_PHASES = (1, 1j, -1, -1j)
_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
_SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_IDENTITY = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class PauliOperator:
    """The operator i^phase_exponent · X(a) Z(b) on n qubits."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    phase_exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(bit) for bit in self.a))
        object.__setattr__(self, "b", tuple(int(bit) for bit in self.b))
        object.__setattr__(self, "phase_exponent", self.phase_exponent % 4)
        if len(self.a) != self.n or len(self.b) != self.n:
            raise DomainError(f"Pauli vectors must have length {self.n}")
        if any(bit not in (0, 1) for bit in self.a + self.b):
            raise DomainError("Pauli vectors must be binary")

    @property
    def n_x(self) -> int:
        return sum(1 for a, b in zip(self.a, self.b) if a and not b)

    @property
    def n_y(self) -> int:
        return sum(1 for a, b in zip(self.a, self.b) if a and b)

    @property
    def n_z(self) -> int:
        return sum(1 for a, b in zip(self.a, self.b) if b and not a)

    @property
    def w_x(self) -> int:
        return sum(self.a)

    @property
    def w_z(self) -> int:
        return sum(self.b)

    @property
    def w_q(self) -> int:
        return self.n_x + self.n_y + self.n_z

    @property
    def a_mask(self) -> int:
        return sum(bit << s for s, bit in enumerate(self.a))

    @property
    def b_mask(self) -> int:
        return sum(bit << s for s, bit in enumerate(self.b))

    @property
    def is_identity(self) -> bool:
        return self.w_q == 0

    @property
    def is_hermitian(self) -> bool:
        # (i^p X(a)Z(b))^† = i^{-p} (-1)^{a·b} X(a)Z(b)
        return (2 * self.phase_exponent - 2 * sum(x * y for x, y in zip(self.a, self.b))) % 4 == 0

    def vector(self) -> GF4Vector:
        return GF4Vector(self.n, self.a, self.b)

    def commutes_with(self, other: "PauliOperator") -> bool:
        return self.vector().symplectic_product(other.vector()) == 0

    def to_dense(self) -> np.ndarray:
        """Explicit 2^n x 2^n matrix; only meant as an oracle for small n."""
        if self.n > 3:
            raise BudgetExceededError(f"Dense matrices are limited to n <= 3, got n={self.n}")
        matrix = np.array([[1]], dtype=complex)
        for s in reversed(range(self.n)):
            factor = _IDENTITY
            if self.a[s]:
                factor = factor @ _SIGMA_X
            if self.b[s]:
                factor = factor @ _SIGMA_Z
            matrix = np.kron(matrix, factor)
        return _PHASES[self.phase_exponent] * matrix


def canonical_error(a: Sequence[int], b: Sequence[int]) -> PauliOperator:
    """e = i^{a·b} X(a) Z(b): Hermitian and squaring to the identity."""
    a, b = tuple(int(bit) for bit in a), tuple(int(bit) for bit in b)
    return PauliOperator(len(a), a, b, sum(x * y for x, y in zip(a, b)))


def all_errors(n: int) -> Iterator[PauliOperator]:
    if n > config.MAX_STREAM_N:
        raise BudgetExceededError(f"Streaming 4^{n} errors exceeds the guard n <= {config.MAX_STREAM_N}")
    for a in product((0, 1), repeat=n):
        for b in product((0, 1), repeat=n):
            yield canonical_error(a, b)


@dataclass(frozen=True)
class PartitionSizes:
    """Cardinalities of E[i], E[i,j] and E[i,j,k]."""

    by_weight: dict[int, int] = field(default_factory=dict)
    by_xz_weight: dict[tuple[int, int], int] = field(default_factory=dict)
    by_xyz_count: dict[tuple[int, int, int], int] = field(default_factory=dict)


def partition_sizes(n: int) -> PartitionSizes:
    by_weight, by_xz, by_xyz = Counter(), Counter(), Counter()
    for e in all_errors(n):
        by_weight[e.w_q] += 1
        by_xz[(e.w_x, e.w_z)] += 1
        by_xyz[(e.n_x, e.n_y, e.n_z)] += 1
    return PartitionSizes(dict(by_weight), dict(by_xz), dict(by_xyz))


def apply_to_basis(e: PauliOperator, j: int) -> tuple[complex, int]:
    """Return (phase, j') with e|j> = phase·|j'>."""
    if not 0 <= j < 2**e.n:
        raise DomainError(f"Basis index {j} out of range for n={e.n}")
    sign = -1 if (e.b_mask & j).bit_count() % 2 else 1
    return _PHASES[e.phase_exponent] * sign, j ^ e.a_mask


def apply(e: PauliOperator, states: np.ndarray) -> np.ndarray:
    """Apply e to a state vector, or to each column of a (2^n, K) array."""
    dim = 2**e.n
    if states.shape[0] != dim:
        raise DomainError(f"State has {states.shape[0]} amplitudes, expected {dim}")
    indices = np.arange(dim)
    parity = np.zeros(dim, dtype=np.int64)
    for s, bit in enumerate(e.b):
        if bit:
            parity ^= (indices >> s) & 1
    phases = _PHASES[e.phase_exponent] * (1 - 2 * parity)
    if states.ndim == 2:
        phases = phases[:, None]
    result = np.empty_like(states, dtype=complex)
    result[indices ^ e.a_mask] = phases * states
    return result


@dataclass(frozen=True, eq=False)
class Projector:
    """Orthonormal basis (columns of a (2^n, K) array) of a code subspace."""

    n: int
    basis: np.ndarray

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=complex)
        if basis.ndim != 2 or basis.shape[0] != 2**self.n:
            raise DomainError(f"Basis must have shape (2^{self.n}, K), got {basis.shape}")
        gram = basis.conj().T @ basis
        deviation = float(np.max(np.abs(gram - np.eye(basis.shape[1])))) if basis.shape[1] else 0.0
        if deviation > config.ORTHONORMAL_TOL:
            raise DomainError(f"Basis is not orthonormal (deviation {deviation:.3e})")
        object.__setattr__(self, "basis", basis)

    @property
    def K(self) -> int:
        return self.basis.shape[1]


def full_space_projector(n: int) -> Projector:
    return Projector(n, np.eye(2**n, dtype=complex))


def stabilizer_generators(code: AdditiveCode) -> tuple[PauliOperator, ...]:
    return tuple(canonical_error(generator.a, generator.b) for generator in code.generators)


def projector_from_stabilizers(generators: Sequence[PauliOperator], n: Optional[int] = None) -> Projector:
    """Orthonormal basis of the joint +1 eigenspace of commuting Hermitian Paulis."""
    generators = tuple(generators)
    if n is None:
        if not generators:
            raise DomainError("n is required when no generators are given")
        n = generators[0].n
    if n > config.MAX_STREAM_N:
        raise BudgetExceededError(f"Building a 2^{n}-dimensional projector exceeds the guard n <= {config.MAX_STREAM_N}")
    for generator in generators:
        if generator.n != n:
            raise DomainError(f"Generator on {generator.n} qubits in an n={n} projector")
        if not generator.is_hermitian:
            raise DomainError(f"Generator {generator.vector()} with phase i^{generator.phase_exponent} is not Hermitian")
    for i, first in enumerate(generators):
        for second in generators[i + 1:]:
            if not first.commutes_with(second):
                raise NonCommutingGeneratorsError(f"Generators {first.vector()} and {second.vector()} anticommute")
    # raises DependentGeneratorsError on F2-dependence
    AdditiveCode(n, tuple(generator.vector() for generator in generators))

    image = np.eye(2**n, dtype=complex)
    for generator in generators:
        image = (image + apply(generator, image)) / 2
    left, singular_values, _ = np.linalg.svd(image)
    rank = int(np.sum(singular_values > 0.5))
    expected = 2 ** (n - len(generators))
    if rank != expected:
        raise EmptyEigenspaceError(f"Joint eigenspace has dimension {rank}, expected {expected}")
    logger.debug(f"Stabilizer projector on n={n} with {len(generators)} generators: K={rank}")
    return Projector(n, left[:, :rank])


def trace_eP(e: PauliOperator, projector: Projector) -> float:
    basis = projector.basis
    value = complex(np.einsum("ik,ik->", basis.conj(), apply(e, basis)))
    if abs(value.imag) > config.TRACE_IMAG_TOL * max(1, projector.K):
        raise RoundingResidueError(f"Tr(eP) has imaginary part {value.imag:.3e} for e={e.vector()}")
    return value.real


def trace_ePeP(e: PauliOperator, projector: Projector) -> float:
    basis = projector.basis
    overlaps = basis.conj().T @ apply(e, basis)
    return float(np.sum(np.abs(overlaps) ** 2))

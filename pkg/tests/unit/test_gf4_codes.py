from collections import Counter

import numpy as np
import pytest
from unittest.mock import patch

from qenum.errors import BudgetExceededError, CodeParseError, DependentGeneratorsError, DomainError
from qenum.gf4_codes import (
    ALPHA,
    ALPHA_SQUARED,
    ONE,
    ZERO,
    AdditiveCode,
    GF4Element,
    GF4Vector,
    ab_weights,
    composition,
    enumerate_codewords,
    hamming_weight,
    iter_codeword_masks,
    parse_code,
    random_additive_code,
    random_self_orthogonal_code,
    serialize_code,
    symplectic_dual,
)

FIVE_QUBIT = """\
n=5 format=f4
1 0 1 w2 w2
0 1 w2 w2 1
"""

STEANE = """\
n=7 format=ab
1010101|0000000
0110011|0000000
0001111|0000000
0000000|1010101
0000000|0110011
0000000|0001111
"""


@pytest.fixture
def five_qubit():
    return parse_code(FIVE_QUBIT)


def test_field_multiplication():
    assert ALPHA * ALPHA == ALPHA_SQUARED
    assert ALPHA * ALPHA_SQUARED == ONE
    assert ALPHA_SQUARED * ALPHA_SQUARED == ALPHA
    for element in (ZERO, ALPHA, ALPHA_SQUARED, ONE):
        assert element * ONE == element
        assert element * ZERO == ZERO
        assert element + element == ZERO


def test_one_is_alpha_plus_alpha_squared():
    assert ALPHA + ALPHA_SQUARED == ONE


def test_symbols():
    assert [GF4Element.from_symbol(s) for s in ("0", "w", "w2", "1")] == [ZERO, ALPHA, ALPHA_SQUARED, ONE]
    assert ALPHA_SQUARED.symbol == "w2"
    with pytest.raises(CodeParseError):
        GF4Element.from_symbol("w3")


def test_element_components_must_be_bits():
    with pytest.raises(DomainError):
        GF4Element(2, 0)


def test_vector_mask_layout():
    v = GF4Vector(3, (1, 0, 1), (0, 1, 1))
    # a bits low, b bits high
    assert v.mask == 0b101 | (0b110 << 3)
    assert GF4Vector.from_mask(3, v.mask) == v


def test_composition_and_weight():
    v = GF4Vector.from_elements([ALPHA, ALPHA_SQUARED, ONE, ZERO, ONE])
    c = composition(v)
    assert (c.k1, c.k2, c.k3, c.k0) == (1, 1, 2, 1)
    assert c.n == 5
    assert hamming_weight(v) == 4


def test_symplectic_product():
    x = GF4Vector(1, (1,), (0,))
    z = GF4Vector(1, (0,), (1,))
    assert x.symplectic_product(z) == 1
    assert x.symplectic_product(x) == 0
    assert (x + z).symplectic_product(x + z) == 0


def test_five_qubit_code(five_qubit):
    assert five_qubit.n == 5
    assert five_qubit.g == 4
    assert five_qubit.size == 16
    assert five_qubit.is_self_orthogonal()


def test_rows_separated_by_slash(five_qubit):
    inline = parse_code("n=5 format=f4\n1 0 1 w2 w2 / 0 1 w2 w2 1")
    assert inline == five_qubit


def test_comments_are_ignored():
    code = parse_code("# four-qubit code\nn=4 format=ab\n# rows\n1111|0000\n0000|1111\n")
    assert code.g == 2


@pytest.mark.parametrize(
    "text",
    [
        "",
        "n=5\n1 0 1 w2 w2",
        "n=5 format=f5\n1 0 1 w2 w2",
        "n=5 format=f4\n1 0 1 w2",
        "n=5 format=f4\n1 0 1 w2 w9",
        "n=2 format=ab\n10|01|11",
        "n=2 format=ab\n102|01",
        "n=2 format=ab\n12|01",
    ],
)
def test_parse_errors(text):
    with pytest.raises(CodeParseError):
        parse_code(text)


def test_dependent_generators_rejected():
    with pytest.raises(DependentGeneratorsError):
        parse_code("n=2 format=ab\n10|00\n01|00\n11|00")


def test_serialize_parses_back(five_qubit):
    text = serialize_code(five_qubit)
    assert text.startswith("n=5 format=ab\n")
    assert parse_code(text) == five_qubit


def test_canonical_form_is_stable(five_qubit):
    canonical = five_qubit.canonical()
    assert canonical == five_qubit
    assert canonical.canonical().generators == canonical.generators


def test_contains(five_qubit):
    g0, g1 = five_qubit.generators[:2]
    assert five_qubit.contains(g0 + g1)
    assert five_qubit.contains(GF4Vector.zeros(5))
    assert not five_qubit.contains(GF4Vector(5, (1, 0, 0, 0, 0), (0, 0, 0, 0, 0)))


def test_enumerate_codewords_visits_each_word_once(five_qubit):
    words = list(enumerate_codewords(five_qubit))
    assert len(words) == 16
    assert len({w.mask for w in words}) == 16
    assert all(five_qubit.contains(w) for w in words)


def test_codeword_guard(five_qubit):
    with patch("qenum.config.MAX_GENERATORS", 3):
        with pytest.raises(BudgetExceededError):
            next(iter_codeword_masks(five_qubit))


@pytest.mark.parametrize("text", [FIVE_QUBIT, STEANE, "n=4 format=ab\n1111|0000\n0000|1111"])
def test_symplectic_dual(text):
    code = parse_code(text)
    dual = symplectic_dual(code)
    assert dual.g == 2 * code.n - code.g
    for x in dual.generators:
        for y in code.generators:
            assert x.symplectic_product(y) == 0
    # self-orthogonal codes sit inside their dual
    assert all(dual.contains(generator) for generator in code.generators)
    assert symplectic_dual(dual) == code


def test_dual_of_trivial_code_is_full_space():
    assert symplectic_dual(AdditiveCode.trivial(3)) == AdditiveCode.full_space(3)
    assert AdditiveCode.full_space(3).g == 6


@pytest.mark.parametrize("seed", range(50))
def test_composition_agrees_with_ab_weights(seed):
    rng = np.random.default_rng(seed)
    n = 1 + seed % 6
    code = random_additive_code(n, int(rng.integers(0, 2 * n + 1)), rng)
    by_composition, by_weights = Counter(), Counter()
    for word in enumerate_codewords(code):
        counts = composition(word)
        assert ab_weights(word) == (counts.k1 + counts.k3, counts.k2 + counts.k3)
        by_composition[counts] += 1
        by_weights[ab_weights(word)] += 1
    summed = Counter()
    for counts, total in by_composition.items():
        summed[(counts.k1 + counts.k3, counts.k2 + counts.k3)] += total
    assert summed == by_weights


@pytest.mark.parametrize("seed", range(20))
def test_dual_invariants_on_random_codes(seed):
    rng = np.random.default_rng(1000 + seed)
    n = 1 + seed % 5
    code = random_additive_code(n, int(rng.integers(0, 2 * n + 1)), rng)
    dual = symplectic_dual(code)
    assert dual.size == 4**n // code.size
    assert symplectic_dual(dual) == code
    for x in code.generators:
        for y in dual.generators:
            assert x.symplectic_product(y) == 0


@pytest.mark.parametrize("seed", range(5))
def test_random_self_orthogonal_code(seed):
    rng = np.random.default_rng(seed)
    code = random_self_orthogonal_code(4, 3, rng)
    assert code.g == 3
    assert code.is_self_orthogonal()


def test_random_additive_code_is_independent():
    code = random_additive_code(3, 5, np.random.default_rng(7))
    assert code.g == 5
    assert np.linalg.matrix_rank(code.matrix()) == 5


def test_random_code_ranges():
    rng = np.random.default_rng(0)
    with pytest.raises(DomainError):
        random_self_orthogonal_code(3, 4, rng)
    with pytest.raises(DomainError):
        random_additive_code(2, 5, rng)

import pytest
from unittest.mock import patch

from qenum import example_513
from qenum.errors import IdentityFailureError
from qenum.example_513 import EXPECTED, expected_polynomial, five_qubit_code, reproduce_example


def test_check_matrix():
    code = five_qubit_code()
    assert (code.n, code.g) == (5, 4)
    assert code.is_self_orthogonal()


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_expected_polynomials_are_homogeneous(name):
    polynomial = expected_polynomial(name)
    assert polynomial.is_homogeneous()
    assert polynomial.is_nonnegative()


def test_reproduces_all_six_polynomials():
    report = reproduce_example()
    assert [c.name for c in report.comparisons] == ["B", "B⊥", "C", "C⊥", "D", "D⊥"]
    assert all(c.matches for c in report.comparisons)
    assert all(check.holds for check in report.identities)
    assert report.projector_matches is None
    assert report.all_hold


def test_projector_path_agrees():
    report = reproduce_example(check_projector=True)
    assert report.projector_matches is True
    assert report.all_hold


def test_mismatch_is_reported():
    broken = dict(EXPECTED)
    kind, _ = EXPECTED["B"]
    broken["B"] = (kind, "X**5 + 14*X*Y**4 + Y**5")
    with patch.object(example_513, "EXPECTED", broken):
        report = reproduce_example()
        assert not report.all_hold
        assert [c.name for c in report.comparisons if not c.matches] == ["B"]
        with pytest.raises(IdentityFailureError):
            reproduce_example(strict=True)

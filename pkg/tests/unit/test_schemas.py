import pytest
from pydantic import ValidationError

from qenum.enumerators import enumerate_from_additive_code
from qenum.gf4_codes import parse_code
from qenum.schemas import CommandRequest, EnumeratorTablesModel, Subcommand

FIVE_QUBIT = "n=5 format=f4\n1 0 1 w2 w2\n0 1 w2 w2 1"


@pytest.mark.parametrize("side", [0, 1])
def test_tables_survive_json(side):
    tables = enumerate_from_additive_code(parse_code(FIVE_QUBIT))[side]
    restored = EnumeratorTablesModel.model_validate_json(EnumeratorTablesModel.from_tables(tables).model_dump_json())
    assert restored.to_tables() == tables


def test_tables_reject_malformed_rationals():
    with pytest.raises(ValidationError):
        EnumeratorTablesModel(n=0, K="1/0", B=["1/1"], C=[["1/1"]], D=[])


@pytest.mark.parametrize(
    "flags",
    [
        {"asymptotic": True, "emit_curve": "curve.csv"},
        {"n": 10, "emit_curve": "curve.csv"},
        {"n": 10, "dx": 3},
    ],
)
def test_bound_requests_need_complete_points(flags):
    with pytest.raises(ValidationError):
        CommandRequest(subcommand=Subcommand.bound, bound_kind="singleton", **flags)


def test_curve_only_request_is_valid():
    request = CommandRequest(subcommand=Subcommand.bound, bound_kind="hamming", emit_curve="curve.csv")
    assert request.n is None

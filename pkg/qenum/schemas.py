"""
Pydantic Data Models for Reports and Requests

Key Components:
- OutputFormat / Subcommand Enums for the command-line surface
- EnumeratorTablesModel: the JSON form of one side's B, C and D distributions, with exact
  rationals written as "p/q" strings
- EnumerationReport: primal and dual tables of one code
- IdentityResultModel, DistanceReportModel, BoundReportModel: the remaining CLI/tool reports
- CodeSummary: a named entry of the code library
- CommandRequest: a validated command, checked before any computation runs
"""
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from qenum.enumerators import DistributionTables


class OutputFormat(str, Enum):
    text = "text"
    json = "json"
    csv = "csv"


class Subcommand(str, Enum):
    enumerate = "enumerate"
    dual = "dual"
    macwilliams_check = "macwilliams-check"
    distances = "distances"
    krawtchouk = "krawtchouk"
    bound = "bound"
    example = "example"


def _rational(value: str) -> str:
    try:
        Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"'{value}' is not an exact rational 'p/q'")
    return value


def _format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class CompleteCell(BaseModel):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    k: int = Field(ge=0)
    v: str

    @field_validator("v")
    @classmethod
    def _check_v(cls, v: str) -> str:
        return _rational(v)


class EnumeratorTablesModel(BaseModel):
    n: int = Field(ge=0)
    K: str
    dual: bool = False
    B: list[str]
    C: list[list[str]]
    D: list[CompleteCell]

    @field_validator("K")
    @classmethod
    def _check_K(cls, v: str) -> str:
        return _rational(v)

    @field_validator("B")
    @classmethod
    def _check_B(cls, v: list[str]) -> list[str]:
        return [_rational(x) for x in v]

    @field_validator("C")
    @classmethod
    def _check_C(cls, v: list[list[str]]) -> list[list[str]]:
        return [[_rational(x) for x in row] for row in v]

    @model_validator(mode="after")
    def _check_shape(self) -> "EnumeratorTablesModel":
        size = self.n + 1
        if len(self.B) != size or len(self.C) != size or any(len(row) != size for row in self.C):
            raise ValueError(f"B and C must have {size} entries per axis for n={self.n}")
        if any(cell.i + cell.j + cell.k > self.n for cell in self.D):
            raise ValueError("Complete-enumerator cells must satisfy i + j + k <= n")
        return self

    @classmethod
    def from_tables(cls, tables: DistributionTables) -> "EnumeratorTablesModel":
        return cls(
            n=tables.n,
            K=_format_rational(tables.K),
            dual=tables.dual,
            B=[_format_rational(v) for v in tables.B],
            C=[[_format_rational(v) for v in row] for row in tables.C],
            D=[CompleteCell(i=i, j=j, k=k, v=_format_rational(v)) for (i, j, k), v in sorted(tables.D.items())],
        )

    def to_tables(self) -> DistributionTables:
        return DistributionTables(
            n=self.n,
            K=Fraction(self.K),
            B=tuple(Fraction(v) for v in self.B),
            C=tuple(tuple(Fraction(v) for v in row) for row in self.C),
            D={(cell.i, cell.j, cell.k): Fraction(cell.v) for cell in self.D},
            dual=self.dual,
        )


class EnumerationReport(BaseModel):
    primal: EnumeratorTablesModel
    dual: EnumeratorTablesModel
    self_orthogonal: bool = True


class IdentityResultModel(BaseModel):
    name: str
    holds: bool
    detail: str = ""


class DistanceReportModel(BaseModel):
    symmetric_d: int
    asymmetric_frontier: list[tuple[int, int]]


class BoundReportModel(BaseModel):
    kind: str
    asymptotic: bool = False
    n: Optional[int] = None
    dx: Optional[int] = None
    dz: Optional[int] = None
    delta_x: Optional[float] = None
    delta_z: Optional[float] = None
    value: Optional[str] = None
    details: dict[str, Any] = {}


class CodeModel(BaseModel):
    n: int
    g: int
    generators: list[str]


class CodeSummary(BaseModel):
    name: str
    n: int
    g: int
    K: str
    self_orthogonal: bool


class CommandRequest(BaseModel):
    subcommand: Subcommand
    output_format: OutputFormat = OutputFormat.text
    code: Optional[str] = None
    projector: bool = False
    workers: Optional[int] = Field(default=None, ge=1)
    table: bool = False
    n: Optional[int] = Field(default=None, ge=0)
    i: Optional[int] = Field(default=None, ge=0)
    x: Optional[int] = Field(default=None, ge=0)
    bound_kind: Optional[str] = None
    dx: Optional[int] = Field(default=None, ge=1)
    dz: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=0)
    asymptotic: bool = False
    delta_x: Optional[float] = Field(default=None, ge=0, le=1)
    delta_z: Optional[float] = Field(default=None, ge=0, le=1)
    emit_curve: Optional[str] = None
    example: Optional[str] = None

    @model_validator(mode="after")
    def _check_flags(self) -> "CommandRequest":
        needs_code = {Subcommand.enumerate, Subcommand.dual, Subcommand.macwilliams_check, Subcommand.distances}
        if self.subcommand in needs_code and not self.code:
            raise ValueError(f"'{self.subcommand.value}' needs --code")
        if self.subcommand == Subcommand.krawtchouk:
            if self.n is None or (not self.table and (self.i is None or self.x is None)):
                raise ValueError("'krawtchouk' needs --n and either 'table' or --i and --x")
        if self.subcommand == Subcommand.bound:
            if self.bound_kind not in ("singleton", "hamming", "lp"):
                raise ValueError("'bound' needs one of singleton, hamming, lp")
            finite = (self.n, self.dx, self.dz)
            # --emit-curve alone is a complete request; any single-point flag needs its companions
            if self.asymptotic and (self.delta_x is None or self.delta_z is None):
                raise ValueError("asymptotic bounds need --deltax and --deltaz")
            if not self.asymptotic and (self.emit_curve is None or any(v is not None for v in finite)):
                if any(v is None for v in finite):
                    raise ValueError("finite bounds need --n, --dx and --dz")
        if self.subcommand == Subcommand.example and self.example != "513":
            raise ValueError("'example' only knows the 513 pipeline")
        return self

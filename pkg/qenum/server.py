"""
Quantum Enumerator Server - MCP Server Implementation

Exposes the enumerator and bound library as MCP tools over stdio.

Tools:
- enumerate_code: primal and dual B, C, D tables of a library code or code text
- check_macwilliams: the identity suite for a code
- extract_code_distances: symmetric distance and asymmetric frontier
- krawtchouk_value: one exact Krawtchouk value
- evaluate_bound: Singleton, Hamming-type or LP bound, finite or asymptotic
- reproduce_example: the [[5,1,3]] reference pipeline
- list_library_codes: the named codes shipped with the package

Every tool validates its arguments, returns JSON on success and a readable error string on failure.
"""
import asyncio
import json
from typing import Annotated, Optional

from pydantic import Field

from mcp.server.fastmcp import Context, FastMCP
from mcp.server.fastmcp.utilities.logging import configure_logging, get_logger

from qenum import bounds, code_library, config
from qenum.enumerators import check_identities, enumerate_from_additive_code, extract_distances
from qenum.errors import QenumError
from qenum.example_513 import reproduce_example as run_example
from qenum.gf4_codes import AdditiveCode, parse_code
from qenum.krawtchouk import eval_integer
from qenum.schemas import DistanceReportModel, EnumerationReport, EnumeratorTablesModel, IdentityResultModel

logger = get_logger(__name__)

MAX_CODE_TEXT_LENGTH = 10000

mcp = FastMCP(name="Quantum Enumerator Server")


def _resolve(code: str) -> AdditiveCode:
    """A library name, or code text starting with the 'n=... format=...' header."""
    if not code or not isinstance(code, str):
        raise ValueError("Code must be a non-empty string")
    if len(code) > MAX_CODE_TEXT_LENGTH:
        raise ValueError("Code text is too large (max 10KB)")
    if code.lstrip().startswith(("n=", "#")):
        return parse_code(code)
    resolved = code_library.get_code(code)
    if resolved is None:
        raise ValueError(f"Unknown library code '{code}'")
    return resolved


def _failure(tool: str, error: Exception) -> str:
    if isinstance(error, (ValueError, QenumError)):
        logger.error(f"{tool} rejected: {error}")
        return f"Error: {error}"
    logger.exception(f"Unexpected error in {tool}: {error}")
    return f"An unexpected error occurred in {tool}."


@mcp.tool()
async def enumerate_code(
    context: Context,
    code: Annotated[str, Field(description="Library code name or code text ('n=5 format=f4' header + rows).")],
) -> str:
    """Weight, double weight and complete weight distributions of a code and its symplectic dual."""
    try:
        primal, dual = enumerate_from_additive_code(_resolve(code))
        report = EnumerationReport(
            primal=EnumeratorTablesModel.from_tables(primal),
            dual=EnumeratorTablesModel.from_tables(dual),
            self_orthogonal=primal.self_orthogonal,
        )
        return report.model_dump_json(indent=2)
    except Exception as e:
        return _failure("enumerate_code", e)


@mcp.tool()
async def check_macwilliams(
    context: Context,
    code: Annotated[str, Field(description="Library code name or code text.")],
) -> str:
    """Run the specialization, MacWilliams and Krawtchouk identities on a code."""
    try:
        primal, dual = enumerate_from_additive_code(_resolve(code))
        results = [IdentityResultModel(name=c.name, holds=c.holds, detail=c.detail).model_dump() for c in check_identities(primal, dual)]
        return json.dumps({"all_hold": all(r["holds"] for r in results), "identities": results}, indent=2)
    except Exception as e:
        return _failure("check_macwilliams", e)


@mcp.tool()
async def extract_code_distances(
    context: Context,
    code: Annotated[str, Field(description="Library code name or code text.")],
) -> str:
    """Symmetric distance and the Pareto frontier of (d_x, d_z) pairs."""
    try:
        primal, dual = enumerate_from_additive_code(_resolve(code))
        report = extract_distances(primal, dual)
        return DistanceReportModel(
            symmetric_d=report.symmetric_d, asymmetric_frontier=list(report.asymmetric_frontier)
        ).model_dump_json()
    except Exception as e:
        return _failure("extract_code_distances", e)


@mcp.tool()
async def krawtchouk_value(
    context: Context,
    n: Annotated[int, Field(description="Code length.")],
    i: Annotated[int, Field(description="Polynomial degree, 0 <= i <= n.")],
    x: Annotated[int, Field(description="Integer point, 0 <= x <= n.")],
) -> str:
    """Exact value of the binary Krawtchouk polynomial P_i(x)."""
    try:
        if not isinstance(n, int) or n < 0:
            raise ValueError("n must be a non-negative integer")
        return json.dumps({"n": n, "i": i, "x": x, "value": eval_integer(n, i, x)})
    except Exception as e:
        return _failure("krawtchouk_value", e)


@mcp.tool()
async def evaluate_bound(
    context: Context,
    kind: Annotated[str, Field(description="singleton, hamming or lp.")],
    n: Annotated[Optional[int], Field(description="Code length (finite bounds).")] = None,
    dx: Annotated[Optional[int], Field(description="X-distance (finite bounds).")] = None,
    dz: Annotated[Optional[int], Field(description="Z-distance (finite bounds).")] = None,
    asymptotic: Annotated[bool, Field(description="Evaluate the rate bound instead.")] = False,
    delta_x: Annotated[Optional[float], Field(description="Relative X-distance (asymptotic).")] = None,
    delta_z: Annotated[Optional[float], Field(description="Relative Z-distance (asymptotic).")] = None,
) -> str:
    """Upper bound on K (finite) or on log2(K)/n (asymptotic)."""
    try:
        if kind not in ("singleton", "hamming", "lp"):
            raise ValueError("kind must be one of singleton, hamming, lp")
        if asymptotic:
            if delta_x is None or delta_z is None:
                raise ValueError("asymptotic bounds need delta_x and delta_z")
            if kind == "singleton":
                value = bounds.singleton_asymptotic_bound(delta_x, delta_z)
                return json.dumps({"kind": kind, "asymptotic": True, "value": value})
            bound = (bounds.hamming_asymptotic_bound if kind == "hamming" else bounds.lp_asymptotic_bound)(delta_x, delta_z)
            return json.dumps({"kind": kind, "asymptotic": True, "value": bound.value, "xi": bound.xi, "eta": bound.eta})
        if n is None or dx is None or dz is None:
            raise ValueError("finite bounds need n, dx and dz")
        if kind == "lp":
            report = bounds.finite_lp_bound(n, dx, dz)
            return json.dumps(
                {
                    "kind": kind,
                    "value": report.bound,
                    "box_bound": report.box_bound,
                    "t": report.x_params.t,
                    "s": report.z_params.t,
                    "singleton": str(report.singleton),
                    "exceeds_singleton": report.exceeds_singleton,
                    "violation": report.violation,
                }
            )
        certificate = (bounds.singleton_certificate if kind == "singleton" else bounds.hamming_finite_certificate)(n, dx, dz)
        result = bounds.check_key_inequality(certificate)
        return json.dumps({"kind": kind, "value": str(result.bound), "cell": list(result.cell)})
    except Exception as e:
        return _failure("evaluate_bound", e)


@mcp.tool()
async def reproduce_example(context: Context) -> str:
    """Enumerate the [[5,1,3]] code and compare against the reference polynomials."""
    try:
        report = run_example()
        return json.dumps(
            {
                "all_hold": report.all_hold,
                "polynomials": {c.name: {"computed": str(c.computed), "matches": c.matches} for c in report.comparisons},
                "identities": {check.name: check.holds for check in report.identities},
            },
            indent=2,
        )
    except Exception as e:
        return _failure("reproduce_example", e)


@mcp.tool()
async def list_library_codes(context: Context) -> str:
    """Named codes available to the other tools."""
    try:
        return json.dumps([summary.model_dump() for summary in code_library.list_codes()], indent=2)
    except Exception as e:
        return _failure("list_library_codes", e)


# --- Main Execution ---
if __name__ == "__main__":
    configure_logging(config.LOG_LEVEL)
    logger.info(f"Starting Quantum Enumerator Server with {len(code_library.load_library())} library code(s)...")
    try:
        asyncio.run(mcp.run_stdio_async())
    except KeyboardInterrupt:
        logger.info("Server shutdown requested by user")
    except Exception as e:
        logger.exception(f"Server error: {e}")

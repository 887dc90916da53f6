"""
Command-Line Interface

Subcommands:
    enumerate           primal and dual B, C, D tables of a code (--code path or library name)
    dual                the symplectic dual of a code, in the code text format
    macwilliams-check   the identity suite; exits nonzero when any identity fails
    distances           symmetric distance and the asymmetric (d_x, d_z) frontier
    krawtchouk          one exact value P_i(x), or 'krawtchouk table' as CSV
    bound               singleton | hamming | lp, finite (--n --dx --dz) or --asymptotic
    example 513         the [[5,1,3]] reference pipeline

Logs go to stderr; stdout carries only the report, so identical requests give identical output.
"""
import argparse
import csv
import io
import sys
from typing import Optional, Sequence, TextIO

from pydantic import ValidationError

from mcp.server.fastmcp.utilities.logging import configure_logging, get_logger

from qenum import bounds, config
from qenum.code_library import resolve_code
from qenum.enumerators import (
    DistributionTables,
    check_identities,
    dominance_holds,
    enumerate_from_additive_code,
    enumerate_from_projector,
    extract_distances,
)
from qenum.errors import EXIT_BOUND, EXIT_IDENTITY, EXIT_USAGE, QenumError, exit_code_for
from qenum.example_513 import computed_polynomials, reproduce_example
from qenum.gf4_codes import AdditiveCode, serialize_code, symplectic_dual
from qenum.krawtchouk import eval_integer, krawtchouk_table
from qenum.pauli import projector_from_stabilizers, stabilizer_generators
from qenum.schemas import (
    BoundReportModel,
    CodeModel,
    CommandRequest,
    DistanceReportModel,
    EnumerationReport,
    EnumeratorTablesModel,
    IdentityResultModel,
    OutputFormat,
    Subcommand,
)

logger = get_logger(__name__)

_POLYNOMIAL_LABELS = {"B": "B(X,Y)", "B⊥": "B⊥(X,Y)", "C": "C(X,Y,Z,W)", "C⊥": "C⊥(X,Y,Z,W)", "D": "D(X,Y,Z,W)", "D⊥": "D⊥(X,Y,Z,W)"}


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser for all subcommands.

    Returns:
        The parser; "--log-level" is global and "--format" is shared by every subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default="text")

    parser = argparse.ArgumentParser(prog="qenum", description="Quantum weight enumerators and bounds")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    for name, help_text in (
        ("enumerate", "B, C, D tables of a code and its dual"),
        ("dual", "symplectic dual of a code"),
        ("macwilliams-check", "verify the enumerator identities"),
        ("distances", "extract distances from the enumerators"),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--code", required=True, help="code file path or library name")
        if name in ("enumerate", "macwilliams-check"):
            sub.add_argument("--projector", action="store_true", help="also trace over the stabilizer projector")
            sub.add_argument("--workers", type=int, default=None)

    kraw = subparsers.add_parser("krawtchouk", parents=[common], help="Krawtchouk values")
    kraw.add_argument("mode", nargs="?", choices=["table"])
    kraw.add_argument("--n", type=int, required=True)
    kraw.add_argument("--i", type=int)
    kraw.add_argument("--x", type=int)

    bound = subparsers.add_parser("bound", parents=[common], help="upper bounds on K or on the rate")
    bound.add_argument("bound_kind", choices=["singleton", "hamming", "lp"])
    bound.add_argument("--n", type=int)
    bound.add_argument("--dx", type=int)
    bound.add_argument("--dz", type=int)
    bound.add_argument("--k", type=int, help="check k against the Singleton bound")
    bound.add_argument("--asymptotic", action="store_true")
    bound.add_argument("--deltax", dest="delta_x", type=float)
    bound.add_argument("--deltaz", dest="delta_z", type=float)
    bound.add_argument("--emit-curve", dest="emit_curve", help="write (δ, bound) pairs to this CSV file")

    example = subparsers.add_parser("example", parents=[common], help="reference pipelines")
    example.add_argument("example", choices=["513"])
    example.add_argument("--projector", action="store_true")
    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    """
    Turn parsed arguments into a validated request.

    Args:
        args: The namespace returned by build_parser().parse_args.

    Returns:
        The CommandRequest.

    Raises:
        ValidationError: If the flags do not form a complete command.
    """
    fields = {key: value for key, value in vars(args).items() if key != "log_level" and value is not None}
    if fields.get("mode") == "table":
        fields["table"] = True
    fields.pop("mode", None)
    return CommandRequest.model_validate(fields)


# --- Renderers ---


def _tables_csv(primal: DistributionTables, dual: DistributionTables) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["table", "i", "j", "k", "value"])
    for tables, suffix in ((primal, ""), (dual, "⊥")):
        for i, value in enumerate(tables.B):
            writer.writerow([f"B{suffix}", i, "", "", value])
        for i, row in enumerate(tables.C):
            for j, value in enumerate(row):
                if value:
                    writer.writerow([f"C{suffix}", i, j, "", value])
        for (i, j, k), value in sorted(tables.D.items()):
            writer.writerow([f"D{suffix}", i, j, k, value])
    return buffer.getvalue()


def _print_polynomials(primal: DistributionTables, dual: DistributionTables, out: TextIO) -> None:
    for name, polynomial in computed_polynomials(primal, dual).items():
        print(f"{_POLYNOMIAL_LABELS[name]} = {polynomial}", file=out)


def _enumerate(code: AdditiveCode, request: CommandRequest) -> tuple[DistributionTables, DistributionTables]:
    primal, dual = enumerate_from_additive_code(code)
    if request.projector:
        projector = projector_from_stabilizers(stabilizer_generators(code), code.n)
        primal, dual = enumerate_from_projector(projector, request.workers)
    return primal, dual


# --- Subcommands ---


def _run_enumerate(request: CommandRequest, out: TextIO) -> int:
    code = resolve_code(request.code)
    primal, dual = _enumerate(code, request)
    if request.output_format == OutputFormat.json:
        report = EnumerationReport(
            primal=EnumeratorTablesModel.from_tables(primal),
            dual=EnumeratorTablesModel.from_tables(dual),
            self_orthogonal=primal.self_orthogonal,
        )
        print(report.model_dump_json(indent=2), file=out)
    elif request.output_format == OutputFormat.csv:
        out.write(_tables_csv(primal, dual))
    else:
        print(f"n={primal.n} K={primal.K}", file=out)
        if not primal.self_orthogonal:
            print("warning: code is not symplectic self-orthogonal; tables are classical counts", file=out)
        _print_polynomials(primal, dual, out)
    return 0


def _run_dual(request: CommandRequest, out: TextIO) -> int:
    dual = symplectic_dual(resolve_code(request.code))
    if request.output_format == OutputFormat.json:
        model = CodeModel(n=dual.n, g=dual.g, generators=[str(generator) for generator in dual.canonical().generators])
        print(model.model_dump_json(indent=2), file=out)
    else:
        out.write(serialize_code(dual))
    return 0


def _run_macwilliams_check(request: CommandRequest, out: TextIO) -> int:
    code = resolve_code(request.code)
    primal, dual = enumerate_from_additive_code(code)
    results = [IdentityResultModel(name=c.name, holds=c.holds, detail=c.detail) for c in check_identities(primal, dual)]
    if request.projector:
        projector_primal, projector_dual = enumerate_from_projector(
            projector_from_stabilizers(stabilizer_generators(code), code.n), request.workers
        )
        matches = (projector_primal.B, projector_primal.C, projector_primal.D, projector_dual.B, projector_dual.C, projector_dual.D) == (
            primal.B,
            primal.C,
            primal.D,
            dual.B,
            dual.C,
            dual.D,
        )
        results.append(IdentityResultModel(name="projector traces = codeword counts", holds=matches))
    failed = [result for result in results if not result.holds]
    if request.output_format == OutputFormat.json:
        print("[" + ",".join(result.model_dump_json() for result in results) + "]", file=out)
    else:
        for result in results:
            status = "PASS" if result.holds else "FAIL"
            print(f"{status} {result.name}" + (f": {result.detail}" if result.detail else ""), file=out)
        print("ALL IDENTITIES HOLD" if not failed else f"{len(failed)} IDENTITIES FAILED", file=out)
    return EXIT_IDENTITY if failed else 0


def _run_distances(request: CommandRequest, out: TextIO) -> int:
    primal, dual = enumerate_from_additive_code(resolve_code(request.code))
    report = extract_distances(primal, dual)
    if request.output_format == OutputFormat.json:
        model = DistanceReportModel(symmetric_d=report.symmetric_d, asymmetric_frontier=list(report.asymmetric_frontier))
        print(model.model_dump_json(indent=2), file=out)
    else:
        print(f"d = {report.symmetric_d}", file=out)
        print("frontier (d_x, d_z): " + " ".join(f"({x},{z})" for x, z in report.asymmetric_frontier), file=out)
        print(f"dominance C <= C⊥: {'yes' if dominance_holds(primal, dual) else 'no'}", file=out)
    return 0


def _run_krawtchouk(request: CommandRequest, out: TextIO) -> int:
    n = request.n
    if request.table:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["i"] + [str(x) for x in range(n + 1)])
        for i, row in enumerate(krawtchouk_table(n).values):
            writer.writerow([i] + list(row))
        return 0
    print(eval_integer(n, request.i, request.x), file=out)
    return 0


def _emit_curve(request: CommandRequest) -> None:
    curve = bounds.bound_curve(request.bound_kind)
    with open(request.emit_curve, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["delta", "bound"])
        for delta, value in curve:
            writer.writerow([f"{delta:.3f}", f"{value:.8f}"])
    logger.info(f"Wrote {len(curve)} curve points to {request.emit_curve}")


def _finite_bound(request: CommandRequest) -> tuple[BoundReportModel, int]:
    n, dx, dz = request.n, request.dx, request.dz
    report = BoundReportModel(kind=request.bound_kind, n=n, dx=dx, dz=dz)
    if request.bound_kind == "singleton":
        result = bounds.check_key_inequality(bounds.singleton_certificate(n, dx, dz))
        report.value = str(result.bound)
        if request.k is not None:
            report.details["k"] = request.k
            report.details["singleton_holds"] = bounds.singleton_check(n, request.k, dx, dz)
    elif request.bound_kind == "hamming":
        result = bounds.check_key_inequality(bounds.hamming_finite_certificate(n, dx, dz))
        report.value = str(result.bound)
        report.details["cell"] = list(result.cell)
    else:
        lp = bounds.finite_lp_bound(n, dx, dz)
        report.value = None if lp.bound is None else f"{lp.bound:.6f}"
        report.details.update(
            {
                "t": lp.x_params.t,
                "a": round(lp.x_params.a, 10),
                "s": lp.z_params.t,
                "b": round(lp.z_params.a, 10),
                "box_bound": round(lp.box_bound, 6),
                "singleton": str(lp.singleton),
                "exceeds_singleton": lp.exceeds_singleton,
            }
        )
        if lp.violation:
            report.details["violation"] = lp.violation
            return report, EXIT_BOUND
    return report, 0


def _asymptotic_bound(request: CommandRequest) -> BoundReportModel:
    dx, dz = request.delta_x, request.delta_z
    report = BoundReportModel(kind=request.bound_kind, asymptotic=True, delta_x=dx, delta_z=dz)
    if request.bound_kind == "singleton":
        report.value = f"{bounds.singleton_asymptotic_bound(dx, dz):.6f}"
        return report
    if request.bound_kind == "hamming":
        result = bounds.hamming_asymptotic_bound(dx, dz)
        closed = bounds.hamming_corollary_bound(dx, dz)
        applies = bounds.hamming_corollary_applies(dx) and bounds.hamming_corollary_applies(dz)
    else:
        result = bounds.lp_asymptotic_bound(dx, dz)
        closed = bounds.lp_corollary_bound(dx, dz)
        applies = bounds.lp_corollary_applies(dx) and bounds.lp_corollary_applies(dz)
    report.value = f"{result.value:.6f}"
    report.details.update(
        {"xi": round(result.xi, 6), "eta": round(result.eta, 6), "closed_form": round(closed, 6), "corollary_applies": applies}
    )
    return report


def _run_bound(request: CommandRequest, out: TextIO) -> int:
    status = 0
    if request.emit_curve:
        _emit_curve(request)
        if not (request.asymptotic or request.n is not None):
            return 0
    if request.asymptotic:
        report = _asymptotic_bound(request)
    else:
        report, status = _finite_bound(request)
    if request.output_format == OutputFormat.json:
        print(report.model_dump_json(indent=2), file=out)
    else:
        target = "rate" if report.asymptotic else "K"
        print(f"{report.kind}: {target} <= {report.value if report.value is not None else 'no valid certificate'}", file=out)
        for key, value in report.details.items():
            print(f"  {key}: {value}", file=out)
    return status


def _run_example(request: CommandRequest, out: TextIO) -> int:
    report = reproduce_example(check_projector=request.projector)
    if request.output_format == OutputFormat.json:
        results = EnumerationReport(
            primal=EnumeratorTablesModel.from_tables(report.primal),
            dual=EnumeratorTablesModel.from_tables(report.dual),
        )
        print(results.model_dump_json(indent=2), file=out)
    else:
        for comparison in report.comparisons:
            marker = "" if comparison.matches else f"   MISMATCH, expected {comparison.expected}"
            print(f"{_POLYNOMIAL_LABELS[comparison.name]} = {comparison.computed}{marker}", file=out)
        for check in report.identities:
            print(f"{'PASS' if check.holds else 'FAIL'} {check.name}", file=out)
        if report.projector_matches is not None:
            print(f"{'PASS' if report.projector_matches else 'FAIL'} projector traces = codeword counts", file=out)
        print("ALL IDENTITIES HOLD" if report.all_hold else "REFERENCE MISMATCH", file=out)
    return 0 if report.all_hold else EXIT_IDENTITY


_HANDLERS = {
    Subcommand.enumerate: _run_enumerate,
    Subcommand.dual: _run_dual,
    Subcommand.macwilliams_check: _run_macwilliams_check,
    Subcommand.distances: _run_distances,
    Subcommand.krawtchouk: _run_krawtchouk,
    Subcommand.bound: _run_bound,
    Subcommand.example: _run_example,
}


def run(request: CommandRequest, out: Optional[TextIO] = None) -> int:
    """
    Execute one validated request.

    Args:
        request: The validated command.
        out: Stream for the report; defaults to stdout.

    Returns:
        The exit status: 0 on success, otherwise the code mapped from the raised error.
    """
    out = out or sys.stdout
    try:
        return _HANDLERS[request.subcommand](request, out)
    except (QenumError, OSError) as e:
        logger.error(f"{request.subcommand.value} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Command-line entry point.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].

    Returns:
        The process exit status (2 for incomplete or inconsistent flags).
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or config.LOG_LEVEL)
    try:
        request = request_from_args(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(request)


if __name__ == "__main__":
    sys.exit(main())

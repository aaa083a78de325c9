"""
This module implements the `vsa` command line: argument parsing, dispatch to the library and
emission of one JSON report per invocation.

Exit codes: 0 when the command ran and found nothing, 1 when it found violations, 2 when the
input could not be checked.
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

from vsa.errors import StructureError, VertexAlgebraError
from vsa.filtration import check_gr_commutative, dimension_table, pbw_certificate
from vsa.hopf import (
    BIALGEBRA,
    HOPF,
    OBSTRUCTED,
    IdealCandidate,
    action_kernel,
    check_fixed_point_closure,
    check_tau_equivariance,
    cocommutativity_from_action,
    find_grouplikes,
    fixed_points,
    inner_faithfulness,
    is_cocommutative,
    normal_subgroup_ideal,
    search_sweedler_actions,
    verify_action,
    verify_hopf,
    verify_ideal,
)
from vsa.injectivity import certify, certify_subalgebra
from vsa.scalars_linear import format_scalar, parse_scalar
from vsa.cli_reports.fixtures import fixture_listing, load_action, load_algebra, load_hopf, parse_h
from vsa.cli_reports.reports import Report
from vsa.defaults import CLOSURE_ITERATION_CAP, WINDOW_RADIUS
from vsa.vertex_ops import check_vacuum, nth_product, sweep_borcherds, sweep_skew_symmetry, sweep_translation, vertex_operator
from vsa.violations import Violation

logger = logging.getLogger(__name__)

class _ArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting, so that usage errors still produce a JSON report."""

    def error(self, message: str) -> None:
        raise StructureError(message)


# core commands ----------------------------------------------------------------


def _dims(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    report.results = {"algebra": algebra.name, "dims": [row.to_json() for row in algebra.graded_dimension(args.up_to)]}


def _product(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    u, v = algebra.parse_state(args.u), algebra.parse_state(args.v)
    if args.n is None and args.cutoff is None:
        raise StructureError("product needs --n or --cutoff")
    report.results = {"algebra": algebra.name}
    if args.n is not None:
        product = nth_product(u, args.n, v)
        report.results["product"] = product.to_json()
        report.results["format"] = product.format()
    if args.cutoff is not None:
        report.results["field"] = vertex_operator(u, v, args.cutoff).to_json()


def _check_jacobi(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    report.violations = sweep_borcherds(algebra, args.max_weight, radius=args.window, sample=args.sample, seed=args.seed)
    report.results = {"algebra": algebra.name, "max_weight": args.max_weight, "radius": args.window}


def _check_skew(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    report.violations = sweep_skew_symmetry(algebra, args.max_weight, args.cutoff)
    report.results = {"algebra": algebra.name, "max_weight": args.max_weight}


def _check_translation(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    report.violations = check_vacuum(algebra, args.max_weight) + sweep_translation(algebra, args.max_weight, args.cutoff)
    report.results = {"algebra": algebra.name, "max_weight": args.max_weight}


def _check_gr_commutative(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    report.violations = check_gr_commutative(algebra, args.up_to_level, args.up_to_weight)
    report.results = {"algebra": algebra.name, "up_to_level": args.up_to_level}


def _pbw_certify(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    certificate = pbw_certificate(algebra, parse_h(args.h), args.up_to)
    report.results = certificate.to_json()
    report.results["dimensions"] = dimension_table(algebra, args.up_to)
    report.violations = list(certificate.violations)


def _certificate_report(certificate, args: argparse.Namespace, report: Report) -> None:
    report.results = certificate.to_json()
    if not args.emit_kernel:
        report.results.pop("kernel_candidates", None)
    if not certificate.injective:
        report.violations = [
            Violation(
                "injectivity-undetermined",
                (certificate.algebra, format_scalar(certificate.domain_cutoff)),
                message=f"rank {certificate.rank} < {certificate.domain_dim} at window {certificate.window_extra}",
            )
        ]


def _injectivity(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    _certificate_report(certify(algebra, args.cutoff, max_window=args.max_window), args, report)


def _injectivity_sub(args: argparse.Namespace, report: Report) -> None:
    algebra = load_algebra(args.algebra)
    generators = [algebra.parse_state(text) for text in args.generator]
    certificate = certify_subalgebra(generators, args.cutoff, max_window=args.max_window, iteration_cap=args.iteration_cap)
    _certificate_report(certificate, args, report)


# hopf commands ------------------------------------------------------------------


def _hopf_verify(args: argparse.Namespace, report: Report) -> None:
    H = load_hopf(args.hopf)
    report.violations = verify_hopf(H)
    report.results = {"hopf": H.name, "dimension": H.dimension, "valid": not report.violations}


def _hopf_cocomm(args: argparse.Namespace, report: Report) -> None:
    H = load_hopf(args.hopf)
    cocommutative, witness = is_cocommutative(H)
    report.results = {"hopf": H.name, "cocommutative": cocommutative}
    if not cocommutative:
        report.results["witness"] = witness
        report.violations = [Violation("cocommutativity", (witness,), message="Δ ≠ Δ^op")]


def _parse_span(H, text: str) -> list:
    """Reads a JSON list whose items are coefficient lists or {label: c} maps."""
    try:
        span = json.loads(text)
    except json.JSONDecodeError as error:
        raise StructureError(f"Malformed span JSON: {error}") from error
    if not isinstance(span, list):
        raise StructureError(f"The span must be a JSON list, not {type(span).__name__}")
    vectors = []
    for vector in span:
        if isinstance(vector, dict):
            vectors.append(H.element(vector))
        elif isinstance(vector, list):
            vectors.append([parse_scalar(value) for value in vector])
        else:
            raise StructureError(f"Span entries are coefficient lists or label maps: {vector!r}")
    return vectors


def _hopf_ideal(args: argparse.Namespace, report: Report) -> None:
    H = load_hopf(args.hopf)
    if args.normal_subgroup is not None:
        if H.group is None:
            raise StructureError(f"{H.name} is not a group algebra")
        labels = [label.strip() for label in args.normal_subgroup.split(",")]
        unknown = [label for label in labels if label not in H.group.elements]
        if unknown:
            raise StructureError(f"Unknown elements {unknown} of {H.group.name}")
        ideal = normal_subgroup_ideal(H, frozenset(H.group.elements.index(label) for label in labels))
    else:
        ideal = IdealCandidate.of(H, _parse_span(H, args.span))
    report.violations = verify_ideal(ideal, args.mode)
    report.results = {"ideal": ideal.to_json(), "mode": args.mode}


def _hopf_grouplikes(args: argparse.Namespace, report: Report) -> None:
    report.results = find_grouplikes(load_hopf(args.hopf)).to_json()


def _action_inputs(action) -> dict:
    return {"action": action.name, "hopf": action.hopf.name, "algebra": action.algebra.name, "cutoff": format_scalar(action.cutoff)}


def _hopf_action(args: argparse.Namespace, report: Report) -> None:
    action = load_action(args.action, args.cutoff)
    report.violations = verify_action(action, mode_window=tuple(args.window) if args.window else None)
    report.results = _action_inputs(action)
    report.results["inner_faithfulness"] = inner_faithfulness(action).to_json()


def _hopf_kernel(args: argparse.Namespace, report: Report) -> None:
    action = load_action(args.action, args.cutoff)
    kernel = action_kernel(action)
    report.results = _action_inputs(action)
    report.results["kernel"] = kernel.to_json()
    for mode in (BIALGEBRA, HOPF):
        found = verify_ideal(kernel, mode)
        report.results[f"{mode}_ideal"] = not found
        report.violations.extend(Violation(v.check, v.indices, v.difference, message=mode) for v in found)


def _hopf_fixed(args: argparse.Namespace, report: Report) -> None:
    action = load_action(args.action, args.cutoff)
    weights = [parse_scalar(args.weight)] if args.weight is not None else action.weights()
    report.results = _action_inputs(action)
    report.results["fixed"] = {}
    for weight in weights:
        basis = fixed_points(action, weight)
        report.results["fixed"][format_scalar(weight)] = {"dimension": len(basis), "basis": [v.to_json() for v in basis]}
    if args.closure:
        report.violations = check_fixed_point_closure(action)


def _hopf_tau(args: argparse.Namespace, report: Report) -> None:
    action = load_action(args.action, args.cutoff)
    report.violations = check_tau_equivariance(action)
    report.results = _action_inputs(action)


def _hopf_cocomm_action(args: argparse.Namespace, report: Report) -> None:
    if args.action is None and not args.sweedler_search:
        raise StructureError(f"{args.hopf_command} needs --action or --sweedler-search")
    if args.action is not None:
        action = load_action(args.action, args.cutoff)
        verdict = cocommutativity_from_action(action)
        report.results = _action_inputs(action)
        report.results["verdict"] = verdict.to_json()
        if verdict.verdict == OBSTRUCTED:
            report.violations.append(Violation("obstructed", (verdict.witness,), message="Δ − Δ^op acts nonzero or H is not cocommutative"))
    if args.sweedler_search:
        search = search_sweedler_actions()
        report.results["sweedler_search"] = search.to_json()
        report.violations.extend(Violation("faithful-sweedler-action", (name,)) for name in search.valid_and_faithful)


def _fixtures_list(args: argparse.Namespace, report: Report) -> None:
    report.results = fixture_listing()


# parser ---------------------------------------------------------------------------


def _algebra_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", required=True, help="fixture name or algebra JSON file")


def _action_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--action", required=required, help="action fixture name or action JSON file")
    parser.add_argument("--cutoff", default=None, help="weight cutoff p/q, defaults to the fixture's")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="vsa", description="Exact computations with vertex superalgebras and Hopf actions.")
    parser.add_argument("--json-indent", type=int, default=None, help="indentation of the JSON report")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized sampling")
    parser.add_argument("--max-window", type=int, default=None, help="widest extra row window for injectivity")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    dims = commands.add_parser("dims", help="graded dimensions")
    _algebra_argument(dims)
    dims.add_argument("--up-to", required=True)
    dims.set_defaults(handler=_dims)

    product = commands.add_parser("product", help="u_n v or the truncated field Y(u, z)v")
    _algebra_argument(product)
    product.add_argument("--u", required=True)
    product.add_argument("--v", required=True)
    product.add_argument("--n", default=None)
    product.add_argument("--cutoff", default=None)
    product.set_defaults(handler=_product)

    check = commands.add_parser("check", help="axiom checks").add_subparsers(dest="check", required=True)
    jacobi = check.add_parser("jacobi")
    _algebra_argument(jacobi)
    jacobi.add_argument("--max-weight", required=True)
    jacobi.add_argument("--window", type=int, default=WINDOW_RADIUS)
    jacobi.add_argument("--sample", type=int, default=None)
    jacobi.set_defaults(handler=_check_jacobi)
    for name, handler in (("skew", _check_skew), ("translation", _check_translation)):
        sub = check.add_parser(name)
        _algebra_argument(sub)
        sub.add_argument("--max-weight", required=True)
        sub.add_argument("--cutoff", default=None)
        sub.set_defaults(handler=handler)
    gr = check.add_parser("gr-commutative")
    _algebra_argument(gr)
    gr.add_argument("--up-to-level", required=True)
    gr.add_argument("--up-to-weight", default=None)
    gr.set_defaults(handler=_check_gr_commutative)

    pbw = commands.add_parser("pbw-certify", help="compare gr_E(V) with F(h)")
    _algebra_argument(pbw)
    pbw.add_argument("--h", required=True, help='JSON [[id, parity, degree], ...] or a JSON file')
    pbw.add_argument("--up-to", required=True)
    pbw.set_defaults(handler=_pbw_certify)

    injectivity = commands.add_parser("injectivity", help="truncated Y(z)-injectivity certificate")
    _algebra_argument(injectivity)
    injectivity.add_argument("--cutoff", required=True)
    injectivity.add_argument("--emit-kernel", action="store_true")
    injectivity.set_defaults(handler=_injectivity)

    sub = commands.add_parser("injectivity-sub", help="certificate for a generated subalgebra")
    _algebra_argument(sub)
    sub.add_argument("--generator", action="append", required=True, help="state expression, repeatable")
    sub.add_argument("--cutoff", required=True)
    sub.add_argument("--iteration-cap", type=int, default=CLOSURE_ITERATION_CAP)
    sub.add_argument("--emit-kernel", action="store_true")
    sub.set_defaults(handler=_injectivity_sub)

    hopf = commands.add_parser("hopf", help="Hopf algebras and their actions").add_subparsers(dest="hopf_command", required=True)
    for name, handler in (("verify", _hopf_verify), ("cocomm", _hopf_cocomm), ("grouplikes", _hopf_grouplikes)):
        sub = hopf.add_parser(name)
        sub.add_argument("--hopf", required=True)
        sub.set_defaults(handler=handler)
    ideal = hopf.add_parser("ideal")
    ideal.add_argument("--hopf", required=True)
    ideal.add_argument("--span", default="[]", help="JSON list of coefficient vectors or {label: c} maps")
    ideal.add_argument("--normal-subgroup", default=None, help="comma separated element labels")
    ideal.add_argument("--mode", choices=(BIALGEBRA, HOPF), default=HOPF)
    ideal.set_defaults(handler=_hopf_ideal)
    action = hopf.add_parser("action")
    _action_arguments(action)
    action.add_argument("--window", type=int, nargs=2, default=None, metavar=("LOW", "HIGH"))
    action.set_defaults(handler=_hopf_action)
    for name, handler in (("kernel", _hopf_kernel), ("tau", _hopf_tau)):
        sub = hopf.add_parser(name)
        _action_arguments(sub)
        sub.set_defaults(handler=handler)
    fixed = hopf.add_parser("fixed")
    _action_arguments(fixed)
    fixed.add_argument("--weight", default=None)
    fixed.add_argument("--closure", action="store_true", help="also check closure and commutation")
    fixed.set_defaults(handler=_hopf_fixed)
    forced = hopf.add_parser("theorem513", aliases=["cocomm-action"], help="cocommutativity forced by a faithful action")
    _action_arguments(forced, required=False)
    forced.add_argument("--sweedler-search", action="store_true")
    forced.set_defaults(handler=_hopf_cocomm_action)

    fixtures = commands.add_parser("fixtures").add_subparsers(dest="fixtures_command", required=True)
    fixtures.add_parser("list").set_defaults(handler=_fixtures_list)
    return parser


def _command_name(args: argparse.Namespace) -> str:
    parts = [args.command]
    for attribute in ("check", "hopf_command", "fixtures_command"):
        value = getattr(args, attribute, None)
        if value:
            parts.append(value)
    return " ".join(parts)


def _inputs(args: argparse.Namespace) -> Dict[str, object]:
    skipped = {"handler", "command", "check", "hopf_command", "fixtures_command", "verbose", "json_indent"}
    return {key: value for key, value in sorted(vars(args).items()) if key not in skipped and value is not None}


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def run(argv: Optional[Sequence[str]] = None) -> Report:
    """
    Parses the arguments and runs one command; never raises on bad input.

    Examples
    --------
    >>> report = run(["dims", "--algebra", "heisenberg-k1", "--up-to", "8"])
    >>> report.exit_code, [row["dim"] for row in report.results["dims"]]
    (0, [1, 1, 2, 3, 5, 7, 11, 15, 22])

    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except StructureError as error:
        return Report("usage", {"argv": list(argv or [])}, error=str(error))
    report = Report(_command_name(args), _inputs(args), indent=args.json_indent)
    _configure_logging(args.verbose)
    try:
        args.handler(args, report)
    except VertexAlgebraError as error:
        logger.info("%s failed: %s", report.command, error)
        report.results, report.violations, report.error = {}, [], str(error)
    return report


def main(argv: Optional[List[str]] = None) -> int:
    report = run(sys.argv[1:] if argv is None else argv)
    print(report.render())
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""
Command line entry point for the gauge orbit type classifier
"""

import argparse
import sys
from typing import List, Optional

from config import GaugeOrbitConfig
from gauge_orbits import report_templates
from gauge_orbits.data_types import HoweSignature
from gauge_orbits.errors import GaugeOrbitError, InvalidInputError
from gauge_orbits.solve_responses import ExitCode
from orbit_classifier import OrbitTypeClassifier


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise InvalidInputError(message)


def parse_params(text: Optional[str]):
    """'p=4' or '4' or 's=2'; comma separated."""
    if text is None:
        return None
    named = {}
    positional = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "=" in part:
                key, value = part.split("=", 1)
                named[key.strip()] = int(value)
            else:
                positional.append(int(part))
        except ValueError as exc:
            raise InvalidInputError(f"cannot parse manifold parameters '{text}'") from exc
    if named and positional:
        raise InvalidInputError(f"mix of named and positional manifold parameters in '{text}'")
    return named or positional


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument(
        "--bound",
        type=int,
        default=None,
        help="sup-norm bound for lattice enumeration and node charges (default: default_bound, 10)",
    )
    common.add_argument("--model-file", default=None, help="JSON manifold model document")

    parser = _ArgumentParser(prog="gauge-orbits", description="Orbit types of SU(n) gauge theories")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    enumerate_parser = commands.add_parser("enumerate", parents=[common], help="list Howe signatures of SU(n)")
    enumerate_parser.add_argument("n", type=int)
    enumerate_parser.add_argument("--classes", action="store_true", help="one representative per permutation class")

    classify_parser = commands.add_parser("classify", parents=[common], help="orbit type catalog of a bundle")
    classify_parser.add_argument("--n", type=int, required=True)
    classify_parser.add_argument("--manifold", default=None)
    classify_parser.add_argument("--params", default=None, help="manifold parameters, e.g. p=4 or s=1")
    classify_parser.add_argument("--c2", type=int, default=0)

    nodes_parser = commands.add_parser("nodes", parents=[common], help="Chern-Simons node strata on a surface")
    nodes_parser.add_argument("--n", type=int, default=None)
    nodes_parser.add_argument("--J", dest="signature", required=True)
    nodes_parser.add_argument("--genus", type=int, default=0)

    bsuj_parser = commands.add_parser("bsuj", parents=[common], help="cohomology presentation of B SU(J)")
    bsuj_parser.add_argument("--J", dest="signature", required=True)
    bsuj_parser.add_argument("--coefficients", choices=["z", "zg"], default="z")

    return parser


def run(args: argparse.Namespace, classifier: OrbitTypeClassifier) -> str:
    as_json = args.format == "json"

    if args.command == "enumerate":
        signatures = classifier.signatures(args.n, args.classes)
        if as_json:
            return report_templates.to_json(report_templates.signature_rows(signatures))
        return report_templates.signature_table(signatures)

    if args.command == "classify":
        manifold = classifier.resolve_manifold(args.manifold, parse_params(args.params), args.model_file)
        catalog, report = classifier.classify(args.n, manifold, args.c2, args.bound)
        if as_json:
            return report_templates.to_json(report_templates.report_to_dict(report))
        return report_templates.report_text(report, catalog)

    if args.command == "nodes":
        J = HoweSignature.parse(args.signature)
        if args.n is not None and args.n != J.n:
            raise InvalidInputError(f"{J.display()} is a signature of SU({J.n}), not SU({args.n})")
        strata = classifier.nodes(J, args.genus, args.bound)
        if as_json:
            return report_templates.to_json(report_templates.node_rows(strata))
        return report_templates.node_table(J, args.genus, strata)

    J = HoweSignature.parse(args.signature)
    presentation, decomposition = classifier.bsuj(J, args.coefficients)
    if as_json:
        return report_templates.to_json(report_templates.bsuj_dict(J, presentation, decomposition))
    return report_templates.bsuj_text(J, presentation, decomposition)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the process exit code."""
    config = GaugeOrbitConfig()
    classifier = None
    try:
        args = build_parser().parse_args(argv)
        classifier = OrbitTypeClassifier(config)
        print(run(args, classifier))
    except GaugeOrbitError as e:
        print(f"error[{e.code}]: {e.message}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        print(f"❌ Unexpected error: {e}", file=sys.stderr)
        if classifier is not None:
            classifier.logger.log_exception_stack_trace(e)
        return ExitCode.INTERNAL_ERROR.value
    return ExitCode.SUCCESS.value


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front door: analyze graph files, run the oracle, export DOT
"""
import argparse
import sys
from typing import Callable, Optional, Sequence

import structlog
from pydantic import BaseModel, ValidationError

from app.config import Settings, get_settings
from app.exceptions import BudgetExceeded, CoxeterError, ResourceLimitError
from app.log import configure_logging
from app.models.coxeter_matrix import CoxeterMatrix
from app.services.classifier_service import FcClassifierService
from app.services.graph_file_service import GraphFileService
from app.services.oracle_service import OracleResult, OracleService
from app.services.report_service import ReportService

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="graph file (JSON) or the name of a shipped graph")
    common.add_argument("--max-length", type=int, default=settings.max_length,
                        help="maximal word length for enumeration (default %(default)s)")
    common.add_argument("--element-cap", type=int, default=settings.element_cap,
                        help="maximal number of enumerated elements (default %(default)s)")
    common.add_argument("--report", choices=("human", "machine"), default=settings.report_format,
                        help="human summary or JSON (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="python -m app.cli",
        description="Finite continuation of simple reflections in Coxeter groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="full report for every node")
    analyze.add_argument("--with-oracle", action="store_true",
                         help="compare every node with the brute-force oracle")

    fc = sub.add_parser("fc", parents=[common], help="FC(r_a) for one node")
    fc.add_argument("--node", required=True)

    classify = sub.add_parser("classify", parents=[common], help="finite type of a subset")
    classify.add_argument("--subset", required=True, help="comma-separated node names")

    sub.add_parser("rigidity", parents=[common], help="rigidity hypotheses and verdict")

    oracle = sub.add_parser("oracle-fc", parents=[common], help="classifier against the oracle")
    oracle.add_argument("--node", required=True)

    sub.add_parser("export-dot", parents=[common], help="Coxeter graph in DOT")
    return parser


def _emit(args: argparse.Namespace, model: BaseModel, render: Callable[[BaseModel], str]) -> None:
    if args.report == "machine":
        sys.stdout.write(model.model_dump_json(indent=2) + "\n")
    else:
        sys.stdout.write(render(model))


def _run(args: argparse.Namespace, matrix: CoxeterMatrix, reports: ReportService) -> int:
    if args.command == "analyze":
        report = reports.build_analysis(
            matrix,
            with_oracle=args.with_oracle,
            max_length=args.max_length,
            element_cap=args.element_cap,
        )
        _emit(args, report, reports.render_analysis)
        return EXIT_OK

    if args.command == "export-dot":
        sys.stdout.write(reports.export_dot(matrix))
        return EXIT_OK

    classifier = FcClassifierService(matrix)

    if args.command == "fc":
        _emit(args, reports.fc_response(classifier.finite_continuation(args.node)), reports.render_fc)
    elif args.command == "classify":
        names = [name.strip() for name in args.subset.split(",") if name.strip()]
        subset = matrix.node_set(names)
        _emit(args, reports.classify_response(classifier, subset), reports.render_classify)
    elif args.command == "rigidity":
        _emit(args, reports.rigidity_response(classifier.rigidity_report()), reports.render_rigidity)
    elif args.command == "oracle-fc":
        oracle = OracleService(
            matrix, classifier=classifier, max_length=args.max_length, element_cap=args.element_cap
        )
        try:
            comparison = oracle.compare_with_classifier(args.node, args.max_length)
        except BudgetExceeded as exc:
            if isinstance(exc.partial, OracleResult):
                prediction = classifier.finite_continuation(args.node)
                row = reports.partial_oracle_response(oracle, args.node, prediction, exc.partial)
                _emit(args, row, reports.render_oracle)
            raise
        _emit(args, reports.oracle_response(oracle, comparison), reports.render_oracle)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    configure_logging(settings)
    args = build_parser(settings).parse_args(argv)
    reports = ReportService(settings.templates_path)

    try:
        matrix = GraphFileService(settings.graphs_path).load_matrix(args.file)
        return _run(args, matrix, reports)
    except ValidationError as exc:
        for error in exc.errors():
            location = ".".join(str(part) for part in error["loc"]) or "file"
            sys.stderr.write(f"error: {location}: {error['msg']}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        logger.warning("resource_limit", command=args.command, error=str(exc))
        sys.stderr.write(f"limit: {exc} (partial results above are labelled partial)\n")
        return EXIT_LIMIT
    except CoxeterError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

import argparse
from collections.abc import Callable, Sequence
from contextlib import ExitStack
import logging
import logging.config
from pathlib import Path
import sys
from uuid import uuid4

from pydantic import BaseModel, ValidationError
from result import Err, Ok, Result

from src.cli.helpers.error_response import exit_code_from_error
from src.cli.helpers.output import render
from src.cli.helpers.sources import add_corpus_source, add_graph_source, corpus_spec, family_params, read_graph
from src.config.config import config
from src.config.logging_config import get_logging_config, run_id_var
from src.constants import EXIT_FINDINGS, EXIT_INPUT_ERROR, EXIT_OK
from src.harness.reports import summary_lines, write_summary_file
from src.models.cli_config import CliConfig
from src.models.enums.hamiltonicity_property import HamiltonicityProperty
from src.models.enums.measure import ComplementKind
from src.models.enums.oracle_engine import OracleEngine
from src.models.enums.output_format import OutputFormat
from src.models.error_result import ErrorResult
from src.models.verification import VerificationOptions
from src.services.condition_service import ConditionService
from src.services.graph_service import GraphService
from src.services.oracle_service import OracleService
from src.services.verification_service import VerificationService
from src.utils.exceptions import GraphError

logger = logging.getLogger(__name__)

_PROPERTY_FLAGS = {
    "hamiltonian": HamiltonicityProperty.HAMILTONIAN,
    "traceable": HamiltonicityProperty.TRACEABLE,
    "hamilton_connected": HamiltonicityProperty.HAMILTON_CONNECTED,
    "from_every_vertex": HamiltonicityProperty.TRACEABLE_FROM_EVERY_VERTEX,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.JSON)
    common.add_argument("--cap", type=int, default=config.ORACLE_SIZE_CAP, help="oracle size cap (vertices)")
    common.add_argument("--threads", type=int, default=config.THREADS)
    common.add_argument("--seed", type=int, default=config.SEED)
    common.add_argument("--engine", type=OracleEngine, choices=list(OracleEngine), default=OracleEngine.BACKTRACKING)
    return common


def _entries(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="hamindex", description="Distance-index sufficient conditions for Hamiltonian properties."
    )
    subcommands = parser.add_subparsers(dest="subcommand", required=True)

    index = subcommands.add_parser("index", parents=[common], help="Wiener, hyper-Wiener and Harary indices")
    add_graph_source(index)

    family = subcommands.add_parser("family", parents=[common], help="generate an extremal family member")
    family.add_argument("name", metavar="F")
    family.add_argument("n", type=int)
    family.add_argument("k", type=int)
    kind = family.add_mutually_exclusive_group()
    kind.add_argument("--complement", action="store_true")
    kind.add_argument("--quasi-complement", action="store_true")

    complement = subcommands.add_parser("complement", parents=[common], help="complement or quasi-complement")
    add_graph_source(complement)
    complement.add_argument("--quasi", action="store_true", help="quasi-complement of a bipartite input")

    oracle = subcommands.add_parser("oracle", parents=[common], help="exact Hamiltonicity oracle")
    add_graph_source(oracle)
    prop = oracle.add_mutually_exclusive_group()
    prop.add_argument("--hamiltonian", action="store_true")
    prop.add_argument("--traceable", action="store_true")
    prop.add_argument("--hamilton-connected", action="store_true")
    prop.add_argument("--from-every-vertex", action="store_true")
    prop.add_argument("--all", action="store_true", help="full profile with witnesses (default)")
    prop.add_argument("--cross-check", action="store_true", help="run both engines and compare")

    check = subcommands.add_parser("check", parents=[common], help="evaluate one catalog entry on a graph")
    check.add_argument("entry")
    add_graph_source(check)
    check.add_argument("--k", type=int, required=True)

    exceptions = subcommands.add_parser(
        "exceptions", parents=[common], help="membership in the exception families an entry lists"
    )
    exceptions.add_argument("entry")
    add_graph_source(exceptions)
    exceptions.add_argument("--k", type=int, required=True)

    implication = subcommands.add_parser(
        "implication", parents=[common], help="does hypothesis plus bound lemma force the edge inequality"
    )
    implication.add_argument("entry")
    add_graph_source(implication)
    implication.add_argument("--k", type=int, required=True)

    bounds = subcommands.add_parser("bounds", parents=[common], help="evaluate every applicable bound lemma")
    add_graph_source(bounds)

    verify = subcommands.add_parser("verify", parents=[common], help="verify catalog entries over a corpus")
    add_corpus_source(verify)
    verify.add_argument("--entries", type=_entries, help="comma-separated ids or patterns such as 'T4.*'")
    verify.add_argument("--k", type=int, help="test this k only")
    verify.add_argument("--k-min", type=int, default=1)
    verify.add_argument("--k-max", type=int)
    verify.add_argument("--no-bounds", action="store_true", help="skip the distance-index bound lemmas")
    verify.add_argument("--out", help="JSON-lines file, one record per line, written as the run progresses")
    verify.add_argument("--keep-records", action="store_true", help="also include every record in the printed report")
    verify.add_argument("--summary", help="CSV coverage summary")
    verify.add_argument("--timestamp", action=argparse.BooleanOptionalAction, default=True)

    closed_forms = subcommands.add_parser("closed-forms", parents=[common], help="check closed-form index values")
    closed_forms.add_argument("--n-max", type=int, default=14)
    closed_forms.add_argument("--k-max", type=int, default=3)

    catalog = subcommands.add_parser("catalog", parents=[common], help="dump the condition catalog")
    catalog.add_argument("--entries", type=_entries)
    return parser


def _emit[T: BaseModel](outcome: Result[T, ErrorResult], cli: CliConfig) -> int:
    match outcome:
        case Ok(model):
            render(model, cli.output_format, sys.stdout)
            return EXIT_OK
        case Err(error):
            sys.stderr.write(f"error: {error.details}\n")
            return exit_code_from_error(error)
        case _:
            return exit_code_from_error()


def cmd_index(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(GraphService().index(read_graph(args)), cli)


def cmd_family(args: argparse.Namespace, cli: CliConfig) -> int:
    if args.complement:
        kind = ComplementKind.COMPLEMENT
    elif args.quasi_complement:
        kind = ComplementKind.QUASI_COMPLEMENT
    else:
        kind = ComplementKind.NONE
    params = family_params([args.name, str(args.n), str(args.k)])
    return _emit(GraphService().family(params, kind), cli)


def cmd_complement(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(GraphService().complement(read_graph(args), quasi=args.quasi), cli)


def cmd_oracle(args: argparse.Namespace, cli: CliConfig) -> int:
    g = read_graph(args)
    service = OracleService(cli.engine, cli.cap)
    if args.cross_check:
        return _emit(service.cross_validate([g]), cli)
    for flag, prop in _PROPERTY_FLAGS.items():
        if getattr(args, flag):
            return _emit(service.check(g, prop), cli)
    return _emit(service.profile(g), cli)


def cmd_check(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(ConditionService().check(args.entry, read_graph(args), args.k), cli)


def cmd_exceptions(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(ConditionService().exceptions(args.entry, read_graph(args), args.k), cli)


def cmd_implication(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(ConditionService().implication(args.entry, read_graph(args), args.k), cli)


def cmd_bounds(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(ConditionService().bound_lemmas(read_graph(args)), cli)


def cmd_verify(args: argparse.Namespace, cli: CliConfig) -> int:
    k_min, k_max = (args.k, args.k) if args.k is not None else (args.k_min, args.k_max)
    options = VerificationOptions(
        entry_ids=args.entries or ["*"],
        k_min=k_min,
        k_max=k_max,
        engine=cli.engine,
        cap=cli.cap,
        check_bounds=not args.no_bounds,
        threads=cli.threads,
        seed=cli.seed,
        include_timestamp=args.timestamp,
        keep_records=args.keep_records,
        batch_size=config.VERIFY_BATCH_SIZE,
    )
    with ExitStack() as stack:
        sink = stack.enter_context(Path(args.out).open("w", encoding="utf-8")) if args.out else None
        outcome = VerificationService().verify(corpus_spec(args), options, sink)
    match outcome:
        case Ok(report):
            write_summary_file(report, args.summary)
            if cli.output_format is OutputFormat.PLAIN:
                sys.stdout.write("\n".join(summary_lines(report)) + "\n")
            else:
                render(report, cli.output_format, sys.stdout)
            return EXIT_FINDINGS if report.findings else EXIT_OK
        case Err(error):
            sys.stderr.write(f"error: {error.details}\n")
            return exit_code_from_error(error)
        case _:
            return exit_code_from_error()


def cmd_closed_forms(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(VerificationService().closed_forms(n_max=args.n_max, k_max=args.k_max), cli)


def cmd_catalog(args: argparse.Namespace, cli: CliConfig) -> int:
    return _emit(ConditionService().catalog(args.entries), cli)


COMMANDS: dict[str, Callable[[argparse.Namespace, CliConfig], int]] = {
    "index": cmd_index,
    "family": cmd_family,
    "complement": cmd_complement,
    "oracle": cmd_oracle,
    "check": cmd_check,
    "exceptions": cmd_exceptions,
    "implication": cmd_implication,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "closed-forms": cmd_closed_forms,
    "catalog": cmd_catalog,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.config.dictConfig(get_logging_config(config.LOG_FILE_PATH, config.LOG_LEVEL))
    run_id_var.set(uuid4().hex[:12])
    try:
        cli = CliConfig(
            subcommand=args.subcommand,
            input_path=getattr(args, "file", None),
            output_format=args.format,
            cap=args.cap,
            threads=args.threads,
            seed=args.seed,
            engine=args.engine,
        )
    except ValidationError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR
    logger.info(f"hamindex {cli.subcommand} started")
    # reading and parsing the graph source happens before any service is involved
    try:
        return COMMANDS[cli.subcommand](args, cli)
    except (GraphError, OSError, ValidationError) as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR

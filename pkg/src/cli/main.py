"""
Command-line front end for corona-spectra.

Examples:
    corona-spectra spectrum --graph cycle:4 --alpha 0.5
    corona-spectra compose --kind q-vertex --g1 cycle:4 --g2 complete:2 --out c4qk2.txt
    corona-spectra predict --kind total --g1 cycle:4 --g2 complete:2 --alpha 0.3
    corona-spectra verify --kind q-vertex --g1 cycle:4 --g2 complete:2 --alpha-grid 0,0.5,1
    corona-spectra verify --kind total --g1 cycle:4 --g2 path:3 --mode charpoly
    corona-spectra cospectral --kind total --pair shrikhande_rook4 --attach path:3
    corona-spectra cospectral --kind q-edge --base cycle:4 --attach-pair shrikhande_rook4
    corona-spectra energy --graph petersen --alpha 0.25

Graph arguments are either a family spec such as ``complete_bipartite:2:3``
or ``@path`` naming an edge-list file.

Exit codes: 0 success or verification passed, 1 verification failed,
2 usage error (a missing @path file included), 3 I/O error, 4 internal
formula bookkeeping error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from src import __version__
from src.lib.config import get_settings
from src.lib.edge_list import format_edge_list, read_edge_list
from src.lib.errors import FormulaCountError
from src.lib.serialization import format_float, to_json
from src.models.graph import CompositeLayout, CoronaKind, Graph
from src.models.spectrum import Alpha
from src.services.closed_form_service import predict_spectrum
from src.services.corona_service import composite_energy, compose
from src.services.cospectral_service import (
    DEFAULT_ALPHA_GRID,
    build_coronal_pair,
    build_cospectral_pair,
    catalog_names,
    known_regular_cospectral_pair,
)
from src.services.graph_service import generate
from src.services.spectra_service import (
    a_alpha_energy,
    a_alpha_matrix,
    regular_spec,
    sym_eigenvalues,
)
from src.services.verification_service import verify_prediction

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTERNAL = 4

VERBS = ("generate", "compose", "spectrum", "predict", "verify", "cospectral", "energy")
GRAPH_OPTIONS = ("graph", "g1", "g2", "attach", "base")


class CommandResult(BaseModel):
    """Exit status plus the artifact text and any files to write."""

    status: int = EXIT_OK
    stdout: str = ""
    files: Dict[str, str] = Field(default_factory=dict)


# Argument types


def _alpha(raw: str) -> float:
    try:
        return Alpha.coerce(float(raw))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"alpha must be a number in [0, 1], got {raw!r}") from e


def _alpha_grid(raw: str) -> List[float]:
    values = [_alpha(token) for token in raw.split(",") if token.strip()]
    if not values:
        raise argparse.ArgumentTypeError("alpha grid is empty")
    return values


def _tolerance(raw: str) -> float:
    try:
        tol = float(raw)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"tolerance must be a number, got {raw!r}") from e
    if not tol > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {raw!r}")
    return tol


def _kind(raw: str) -> CoronaKind:
    try:
        return CoronaKind.parse(raw)
    except ValueError as e:
        choices = ", ".join(k.value.replace("_", "-") for k in CoronaKind)
        raise argparse.ArgumentTypeError(f"unknown kind {raw!r}; expected one of {choices}") from e


def _closed_form_kind(raw: str) -> CoronaKind:
    kind = _kind(raw)
    if not kind.has_closed_form:
        raise argparse.ArgumentTypeError(f"{kind.value} corona has no closed form")
    return kind


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corona-spectra",
        description="Corona-type graph products and their A_alpha spectra",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level for stderr (default: CORONA_LOG_LEVEL or INFO)",
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add_out(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--out", type=str, help="Write the artifact here instead of stdout")

    def add_pair(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--g1", required=True, help="Base graph G1")
        sub.add_argument("--g2", required=True, help="Attached graph G2")

    generate_cmd = verbs.add_parser("generate", help="Emit a named graph as an edge list")
    generate_cmd.add_argument("--graph", required=True, help="Graph spec or @path")
    add_out(generate_cmd)

    compose_cmd = verbs.add_parser("compose", help="Build a corona-type composite")
    compose_cmd.add_argument("--kind", type=_kind, required=True, help="Corona kind")
    add_pair(compose_cmd)
    add_out(compose_cmd)

    spectrum_cmd = verbs.add_parser("spectrum", help="Oracle A_alpha spectrum of a graph")
    spectrum_cmd.add_argument("--graph", required=True, help="Graph spec or @path")
    spectrum_cmd.add_argument("--alpha", type=_alpha, required=True, help="alpha in [0, 1]")
    add_out(spectrum_cmd)

    predict_cmd = verbs.add_parser("predict", help="Closed-form spectrum of a regular composite")
    predict_cmd.add_argument("--kind", type=_closed_form_kind, required=True, help="Corona kind")
    add_pair(predict_cmd)
    predict_cmd.add_argument("--alpha", type=_alpha, required=True, help="alpha in [0, 1]")
    add_out(predict_cmd)

    verify_cmd = verbs.add_parser("verify", help="Compare closed forms with the oracle")
    verify_cmd.add_argument("--kind", type=_closed_form_kind, required=True, help="Corona kind")
    add_pair(verify_cmd)
    verify_cmd.add_argument(
        "--alpha-grid",
        type=_alpha_grid,
        default=list(DEFAULT_ALPHA_GRID),
        help="Comma-separated alpha values (default: 0,0.25,0.5,0.75,1)",
    )
    verify_cmd.add_argument(
        "--tol", type=_tolerance, help="Pass threshold (default: CORONA_VERIFY_TOL)"
    )
    verify_cmd.add_argument(
        "--mode",
        choices=["spectrum", "charpoly"],
        default="spectrum",
        help="Full spectrum (regular G2) or sampled characteristic polynomial (any G2)",
    )
    add_out(verify_cmd)

    cospectral_cmd = verbs.add_parser("cospectral", help="Certify an A_alpha-cospectral pair")
    cospectral_cmd.add_argument("--kind", type=_kind, required=True, help="Corona kind")
    target = cospectral_cmd.add_mutually_exclusive_group(required=True)
    target.add_argument("--attach", help="Common attachment H for the seed pair")
    target.add_argument("--base", help="Common regular base G for the attachment pair")
    cospectral_cmd.add_argument(
        "--pair",
        choices=catalog_names(),
        default="shrikhande_rook4",
        help="Seed pair used with --attach",
    )
    cospectral_cmd.add_argument(
        "--attach-pair",
        choices=catalog_names(),
        default="shrikhande_rook4",
        help="Attachment pair used with --base",
    )
    cospectral_cmd.add_argument(
        "--alpha-grid",
        type=_alpha_grid,
        default=list(DEFAULT_ALPHA_GRID),
        help="Comma-separated alphas",
    )
    cospectral_cmd.add_argument(
        "--tol", type=_tolerance, help="Pass threshold (default: CORONA_VERIFY_TOL)"
    )
    add_out(cospectral_cmd)

    energy_cmd = verbs.add_parser("energy", help="A_alpha-energy of a graph or a composite")
    energy_cmd.add_argument("--graph", help="Graph spec or @path")
    energy_cmd.add_argument("--kind", type=_kind, help="Corona kind, with --g1 and --g2")
    energy_cmd.add_argument("--g1", help="Base graph G1")
    energy_cmd.add_argument("--g2", help="Attached graph G2")
    energy_cmd.add_argument("--alpha", type=_alpha, required=True, help="alpha in [0, 1]")
    add_out(energy_cmd)

    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse and validate a command line.

    Raises:
        SystemExit: With status 2 on usage errors
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.verb == "energy":
        composite = (args.kind, args.g1, args.g2)
        if args.graph is None and not all(x is not None for x in composite):
            parser.error("energy needs --graph, or --kind with --g1 and --g2")
        if args.graph is not None and any(x is not None for x in composite):
            parser.error("energy takes --graph or --kind/--g1/--g2, not both")
    for option in GRAPH_OPTIONS:
        spec = getattr(args, option, None)
        if spec and spec.startswith("@") and not Path(spec[1:]).is_file():
            parser.error(f"--{option}: edge-list file {spec[1:]} does not exist")
    return args


# Execution


def load_graph(spec: str) -> Graph:
    """Resolve ``family:params`` or ``@path``."""
    if spec.startswith("@"):
        return read_edge_list(spec[1:])
    return generate(spec)


def _layout_payload(kind: CoronaKind, layout: CompositeLayout) -> dict:
    return {
        "kind": kind.value,
        "order": layout.order,
        "base_vertex_range": [layout.base_vertex_range.start, layout.base_vertex_range.stop],
        "aux_range": [layout.aux_range.start, layout.aux_range.stop],
        "copy_ranges": [[r.start, r.stop] for r in layout.copy_ranges],
    }


def _emit(args: argparse.Namespace, text: str, status: int = EXIT_OK) -> CommandResult:
    if args.out:
        return CommandResult(status=status, files={args.out: text})
    return CommandResult(status=status, stdout=text)


def execute(args: argparse.Namespace) -> CommandResult:
    """Run a parsed command and return its exit status and artifact."""
    verb = args.verb

    if verb == "generate":
        return _emit(args, format_edge_list(load_graph(args.graph)))

    if verb == "compose":
        graph, layout = compose(args.kind, load_graph(args.g1), load_graph(args.g2))
        payload = _layout_payload(args.kind, layout)
        if args.out:
            return CommandResult(
                files={
                    args.out: format_edge_list(graph),
                    f"{args.out}.layout.json": to_json(payload),
                }
            )
        header = "# layout " + json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
        return CommandResult(stdout=header + format_edge_list(graph))

    if verb == "spectrum":
        graph = load_graph(args.graph)
        spectrum = sym_eigenvalues(a_alpha_matrix(graph, args.alpha))
        payload = {
            "n": graph.n,
            "alpha": format_float(args.alpha),
            "eigenvalues": [format_float(x) for x in spectrum.eigenvalues],
        }
        return _emit(args, to_json(payload))

    if verb == "predict":
        g1, g2 = regular_spec(load_graph(args.g1)), regular_spec(load_graph(args.g2))
        report = predict_spectrum(args.kind, g1, g2, args.alpha)
        return _emit(args, to_json(report.to_payload()))

    if verb == "verify":
        report = verify_prediction(
            args.kind,
            load_graph(args.g1),
            load_graph(args.g2),
            args.alpha_grid,
            tol=args.tol,
            mode=args.mode,
            g1_name=args.g1,
            g2_name=args.g2,
        )
        return _emit(args, to_json(report.to_payload()), EXIT_OK if report.passed else EXIT_FAILED)

    if verb == "cospectral":
        if args.attach is not None:
            certificate = build_cospectral_pair(
                args.kind,
                known_regular_cospectral_pair(args.pair),
                load_graph(args.attach),
                args.alpha_grid,
                tol=args.tol,
                seed_names=tuple(args.pair.split("_", 1)),
                attachment_name=args.attach,
            )
        else:
            certificate = build_coronal_pair(
                args.kind,
                load_graph(args.base),
                known_regular_cospectral_pair(args.attach_pair),
                args.alpha_grid,
                tol=args.tol,
                base_name=args.base,
                attachment_names=tuple(args.attach_pair.split("_", 1)),
            )
        payload = certificate.model_dump(mode="json")
        payload["alpha_grid"] = [format_float(a) for a in certificate.alpha_grid]
        return _emit(args, to_json(payload), EXIT_OK if certificate.passed else EXIT_FAILED)

    if verb == "energy":
        if args.graph is not None:
            label = args.graph
            energy = a_alpha_energy(load_graph(args.graph), args.alpha)
        else:
            label = f"{args.g1} {args.kind.value} {args.g2}"
            g1, g2 = load_graph(args.g1), load_graph(args.g2)
            energy = composite_energy(args.kind, g1, g2, args.alpha)
        payload = {
            "graph": label,
            "alpha": format_float(args.alpha),
            "energy": format_float(energy),
        }
        return _emit(args, to_json(payload))

    raise ValueError(f"unknown verb {verb!r}")


def _configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        level=getattr(logging, level or get_settings().log_level, logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, execute and write outputs; returns the process exit status."""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        _configure_logging(args.log_level)
        result = execute(args)
        for path, text in result.files.items():
            Path(path).write_text(text, encoding="utf-8")
            logger.info(f"Wrote {path}")
        if result.stdout:
            sys.stdout.write(result.stdout)
        return result.status
    except FormulaCountError as e:
        logger.error(f"Internal formula bookkeeping error in family {e.family}: {e}")
        print(f"error: internal error in family {e.family}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

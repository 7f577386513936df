"""Command-line interface: ingest, generate, run the pipeline, serve, export."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import SegueError
from .network import (
    dumps_network,
    generate_synthetic,
    load_network,
    profile_from_document,
)
from .session import Session


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _write_text(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _session_from_args(args) -> Session:
    net = load_network(args.dataset)
    session = Session(net)
    for spec in _read_json(args.event_types):
        session.add_event_type(spec)
    session.set_metric(args.metric)
    return session


def cmd_ingest(args) -> int:
    net = load_network(args.file)
    if args.format == "json":
        _write_text(dumps_network(net), args.out)
    else:
        summary = (
            f"nodes: {len(net.nodes)}\n"
            f"edges: {len(net.edges)}\n"
            f"time steps: {net.num_time_steps}\n"
            f"attribute values: {', '.join(net.attribute_values)}\n"
        )
        _write_text(summary, args.out)
    return 0


def cmd_gen(args) -> int:
    profile = profile_from_document(_read_json(args.profile))
    net = generate_synthetic(profile, args.seed)
    _write_text(dumps_network(net), args.out)
    return 0


def cmd_run(args) -> int:
    session = _session_from_args(args)
    fmt = args.format or ("csv" if args.out.endswith(".csv") else "json")
    _write_text(session.export_text("layout", fmt), args.out)
    return 0


def cmd_export_matrix(args) -> int:
    session = _session_from_args(args)
    fmt = args.format or ("csv" if (args.out or "").endswith(".csv") else "json")
    _write_text(session.export_text("matrix", fmt), args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(
        create_app(ui_dir=args.ui), host=args.host, port=args.port,
        log_level="info",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segue",
        description=(
            "Transform dynamic ego-networks into event sequences, distances, "
            "and 2D layouts"
        ),
    )
    parser.add_argument("--version", action="version", version=f"segue {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate a dataset and print a summary")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("gen", help="generate a synthetic dataset from a profile")
    p.add_argument("--profile", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="run the full pipeline and write the layout")
    p.add_argument("--dataset", required=True)
    p.add_argument("--event-types", required=True)
    p.add_argument("--metric", choices=("euclidean", "edit"), default="euclidean")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"))
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("export-matrix", help="write the pairwise distance matrix")
    p.add_argument("--dataset", required=True)
    p.add_argument("--event-types", required=True)
    p.add_argument("--metric", choices=("euclidean", "edit"), default="euclidean")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))
    p.set_defaults(func=cmd_export_matrix)

    p = sub.add_parser("serve", help="start the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui", help="directory of built UI assets to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SegueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

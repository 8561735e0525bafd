"""Command-line entry point.

Subcommands:
    table2  [--step N] [--out F]   angle readability table, both technologies
    table3  [--out F]              size/readability table
    latency [--n N] [--out F]      mean per-item scan latency comparison
    serve   [--bind HOST:PORT] [--data-dir DIR] [--deterministic | --seed N]

Exit codes: 0 on success, 2 on usage errors. Flags for `serve` can be
overridden with INV_-prefixed environment variables (INV_BIND,
INV_DATA_DIR, INV_SEED, INV_UI_DIR).
"""

import argparse
import os
import sys
from pathlib import Path

from nfcinv.experiments import angle_table_csv, latency_compare_csv, size_table_csv


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nfcinv",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_table2 = sub.add_parser("table2", help="angle readability table (CSV)")
    p_table2.add_argument("--step", type=_positive_int, default=1,
                          help="angle step in degrees (default 1)")
    p_table2.add_argument("--out", default=None, help="output file (default stdout)")

    p_table3 = sub.add_parser("table3", help="size readability table (CSV)")
    p_table3.add_argument("--out", default=None)

    p_latency = sub.add_parser("latency", help="scan latency comparison (CSV)")
    p_latency.add_argument("--n", type=_positive_int, default=1,
                           help="number of items per lane (default 1)")
    p_latency.add_argument("--out", default=None)

    p_serve = sub.add_parser("serve", help="run the inventory HTTP service")
    p_serve.add_argument("--bind", default=os.environ.get("INV_BIND", "127.0.0.1:8000"),
                         help="host:port to bind (default 127.0.0.1:8000)")
    p_serve.add_argument("--data-dir",
                         default=os.environ.get("INV_DATA_DIR", "./data"),
                         help="event log directory (default ./data)")
    mode = p_serve.add_mutually_exclusive_group()
    mode.add_argument("--deterministic", action="store_true", default=True,
                      help="deterministic scan model (default)")
    mode.add_argument("--seed", type=int,
                      default=(int(os.environ["INV_SEED"])
                               if "INV_SEED" in os.environ else None),
                      help="enable the stochastic scan model with this seed")
    p_serve.add_argument("--ui-dir", default=os.environ.get("INV_UI_DIR"),
                         help="serve a built web UI from this directory")
    return parser


def _run_serve(args) -> int:
    import uvicorn

    from nfcinv.api import create_app
    from nfcinv.scan import SimConfig
    from nfcinv.store import Store

    host, _, port = args.bind.rpartition(":")
    if not host or not port.isdigit():
        print(f"invalid --bind value: {args.bind!r}", file=sys.stderr)
        return 2
    sim = SimConfig.seeded(args.seed) if args.seed is not None else SimConfig()
    store = Store(data_dir=args.data_dir)
    ui_dir = args.ui_dir
    if ui_dir is not None and not Path(ui_dir).is_dir():
        print(f"ui dir {ui_dir!r} not found; serving API only", file=sys.stderr)
        ui_dir = None
    app = create_app(store, sim=sim, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=int(port), log_level="info")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "table2":
        _write_output(angle_table_csv(args.step), args.out)
    elif args.command == "table3":
        _write_output(size_table_csv(), args.out)
    elif args.command == "latency":
        _write_output(latency_compare_csv(args.n), args.out)
    elif args.command == "serve":
        return _run_serve(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())

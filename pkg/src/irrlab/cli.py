"""Command-line interface.

Subcommands: gen (emit a named family as an edge list), indices (index
bundle for one graph), table1 (regenerate the published caterpillar table),
verify (run claim-adjudication suites), extremal (exhaustive tree extremes).

Exit codes: 0 success; 1 verification failures under --strict; 2 usage or
precondition errors (bad flags, malformed input, out-of-range parameters);
3 numerical failure (spectral iteration did not converge).

IRRLAB_THREADS is validated (positive integer) for compatibility with batch
environments, but every computation is deterministic and single-threaded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import verify as verify_mod
from ._version import __version__
from .generators import (
    caterpillar_from_spine,
    caterpillar_uniform,
    complete_bipartite,
    double_star,
    path,
    star,
)
from .graph import EdgeListParseError, Graph, format_edge_list, parse_edge_list
from .indices import BUNDLE_FIELDS, SpectralConvergenceError, compute_bundle

FAMILIES = (
    "path",
    "star",
    "caterpillar",
    "complete-bipartite",
    "double-star",
    "spine-caterpillar",
)
FORMATS = ("text", "csv", "json")


def _default_format(out: str) -> str:
    """text when writing to an interactive terminal, csv when piped or to a file."""
    return "text" if out == "-" and sys.stdout.isatty() else "csv"


def _parse_spine(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad spine degree list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irrlab",
        description="Irregularity indices, graph family generators, and claim verification.",
    )
    parser.add_argument("--version", action="version", version=f"irrlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", choices=FAMILIES, help="named graph family")
        p.add_argument("--n", type=int, help="order parameter (spine length for caterpillars)")
        p.add_argument("--m", type=int, help="second parameter (leaves per spine vertex, or first part size)")
        p.add_argument("--r", type=int, help="double-star: degree of the second center")
        p.add_argument("--k", type=int, help="double-star: degree of the first center")
        p.add_argument("--spine", type=_parse_spine, help="comma-separated spine degree sequence")

    p_gen = sub.add_parser("gen", help="write a graph family as an edge list")
    add_family_flags(p_gen)
    p_gen.add_argument("--out", default="-", help="output path, - for stdout")
    p_gen.set_defaults(func=cmd_gen)

    p_idx = sub.add_parser("indices", help="compute the index bundle for one graph")
    add_family_flags(p_idx)
    p_idx.add_argument("--in", dest="infile", help="edge-list path, - for stdin")
    p_idx.add_argument("--format", choices=FORMATS,
                       help="output format (default: text on a terminal, csv otherwise)")
    p_idx.add_argument("--out", default="-", help="output path, - for stdout")
    p_idx.set_defaults(func=cmd_indices)

    p_t1 = sub.add_parser("table1", help="regenerate the published caterpillar table")
    p_t1.add_argument("--format", choices=FORMATS,
                      help="output format (default: text on a terminal, csv otherwise)")
    p_t1.add_argument("--out", default="-", help="output path, - for stdout")
    p_t1.set_defaults(func=cmd_table1)

    p_ver = sub.add_parser("verify", help="adjudicate transcribed claims against direct computation")
    p_ver.add_argument("--suite", action="append", choices=verify_mod.SUITE_NAMES + ("all",),
                       help="run only this suite (repeatable; default: all)")
    p_ver.add_argument("--grid-n", type=int, default=12, help="caterpillar grid: max spine length")
    p_ver.add_argument("--grid-m", type=int, default=12, help="caterpillar grid: max leaves per spine vertex")
    p_ver.add_argument("--max-tree-n", type=int, default=8, help="largest tree order to enumerate")
    p_ver.add_argument("--max-graph-n", type=int, default=6, help="largest graph order to enumerate")
    p_ver.add_argument("--bell-n-max", type=int, default=6, help="largest order for the spectral-gap scan")
    p_ver.add_argument("--spine-len-max", type=int, default=6, help="largest spine length in the formula grid")
    p_ver.add_argument("--spine-deg-max", type=int, default=7, help="largest spine degree in the formula grid")
    p_ver.add_argument("--strict", action="store_true",
                       help="exit 1 on bound violations or unexpected mismatches")
    p_ver.add_argument("--format", choices=FORMATS,
                       help="output format (default: text on a terminal, csv otherwise)")
    p_ver.add_argument("--out", default="-", help="output path, - for stdout")
    p_ver.set_defaults(func=cmd_verify)

    p_ext = sub.add_parser("extremal", help="exhaustive extremes of irr and sigma over labeled trees")
    p_ext.add_argument("--n", type=int, required=True, help="tree order (2..9)")
    p_ext.add_argument("--index", choices=("irr", "sigma", "both"), default="both")
    p_ext.add_argument("--format", choices=("text", "json"), default="text")
    p_ext.add_argument("--out", default="-", help="output path, - for stdout")
    p_ext.set_defaults(func=cmd_extremal)

    return parser


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _require(args, names: tuple[str, ...]) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + name for name in missing)
        raise ValueError(f"family {args.family!r} requires {flags}")


def _build_family(args) -> Graph:
    if args.family is None:
        raise ValueError("no graph given: pass --family or --in")
    if args.family == "path":
        _require(args, ("n",))
        return path(args.n)
    if args.family == "star":
        _require(args, ("n",))
        return star(args.n)
    if args.family == "caterpillar":
        _require(args, ("n", "m"))
        return caterpillar_uniform(args.n, args.m)
    if args.family == "complete-bipartite":
        _require(args, ("m", "n"))
        return complete_bipartite(args.m, args.n)
    if args.family == "double-star":
        _require(args, ("r", "k"))
        return double_star(args.r, args.k)
    _require(args, ("spine",))
    return caterpillar_from_spine(args.spine)


def _read_graph(args) -> Graph:
    infile = getattr(args, "infile", None)
    if infile is not None and args.family is not None:
        raise ValueError("pass either --in or --family, not both")
    if infile is None:
        return _build_family(args)
    if infile == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(infile).read_text())


def _fmt_value(value) -> str:
    return f"{value:.12g}" if isinstance(value, float) else str(value)


def cmd_gen(args) -> int:
    _emit(format_edge_list(_build_family(args)), args.out)
    return 0


def cmd_indices(args) -> int:
    fmt = args.format or _default_format(args.out)
    bundle = compute_bundle(_read_graph(args))
    if fmt == "csv":
        text = ",".join(BUNDLE_FIELDS) + "\n" + bundle.csv_row() + "\n"
    elif fmt == "json":
        payload = {name: verify_mod._json_value(value) for name, value in bundle.as_dict().items()}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        width = max(len(name) for name in BUNDLE_FIELDS) + 2
        text = "".join(f"{name:<{width}}{_fmt_value(value)}\n" for name, value in bundle.as_dict().items())
    _emit(text, args.out)
    return 0


def cmd_table1(args) -> int:
    fmt = args.format or _default_format(args.out)
    rows = verify_mod.table1_rows()
    exact = verify_mod.table1_exact(rows)
    if fmt == "json":
        text = json.dumps({"rows": rows, "table1_exact": exact}, indent=2) + "\n"
    elif fmt == "text":
        header = "".join(f"{col:>14}" for col in verify_mod.TABLE1_COLUMNS)
        lines = [header]
        for row in rows:
            lines.append("".join(f"{row[col]:>14}" for col in verify_mod.TABLE1_COLUMNS))
        lines.append(f"table1_exact: {exact}")
        text = "\n".join(lines) + "\n"
    else:
        lines = [",".join(verify_mod.TABLE1_COLUMNS)]
        for row in rows:
            lines.append(",".join(str(row[col]) for col in verify_mod.TABLE1_COLUMNS))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    suites = tuple(args.suite) if args.suite else ()
    if "all" in suites:
        suites = ()
    config = verify_mod.VerifyConfig(
        suites=suites,
        grid_n=(1, args.grid_n),
        grid_m=(1, args.grid_m),
        max_tree_n=args.max_tree_n,
        max_graph_n=args.max_graph_n,
        bell_range=(2, args.bell_n_max),
        spine_max_len=args.spine_len_max,
        spine_max_degree=args.spine_deg_max,
    )
    report = verify_mod.run_all(config)
    renderer = {
        "csv": verify_mod.report_to_csv,
        "json": verify_mod.report_to_json,
        "text": verify_mod.report_to_text,
    }[args.format or _default_format(args.out)]
    _emit(renderer(report), args.out)
    if args.strict:
        failures = verify_mod.strict_failures(report)
        if failures:
            for rec in failures:
                print(
                    f"irrlab: strict failure: {rec.claim} "
                    f"{verify_mod.render_params(rec.params)} ({rec.status})",
                    file=sys.stderr,
                )
            return 1
    return 0


def cmd_extremal(args) -> int:
    result = verify_mod.extremal_trees(args.n)
    want_irr = args.index in ("irr", "both")
    want_sigma = args.index in ("sigma", "both")
    if args.format == "json":
        payload = {"n": result["n"], "count": result["count"]}
        if want_irr:
            payload["max_irr"] = result["max_irr"]
            payload["argmax_irr_degseq"] = list(result["argmax_irr_degseq"])
            payload["min_irr"] = result["min_irr"]
        if want_sigma:
            payload["max_sigma"] = result["max_sigma"]
            payload["argmax_sigma_degseq"] = list(result["argmax_sigma_degseq"])
            payload["min_sigma"] = result["min_sigma"]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"n={result['n']} labeled_trees={result['count']}"]
        if want_irr:
            degs = "-".join(map(str, result["argmax_irr_degseq"]))
            lines.append(f"max_irr={result['max_irr']} argmax_degseq={degs}")
            lines.append(f"min_irr={result['min_irr']}")
        if want_sigma:
            degs = "-".join(map(str, result["argmax_sigma_degseq"]))
            lines.append(f"max_sigma={result['max_sigma']} argmax_degseq={degs}")
            lines.append(f"min_sigma={result['min_sigma']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _validate_threads() -> int:
    raw = os.environ.get("IRRLAB_THREADS")
    if raw is None:
        return 0
    try:
        threads = int(raw)
    except ValueError:
        print(f"irrlab: IRRLAB_THREADS must be a positive integer, got {raw!r}", file=sys.stderr)
        return 2
    if threads < 1:
        print(f"irrlab: IRRLAB_THREADS must be a positive integer, got {threads}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    code = _validate_threads()
    if code:
        return code
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"irrlab: {exc}", file=sys.stderr)
        return 2
    except SpectralConvergenceError as exc:
        print(f"irrlab: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"irrlab: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"irrlab: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``graphcores {decompose,compare,verify,bench}``.

Exit status: 0 success, 2 usage error, 3 input parse/IO error,
4 precondition violation, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import __version__
from .bench import complexity_check, time_methods, write_exponents_csv
from .decompositions import (
    KCORE,
    METHODS,
    ORACLE_CAP,
    PROPERTY_FUNCTIONS,
    TRICORE,
    VTRICORE,
    CoreAssignment,
    decompose,
    oracle_core_numbers,
    oracle_edge_levels,
    triangle_core_decompose,
)
from .generators import EXHAUSTIVE_CAP, SampleSpec, sample_graph, sample_stream
from .graph import Graph, SnapParseError, from_edge_list, parse_snap
from .metrics import aggregate_means, report, write_curves_csv, write_reports_csv

log = logging.getLogger("graphcores")

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_VERIFY = 5

# which oracle a p-core method must agree with
ORACLE_FOR = {KCORE: KCORE, TRICORE: TRICORE, VTRICORE: VTRICORE,
              "pcore:degree": KCORE, "pcore:triangles": VTRICORE}


class PreconditionError(Exception):
    pass


class InputError(Exception):
    pass


def parse_methods(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    if not methods:
        raise PreconditionError("at least one method must be selected")
    for m in methods:
        if m in METHODS:
            continue
        if m.startswith("pcore:") and m.split(":", 1)[1] in PROPERTY_FUNCTIONS:
            continue
        known = ", ".join(list(METHODS) + [f"pcore:{p}" for p in PROPERTY_FUNCTIONS])
        raise PreconditionError(f"unknown method {m!r} (known: {known})")
    return list(dict.fromkeys(methods))


def load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            pairs = parse_snap(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except SnapParseError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if not pairs:
        raise InputError(f"{path}: no edges found")
    return from_edge_list(pairs)


def spec_from_args(args: argparse.Namespace) -> SampleSpec:
    try:
        if args.input:
            return SampleSpec.file(args.input)
        if args.exhaustive is not None:
            return SampleSpec.exhaustive(args.exhaustive, cap=args.cap)
        if args.random:
            parts = args.random.split(",")
            if len(parts) != 3:
                raise PreconditionError("--random expects N,P,COUNT")
            n, p, count = int(parts[0]), float(parts[1]), int(parts[2])
            return SampleSpec.random(n, p, count, args.seed)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    raise PreconditionError("one of --input, --exhaustive, --random is required")


def _graphs(spec: SampleSpec) -> Iterable[tuple[int, Graph]]:
    if spec.kind == "file":
        yield 0, load_graph(spec.path)
    else:
        yield from sample_stream(spec)


def _open(out: str, name: str):
    return open(os.path.join(out, name), "w", encoding="utf-8", newline="")


def write_manifest(out: str, command: str, args: argparse.Namespace, extra: dict | None = None) -> None:
    config = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    manifest = {"tool": "graphcores", "version": __version__, "command": command, "config": config}
    if extra:
        manifest.update(extra)
    with _open(out, "manifest.json") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _prepare_out(out: str) -> None:
    try:
        os.makedirs(out, exist_ok=True)
    except OSError as exc:
        raise PreconditionError(f"cannot create output directory {out}: {exc.strerror}") from exc
    if not os.access(out, os.W_OK):
        raise PreconditionError(f"output directory {out} is not writable")


# -- decompose -------------------------------------------------------------


def cmd_decompose(args: argparse.Namespace) -> int:
    methods = parse_methods(args.methods)
    if not args.input:
        raise PreconditionError("decompose needs --input")
    g = load_graph(args.input)
    _prepare_out(args.out)
    for m in methods:
        if m == TRICORE:
            a, levels = triangle_core_decompose(g)
            with _open(args.out, f"{m}.edges.csv") as fh:
                levels.write_csv(g, fh)
        else:
            a = decompose(g, m)
        with _open(args.out, f"{m}.cores.csv") as fh:
            a.write_csv(g, fh)
        r = report(g, a)
        with _open(args.out, f"{m}.report.csv") as fh:
            write_reports_csv([(0, r)], fh)
        with _open(args.out, f"{m}.curve.csv") as fh:
            write_curves_csv([(0, r)], fh, distinct=args.distinct)
        density = "n/a" if r.best_level_clique_density is None else f"{r.best_level_clique_density:.4f}"
        print(
            f"{m}: highest={r.highest_core_number} best_level_size={r.best_level_size} "
            f"density={density} levels={r.level_number} rms={r.rms:.4f}"
        )
    write_manifest(args.out, "decompose", args, {"vertices": g.n, "edges": g.m})
    return EXIT_OK


# -- compare ---------------------------------------------------------------


def _reports_for(item: tuple[int, Graph, Sequence[str]]):
    graph_id, g, methods = item
    return graph_id, [report(g, decompose(g, m)) for m in methods]


def cmd_compare(args: argparse.Namespace) -> int:
    methods = parse_methods(args.methods)
    spec = spec_from_args(args)
    _prepare_out(args.out)
    items = ((gid, g, methods) for gid, g in _graphs(spec))
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_reports_for, items, chunksize=64))
    else:
        results = [_reports_for(item) for item in items]

    per_method = {m: [(gid, reps[i]) for gid, reps in results] for i, m in enumerate(methods)}
    for m, rows in per_method.items():
        with _open(args.out, f"{m}.reports.csv") as fh:
            write_reports_csv(rows, fh)
        mean = aggregate_means([r for _, r in rows])[m]
        with _open(args.out, f"{m}.mean.csv") as fh:
            write_reports_csv([("mean", mean)], fh)
        with _open(args.out, f"{m}.curve.csv") as fh:
            write_curves_csv([("mean", mean)], fh)
        if args.distinct:
            with _open(args.out, f"{m}.distinct_curves.csv") as fh:
                write_curves_csv(rows, fh, distinct=True)
        print(
            f"{m}: graphs={len(rows)} best_level_size={mean.best_level_size:.4f} "
            f"levels={mean.level_number:.4f} rms={mean.rms:.4f}"
        )
    write_manifest(args.out, "compare", args, {"sample": spec.describe()})
    return EXIT_OK


# -- verify ----------------------------------------------------------------


@dataclass
class VerifyResult:
    checked: int
    failure: tuple[int, str] | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def verify_sample(
    graphs: Iterable[tuple[int, Graph]],
    methods: Sequence[str],
    cap: int = ORACLE_CAP,
    decomposer: Callable[[Graph, str], CoreAssignment] = decompose,
) -> VerifyResult:
    """Check each method against the brute-force oracle; stop at the first mismatch."""
    checked = 0
    for graph_id, g in graphs:
        if g.n > cap:
            raise PreconditionError(f"graph {graph_id} has {g.n} vertices, above oracle cap {cap}")
        for m in methods:
            expected = oracle_core_numbers(g, ORACLE_FOR[m], cap)
            if decomposer(g, m).core_number != expected.core_number:
                return VerifyResult(checked, (graph_id, m))
            if m == TRICORE and decomposer is decompose:
                if triangle_core_decompose(g)[1].level != oracle_edge_levels(g, cap):
                    return VerifyResult(checked, (graph_id, m))
        checked += 1
    return VerifyResult(checked)


def _reproduce_command(args: argparse.Namespace, graph_id: int, method: str) -> str:
    parts = ["graphcores", "verify"]
    if args.input:
        parts += ["--input", args.input]
    elif args.exhaustive is not None:
        parts += ["--exhaustive", str(args.exhaustive), "--cap", str(args.cap)]
    else:
        parts += ["--random", args.random, "--seed", str(args.seed)]
    parts += ["--methods", method, "--graph-id", str(graph_id)]
    return shlex.join(parts)


def cmd_verify(args: argparse.Namespace) -> int:
    methods = parse_methods(args.methods)
    spec = spec_from_args(args)
    if args.graph_id is not None:
        if not 0 <= args.graph_id < len(spec):
            raise PreconditionError(f"graph id {args.graph_id} outside sample of size {len(spec)}")
        g = load_graph(spec.path) if spec.kind == "file" else sample_graph(spec, args.graph_id)
        graphs: Iterable[tuple[int, Graph]] = [(args.graph_id, g)]
    else:
        graphs = _graphs(spec)
    result = verify_sample(graphs, methods, cap=args.oracle_cap)
    if args.out:
        _prepare_out(args.out)
        write_manifest(args.out, "verify", args, {"checked": result.checked, "ok": result.ok})
    if result.ok:
        print(f"PASS: {result.checked} graphs x {len(methods)} methods agree with the oracle")
        return EXIT_OK
    graph_id, method = result.failure
    print(f"FAIL: method {method} disagrees with the oracle on graph {graph_id}")
    print(f"reproduce: {_reproduce_command(args, graph_id, method)}")
    return EXIT_VERIFY


# -- bench -----------------------------------------------------------------


def cmd_bench(args: argparse.Namespace) -> int:
    methods = parse_methods(args.methods)
    if args.samples < 1:
        raise PreconditionError("--samples must be >= 1")
    if args.step < 1 or args.n_min < 1 or args.n_max < args.n_min:
        raise PreconditionError("invalid n range")
    if not 0.0 <= args.p <= 1.0:
        raise PreconditionError(f"edge probability {args.p} outside [0, 1]")
    _prepare_out(args.out)
    n_values = list(range(args.n_min, args.n_max + 1, args.step))
    table = time_methods(n_values, args.samples, args.p, args.seed, methods)
    with _open(args.out, "timing.csv") as fh:
        table.write_csv(fh)
    extra = {}
    if len(n_values) >= 4:
        exponents = complexity_check(table)
        with _open(args.out, "exponents.csv") as fh:
            write_exponents_csv(exponents, fh)
        for m, e in exponents.items():
            print(f"{m}: fitted exponent {e:.3f}")
        extra["exponents"] = exponents
    else:
        log.warning("fewer than 4 n values: skipping exponent fit")
    write_manifest(args.out, "bench", args, extra)
    return EXIT_OK


# -- argument parsing ------------------------------------------------------


def _add_sample_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="SNAP edge-list file")
    src.add_argument("--exhaustive", type=int, metavar="N", help="all labelled graphs on N vertices")
    src.add_argument("--random", metavar="N,P,COUNT", help="COUNT seeded G(N, P) graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP,
                   help="largest exhaustive N allowed (at most 7)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphcores", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    default_methods = ",".join(METHODS)

    p = sub.add_parser("decompose", help="decompose one SNAP graph")
    p.add_argument("--input", metavar="PATH", required=True)
    p.add_argument("--methods", default=default_methods)
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--distinct", action="store_true", help="skip empty levels in the curve")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compare", help="mean metrics over a graph sample")
    _add_sample_flags(p)
    p.add_argument("--methods", default=default_methods)
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--distinct", action="store_true", help="also write per-graph distinct curves")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="check the peelers against the brute-force oracle")
    _add_sample_flags(p)
    p.add_argument("--methods", default=default_methods)
    p.add_argument("--out", metavar="DIR")
    p.add_argument("--graph-id", type=int, help="check a single member of the sample")
    p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the decompositions on random graphs")
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--methods", default=default_methods)
    p.add_argument("--out", required=True, metavar="DIR")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

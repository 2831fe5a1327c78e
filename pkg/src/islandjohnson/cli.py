"""Command-line front end.

Subcommands: gen, islands, graph, analyze, path, horton, verify.
Exit codes: 0 success, 1 usage, 2 validation, 3 check failure,
4 resource cap.  All reports are canonical JSON (sorted keys) embedding
the tool version and, where randomness was used, the seed and generator
name, so identical invocations produce byte-identical output.
"""

import argparse
import sys

from . import __version__
from .errors import (CheckFailure, GeneralPositionViolation, GenerationFailure,
                     IslandJohnsonError, NotAnIsland, ParameterError,
                     PointFileError, PreconditionViolation, ResourceCapExceeded,
                     Unreachable, VerificationFailure, WeightUndefined)
from .fileio import dump_json, format_islands, format_points, load_points
from .generate import SHAPES, points_for_shape
from .graph import build_island_graph, graph_report, to_dot, to_edgelist
from .horton import depth_by_definition, generate_horton, point_depth, verify_horton
from .islands import count_empty_triangles, enumerate_islands
from .paths import (bfs_island_path, log_path, step_flags, descent_path,
                    validate_path)
from .rng import GENERATOR_NAME
from .suites import SUITES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CHECK = 3
EXIT_CAP = 4


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _provenance(seed=None, generator=None, shape=None):
    out = {"tool": "islandjohnson", "version": __version__,
           "seed": seed, "generator": generator}
    if shape is not None:
        out["shape"] = shape
    return out


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_members(spec: str):
    try:
        return tuple(sorted(int(v) for v in spec.split(",")))
    except ValueError:
        raise UsageError(f"bad index list {spec!r}; expected comma-separated integers")


def _parse_range(spec: str):
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return int(lo), int(hi)
    v = int(spec)
    return v, v


def build_parser() -> CliParser:
    p = CliParser(prog="islandjohnson",
                  description="Island graphs of planar point sets: build, analyze, verify.")
    p.add_argument("--version", action="version", version=f"islandjohnson {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a point file")
    g.add_argument("--shape", choices=SHAPES, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default=None)

    i = sub.add_parser("islands", help="enumerate or count islands")
    i.add_argument("--in", dest="infile", required=True)
    i.add_argument("--k", type=int, required=True)
    i.add_argument("--out", default=None, help="write the island list here")
    i.add_argument("--count-only", action="store_true")

    gr = sub.add_parser("graph", help="build the island graph and export it")
    gr.add_argument("--in", dest="infile", required=True)
    gr.add_argument("--k", type=int, required=True)
    gr.add_argument("--l", type=int, required=True)
    gr.add_argument("--format", choices=("json", "dot", "edgelist"), default="dot")
    gr.add_argument("--out", default=None)
    gr.add_argument("--cap-vertices", type=int, default=None)
    gr.add_argument("--cap-pairs", type=int, default=None)

    a = sub.add_parser("analyze", help="JSON report for the island graph")
    a.add_argument("--in", dest="infile", required=True)
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--l", type=int, required=True)
    a.add_argument("--clique", action="store_true")
    a.add_argument("--out", default=None)
    a.add_argument("--cap-vertices", type=int, default=None)
    a.add_argument("--cap-pairs", type=int, default=None)

    pa = sub.add_parser("path", help="path between two islands")
    pa.add_argument("--in", dest="infile", required=True)
    pa.add_argument("--k", type=int, required=True)
    pa.add_argument("--l", type=int, required=True)
    pa.add_argument("--source", required=True, help="comma-separated indices")
    pa.add_argument("--target", required=True, help="comma-separated indices")
    pa.add_argument("--method", choices=("bfs", "shrink", "logdc"), default="bfs")
    pa.add_argument("--out", default=None)

    ho = sub.add_parser("horton", help="Horton set operations")
    hsub = ho.add_subparsers(dest="action", required=True)
    hg = hsub.add_parser("gen", help="generate a Horton set point file")
    hg.add_argument("--n", type=int, required=True)
    hg.add_argument("--out", default=None)
    hv = hsub.add_parser("verify", help="verify the recursive structure")
    hv.add_argument("--in", dest="infile", required=True)
    hd = hsub.add_parser("depth", help="depth profile as JSON")
    hd.add_argument("--n", type=int, required=True)
    hd.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--n", default=None, help="size or range a..b (suite-specific)")
    v.add_argument("--k", default=None, help="size or range a..b (suite-specific)")
    v.add_argument("--l", default=None, help="value (suite-specific)")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--out", default=None)
    return p


def _cmd_gen(args) -> int:
    ps = points_for_shape(args.shape, args.n, args.seed)
    header = {"tool": f"islandjohnson {__version__}", "shape": args.shape,
              "n": args.n, "seed": args.seed, "generator": GENERATOR_NAME}
    _emit(format_points(ps, header), args.out)
    return EXIT_OK


def _cmd_islands(args) -> int:
    ps = load_points(args.infile)
    islands = enumerate_islands(ps, args.k)
    summary = {"provenance": _provenance(), "n": len(ps), "k": args.k,
               "count": len(islands)}
    if args.k == 3 and ps.is_general_position:
        summary["empty_triangles"] = count_empty_triangles(ps)
    if args.out and not args.count_only:
        _emit(format_islands(islands), args.out)
    elif not args.count_only:
        summary["islands"] = [list(i) for i in islands]
    sys.stdout.write(dump_json(summary))
    return EXIT_OK


def _caps(args):
    kwargs = {}
    if args.cap_vertices is not None:
        kwargs["cap_vertices"] = args.cap_vertices
    if args.cap_pairs is not None:
        kwargs["cap_pairs"] = args.cap_pairs
    return kwargs


def _cmd_graph(args) -> int:
    if args.l >= args.k:
        raise UsageError(f"need l < k, got k={args.k} l={args.l}")
    ps = load_points(args.infile)
    g = build_island_graph(ps, args.k, args.l, **_caps(args))
    if args.format == "dot":
        _emit(to_dot(g), args.out)
    elif args.format == "edgelist":
        _emit(to_edgelist(g), args.out)
    else:
        report = {"provenance": _provenance(), "report": graph_report(g)}
        _emit(dump_json(report), args.out)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    if args.l >= args.k:
        raise UsageError(f"need l < k, got k={args.k} l={args.l}")
    ps = load_points(args.infile)
    g = build_island_graph(ps, args.k, args.l, **_caps(args))
    report = graph_report(g, clique_budget=1_000_000 if args.clique else None)
    report["n"] = len(ps)
    out = {"provenance": _provenance(), "report": report}
    _emit(dump_json(out), args.out)
    return EXIT_OK


def _cmd_path(args) -> int:
    if args.l >= args.k:
        raise UsageError(f"need l < k, got k={args.k} l={args.l}")
    ps = load_points(args.infile)
    src = _parse_members(args.source)
    dst = _parse_members(args.target)
    for side in (src, dst):
        if len(side) != args.k:
            raise ParameterError(f"island {side} does not have k={args.k} members")
    if args.method == "bfs":
        trace = bfs_island_path(ps, src, dst, args.l)
    elif args.method == "shrink":
        trace = descent_path(ps, src, dst, args.l)
    else:
        trace = log_path(ps, src, dst, args.l)
    check = validate_path(ps, trace, args.k, args.l)
    payload = {
        "provenance": _provenance(),
        "method": args.method,
        "k": args.k,
        "l": args.l,
        "valid": bool(check),
        "trace": trace.to_json_dict(),
    }
    payload["trace"]["step_valid"] = step_flags(ps, trace, args.k, args.l)
    _emit(dump_json(payload), args.out)
    if not check:
        return EXIT_CHECK
    if trace.divergences:
        return EXIT_CHECK
    return EXIT_OK


def _cmd_horton(args) -> int:
    if args.action == "gen":
        h = generate_horton(args.n)
        header = {"tool": f"islandjohnson {__version__}", "shape": "horton",
                  "n": args.n}
        _emit(format_points(h.ps, header), args.out)
        return EXIT_OK
    if args.action == "verify":
        ps = load_points(args.infile)
        ok = verify_horton(ps)
        sys.stdout.write(dump_json({"provenance": _provenance(),
                                    "n": len(ps), "horton": ok}))
        return EXIT_OK if ok else EXIT_CHECK
    h = generate_horton(args.n)
    profile = [point_depth(i) for i in range(1, args.n + 1)]
    literal = [depth_by_definition(h, i) for i in range(1, args.n + 1)]
    payload = {"provenance": _provenance(), "n": args.n,
               "depths": profile, "depths_by_definition": literal,
               "agree": profile == literal}
    _emit(dump_json(payload), args.out)
    return EXIT_OK if profile == literal else EXIT_CHECK


def _cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    kwargs = {}
    if args.suite == "theorem-main":
        if args.samples is not None:
            kwargs["samples"] = args.samples
        if args.seed is not None:
            kwargs["seed"] = args.seed
        if args.n is not None:
            kwargs["n_max"] = _parse_range(args.n)[1]
    elif args.suite == "interval-iff":
        if args.k is not None:
            kwargs["k_min"], kwargs["k_max"] = _parse_range(args.k)
        if args.n is not None:
            kwargs["n_max"] = _parse_range(args.n)[1]
    elif args.suite == "projectable-iso":
        if args.seed is not None:
            kwargs["seed"] = args.seed
        if args.samples is not None:
            kwargs["sets"] = args.samples
        if args.n is not None:
            kwargs["n_min"], kwargs["n_max"] = _parse_range(args.n)
    elif args.suite == "horton-depth":
        if args.n is not None:
            kwargs["n_max"] = _parse_range(args.n)[1]
    else:
        if args.n is not None:
            kwargs["n"] = _parse_range(args.n)[1]
        if args.k is not None:
            kwargs["k"] = _parse_range(args.k)[1]
        if args.l is not None:
            kwargs["l"] = _parse_range(args.l)[1]
    report = suite(**kwargs)
    report["provenance"] = _provenance(seed=report.get("seed"),
                                       generator=GENERATOR_NAME)
    _emit(dump_json(report), args.out)
    return EXIT_OK if report["pass"] else EXIT_CHECK


_HANDLERS = {
    "gen": _cmd_gen,
    "islands": _cmd_islands,
    "graph": _cmd_graph,
    "analyze": _cmd_analyze,
    "path": _cmd_path,
    "horton": _cmd_horton,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PointFileError, ParameterError, GeneralPositionViolation,
            NotAnIsland, WeightUndefined, PreconditionViolation,
            GenerationFailure, VerificationFailure, FileNotFoundError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (CheckFailure, Unreachable) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except IslandJohnsonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except SystemExit as exc:  # argparse --help/--version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

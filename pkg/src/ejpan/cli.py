"""Command-line front end: ``ejpan <command> --alpha a,b ...``.

Exit status: 0 success, 1 a check came out false or a construction got
stuck, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bench, fixtures
from .eisenstein import parse_alpha, parse_label
from .errors import EJError, FormulaGap, InvalidGenerator, LabelError
from .network import (
    build,
    distance_profile,
    distance_profile_formula,
    eccentricity,
    to_dot,
    to_json,
)
from .oracle import DEFAULT_NODE_CAP, cross_check
from .panconnectivity import (
    ORDERS,
    ChainStuck,
    PanconnectivityFailure,
    chain_between,
    check_panconnectivity,
    entry_to_json_dict,
    format_path,
    panconnectivity_list,
    pancycles,
    validate_path,
)
from .path import Path
from .pathfind import shortest_path

OK, FALSE, USAGE = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _node(net, label: str | None, flag: str) -> int:
    if label is None:
        raise LabelError(f"{flag} is required")
    return net.locate(parse_label(label))


def _xy(net, i):
    p = net.nodes[i]
    return [p.x, p.y]


def cmd_info(args) -> int:
    g = args.alpha
    net = build(g)
    bfs = distance_profile(net)
    try:
        formula = list(distance_profile_formula(g).w)
    except FormulaGap as exc:
        formula = None
        gap = str(exc)
    diam_bfs = eccentricity(net)
    match = formula == list(bfs.w) and g.diameter == diam_bfs
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "alpha": {"a": g.a, "b": g.b},
                    "n": net.n,
                    "diameter": {"formula": g.diameter, "bfs": diam_bfs},
                    "profile": {"formula": formula, "bfs": list(bfs.w)},
                    "verdict": "MATCH" if match else "MISMATCH",
                },
                indent=1,
            ),
            args.out,
        )
    else:
        lines = [
            f"alpha: {g}",
            f"n: {net.n}",
            f"diameter: formula {g.diameter}, bfs {diam_bfs}",
            f"profile: formula {formula if formula is not None else 'GAP (' + gap + ')'}, bfs {list(bfs.w)}",
            f"verdict: {'MATCH' if match else 'MISMATCH'}",
        ]
        _emit("\n".join(lines), args.out)
    return OK if match else FALSE


def cmd_neighbors(args) -> int:
    net = build(args.alpha)
    v = _node(net, args.source, "--from")
    nbrs = net.adjacency[v]
    if args.format == "json":
        _emit(json.dumps([_xy(net, u) for u in nbrs]), args.out)
    else:
        _emit(", ".join(net.label(u) for u in nbrs), args.out)
    return OK


def cmd_shortest_path(args) -> int:
    net = build(args.alpha)
    s = _node(net, args.source, "--from")
    d = _node(net, args.dest, "--to")
    p = shortest_path(net, s, d)
    if args.format == "json":
        _emit(json.dumps({"length": p.length, "path": [_xy(net, v) for v in p.nodes]}), args.out)
    else:
        _emit(f"{p.length}: {format_path(net, p)}", args.out)
    return OK


def cmd_panconnect(args) -> int:
    net = build(args.alpha)
    t0 = time.perf_counter()
    if args.source is not None or args.dest is not None:
        s = _node(net, args.source, "--from")
        d = _node(net, args.dest, "--to")
        try:
            entry = chain_between(net, s, d, args.order)
        except ChainStuck as exc:
            print(f"FAILURE: {exc}", file=sys.stderr)
            return FALSE
        if args.format == "text":
            _emit("\n".join(f"{p.length}: {format_path(net, p)}" for p in entry.paths), args.out)
        else:
            body = entry_to_json_dict(net, entry, args.lengths_only)
            body = {"alpha": {"a": net.generator.a, "b": net.generator.b}, **body}
            _emit(json.dumps(body, separators=(",", ":")), args.out)
        print(f"paths: {len(entry)}, lengths {entry.lengths[0]}..{entry.lengths[-1]}", file=sys.stderr)
        return OK
    try:
        table = panconnectivity_list(net, args.order, threads=args.threads)
    except PanconnectivityFailure as exc:
        s, d = exc.pair
        print(
            f"FAILURE: pair ({net.label(s)}, {net.label(d)}) stuck at length "
            f"{exc.stuck.path.length}; wall {time.perf_counter() - t0:.3f}s",
            file=sys.stderr,
        )
        return FALSE
    wall = time.perf_counter() - t0
    if args.format == "text":
        lines = [
            f"{net.label(s)} -> {net.label(d)}: lengths {e.lengths[0]}..{e.lengths[-1]}"
            for (s, d), e in table.entries.items()
        ]
        _emit("\n".join(lines), args.out)
    else:
        _emit(table.to_json(args.lengths_only), args.out)
    print(f"pairs: {len(table)}, failures: 0, wall: {wall:.3f}s", file=sys.stderr)
    return OK


def cmd_check(args) -> int:
    net = build(args.alpha)
    report = check_panconnectivity(net, args.order)
    if args.format == "json":
        body = {
            "alpha": {"a": net.generator.a, "b": net.generator.b},
            "panconnected": report.panconnected,
            "representatives": [
                {"node": _xy(net, o.node), "hops": o.hops, "ok": o.ok, "reached": o.reached}
                for o in report.outcomes
            ],
        }
        _emit(json.dumps(body, indent=1), args.out)
    else:
        _emit("\n".join(report.lines(net)), args.out)
    return OK if report else FALSE


def cmd_pancycles(args) -> int:
    net = build(args.alpha)
    s = _node(net, args.source, "--from")
    d = _node(net, args.dest, "--to")
    try:
        cycles = pancycles(net, s, d, args.order)
    except ChainStuck as exc:
        print(f"FAILURE: {exc}", file=sys.stderr)
        return FALSE
    if args.format == "json":
        body = [{"length": c.length, "nodes": [_xy(net, v) for v in c.nodes]} for c in cycles]
        _emit(json.dumps(body, separators=(",", ":")), args.out)
    else:
        lines = [f"{c.length}: {format_path(net, c)}, {net.label(c.nodes[0])}" for c in cycles]
        _emit("\n".join(lines), args.out)
    return OK


def cmd_export(args) -> int:
    net = build(args.alpha)
    _emit(to_dot(net) if args.format == "dot" else to_json(net), args.out)
    return OK


def _verify_fixture(name: str) -> tuple[list[str], list[str]]:
    fx = fixtures.load(name)
    net = build(fx.generator)
    lines, failures = [], []
    for row, labels in enumerate(fx.paths, 1):
        nodes = tuple(net.locate(p) for p in labels)
        p = Path(nodes)
        ok = validate_path(net, p, nodes[0], nodes[-1], len(nodes) - 1)
        lines.append(f"{name}[{row}] length {p.length}: {'valid' if ok else 'INVALID'}")
        if not ok:
            failures.append(f"{name}[{row}]")
    valid = len(fx.paths) - len(failures)
    lines.append(f"{name}: {valid}/{len(fx.paths)} paths valid")
    return lines, failures


def cmd_verify(args) -> int:
    if args.fixtures is None and args.alpha is None:
        raise LabelError("verify needs --fixtures NAME and/or --alpha a,b")
    lines, failed = [], False
    if args.fixtures is not None:
        if args.fixtures not in fixtures.available():
            raise LabelError(f"unknown fixture {args.fixtures!r}; have {fixtures.available()}")
        fl, bad = _verify_fixture(args.fixtures)
        lines += fl
        failed |= bool(bad)
    if args.alpha is not None:
        net = build(args.alpha)
        try:
            table = panconnectivity_list(net, args.order)
        except PanconnectivityFailure as exc:
            lines.append(f"chain sweep failed: {exc}")
            failed = True
        else:
            report = cross_check(net, table, args.node_cap, args.budget)
            lines.append(report.to_json() if args.format == "json" else report.to_text())
            failed |= not report.ok
    _emit("\n".join(lines), args.out)
    return FALSE if failed else OK


def cmd_bench(args) -> int:
    alphas = [(g.a, g.b) for g in args.alpha] if args.alpha else list(bench.DEFAULT_ALPHAS)
    rows, slope = bench.run(alphas, repeat=args.repeat, threads=args.threads)
    if args.format == "json":
        body = {
            "rows": [{"a": r.a, "b": r.b, "n": r.n, "seconds": r.seconds} for r in rows],
            "slope": slope,
        }
        _emit(json.dumps(body, indent=1), args.out)
    else:
        lines = [f"{'alpha':>8} {'n':>5} {'seconds':>10}"]
        lines += [f"{f'{r.a}+{r.b}*r':>8} {r.n:>5} {r.seconds:>10.4f}" for r in rows]
        lines.append(f"log-log slope: {slope:.3f}" if slope is not None else "log-log slope: n/a")
        _emit("\n".join(lines), args.out)
    return OK


def _alpha_arg(text: str):
    try:
        return parse_alpha(text)
    except InvalidGenerator as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the primary output here instead of stdout")
    common.add_argument("--format", choices=("text", "json", "dot"), default=None)

    single = argparse.ArgumentParser(add_help=False, parents=[common])
    single.add_argument("--alpha", type=_alpha_arg, required=True, help="generator a,b with 0 <= a <= b")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--from", dest="source", metavar="LABEL")
    pair.add_argument("--to", dest="dest", metavar="LABEL")

    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--order", choices=ORDERS, default="lemma", help="common-neighbour tie-break")

    parser = argparse.ArgumentParser(prog="ejpan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[single], help="node count, diameter and distance profile").set_defaults(func=cmd_info)
    sub.add_parser("neighbors", parents=[single, pair], help="the six neighbours of --from").set_defaults(func=cmd_neighbors)
    sub.add_parser("shortest-path", parents=[single, pair]).set_defaults(func=cmd_shortest_path)

    p = sub.add_parser("panconnect", parents=[single, pair, order], help="chain paths for one pair or all pairs")
    p.add_argument("--lengths-only", action="store_true", help="omit path arrays from JSON")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_panconnect, default_format="json")

    sub.add_parser("check", parents=[single, order], help="symmetric panconnectivity check").set_defaults(func=cmd_check)
    sub.add_parser("pancycles", parents=[single, pair, order]).set_defaults(func=cmd_pancycles)

    p = sub.add_parser("export", parents=[single], help="network as JSON or DOT")
    p.set_defaults(func=cmd_export, default_format="json")

    p = sub.add_parser("verify", parents=[common, order], help="fixture validation and oracle cross-check")
    p.add_argument("--alpha", type=_alpha_arg)
    p.add_argument("--fixtures", metavar="NAME")
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    p.add_argument("--budget", type=int, default=None, help="max DFS expansions per pair")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time the all-pairs sweep")
    p.add_argument("--alpha", type=_alpha_arg, action="append")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "text")
    if args.format == "dot" and args.command != "export":
        parser.error("--format dot is only available for export")
    try:
        return args.func(args)
    except EJError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

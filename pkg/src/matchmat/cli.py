"""Command line interface.

Exit codes: 0 success / SAT, 1 input error, 2 resource limit, 3 UNSAT,
4 invalid certificate, 5 construction refused.
"""

from __future__ import annotations

import argparse
import sys

from . import certificate as cert
from .analysis import color_analysis, split_degenerate_triangles
from .bounds import KNOWN_MU, mu_bounds, nu_lower, nu_upper, nu_upper_exponent
from .constructions import (
    ConstructionRefused,
    four_partite_cover,
    greedy_partition,
    partition_matroid_cover,
    recursive_cover,
    restrict_cover,
    two_matroid_cover,
)
from .graph import Graph, GraphError, VertexPartition, generate, multipartite_blocks, parse_graph
from .ip import FEASIBILITY, OPTIMIZATION, emit_ip
from .matroid import (
    INTERSECTION_ORACLE_THRESHOLD,
    Cover,
    CoverError,
    OracleRefusal,
    intersection_equals_matchings,
    verify_cover,
)
from .solver import LIMIT, SAT, ResourceLimit, SearchConfig, compute_mu, decide_mu_leq

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_UNSAT, EXIT_INVALID, EXIT_REFUSED = 0, 1, 2, 3, 4, 5


class InputError(Exception):
    pass


def _add_graph_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--graph", metavar="FILE", help="graph file ('p edge n m' / 'e u v' lines)")
    g.add_argument("--complete", type=int, metavar="N", help="complete graph K_N")
    g.add_argument("--cycle", type=int, metavar="N", help="cycle C_N")
    g.add_argument("--path", type=int, metavar="N", help="path on N vertices")
    g.add_argument("--bipartite", type=int, nargs=2, metavar=("A", "B"), help="complete bipartite K_{A,B}")
    g.add_argument("--multipartite", type=int, nargs="+", metavar="SIZE", help="complete multipartite graph")


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("--no-symmetry-breaking", action="store_true")
    p.add_argument("--stats", action="store_true", help="print search statistics")


def _graph_from_args(args) -> tuple[Graph, list | None]:
    """The graph and, for generated multipartite graphs, their natural blocks."""
    try:
        if args.graph:
            try:
                with open(args.graph) as fh:
                    return parse_graph(fh.read()), None
            except OSError as exc:
                raise InputError(str(exc)) from None
        if args.complete is not None:
            return generate("complete", args.complete), None
        if args.cycle is not None:
            return generate("cycle", args.cycle), None
        if args.path is not None:
            return generate("path", args.path), None
        if args.bipartite is not None:
            return generate("complete_bipartite", *args.bipartite), multipartite_blocks(*args.bipartite)
        if args.multipartite is not None:
            return generate("complete_multipartite", *args.multipartite), multipartite_blocks(*args.multipartite)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    raise InputError("no graph source given")


def _has_graph_source(args) -> bool:
    return any(
        getattr(args, k, None) is not None
        for k in ("graph", "complete", "cycle", "path", "bipartite", "multipartite")
    )


def _config(args) -> SearchConfig:
    try:
        return SearchConfig(
            max_m=getattr(args, "max_m", None),
            node_limit=args.node_limit,
            time_limit=args.time_limit,
            workers=args.threads,
            symmetry_breaking=not args.no_symmetry_breaking,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_cert(path: str) -> Cover:
    try:
        if path == "-":
            return cert.parse_cover(sys.stdin.read())
        return cert.read_cover(path)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except (cert.CertificateError, CoverError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _write_cert(cover: Cover, path: str | None) -> None:
    if not path:
        return
    if path == "-":
        sys.stdout.write(cert.format_cover(cover))
    else:
        cert.write_cover(cover, path)


def _parse_blocks(text: str) -> VertexPartition:
    try:
        blocks = [frozenset(int(v) for v in part.split(",") if v.strip()) for part in text.split(";")]
        return VertexPartition(tuple(blocks))
    except (ValueError, GraphError) as exc:
        raise InputError(f"bad --blocks {text!r}: {exc}") from None


# --- commands -------------------------------------------------------------------

def cmd_mu(args) -> int:
    g, _ = _graph_from_args(args)
    cfg = _config(args)
    try:
        mu, witness = compute_mu(g, cfg)
    except ResourceLimit as exc:
        print(f"resource limit reached at m = {exc.m}")
        return EXIT_LIMIT
    print(f"mu = {mu}")
    _write_cert(witness, args.certificate)
    return EXIT_OK


def cmd_decide(args) -> int:
    g, _ = _graph_from_args(args)
    if args.m < 1:
        raise InputError("-m must be at least 1")
    res = decide_mu_leq(g, args.m, _config(args))
    print(res.status)
    if args.stats:
        print("\n".join(res.stats_lines()))
    if res.status == SAT:
        _write_cert(res.witness, args.certificate)
        return EXIT_OK
    if res.status == LIMIT:
        return EXIT_LIMIT
    return EXIT_UNSAT


def cmd_verify(args) -> int:
    cover = _read_cert(args.certificate)
    if _has_graph_source(args):
        g, _ = _graph_from_args(args)
        if g != cover.graph:
            print("certificate graph differs from the given graph")
            return EXIT_INVALID
    report = verify_cover(cover)
    for line in report.lines():
        print(line)
    if not report.ok:
        print(f"INVALID ({len(report.lines())} violations)")
        return EXIT_INVALID
    if args.oracle:
        try:
            same = intersection_equals_matchings(cover, args.oracle_threshold)
        except OracleRefusal as exc:
            print(f"oracle skipped: {exc}")
        else:
            print(f"oracle: intersection {'equals' if same else 'DIFFERS FROM'} the matchings")
            if not same:
                return EXIT_INVALID
    print(f"VALID: {cover.m} systems cover all {len(cover.graph.circuits)} circuits of a graph on {cover.graph.n} vertices")
    return EXIT_OK


def _partition_for(args, g: Graph, natural) -> VertexPartition:
    if args.blocks:
        return _parse_blocks(args.blocks)
    if natural is not None:
        return VertexPartition(tuple(natural))
    return greedy_partition(g)


def cmd_construct(args) -> int:
    try:
        if args.kind == "recursive":
            if args.m is None or args.m < 1:
                raise InputError("construct recursive needs -m >= 1")
            cover = recursive_cover(args.m)
        else:
            g, natural = _graph_from_args(args)
            if args.kind == "two":
                cover = two_matroid_cover(g)
            elif args.kind == "mpartite":
                cover = partition_matroid_cover(g, _partition_for(args, g, natural))
            else:
                part = _partition_for(args, g, natural)
                if len(part.blocks) != 4:
                    raise InputError(f"fourpartite needs exactly 4 blocks, got {len(part.blocks)} (use --blocks)")
                cover = four_partite_cover(g, part)
    except ConstructionRefused as exc:
        print(f"refused: {exc}")
        return EXIT_REFUSED
    except GraphError as exc:
        raise InputError(str(exc)) from None
    report = verify_cover(cover)
    if not report.ok:
        print("\n".join(report.lines()))
        return EXIT_INVALID
    print(f"constructed {cover.m} systems on {cover.graph.n} vertices ({len(cover.graph.circuits)} circuits), verified")
    _write_cert(cover, args.output)
    return EXIT_OK


def _parse_vertices(text: str) -> list[int]:
    out: list[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                lo, hi = part.split("-")
                out.extend(range(int(lo), int(hi) + 1))
            elif part.strip():
                out.append(int(part))
    except ValueError:
        raise InputError(f"bad vertex list {text!r}") from None
    return out


def cmd_restrict(args) -> int:
    cover = _read_cert(args.certificate)
    try:
        if args.vertices:
            h = cover.graph.subgraph_on(_parse_vertices(args.vertices))
        else:
            h, _ = _graph_from_args(args)
        out = restrict_cover(cover, h)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    report = verify_cover(out)
    if not report.ok:
        print("\n".join(report.lines()))
        return EXIT_INVALID
    print(f"restricted to {h.n} vertices, {len(h.edges)} edges: {out.m} systems, verified")
    _write_cert(out, args.output)
    return EXIT_OK


def cmd_emit_ip(args) -> int:
    g, _ = _graph_from_args(args)
    if args.m < 1:
        raise InputError("-m must be at least 1")
    text = emit_ip(g, args.m, args.variant)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.m is not None:
        if args.m < 1:
            raise InputError("-m must be at least 1")
        m = args.m
        exp = nu_upper_exponent(m)
        print(f"m = {m}")
        print(f"nu_lower = {nu_lower(m)}")
        if args.exact:
            if hasattr(sys, "set_int_max_str_digits"):
                sys.set_int_max_str_digits(0)
            print(f"nu_upper = {nu_upper(m)}")
        else:
            value = f" = {nu_upper(m)}" if exp <= 64 else ""
            print(f"nu_upper = 2^(2^{3 * m}-1)-1 = 2^{exp}-1{value}  ({exp} bits)")
        return EXIT_OK
    n = args.n
    if n < 1:
        raise InputError("-n must be at least 1")
    lo, hi = mu_bounds(n)
    print(f"n = {n}")
    if n in KNOWN_MU:
        print(f"mu = {lo} (exact)")
    else:
        print(f"{lo} <= mu <= {hi}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    cover = _read_cert(args.certificate)
    report = color_analysis(cover)
    for line in report.lines():
        print(line)
    print(f"degenerate triangles: {len(report.degenerate_triangles)}")
    classes = list(report.color_class.values())
    print(f"distinct color classes: {len(set(classes))} of {len(classes)} vertices")
    if args.split:
        try:
            out = split_degenerate_triangles(cover)
        except CoverError as exc:
            print(f"cannot split: {exc}")
            return EXIT_INVALID
        print(f"split cover: {out.m} systems")
        _write_cert(out, args.split)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matchmat", description="Matchings as intersections of matroids.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", help="compute mu(G) exactly")
    _add_graph_source(p)
    _add_solver_flags(p)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("-o", "--certificate", help="write the witness certificate here ('-' for stdout)")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("decide", help="decide mu(G) <= m")
    _add_graph_source(p)
    _add_solver_flags(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-o", "--certificate", help="write the witness certificate here ('-' for stdout)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="verify a cover certificate")
    p.add_argument("certificate")
    _add_graph_source(p, required=False)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force subset oracle")
    p.add_argument("--oracle-threshold", type=int, default=INTERSECTION_ORACLE_THRESHOLD)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a cover from an explicit construction")
    p.add_argument("kind", choices=["mpartite", "two", "fourpartite", "recursive"])
    _add_graph_source(p, required=False)
    p.add_argument("-m", type=int, help="number of systems (recursive)")
    p.add_argument("--blocks", help="vertex partition, e.g. '1,2;3,4,5'")
    p.add_argument("-o", "--output", help="certificate path ('-' for stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("restrict", help="restrict a certificate to a subgraph")
    p.add_argument("certificate")
    _add_graph_source(p, required=False)
    p.add_argument("--vertices", help="keep the induced subgraph on these vertices, e.g. '1-5'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("emit-ip", help="write the integer program in LP format")
    _add_graph_source(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--variant", choices=[FEASIBILITY, OPTIMIZATION], default=FEASIBILITY)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_emit_ip)

    p = sub.add_parser("bounds", help="bounds on nu(m) or mu(n)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-m", type=int)
    g.add_argument("-n", type=int)
    p.add_argument("--exact", action="store_true", help="print nu_upper in full decimal")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("analyze", help="color types, color classes and degenerate triangles")
    p.add_argument("certificate")
    p.add_argument("--split", metavar="OUT", help="write the degenerate-triangle-free cover here")
    p.set_defaults(func=cmd_analyze)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("restrict",) and not args.vertices and not _has_graph_source(args):
        print("error: restrict needs --vertices or a graph source", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

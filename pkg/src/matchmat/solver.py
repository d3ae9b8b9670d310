"""Exact decision of mu(G) <= m and computation of mu(G).

Variable x[a][c] says circuit c belongs to system a.  Constraints, all as
clauses: every circuit lies in some system; per system, no claw or triangle
triple has exactly two members; per system, no matching pair has both.
Propagation of those clauses gives claw/triangle closure, the cover unit
rule and matching exclusion.  Circuits may sit in several systems.
"""

from __future__ import annotations

import time
import multiprocessing
from dataclasses import dataclass, field

from .graph import Graph, has_forbidden_odd_cycle, triangle_degree_ok
from .matroid import Cover, claw_triples, matching_pairs, triangle_triples, verify_cover
from .search import Model, Stats, solve, split

SAT, UNSAT, LIMIT = "SAT", "UNSAT", "ResourceLimit"


@dataclass(frozen=True)
class SearchConfig:
    """Solver settings.

    max_m: largest m tried by :func:`compute_mu` (None: no cap; mu(G) <= n always).
    node_limit: decisions allowed per search (per subtree when parallel); None = unlimited.
    time_limit: wall-clock seconds for one decision; None = unlimited.
    workers: processes for subtree search; 1 runs in-process.
    symmetry_breaking: first-use ordering of the interchangeable systems.
    """

    max_m: int | None = None
    node_limit: int | None = None
    time_limit: float | None = None
    workers: int = 1
    symmetry_breaking: bool = True

    def __post_init__(self):
        for name in ("max_m", "node_limit", "time_limit"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass
class SolveResult:
    status: str
    witness: Cover | None = None
    stats: Stats = field(default_factory=Stats)

    def stats_lines(self) -> list[str]:
        s = self.stats
        return [
            f"status {self.status}",
            f"nodes {s.nodes}",
            f"propagations {s.propagations}",
            f"leaf_refutations {s.conflicts}",
            f"wall_time {s.wall_time:.3f}",
        ]


class ResourceLimit(RuntimeError):
    def __init__(self, m: int, stats: Stats):
        super().__init__(f"resource limit reached while deciding m = {m}")
        self.m = m
        self.stats = stats


def build_model(g: Graph, m: int) -> Model:
    k = len(g.circuits)
    grid = [[c * m + a for c in range(k)] for a in range(m)]

    def lit(a, c):
        return grid[a][c] + 1

    clauses = [tuple(lit(a, c) for a in range(m)) for c in range(k)]
    triples = claw_triples(g) + triangle_triples(g)
    pairs = matching_pairs(g)
    for a in range(m):
        for p, q, r in triples:
            p, q, r = lit(a, p), lit(a, q), lit(a, r)
            clauses += [(-p, -q, r), (-p, q, -r), (p, -q, -r)]
        for p, q in pairs:
            clauses.append((-lit(a, p), -lit(a, q)))
    return Model(num_vars=k * m, clauses=clauses, order=list(range(k * m)), grid=grid)


def cover_from_assignment(g: Graph, model: Model, assignment) -> Cover:
    grid = model.grid
    return Cover(g, tuple(frozenset(c for c, v in enumerate(row) if assignment[v]) for row in grid))


def _solve_prefix(args):
    model, prefix, node_limit, deadline = args
    return solve(model, prefix, node_limit, deadline)


def search_model(model: Model, cfg: SearchConfig) -> tuple[str, list | None, Stats]:
    """Run the engine on ``model`` under ``cfg``; returns (status, assignment, stats)."""
    t0 = time.monotonic()
    deadline = t0 + cfg.time_limit if cfg.time_limit else None
    if cfg.symmetry_breaking:
        model = model.with_symmetry_breaking()
    if cfg.workers == 1:
        out = solve(model, (), cfg.node_limit, deadline)
        status = {"SAT": SAT, "UNSAT": UNSAT, "LIMIT": LIMIT}[out.status]
        return status, out.assignment, out.stats

    stats = Stats()
    prefixes: list = []
    depth = 1
    while True:
        prefixes, st = split(model, depth)
        if len(prefixes) >= 4 * cfg.workers or depth >= 16 or any(len(p) < depth for p in prefixes):
            break
        depth += 1
    stats.merge(st)
    status, assignment = UNSAT, None
    pool = multiprocessing.get_context("fork").Pool(cfg.workers)
    try:
        pending = [pool.apply_async(_solve_prefix, ((model, p, cfg.node_limit, deadline),)) for p in prefixes]
        # results are consumed in prefix order so the first model is the lexicographically first one
        for job in pending:
            out = job.get()
            stats.merge(out.stats)
            if out.status == "SAT":
                status, assignment = SAT, out.assignment
                break
            if out.status == "LIMIT":
                status = LIMIT
                break
    finally:
        pool.terminate()
        pool.join()
    stats.wall_time = time.monotonic() - t0
    return status, assignment, stats


def decide_mu_leq(g: Graph, m: int, cfg: SearchConfig | None = None) -> SolveResult:
    """Is the matching system of ``g`` the intersection of at most ``m`` matroids?"""
    if m < 1:
        raise ValueError("m must be at least 1")
    cfg = cfg or SearchConfig()
    model = build_model(g, m)
    status, assignment, stats = search_model(model, cfg)
    if status != SAT:
        return SolveResult(status, None, stats)
    witness = cover_from_assignment(g, model, assignment)
    report = verify_cover(witness)
    if not report.ok:
        raise AssertionError("solver produced an invalid witness: " + "; ".join(report.lines()[:3]))
    return SolveResult(SAT, witness, stats)


def mu_lower_screen(g: Graph) -> int:
    """1, or 3 when the graph fails the two-matroid characterization."""
    if has_forbidden_odd_cycle(g) or not triangle_degree_ok(g):
        return 3
    return 1


def compute_mu(g: Graph, cfg: SearchConfig | None = None) -> tuple[int, Cover]:
    """Smallest m with a cover, found by ascending search, and its witness."""
    cfg = cfg or SearchConfig()
    m = mu_lower_screen(g)
    while True:
        if cfg.max_m is not None and m > cfg.max_m:
            raise ResourceLimit(m, Stats())
        res = decide_mu_leq(g, m, cfg)
        if res.status == SAT:
            return m, res.witness
        if res.status == LIMIT:
            raise ResourceLimit(m, res.stats)
        m += 1

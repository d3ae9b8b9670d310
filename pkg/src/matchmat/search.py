"""Backtracking search over boolean membership variables.

The engine is a plain DPLL: fixed branching order, true before false,
unit propagation with two watched literals, chronological backtracking.  It
never learns clauses, so the first model found is the lexicographically
first one in branching order, and a refutation is an exhaustive one.

Literals are non-zero ints, DIMACS style: ``v + 1`` is variable ``v`` true,
``-(v + 1)`` is variable ``v`` false.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class Model:
    num_vars: int
    clauses: list                  # tuples of DIMACS literals
    order: list                    # decision order over variable ids
    grid: list | None = None       # grid[a][c] -> variable id; rows are interchangeable systems
    names: list | None = None

    def with_symmetry_breaking(self) -> "Model":
        """Add first-use ordering: system a+1 may first be used no earlier than system a."""
        if not self.grid or len(self.grid) < 2:
            return self
        extra = []
        for a in range(len(self.grid) - 1):
            cur, nxt = self.grid[a], self.grid[a + 1]
            for c in range(len(cur)):
                extra.append((-(nxt[c] + 1),) + tuple(cur[x] + 1 for x in range(c + 1)))
        return Model(self.num_vars, list(self.clauses) + extra, self.order, self.grid, self.names)


@dataclass
class Stats:
    nodes: int = 0
    propagations: int = 0
    conflicts: int = 0   # leaf refutations
    wall_time: float = 0.0

    def merge(self, other: "Stats") -> None:
        self.nodes += other.nodes
        self.propagations += other.propagations
        self.conflicts += other.conflicts


class LimitReached(Exception):
    pass


@dataclass
class Outcome:
    status: str                      # "SAT" | "UNSAT" | "LIMIT"
    assignment: list | None = None   # 0/1 per variable
    stats: Stats = field(default_factory=Stats)


class _Engine:
    def __init__(self, model: Model, node_limit=None, deadline=None):
        self.model = model
        self.n = model.num_vars
        self.val = [-1] * self.n
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.stats = Stats()
        self.node_limit = node_limit
        self.deadline = deadline
        self.order = list(model.order)
        self.watches: list[list[list[int]]] = [[] for _ in range(2 * self.n)]
        self.ok = True
        units = []
        for cl in model.clauses:
            lits = sorted({self._code(x) for x in cl})
            if any(l ^ 1 in lits for l in lits):
                continue  # tautology
            if not lits:
                self.ok = False
            elif len(lits) == 1:
                units.append(lits[0])
            else:
                c = list(lits)
                self.watches[c[0]].append(c)
                self.watches[c[1]].append(c)
        for l in units:
            if not self._enqueue(l):
                self.ok = False

    @staticmethod
    def _code(lit: int) -> int:
        # literal code: 2v for "v true", 2v+1 for "v false"
        return 2 * (lit - 1) if lit > 0 else 2 * (-lit - 1) + 1

    def _enqueue(self, code: int) -> bool:
        var = code >> 1
        want = 1 - (code & 1)
        cur = self.val[var]
        if cur >= 0:
            return cur == want
        self.val[var] = want
        self.trail.append(var)
        return True

    def propagate(self) -> bool:
        val = self.val
        watches = self.watches
        trail = self.trail
        while self.qhead < len(trail):
            var = trail[self.qhead]
            self.qhead += 1
            false_code = 2 * var + val[var]  # the literal just made false
            ws = watches[false_code]
            kept = []
            i = 0
            n_ws = len(ws)
            conflict = False
            while i < n_ws:
                c = ws[i]
                i += 1
                if c[0] == false_code:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = val[first >> 1]
                if fv >= 0 and fv ^ (first & 1) == 1:
                    kept.append(c)
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    lv = val[lk >> 1]
                    if lv < 0 or lv ^ (lk & 1) == 1:
                        c[1], c[k] = lk, c[1]
                        watches[lk].append(c)
                        break
                else:
                    kept.append(c)
                    if fv < 0:
                        self.stats.propagations += 1
                        self._enqueue(first)
                    else:
                        conflict = True
                        kept.extend(ws[i:])
                        break
            watches[false_code] = kept
            if conflict:
                return False
        return True

    def _new_level(self) -> None:
        self.trail_lim.append(len(self.trail))

    def _backtrack_to(self, level: int) -> None:
        if len(self.trail_lim) <= level:
            return
        start = self.trail_lim[level]
        for var in self.trail[start:]:
            self.val[var] = -1
        del self.trail[start:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def _check_limits(self) -> None:
        if self.node_limit is not None and self.stats.nodes > self.node_limit:
            raise LimitReached
        if self.deadline is not None and self.stats.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise LimitReached

    def assume(self, prefix) -> bool:
        """Fix (var, value) pairs permanently, then propagate."""
        for var, value in prefix:
            if not self._enqueue(2 * var + (1 - value)):
                return False
        return self.propagate()

    def _next_var(self) -> int | None:
        val = self.val
        for v in self.order:
            if val[v] < 0:
                return v
        for v in range(self.n):
            if val[v] < 0:
                return v
        return None

    def run(self, cutoff: int | None = None, on_cutoff=None):
        """Search; returns a model (list of 0/1) or None when exhausted.

        With ``cutoff``, every node at that many decisions is handed to
        ``on_cutoff(prefix)`` instead of being searched, then treated as refuted.
        """
        if not self.ok or not self.propagate():
            return None
        base = len(self.trail_lim)
        decisions: list[tuple[int, int]] = []  # (var, value) per level
        while True:
            var = self._next_var()
            if var is None:
                self.decisions = decisions
                return list(self.val)
            if cutoff is not None and len(decisions) == cutoff:
                on_cutoff(list(decisions))
                ok = False
            else:
                self.stats.nodes += 1
                self._check_limits()
                self._new_level()
                decisions.append((var, 1))
                self._enqueue(2 * var)
                ok = self.propagate()
                if not ok:
                    self.stats.conflicts += 1
            while not ok:
                while decisions and decisions[-1][1] == 0:
                    decisions.pop()
                if not decisions:
                    self._backtrack_to(base)
                    return None
                var, _ = decisions.pop()
                self._backtrack_to(base + len(decisions))
                self._new_level()
                decisions.append((var, 0))
                self._enqueue(2 * var + 1)
                ok = self.propagate()
                if not ok:
                    self.stats.conflicts += 1


def solve(model: Model, prefix=(), node_limit=None, deadline=None) -> Outcome:
    t0 = time.monotonic()
    eng = _Engine(model, node_limit, deadline)
    try:
        if not eng.ok or not eng.assume(prefix):
            sol = None
        else:
            sol = eng.run()
    except LimitReached:
        eng.stats.wall_time = time.monotonic() - t0
        return Outcome("LIMIT", None, eng.stats)
    eng.stats.wall_time = time.monotonic() - t0
    return Outcome("SAT" if sol is not None else "UNSAT", sol, eng.stats)


def split(model: Model, depth: int) -> tuple[list, Stats]:
    """Subproblem prefixes at ``depth`` decisions, in branching order."""
    eng = _Engine(model)
    prefixes: list = []
    sol = eng.run(cutoff=depth, on_cutoff=prefixes.append)
    if sol is not None:
        # a full model above the cutoff depth; replaying its decisions reproduces it
        prefixes.append(list(eng.decisions))
    return prefixes, eng.stats

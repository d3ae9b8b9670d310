"""Circuit systems, cover certificates and the matroid tests for them.

A circuit system is a ``frozenset`` of circuit indices into
``graph.circuits``.  A :class:`Cover` is a graph together with an ordered
tuple of such systems.  System labels in reports are 1-based, as are the
vertices.

Three independent ways of deciding whether a system is the circuit system of
a matroid live here:

* :func:`check_system` - the claw / triangle / matching conditions, linear in
  the size of the system;
* :func:`pairwise_axiom_check` - the circuit exchange axiom specialised to
  two-element circuits;
* :func:`is_matroid_by_bases` - brute force over all subsets of the ground set.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Circuit, Graph, make_circuit, triangles

BASES_ORACLE_THRESHOLD = 16
INTERSECTION_ORACLE_THRESHOLD = 22

CircuitSystem = frozenset  # of int circuit indices


class CoverError(ValueError):
    pass


class OracleRefusal(ValueError):
    """Brute-force oracle asked to run above its size threshold."""


@dataclass(frozen=True)
class Cover:
    graph: Graph
    systems: tuple

    def __post_init__(self):
        systems = tuple(frozenset(s) for s in self.systems)
        k = len(self.graph.circuits)
        for a, s in enumerate(systems, start=1):
            bad = [i for i in s if not (isinstance(i, (int, np.integer)) and 0 <= i < k)]
            if bad:
                raise CoverError(f"system {a} references foreign circuit index {bad[0]}")
        object.__setattr__(self, "systems", systems)

    @property
    def m(self) -> int:
        return len(self.systems)

    @classmethod
    def from_circuits(cls, graph: Graph, systems: Iterable[Iterable]) -> "Cover":
        """Build from circuits given as ``(center, u, w)`` triples."""
        out = []
        for s in systems:
            idx = set()
            for c in s:
                circ = make_circuit(*c)
                if circ not in graph.circuit_index:
                    raise CoverError(f"{circ} is not a circuit of the graph")
                idx.add(graph.circuit_index[circ])
            out.append(frozenset(idx))
        return cls(graph, tuple(out))

    def circuits_of(self, a: int) -> list[Circuit]:
        """Circuits of the system with 1-based label ``a``, canonical order."""
        cs = self.graph.circuits
        return [cs[i] for i in sorted(self.systems[a - 1])]

    def padded(self, m: int) -> "Cover":
        if m < self.m:
            raise CoverError("cannot pad to fewer systems")
        return Cover(self.graph, self.systems + (frozenset(),) * (m - self.m))


# --- condition checks ----------------------------------------------------------

@dataclass
class SystemViolations:
    claw: list = field(default_factory=list)      # (i^{jk}, i^{jl}, i^{kl}) with exactly two present
    triangle: list = field(default_factory=list)  # (i^{jk}, j^{ik}, k^{ij}) with exactly two present
    matching: list = field(default_factory=list)  # (i^{jk}, k^{il}) both present, ij and kl disjoint

    def __bool__(self) -> bool:
        return bool(self.claw or self.triangle or self.matching)


@dataclass
class ViolationReport:
    cover: list = field(default_factory=list)
    systems: list = field(default_factory=list)  # SystemViolations per system, in system order

    @property
    def ok(self) -> bool:
        return not self.cover and not any(self.systems)

    @property
    def claw(self) -> dict:
        return {a: v.claw for a, v in enumerate(self.systems, 1) if v.claw}

    @property
    def triangle(self) -> dict:
        return {a: v.triangle for a, v in enumerate(self.systems, 1) if v.triangle}

    @property
    def matching(self) -> dict:
        return {a: v.matching for a, v in enumerate(self.systems, 1) if v.matching}

    def lines(self) -> list[str]:
        out = [f"cover: {c.center} {c.a} {c.b} lies in no system" for c in self.cover]
        for a, v in enumerate(self.systems, 1):
            for t in v.claw:
                out.append(f"claw: system {a}: " + ", ".join(_fmt(c) for c in t) + " (exactly two present)")
            for t in v.triangle:
                out.append(f"triangle: system {a}: " + ", ".join(_fmt(c) for c in t) + " (exactly two present)")
            for p in v.matching:
                out.append(f"matching: system {a}: " + ", ".join(_fmt(c) for c in p) + " (both present)")
        return out


def _fmt(c: Circuit) -> str:
    return f"{c.center} {c.a} {c.b}"


def _members_by_center(system, g: Graph) -> dict[int, list[tuple[int, int]]]:
    cs = g.circuits
    by_center = defaultdict(list)
    for i in system:
        c = cs[i]
        by_center[c.center].append((c.a, c.b))
    return by_center


def _claw_violations(system, g: Graph) -> list:
    out = []
    for center, pairs in _members_by_center(system, g).items():
        # pairs form a graph on N(center); the condition holds iff it is a union of cliques
        nbr = defaultdict(set)
        for a, b in pairs:
            nbr[a].add(b)
            nbr[b].add(a)
        seen: set[int] = set()
        for start in nbr:
            if start in seen:
                continue
            comp = {start}
            todo = [start]
            while todo:
                u = todo.pop()
                for w in nbr[u]:
                    if w not in comp:
                        comp.add(w)
                        todo.append(w)
            seen |= comp
            size = len(comp)
            n_edges = sum(len(nbr[u]) for u in comp) // 2
            if n_edges == size * (size - 1) // 2:
                continue
            for apex in comp:
                for u, w in combinations(sorted(nbr[apex]), 2):
                    if w not in nbr[u]:
                        j, k, l = sorted((apex, u, w))
                        out.append((Circuit(center, j, k), Circuit(center, j, l), Circuit(center, k, l)))
    return sorted(out)


def _triangle_violations(system, g: Graph) -> list:
    cs = g.circuits
    count = defaultdict(int)
    for i in system:
        c = cs[i]
        if g.has_edge(c.a, c.b):
            count[tuple(sorted(c))] += 1
    out = []
    for (i, j, k), n in count.items():
        if n == 2:
            out.append((Circuit(i, j, k), Circuit(j, i, k), Circuit(k, i, j)))
    return sorted(out)


def outer_neighbors(system, g: Graph) -> dict[tuple[int, int], set]:
    """Map directed edge (i, k) to the set of j with circuit i^{jk} in the system."""
    cs = g.circuits
    out = defaultdict(set)
    for idx in system:
        c = cs[idx]
        out[(c.center, c.b)].add(c.a)
        out[(c.center, c.a)].add(c.b)
    return out


def _matching_violations(system, g: Graph) -> list:
    outer = outer_neighbors(system, g)
    out = []
    for (i, k), js in outer.items():
        if i > k:
            continue
        ls = outer.get((k, i))
        if not ls:
            continue
        if len(js) == 1 and js == ls:
            continue
        for j in js:
            for l in ls:
                if j != l:
                    out.append((make_circuit(i, j, k), make_circuit(k, i, l)))
    return sorted(out)


def check_system(system, g: Graph) -> SystemViolations:
    """Claw, triangle and matching violations of one circuit system on ``g``."""
    k = len(g.circuits)
    for i in system:
        if not 0 <= i < k:
            raise CoverError(f"foreign circuit index {i}")
    return SystemViolations(
        claw=_claw_violations(system, g),
        triangle=_triangle_violations(system, g),
        matching=_matching_violations(system, g),
    )


def verify_cover(cover: Cover) -> ViolationReport:
    """Empty report iff the matchings of the graph are the intersection of the systems' matroids."""
    g = cover.graph
    covered = set().union(*cover.systems) if cover.systems else set()
    uncovered = [c for i, c in enumerate(g.circuits) if i not in covered]
    return ViolationReport(cover=uncovered, systems=[check_system(s, g) for s in cover.systems])


# --- independent oracles ---------------------------------------------------------

def system_edge_pairs(system, g: Graph) -> list[frozenset]:
    cs = g.circuits
    return [frozenset(cs[i].edges) for i in system]


def pairwise_axiom_check(system, g: Graph) -> bool:
    """Circuit exchange for two-element circuits: {e,f}, {e,g} in S forces {f,g} in S."""
    members = set(system_edge_pairs(system, g))
    partners = defaultdict(set)
    for pair in members:
        e, f = tuple(pair)
        partners[e].add(f)
        partners[f].add(e)
    for fs in partners.values():
        for f, h in combinations(fs, 2):
            if frozenset((f, h)) not in members:
                return False
    return True


def is_matroid_by_bases(ground: Iterable, circuits: Iterable, threshold: int = BASES_ORACLE_THRESHOLD) -> bool:
    """Brute force: every subset A of the ground set has equicardinal bases.

    Independence is "contains no member of ``circuits``".  For an independent I,
    the sets in which I is a basis are exactly those between I and its closure
    cl(I) = I + {x : I + x dependent}; all bases of such a set have size |I| iff
    the largest independent subset of cl(I) has size |I|.
    """
    ground = sorted(set(ground), key=repr)
    k = len(ground)
    if k > threshold:
        raise OracleRefusal(f"ground set of size {k} exceeds oracle threshold {threshold}")
    pos = {e: i for i, e in enumerate(ground)}
    conflict = [0] * k
    for c in circuits:
        c = tuple(c)
        if len(c) != 2:
            raise ValueError("only two-element circuits are supported")
        x, y = pos[c[0]], pos[c[1]]
        conflict[x] |= 1 << y
        conflict[y] |= 1 << x

    full = 1 << k
    indep = bytearray(full)
    indep[0] = 1
    best = [0] * full  # size of a largest independent subset
    for mask in range(1, full):
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        indep[mask] = indep[rest] and not (conflict[low] & rest)
        take = best[rest & ~conflict[low]] + 1
        best[mask] = max(best[rest], take)

    for mask in range(full):
        if not indep[mask]:
            continue
        closure = mask
        for x in range(k):
            if not mask >> x & 1 and conflict[x] & mask:
                closure |= 1 << x
        if best[closure] != mask.bit_count():
            return False
    return True


def intersection_equals_matchings(cover: Cover, threshold: int = INTERSECTION_ORACLE_THRESHOLD) -> bool:
    """Enumerate every edge subset: independent in all systems iff a matching."""
    g = cover.graph
    edges = g.sorted_edges
    k = len(edges)
    if k > threshold:
        raise OracleRefusal(f"{k} edges exceed oracle threshold {threshold}")
    pos = {e: i for i, e in enumerate(edges)}
    adjacent = np.zeros(k, dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        for j, (x, y) in enumerate(edges):
            if i != j and {u, v} & {x, y}:
                adjacent[i] |= 1 << j
    dependent_pair = np.zeros(k, dtype=np.int64)
    for s in cover.systems:
        for pair in system_edge_pairs(s, g):
            e, f = (pos[x] for x in pair)
            dependent_pair[e] |= 1 << f
            dependent_pair[f] |= 1 << e

    subsets = np.arange(1 << k, dtype=np.int64)
    is_matching = np.ones(1 << k, dtype=bool)
    in_intersection = np.ones(1 << k, dtype=bool)
    for i in range(k):
        has_i = (subsets >> i) & 1 == 1
        is_matching &= ~(has_i & ((subsets & adjacent[i]) != 0))
        in_intersection &= ~(has_i & ((subsets & dependent_pair[i]) != 0))
    return bool(np.array_equal(is_matching, in_intersection))


# --- condition enumeration (shared by the solver and the IP emitter) -------------

def claw_triples(g: Graph) -> list[tuple[int, int, int]]:
    """(i^{jk}, i^{jl}, i^{kl}) as circuit indices, for every center i and j<k<l in N(i)."""
    out = []
    for i in g.vertices:
        for j, k, l in combinations(g.adj[i], 3):
            out.append((g.index_of(i, j, k), g.index_of(i, j, l), g.index_of(i, k, l)))
    return out


def triangle_triples(g: Graph) -> list[tuple[int, int, int]]:
    """(i^{jk}, j^{ik}, k^{ij}) as circuit indices, for every triangle i<j<k."""
    return [(g.index_of(i, j, k), g.index_of(j, i, k), g.index_of(k, i, j)) for i, j, k in triangles(g)]


def matching_pairs(g: Graph) -> list[tuple[int, int]]:
    """(i^{jk}, k^{il}) with i<k, j != l: circuits that may not share a system.

    Every ordered edge (i, k) with j in N(i)-k and l in N(k)-i, j != l, gives
    such a pair; the orientation i < k lists each unordered pair once.
    """
    out = []
    for i, k in g.sorted_edges:
        for j in g.adj[i]:
            if j == k:
                continue
            p = g.index_of(i, j, k)
            for l in g.adj[k]:
                if l != i and l != j:
                    out.append((p, g.index_of(k, i, l)))
    return sorted(out)

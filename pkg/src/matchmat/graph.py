"""Simple undirected graphs on vertices 1..n and the circuits of their matching systems.

A circuit of the matching independence system is a pair of edges sharing one
vertex.  It is stored as ``Circuit(center, a, b)`` with ``a < b``: the edges
``{center, a}`` and ``{center, b}``.  The list returned by
:meth:`Graph.circuits` is sorted by ``(center, a, b)`` and every other module
refers to circuits by their index into that list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

import networkx as nx


class GraphError(ValueError):
    """Malformed graph input."""


class Circuit(NamedTuple):
    center: int
    a: int
    b: int

    @property
    def edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return _edge(self.center, self.a), _edge(self.center, self.b)

    def __str__(self) -> str:
        return f"{self.center}^{{{self.a}{self.b}}}" if max(self) < 10 else f"{self.center}^{{{self.a},{self.b}}}"


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def make_circuit(center: int, u: int, w: int) -> Circuit:
    if len({center, u, w}) != 3:
        raise ValueError(f"circuit needs three distinct vertices, got {center}, {u}, {w}")
    return Circuit(center, u, w) if u < w else Circuit(center, w, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 1..{self.n}")
            canon.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def adj(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @cached_property
    def adj_sets(self) -> dict[int, frozenset]:
        return {v: frozenset(ns) for v, ns in self.adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    @cached_property
    def circuits(self) -> list[Circuit]:
        return enumerate_circuits(self)

    @cached_property
    def circuit_index(self) -> dict[Circuit, int]:
        return {c: i for i, c in enumerate(self.circuits)}

    def index_of(self, center: int, u: int, w: int) -> int:
        return self.circuit_index[make_circuit(center, u, w)]

    def subgraph_on(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph keeping the original labels; ``n`` shrinks to the largest kept vertex."""
        keep = set(vertices)
        if not keep <= set(self.vertices):
            raise GraphError("vertices outside the graph")
        n = max(keep, default=0)
        return Graph(n, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n <= other.n and self.edges <= other.edges

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise GraphError("partition blocks must be nonempty")
            if seen & b:
                raise GraphError("partition blocks overlap")
            seen |= b

    def check_covers(self, g: Graph) -> None:
        if set().union(*self.blocks) != set(g.vertices):
            raise GraphError("partition does not cover exactly the vertices 1..n")

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def improper_edges(self, g: Graph) -> list[tuple[int, int]]:
        where = self.block_of()
        return [e for e in g.sorted_edges if where[e[0]] == where[e[1]]]

    def check_proper(self, g: Graph) -> None:
        self.check_covers(g)
        bad = self.improper_edges(g)
        if bad:
            u, v = bad[0]
            raise GraphError(f"partition is not proper: edge {u}-{v} lies inside a block")


# --- parsing / generation ---------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the ``p edge n m`` / ``e u v`` edge-list format."""
    n = None
    header_line = 0
    edges = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            try:
                n, declared = int(parts[2]), int(parts[3])
                header_line = lineno
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed edge {line!r}") from None
            if u == v:
                raise GraphError(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: endpoint out of range 1..{n}")
            if _edge(u, v) in seen:
                raise GraphError(f"line {lineno}: duplicate edge {u}-{v}")
            seen.add(_edge(u, v))
            edges.append((u, v))
        else:
            raise GraphError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p edge' header")
    if declared != len(edges):
        raise GraphError(f"line {header_line}: header declares {declared} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {len(g.edges)}"]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete_multipartite(*sizes: int) -> Graph:
    blocks = multipartite_blocks(*sizes)
    edges = [(u, v) for b1, b2 in combinations(blocks, 2) for u in b1 for v in b2]
    return Graph.from_edges(sum(sizes), edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def multipartite_blocks(*sizes: int) -> list[range]:
    if any(s <= 0 for s in sizes):
        raise GraphError("block sizes must be positive")
    blocks, start = [], 1
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    return blocks


_GENERATORS = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "complete_bipartite": complete_bipartite,
    "complete_multipartite": complete_multipartite,
}


def generate(kind: str, *sizes: int) -> Graph:
    if kind not in _GENERATORS:
        raise GraphError(f"unknown graph kind {kind!r}")
    if not sizes or any(s <= 0 for s in sizes):
        raise GraphError("sizes must be positive")
    return _GENERATORS[kind](*sizes)


# --- circuits and structure -------------------------------------------------

def enumerate_circuits(g: Graph) -> list[Circuit]:
    out = []
    for v in g.vertices:
        for a, b in combinations(g.adj[v], 2):
            out.append(Circuit(v, a, b))
    return out  # already sorted: centers ascending, neighbor pairs lexicographic


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.sorted_edges:
        for w in g.adj[v]:
            if w > v and w in g.adj_sets[u]:
                out.append((u, v, w))
    return sorted(out)


def triangle_degree_ok(g: Graph) -> bool:
    return bad_triangle(g) is None


def bad_triangle(g: Graph) -> tuple[int, int, int] | None:
    """First triangle with two or more vertices of degree above 2, if any."""
    for t in triangles(g):
        if sum(g.degree(v) > 2 for v in t) > 1:
            return t
    return None


def _block_allows_only_triangles(block: nx.Graph) -> bool:
    """True iff a 2-connected block has no odd cycle of length >= 5.

    Such blocks are bipartite, have at most four vertices, or are books
    K_{1,1,t}: an edge ab with every other vertex adjacent to exactly a and b.
    """
    if nx.is_bipartite(block):
        return True
    k = block.number_of_nodes()
    if k <= 4:
        return True
    hubs = [v for v in block if block.degree(v) == k - 1]
    if len(hubs) != 2:
        return False
    return block.number_of_edges() == 2 * (k - 2) + 1


def has_forbidden_odd_cycle(g: Graph) -> bool:
    """Whether ``g`` contains a simple odd cycle on at least five vertices."""
    return _offending_block(g) is not None


def _offending_block(g: Graph) -> nx.Graph | None:
    ng = g.to_networkx()
    for comp in nx.biconnected_components(ng):
        if len(comp) < 5:
            continue
        block = ng.subgraph(comp)
        if not _block_allows_only_triangles(block):
            return block
    return None


def forbidden_odd_cycle(g: Graph) -> list[int] | None:
    """A witness odd cycle of length >= 5 as a vertex list, or None."""
    block = _offending_block(g)
    if block is None:
        return None
    found = _shortest_odd_cycle(block)
    if found is not None and len(found) >= 5:
        return found
    return _dfs_long_odd_cycle(block)


def _shortest_odd_cycle(block: nx.Graph) -> list[int] | None:
    best = None
    for s in sorted(block):
        dist = {s: 0}
        parent = {s: None}
        order = [s]
        for u in order:
            for w in sorted(block[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    order.append(w)
        for u, w in block.edges:
            if dist[u] != dist[w]:
                continue
            pu, pw = [u], [w]
            while pu[-1] != pw[-1]:
                pu.append(parent[pu[-1]])
                pw.append(parent[pw[-1]])
            cyc = pu + pw[-2::-1]
            if len(set(cyc)) == len(cyc) and (best is None or len(cyc) < len(best)):
                best = cyc
    return best


def _dfs_long_odd_cycle(block: nx.Graph) -> list[int] | None:
    # exponential in the worst case; only used to produce a witness
    nodes = sorted(block)
    for s in nodes:
        stack = [(s, [s])]
        while stack:
            u, p = stack.pop()
            for w in sorted(block[u], reverse=True):
                if w == s and len(p) >= 5 and len(p) % 2 == 1:
                    return p
                if w > s and w not in p:
                    stack.append((w, p + [w]))
    return None


def labeled_graphs(n: int):
    """Every labeled simple graph on vertices 1..n (2^(n choose 2) of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])

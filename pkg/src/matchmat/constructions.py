"""Explicit covers: partition matroids, the two-matroid cover, the 4-partite
three-matroid cover, the recursive cover of complete graphs, and restriction
of a cover to a subgraph."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx

from .bounds import nu_lower
from .graph import (
    Circuit,
    Graph,
    GraphError,
    VertexPartition,
    bad_triangle,
    complete,
    forbidden_odd_cycle,
    triangles,
)
from .matroid import Cover, CoverError


class ConstructionRefused(ValueError):
    """The graph is outside the construction's reach; ``witness`` says why."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


def _centered_in(g: Graph, vertices) -> set[int]:
    vs = set(vertices)
    return {i for i, c in enumerate(g.circuits) if c.center in vs}


def partition_matroid_cover(g: Graph, partition: VertexPartition) -> Cover:
    partition.check_proper(g)
    return Cover(g, tuple(frozenset(_centered_in(g, block)) for block in partition.blocks))


def two_matroid_cover(g: Graph) -> Cover:
    cyc = forbidden_odd_cycle(g)
    if cyc is not None:
        raise ConstructionRefused(f"odd cycle of length {len(cyc)}: {' '.join(map(str, cyc))}", cyc)
    tri = bad_triangle(g)
    if tri is not None:
        raise ConstructionRefused(
            "triangle {} {} {} has more than one vertex of degree > 2".format(*tri), tri
        )

    tris = triangles(g)
    reduced = g.to_networkx()
    isolated = []
    for t in tris:
        low = [v for v in t if g.degree(v) == 2]
        if len(low) == 3:
            isolated.append(t)
            reduced.remove_nodes_from(t)
        else:
            reduced.remove_edge(*low)
    # contracted triangles become isolated vertices and sit on side 0
    side = {}
    for comp in nx.connected_components(reduced):
        root = min(comp)
        side[root] = 0
        for u, w in nx.bfs_edges(reduced, root, sort_neighbors=sorted):
            side[w] = 1 - side[u]
    if any(side[u] == side[w] for u, w in reduced.edges):
        raise AssertionError("reduced graph is not bipartite")
    for t in isolated:
        for v in t:
            side[v] = 0

    systems = [set(), set()]
    for idx, c in enumerate(g.circuits):
        systems[side[c.center]].add(idx)
        if g.has_edge(c.a, c.b) and side[c.a] == side[c.b]:
            systems[side[c.a]].add(idx)
    return Cover(g, tuple(frozenset(s) for s in systems))


def four_partite_cover(g: Graph, partition: VertexPartition) -> Cover:
    if len(partition.blocks) != 4:
        raise GraphError("four_partite_cover needs exactly 4 blocks")
    partition.check_proper(g)
    where = partition.block_of()
    systems = []
    for a in range(3):
        s = set()
        for idx, c in enumerate(g.circuits):
            if where[c.center] == a:
                s.add(idx)
            elif where[c.center] == 3 and where[c.a] != a and where[c.b] != a:
                s.add(idx)
        systems.append(frozenset(s))
    return Cover(g, tuple(systems))


def _wrap(x: int, m: int) -> int:
    return (x - 1) % m + 1


@lru_cache(maxsize=None)
def _recursive_systems(m: int) -> tuple[int, tuple]:
    """(vertex count, systems as frozensets of (center, a, b) triples)."""
    if m <= 3:
        base = frozenset({(1, 2, 3), (2, 1, 3), (3, 1, 2)})
        return 3, (base,) + (frozenset(),) * (m - 1)

    s = nu_lower(m - 3)
    inner_n, inner = _recursive_systems(m - 3)
    assert inner_n == s
    n = m * s
    blocks = {k: range((k - 1) * s + 1, k * s + 1) for k in range(1, m + 1)}
    vertices = range(1, n + 1)
    systems = {k: set() for k in range(1, m + 1)}

    def add(k, center, u, w):
        systems[_wrap(k, m)].add((center, u, w) if u < w else (center, w, u))

    # within-block circuits inherited from the smaller cover
    for i in range(1, m + 1):
        for j in range(1, m - 2):
            k = _wrap(i + 1 + j, m)
            off = (k - 1) * s
            for c, a, b in inner[j - 1]:
                systems[i].add((c + off, a + off, b + off))

    for k in range(1, m + 1):
        here = blocks[k]
        nxt = set(blocks[_wrap(k + 1, m)])
        inside = set(here)
        outside = [w for w in vertices if w not in inside]
        beyond = [w for w in outside if w not in nxt]
        for v in here:
            for u, w in combinations(outside, 2):
                add(k, v, u, w)
            for u, w in combinations(sorted(nxt), 2):
                add(k - 1, v, u, w)
            for u, w in combinations(beyond, 2):
                add(k + 1, v, u, w)
            # one endpoint inside the block, one outside
            for vj in here:
                if vj == v:
                    continue
                for w in outside:
                    if v < vj:
                        add(k, v, vj, w)
                    elif w in nxt:
                        add(k - 1, v, vj, w)
                    else:
                        add(k + 1, v, vj, w)
            # both endpoints inside the block, center below or above both
            for vj, vl in combinations(here, 2):
                if v in (vj, vl):
                    continue
                if v < vj:
                    add(k, v, vj, vl)
                elif v > vl:
                    add(k - 1, v, vj, vl)
                    add(k + 1, v, vj, vl)
    return n, tuple(frozenset(systems[k]) for k in range(1, m + 1))


def recursive_cover(m: int) -> Cover:
    """Cover of K_{nu_lower(m)} by m systems, built from m copies of the (m-3) cover."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n, systems = _recursive_systems(m)
    g = complete(n)
    index = g.circuit_index
    return Cover(g, tuple(frozenset(index[Circuit(*c)] for c in s) for s in systems))


def restrict_cover(cover: Cover, h: Graph) -> Cover:
    """Keep, in each system, exactly the circuits whose two edges lie in ``h``."""
    g = cover.graph
    if not h.is_subgraph_of(g):
        raise GraphError("restriction target is not a subgraph of the cover's graph")
    gc = g.circuits
    hindex = h.circuit_index
    systems = []
    for s in cover.systems:
        systems.append(frozenset(hindex[gc[i]] for i in s if gc[i] in hindex))
    return Cover(h, tuple(systems))


def greedy_partition(g: Graph) -> VertexPartition:
    """A proper coloring as a partition (networkx largest-first greedy)."""
    coloring = nx.greedy_color(g.to_networkx(), strategy="largest_first")
    blocks: dict[int, set] = {}
    for v in g.vertices:
        blocks.setdefault(coloring[v], set()).add(v)
    return VertexPartition(tuple(sorted((frozenset(b) for b in blocks.values()), key=min)))


__all__ = [
    "ConstructionRefused",
    "CoverError",
    "four_partite_cover",
    "greedy_partition",
    "partition_matroid_cover",
    "recursive_cover",
    "restrict_cover",
    "two_matroid_cover",
]

"""Colors, color classes and degenerate triangles of a cover.

Directed edge i->j has color a when system a contains some circuit centered
at i that uses the edge ij.  The color type of i->j is its set of colors;
the color class of i is the set of color types of its outgoing edges.  A
degenerate triangle is a triangle whose three circuits all lie in one system.
System labels are 1-based throughout.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .graph import triangles
from .matroid import Cover, CoverError, verify_cover


@dataclass(frozen=True)
class ColorReport:
    color_type: dict            # (i, j) -> frozenset of system labels
    color_class: dict           # i -> frozenset of color types
    degenerate_triangles: list  # (i, j, k, a) with i < j < k, a the shared system

    def lines(self) -> list[str]:
        out = []
        for (i, j), t in sorted(self.color_type.items()):
            out.append(f"type {i}->{j}: {{{', '.join(map(str, sorted(t)))}}}")
        for i, cls in sorted(self.color_class.items()):
            types = sorted("{" + ",".join(map(str, sorted(t))) + "}" for t in cls)
            out.append(f"class {i}: {' '.join(types)}")
        for i, j, k, a in self.degenerate_triangles:
            out.append(f"degenerate triangle {i} {j} {k} in system {a}")
        return out


def color_analysis(cover: Cover) -> ColorReport:
    g = cover.graph
    cs = g.circuits
    colors = defaultdict(set)
    for a, system in enumerate(cover.systems, start=1):
        for idx in system:
            c = cs[idx]
            colors[(c.center, c.a)].add(a)
            colors[(c.center, c.b)].add(a)
    color_type = {}
    for u, v in g.sorted_edges:
        color_type[(u, v)] = frozenset(colors.get((u, v), ()))
        color_type[(v, u)] = frozenset(colors.get((v, u), ()))
    color_class = {
        i: frozenset(color_type[(i, j)] for j in g.adj[i]) for i in g.vertices
    }
    return ColorReport(color_type, color_class, degenerate_triangles(cover))


def degenerate_triangles(cover: Cover) -> list[tuple[int, int, int, int]]:
    g = cover.graph
    out = []
    for i, j, k in triangles(g):
        trio = (g.index_of(i, j, k), g.index_of(j, i, k), g.index_of(k, i, j))
        for a, system in enumerate(cover.systems, start=1):
            if all(x in system for x in trio):
                out.append((i, j, k, a))
    return out


def split_degenerate_triangles(cover: Cover) -> Cover:
    """Cover with at most 3m systems and no degenerate triangle.

    For a degenerate triangle i<j<k in system a, i^{jk} stays in a while j^{ik}
    and k^{ij} move to two extra systems a' and a'' shared by all degenerate
    triangles of a.  Extra pairs are appended in order of the first degenerate
    triangle of each system.
    """
    if not verify_cover(cover).ok:
        raise CoverError("split_degenerate_triangles needs a valid cover")
    found = degenerate_triangles(cover)
    if not found:
        return cover
    g = cover.graph
    systems = [set(s) for s in cover.systems]
    extra: dict[int, tuple[int, int]] = {}
    for i, j, k, a in found:
        if a not in extra:
            systems += [set(), set()]
            extra[a] = (len(systems) - 2, len(systems) - 1)
        first, second = extra[a]
        mid, last = g.index_of(j, i, k), g.index_of(k, i, j)
        systems[a - 1] -= {mid, last}
        systems[first].add(mid)
        systems[second].add(last)
    return Cover(g, tuple(frozenset(s) for s in systems))

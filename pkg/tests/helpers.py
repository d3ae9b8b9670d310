"""Independent brute-force oracles and generators shared by the test modules.

Nothing here goes through the package's own circuit enumeration or condition
lists, so agreement with the package is a genuine cross-check.
"""

from __future__ import annotations

import random
import re
from itertools import combinations, permutations, product

from hypothesis import strategies as st

from matchmat.graph import Graph
from matchmat.search import Model


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


# --- structure, by direct enumeration -------------------------------------------

def adjacent_edge_pairs(g: Graph) -> set[frozenset]:
    """Every unordered pair of distinct edges sharing an endpoint."""
    edges = [frozenset(e) for e in g.edges]
    return {frozenset((e, f)) for e, f in combinations(edges, 2) if e & f}


def brute_counts(g: Graph) -> dict[str, int]:
    """Circuits, claw triples, triangles and matching pairs, counted from scratch."""
    vs = list(g.vertices)
    adj = {v: {u for u in vs if g.has_edge(u, v)} for v in vs}
    claws = sum(1 for i in vs for trio in combinations(sorted(adj[i]), 3))
    tris = sum(1 for t in combinations(vs, 3) if all(g.has_edge(a, b) for a, b in combinations(t, 2)))
    # unordered pairs {i^{jk}, k^{il}}: ordered tuples (i, j, k, l) with the path j-i-k-l, j != l,
    # each unordered pair seen twice (once from each end of the shared edge)
    paths = sum(
        1
        for i, j, k, l in permutations(vs, 4)
        if g.has_edge(i, j) and g.has_edge(i, k) and g.has_edge(k, l)
    )
    return {
        "circuits": len(adjacent_edge_pairs(g)),
        "claws": claws,
        "triangles": tris,
        "matching_pairs": paths // 2,
    }


def brute_long_odd_cycle(g: Graph) -> bool:
    """Does ``g`` contain a simple cycle of odd length >= 5?  Exhaustive DFS."""
    adj = {v: sorted(u for u in g.vertices if g.has_edge(u, v)) for v in g.vertices}

    def dfs(start, u, seen, length):
        for w in adj[u]:
            if w == start and length >= 5 and length % 2 == 1:
                return True
            if w > start and w not in seen:
                seen.add(w)
                if dfs(start, w, seen, length + 1):
                    return True
                seen.discard(w)
        return False

    return any(dfs(s, s, {s}, 1) for s in g.vertices)


def brute_triangle_condition(g: Graph) -> bool:
    """Every triangle has at most one vertex of degree > 2."""
    deg = {v: sum(g.has_edge(u, v) for u in g.vertices) for v in g.vertices}
    for t in combinations(g.vertices, 3):
        if all(g.has_edge(a, b) for a, b in combinations(t, 2)):
            if sum(deg[v] > 2 for v in t) > 1:
                return False
    return True


def brute_intersection_ok(cover) -> bool:
    """Edge subsets independent in every system are exactly the matchings (pure Python)."""
    g = cover.graph
    edges = sorted(g.edges)
    dependent = [
        {frozenset(g.circuits[i].edges) for i in s} for s in cover.systems
    ]
    for mask in range(1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        matching = all(not set(e) & set(f) for e, f in combinations(chosen, 2))
        pairs = {frozenset((e, f)) for e, f in combinations(chosen, 2)}
        independent = all(not (pairs & d) for d in dependent)
        if matching != independent:
            return False
    return True


# --- LP round trip -----------------------------------------------------------------

_TERM = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z_][\w.]*)")


def parse_lp(text: str) -> dict:
    """Minimal LP-format reader: objective, linear rows, binaries."""
    section = None
    rows: list[tuple[str, dict, str, int]] = []
    binaries: list[str] = []
    current = ""
    sense = None
    objective = ""

    def flush():
        nonlocal current
        if not current:
            return
        name, body = current.split(":", 1)
        m = re.match(r"(.*?)(<=|>=|=)\s*(-?\d+)\s*$", body)
        coefs: dict[str, int] = {}
        for sign, coef, var in _TERM.findall(m.group(1)):
            coefs[var] = coefs.get(var, 0) + (-1 if sign == "-" else 1) * int(coef or 1)
        rows.append((name.strip(), coefs, m.group(2), int(m.group(3))))
        current = ""

    for raw in text.splitlines():
        if raw.startswith("\\"):
            continue
        word = raw.strip()
        if word in ("Minimize", "Maximize", "Subject To", "Binaries", "End"):
            flush()
            section = word
            if word in ("Minimize", "Maximize"):
                sense = word
            continue
        if section in ("Minimize", "Maximize"):
            objective += " " + word
        elif section == "Subject To":
            if not raw.startswith("   ") and current:
                flush()
            current += " " + word
        elif section == "Binaries":
            binaries.append(word)
    return {"sense": sense, "objective": objective.strip(), "rows": rows, "binaries": binaries}


def row_holds(coefs: dict, op: str, rhs: int, values: dict) -> bool:
    lhs = sum(c * values[v] for v, c in coefs.items())
    return lhs <= rhs if op == "<=" else lhs >= rhs if op == ">=" else lhs == rhs


def lp_to_model(lp: dict, fixed: dict | None = None) -> tuple[Model, list[str]]:
    """CNF model of a pure-binary LP: each row blocks its violating 0/1 assignments."""
    names = list(lp["binaries"])
    var = {n: i for i, n in enumerate(names)}
    clauses = []
    for _, coefs, op, rhs in lp["rows"]:
        vs = sorted(coefs)
        for bits in product((0, 1), repeat=len(vs)):
            values = dict(zip(vs, bits))
            if not row_holds(coefs, op, rhs, values):
                clauses.append(tuple(-(var[v] + 1) if b else var[v] + 1 for v, b in values.items()))
    for n, b in (fixed or {}).items():
        clauses.append((var[n] + 1,) if b else (-(var[n] + 1),))
    return Model(num_vars=len(names), clauses=clauses, order=list(range(len(names)))), names


# --- structured system samples --------------------------------------------------------

def parallel_class_system(rng: random.Random, g: Graph) -> frozenset:
    """A matroid circuit system: edges grouped into classes of pairwise adjacent edges
    (stars or triangles), every pair inside a class a circuit."""
    edges = sorted(g.edges)
    rng.shuffle(edges)
    classes: list[list] = []
    for e in edges:
        if rng.random() < 0.3:
            continue  # a coloop
        options = [c for c in classes if all(set(e) & set(f) for f in c)]
        if options and rng.random() < 0.7:
            rng.choice(options).append(e)
        else:
            classes.append([e])
    out = set()
    for c in classes:
        for e, f in combinations(c, 2):
            center = (set(e) & set(f)).pop()
            u, w = (set(e) | set(f)) - {center}
            out.add(g.index_of(center, u, w))
    return frozenset(out)


def perturbed(rng: random.Random, g: Graph, system: frozenset) -> frozenset:
    """Flip membership of one or two circuits."""
    s = set(system)
    for _ in range(rng.randint(1, 2)):
        if g.circuits:
            s ^= {rng.randrange(len(g.circuits))}
    return frozenset(s)

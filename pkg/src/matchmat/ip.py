"""LP-format integer program for "is mu(G) <= m?".

Variables: ``x_<a>_<i>_<j>_<k>`` is 1 iff circuit i^{jk} (j < k) lies in
system a; the optimization variant adds ``y_<i>_<j>_<k>`` per circuit.

Rows, in this order:

* ``cov_<i>_<j>_<k>``: sum_a x >= 1 (optimization: sum_a x - y >= 0);
* ``claw<t>_<a>_<i>_<j>_<k>_<l>``, t = 1, 2, 3, for center i and j < k < l:
  the three "not exactly two" inequalities over i^{jk}, i^{jl}, i^{kl};
* ``tri<t>_<a>_<i>_<j>_<k>`` for a triangle i < j < k, over i^{jk}, j^{ik}, k^{ij};
* ``mat_<a>_<i>_<j>_<k>_<l>`` for i < k: x(i^{jk}) + x(k^{il}) <= 1.

Within each group rows follow system order, then canonical circuit order.
The objective is ``0 x_...`` (feasibility) or ``maximize sum y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Circuit, Graph
from .matroid import claw_triples, matching_pairs, triangle_triples

FEASIBILITY, OPTIMIZATION = "feasibility", "optimization"
_TERMS_PER_LINE = 8


@dataclass(frozen=True)
class IpStats:
    num_x_vars: int
    num_y_vars: int
    num_cover: int
    num_claw: int
    num_triangle: int
    num_matching: int

    @property
    def num_rows(self) -> int:
        return self.num_cover + self.num_claw + self.num_triangle + self.num_matching


def _check_variant(variant: str) -> None:
    if variant not in (FEASIBILITY, OPTIMIZATION):
        raise ValueError(f"unknown variant {variant!r}")


def ip_stats(g: Graph, m: int, variant: str = FEASIBILITY) -> IpStats:
    _check_variant(variant)
    k = len(g.circuits)
    return IpStats(
        num_x_vars=m * k,
        num_y_vars=k if variant == OPTIMIZATION else 0,
        num_cover=k,
        num_claw=3 * m * len(claw_triples(g)),
        num_triangle=3 * m * len(triangle_triples(g)),
        num_matching=m * len(matching_pairs(g)),
    )


def _x(a: int, c: Circuit) -> str:
    return f"x_{a}_{c.center}_{c.a}_{c.b}"


def _y(c: Circuit) -> str:
    return f"y_{c.center}_{c.a}_{c.b}"


def _sum(terms: list[str]) -> list[str]:
    """Render signed terms, wrapping long expressions onto continuation lines."""
    out = []
    for start in range(0, len(terms), _TERMS_PER_LINE):
        chunk = terms[start:start + _TERMS_PER_LINE]
        text = " ".join(chunk)
        if start == 0 and text.startswith("+ "):
            text = text[2:]
        out.append(text)
    return out


def _expr(name: str, terms: list[str], tail: str = "") -> list[str]:
    body = _sum(terms)
    body[-1] += tail
    return [f" {name}: {body[0]}"] + [f"   {b}" for b in body[1:]]


def _row(name: str, terms: list[str], sense: str, rhs: int) -> list[str]:
    return _expr(name, terms, f" {sense} {rhs}")


_SIGNS = (("+", "+", "-"), ("+", "-", "+"), ("-", "+", "+"))


def emit_ip(g: Graph, m: int, variant: str = FEASIBILITY) -> str:
    if m < 1:
        raise ValueError("m must be at least 1")
    _check_variant(variant)
    cs = g.circuits
    opt = variant == OPTIMIZATION
    lines = [
        f"\\ matchmat {variant} model: n = {g.n}, edges = {len(g.edges)}, circuits = {len(cs)}, m = {m}",
    ]
    if opt:
        lines.append("Maximize")
        lines += _expr("obj", [f"+ {_y(c)}" for c in cs]) if cs else [" obj: 0"]
    else:
        lines.append("Minimize")
        lines.append(f" obj: 0 {_x(1, cs[0])}" if cs else " obj: 0")
    lines.append("Subject To")
    for c in cs:
        terms = [f"+ {_x(a, c)}" for a in range(1, m + 1)]
        if opt:
            lines += _row(f"cov_{c.center}_{c.a}_{c.b}", terms + [f"- {_y(c)}"], ">=", 0)
        else:
            lines += _row(f"cov_{c.center}_{c.a}_{c.b}", terms, ">=", 1)
    claws = claw_triples(g)
    tris = triangle_triples(g)
    for a in range(1, m + 1):
        for p, q, r in claws:
            i, (j, k, l) = cs[p].center, (cs[p].a, cs[p].b, cs[r].b)
            for t, signs in enumerate(_SIGNS, start=1):
                terms = [f"{s} {_x(a, cs[x])}" for s, x in zip(signs, (p, q, r))]
                lines += _row(f"claw{t}_{a}_{i}_{j}_{k}_{l}", terms, "<=", 1)
    for a in range(1, m + 1):
        for p, q, r in tris:
            i, j, k = cs[p].center, cs[q].center, cs[r].center
            for t, signs in enumerate(_SIGNS, start=1):
                terms = [f"{s} {_x(a, cs[x])}" for s, x in zip(signs, (p, q, r))]
                lines += _row(f"tri{t}_{a}_{i}_{j}_{k}", terms, "<=", 1)
    pairs = matching_pairs(g)
    for a in range(1, m + 1):
        for p, q in pairs:
            c1, c2 = cs[p], cs[q]
            i, k = c1.center, c2.center
            j = c1.a if c1.b == k else c1.b
            l = c2.a if c2.b == i else c2.b
            lines += _row(f"mat_{a}_{i}_{j}_{k}_{l}", [f"+ {_x(a, c1)}", f"+ {_x(a, c2)}"], "<=", 1)
    lines.append("Binaries")
    names = [_x(a, c) for c in cs for a in range(1, m + 1)]
    if opt:
        names += [_y(c) for c in cs]
    lines += [f" {n}" for n in names]
    lines.append("End")
    return "\n".join(lines) + "\n"

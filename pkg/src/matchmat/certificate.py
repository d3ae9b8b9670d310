"""Text serialization of cover certificates.

Format, version 1::

    matchmat-cover version 1
    p edge <n> <number of edges>
    e <u> <v>            (one line per edge, sorted)
    m <number of systems>
    system <a> <size>    (a = 1..m, in order)
    <i> <j> <k>          (one line per circuit i^{jk}, j < k, canonical order)
    end

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from .graph import GraphError, format_graph, make_circuit, parse_graph
from .matroid import Cover

FORMAT_NAME = "matchmat-cover"
FORMAT_VERSION = 1


class CertificateError(ValueError):
    pass


class VersionMismatch(CertificateError):
    pass


def format_cover(cover: Cover) -> str:
    out = [f"{FORMAT_NAME} version {FORMAT_VERSION}", format_graph(cover.graph).rstrip("\n"), f"m {cover.m}"]
    for a in range(1, cover.m + 1):
        circuits = cover.circuits_of(a)
        out.append(f"system {a} {len(circuits)}")
        out.extend(f"{c.center} {c.a} {c.b}" for c in circuits)
    out.append("end")
    return "\n".join(out) + "\n"


def parse_cover(text: str) -> Cover:
    lines = [
        (no, ln.strip())
        for no, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise CertificateError("empty certificate")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != FORMAT_NAME or parts[1] != "version":
        raise CertificateError(f"line {no}: not a {FORMAT_NAME} certificate")
    if parts[2] != str(FORMAT_VERSION):
        raise VersionMismatch(f"line {no}: certificate version {parts[2]}, expected {FORMAT_VERSION}")

    pos = 1
    graph_lines = []
    while pos < len(lines) and lines[pos][1].split()[0] in ("p", "e"):
        graph_lines.append(lines[pos][1])
        pos += 1
    try:
        graph = parse_graph("\n".join(graph_lines))
    except GraphError as exc:
        raise CertificateError(f"embedded graph: {exc}") from None

    def take() -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise CertificateError("unexpected end of certificate")
        no, ln = lines[pos]
        pos += 1
        return no, ln.split()

    no, parts = take()
    if parts[0] != "m" or len(parts) != 2:
        raise CertificateError(f"line {no}: expected 'm <count>'")
    m = _int(parts[1], no)
    systems = []
    for a in range(1, m + 1):
        no, parts = take()
        if parts[0] != "system" or len(parts) != 3 or _int(parts[1], no) != a:
            raise CertificateError(f"line {no}: expected 'system {a} <size>'")
        size = _int(parts[2], no)
        members = []
        for _ in range(size):
            no, parts = take()
            if len(parts) != 3:
                raise CertificateError(f"line {no}: expected a circuit 'i j k'")
            i, j, k = (_int(x, no) for x in parts)
            try:
                circ = make_circuit(i, j, k)
            except ValueError as exc:
                raise CertificateError(f"line {no}: {exc}") from None
            if circ not in graph.circuit_index:
                raise CertificateError(f"line {no}: {i} {j} {k} is not a circuit of the graph")
            members.append(graph.circuit_index[circ])
        systems.append(frozenset(members))
    no, parts = take()
    if parts != ["end"]:
        raise CertificateError(f"line {no}: expected 'end'")
    if pos != len(lines):
        raise CertificateError(f"line {lines[pos][0]}: trailing content after 'end'")
    return Cover(graph, tuple(systems))


def _int(s: str, no: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise CertificateError(f"line {no}: expected an integer, got {s!r}") from None


def read_cover(path) -> Cover:
    with open(path) as fh:
        return parse_cover(fh.read())


def write_cover(cover: Cover, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_cover(cover))

"""Text formats for graphs, contraction sequences and construction indices.

Graph file::

    c optional comment
    p tww <n> <m>
    <u> <v>          (m lines, 1 <= u, v <= n)

Sequence file: one ``<survivor> <merged>`` line per contraction. Lines
starting with ``c `` are comments in both formats; blank lines are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable

from .contraction import ContractionSequence
from .trigraph import Trigraph


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        yield lineno, line


def _ints(line: str, lineno: int, count: int, what: str) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise FormatError(f"expected {what}, got {line!r}", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"non-integer field in {line!r}", lineno) from None


def parse_graph(data: str | bytes) -> Trigraph:
    text = data.decode() if isinstance(data, bytes) else data
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise FormatError("missing 'p tww <n> <m>' header")
    lineno, line = header
    fields = line.split()
    if len(fields) != 4 or fields[:2] != ["p", "tww"]:
        raise FormatError(f"malformed header {line!r}, expected 'p tww <n> <m>'", lineno)
    try:
        n, m = int(fields[2]), int(fields[3])
    except ValueError:
        raise FormatError(f"malformed header {line!r}, expected 'p tww <n> <m>'", lineno) from None
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count in header", lineno)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last = lineno
    for lineno, line in lines:
        last = lineno
        u, v = _ints(line, lineno, 2, "'<u> <v>'")
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"vertex id out of range 1..{n} in edge ({u}, {v})", lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise FormatError(f"declared {m} edges, found {len(edges)}", last)
    return Trigraph.from_edge_list(n, edges)


def write_graph(g: Trigraph, comments: Iterable[str] = ()) -> str:
    n = len(g)
    if g.vertices != frozenset(range(1, n + 1)):
        raise ValueError("vertex ids must be 1..n; relabel() the graph first")
    if not g.is_ordinary():
        raise ValueError("graph files hold ordinary graphs only, this trigraph has red edges")
    edges = g.black_edges()
    out = [f"c {c}\n" for c in comments]
    out.append(f"p tww {n} {len(edges)}\n")
    out.extend(f"{u} {v}\n" for u, v in edges)
    return "".join(out)


def parse_sequence(data: str | bytes) -> ContractionSequence:
    text = data.decode() if isinstance(data, bytes) else data
    steps = []
    for lineno, line in _data_lines(text):
        u, v = _ints(line, lineno, 2, "'<survivor> <merged>'")
        if u < 1 or v < 1:
            raise FormatError(f"vertex ids must be positive, got {line!r}", lineno)
        steps.append((u, v))
    return ContractionSequence(steps)


def write_sequence(seq: ContractionSequence | Iterable[tuple[int, int]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in seq)


def write_index(index: dict[int, tuple[int, int, int, int]]) -> str:
    """Sidecar for construction graphs: ``<vertex> <i> <j> <t> <Y-bitmask>`` per line."""
    return "".join(f"{v} {i} {j} {t} {y}\n" for v, (i, j, t, y) in sorted(index.items()))


def parse_index(data: str | bytes) -> dict[int, tuple[int, int, int, int]]:
    text = data.decode() if isinstance(data, bytes) else data
    out = {}
    for lineno, line in _data_lines(text):
        v, i, j, t, y = _ints(line, lineno, 5, "'<vertex> <i> <j> <t> <Y>'")
        out[v] = (i, j, t, y)
    return out


def parse_x_set(text: str) -> list[int]:
    """Comma-separated (or one-per-line) vertex ids."""
    out = []
    for tok in text.replace("\n", ",").split(","):
        tok = tok.strip()
        if not tok or tok.startswith("c"):
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise FormatError(f"bad vertex id {tok!r} in X") from None
    return out

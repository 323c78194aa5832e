"""Leaf module: raw edge-list text format shared by core IO and the cage catalog.

Format: first line "n m", then m lines "u v" with 0-indexed endpoints.
"""

from __future__ import annotations


class EdgeListParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def tokens_with_columns(raw: str):
    i = 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        yield i + 1, raw[i:j]
        i = j


def write_edge_list_text(n: int, edges) -> str:
    lines = [f"{n} {len(edges)}"]
    for u, v in sorted(tuple(e) for e in edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_edge_list_text(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = text.splitlines()
    if not lines:
        raise EdgeListParseError("empty edge list", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError('expected header "n m"', 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListParseError('expected integer header "n m"', 1) from None
    edges = []
    lineno = 1
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        toks = list(tokens_with_columns(raw))
        if len(toks) != 2:
            raise EdgeListParseError('expected edge line "u v"', lineno)
        try:
            u = int(toks[0][1])
            v = int(toks[1][1])
        except ValueError:
            raise EdgeListParseError("bad vertex id", lineno, toks[0][0]) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex out of range in edge ({u},{v})", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListParseError(f"expected {m} edges, got {len(edges)}", lineno)
    return n, edges

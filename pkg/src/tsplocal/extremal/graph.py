"""Sparse undirected graphs and labeled directed multigraphs.

SimpleGraph is the substrate for all girth constructions and for Graph TSP;
MultiDigraph carries per-edge provenance through tour contractions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Undirected simple graph with sorted neighbor lists.

    Vertices are 0..n-1. No self-loops, no parallel edges; adjacency is kept
    symmetric and duplicate-free.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: "list[Edge] | set[Edge] | None" = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        if edges:
            seen: set[Edge] = set()
            for u, v in edges:
                if u == v:
                    raise ValueError(f"self-loop at vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"edge ({u},{v}) out of range for n={n}")
                e = _norm_edge(u, v)
                if e in seen:
                    raise ValueError(f"duplicate edge {e}")
                seen.add(e)
            for u, v in sorted(seen):
                self.adj[u].append(v)
                self.adj[v].append(u)
            for lst in self.adj:
                lst.sort()

    # -- basic accessors -------------------------------------------------

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph(self.n)
        g.adj = [list(a) for a in self.adj]
        return g

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.num_edges()})"

    # -- structure queries -----------------------------------------------

    def is_regular(self, delta: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if delta is None:
            delta = degs[0]
        return all(d == delta for d in degs)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        """Two-color the graph; returns (side0, side1) or None if odd cycle."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for w in self.adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        q.append(w)
                    elif color[w] == color[u]:
                        return None
        return (
            [v for v in range(self.n) if color[v] == 0],
            [v for v in range(self.n) if color[v] == 1],
        )

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bfs_distances(self, source: int) -> list[int]:
        """Hop distances from source; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        q = deque([source])
        while q:
            u = q.popleft()
            du = dist[u]
            for w in self.adj[u]:
                if dist[w] == -1:
                    dist[w] = du + 1
                    q.append(w)
        return dist


def girth(graph: SimpleGraph) -> float:
    """Exact girth via a truncated BFS from every vertex; inf for forests.

    The BFS from root r finds the shortest cycle through r: the first time a
    frontier edge joins two vertices whose tree paths split at r (or hits the
    root level again) we get dist[u]+dist[v]+1. The minimum over all roots is
    the girth.
    """
    best = float("inf")
    n = graph.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            # any cycle discovered from here on has length >= 2*dist[u]
            if 2 * dist[u] >= best:
                break
            for w in graph.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    # non-tree edge: cycle through u and w
                    cyc = dist[u] + dist[w] + 1
                    if cyc < best:
                        best = cyc
    return best


def shortest_cycle(graph: SimpleGraph) -> list[int] | None:
    """One shortest cycle as a vertex list, or None for forests."""
    g = girth(graph)
    if g == float("inf"):
        return None
    n = graph.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for w in graph.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w and dist[u] + dist[w] + 1 == g:
                    path_u, path_w = [u], [w]
                    while path_u[-1] != root:
                        path_u.append(parent[path_u[-1]])
                    while path_w[-1] != root:
                        path_w.append(parent[path_w[-1]])
                    if len(set(path_u) | set(path_w)) == g:
                        return list(reversed(path_u)) + path_w[:-1]
    return None


@dataclass
class MultiDigraph:
    """Directed multigraph whose edges carry unique provenance labels.

    Parallel edges are kept; `arcs` holds (tail, head, label) triples and
    every label appears exactly once.
    """

    n: int
    arcs: list[tuple[int, int, int]] = field(default_factory=list)

    def add_arc(self, tail: int, head: int, label: int) -> None:
        if not (0 <= tail < self.n and 0 <= head < self.n):
            raise ValueError(f"arc ({tail},{head}) out of range")
        self.arcs.append((tail, head, label))

    def validate(self) -> None:
        labels = [lab for _, _, lab in self.arcs]
        if len(labels) != len(set(labels)):
            raise ValueError("duplicate provenance labels")

    def num_arcs(self) -> int:
        return len(self.arcs)


def multigraph_girth(n: int, edge_pairs: list[tuple[int, int]]) -> float:
    """Girth of an undirected multigraph given as endpoint pairs.

    Parallel edges form 2-cycles. Self-loops are rejected (they never arise
    from the tour contractions this supports).
    """
    pair_count: dict[Edge, int] = {}
    for u, v in edge_pairs:
        if u == v:
            raise ValueError("self-loop in multigraph")
        pair_count[_norm_edge(u, v)] = pair_count.get(_norm_edge(u, v), 0) + 1
    if any(c >= 2 for c in pair_count.values()):
        return 2
    simple = SimpleGraph(n)
    # all multiplicities are 1: fall back to the simple-graph girth
    for (u, v), _ in sorted(pair_count.items()):
        simple.adj[u].append(v)
        simple.adj[v].append(u)
    for lst in simple.adj:
        lst.sort()
    return girth(simple)

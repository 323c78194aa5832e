"""Shared-subpath detection for Graph TSP tours.

Each tour edge corresponds to a fixed shortest path in the underlying graph.
If two of these paths traverse a common directed edge, reconnecting the two
tour edges tail-to-tail / head-to-head is a strictly improving 2-move.
"""

from __future__ import annotations

from collections import deque

from ..core.instance import GraphInstance
from ..core.tour import Tour, tour_cost
from ..localsearch.moves import KMove, apply_kmove


def _bfs_parents(graph, source: int) -> list[int]:
    """Lexicographic BFS parent array (smallest-id parent wins)."""
    parent = [-1] * graph.n
    dist = [-1] * graph.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in graph.adj[u]:  # sorted neighbor lists: deterministic
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                parent[w] = u
                q.append(w)
    return parent


def fixed_shortest_path(graph, source: int, target: int) -> list[int]:
    """The deterministic shortest path used for subedge analysis."""
    parent = _bfs_parents(graph, source)
    path = [target]
    while path[-1] != source:
        nxt = parent[path[-1]]
        if nxt == -1:
            raise ValueError("target unreachable")
        path.append(nxt)
    path.reverse()
    return path


def find_subedge_improving_2move(
    instance: GraphInstance, tour: Tour
) -> KMove | None:
    """Two tour edges whose fixed shortest paths share a directed edge.

    Returns the improving 2-move replacing (a,b),(u,v) by {a,u},{b,v}, or
    None when all directed shortest-path edges are disjoint.
    """
    graph = instance.graph
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in tour.edges():
        path = fixed_shortest_path(graph, a, b)
        for x, y in zip(path, path[1:]):
            key = (x, y)
            if key in seen:
                u, v = seen[key]
                move = KMove(
                    removed=frozenset({frozenset((a, b)), frozenset((u, v))}),
                    added=frozenset({frozenset((a, u)), frozenset((b, v))}),
                    delta=(
                        instance.c(a, u)
                        + instance.c(b, v)
                        - instance.c(a, b)
                        - instance.c(u, v)
                    ),
                )
                improved = apply_kmove(instance, tour, move)
                if tour_cost(instance, improved) >= tour_cost(instance, tour):
                    raise AssertionError("shared subedge produced a non-improving move")
                return move
            seen[key] = (a, b)
    return None

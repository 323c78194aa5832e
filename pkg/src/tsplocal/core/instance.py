"""Instance data model: explicit metrics, graph metrics and {1,2}-cost instances.

All costs are non-negative integers so that move gains and certificates can be
compared exactly. Instances are immutable after construction and safe to share
across workers.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..extremal.graph import SimpleGraph

DEFAULT_DENSE_LIMIT = 20_000


class MetricInstance:
    """Complete weighted graph with integer costs and the triangle inequality.

    The matrix is stored dense (numpy int64). Symmetry, zero diagonal and
    non-negativity are enforced on construction; the triangle inequality is
    the caller's contract, checkable with :func:`validate_metric`.
    """

    __slots__ = ("n", "cost")

    def __init__(self, cost, *, dense_limit: int = DEFAULT_DENSE_LIMIT):
        mat = np.asarray(cost)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("cost matrix must be square")
        if mat.shape[0] > dense_limit:
            raise ValueError(
                f"n={mat.shape[0]} exceeds dense storage limit {dense_limit}"
            )
        if not np.issubdtype(mat.dtype, np.integer):
            if np.issubdtype(mat.dtype, np.floating) and np.all(mat == np.floor(mat)):
                mat = mat.astype(np.int64)
            else:
                raise ValueError("costs must be integers (scale rationals first)")
        mat = mat.astype(np.int64)
        if np.any(mat < 0):
            raise ValueError("costs must be non-negative")
        if np.any(np.diagonal(mat) != 0):
            raise ValueError("diagonal must be zero")
        if not np.array_equal(mat, mat.T):
            raise ValueError("cost matrix must be symmetric")
        mat.setflags(write=False)
        self.n = int(mat.shape[0])
        self.cost = mat

    @classmethod
    def from_rationals(cls, cost) -> "MetricInstance":
        """Scale a rational/float matrix by the lcm of denominators and ingest."""
        rows = [[Fraction(x).limit_denominator(10**9) for x in row] for row in cost]
        denom = 1
        for row in rows:
            for x in row:
                denom = denom * x.denominator // _gcd(denom, x.denominator)
        scaled = [[int(x * denom) for x in row] for row in rows]
        return cls(scaled)

    def c(self, u: int, v: int) -> int:
        return int(self.cost[u, v])

    def cost_row(self, u: int) -> np.ndarray:
        return self.cost[u]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MetricInstance)
            and self.n == other.n
            and np.array_equal(self.cost, other.cost)
        )

    def __repr__(self) -> str:
        return f"MetricInstance(n={self.n})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class GraphInstance:
    """Graph TSP instance: metric given by hop distances in a connected graph."""

    __slots__ = ("graph", "n", "cost")

    def __init__(self, graph: SimpleGraph):
        if not graph.is_connected():
            raise ValueError("graph must be connected")
        self.graph = graph
        self.n = graph.n
        mat = np.empty((graph.n, graph.n), dtype=np.int64)
        for s in range(graph.n):
            mat[s] = graph.bfs_distances(s)
        mat.setflags(write=False)
        self.cost = mat

    def c(self, u: int, v: int) -> int:
        return int(self.cost[u, v])

    def cost_row(self, u: int) -> np.ndarray:
        return self.cost[u]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphInstance) and self.graph == other.graph

    def __repr__(self) -> str:
        return f"GraphInstance(n={self.n})"


class OneTwoInstance:
    """(1,2)-TSP instance: a sparse set of unit edges, every other pair costs 2."""

    __slots__ = ("n", "unit_adj")

    def __init__(self, n: int, unit_edges):
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in unit_edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"unit edge ({u},{v}) out of range")
            adj[u].add(v)
            adj[v].add(u)
        self.unit_adj = tuple(frozenset(s) for s in adj)

    def unit_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.unit_adj[u]) if u < v]

    def num_unit_edges(self) -> int:
        return sum(len(s) for s in self.unit_adj) // 2

    def c(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return 1 if v in self.unit_adj[u] else 2

    def cost_row(self, u: int) -> np.ndarray:
        row = np.full(self.n, 2, dtype=np.int64)
        if self.unit_adj[u]:
            row[list(self.unit_adj[u])] = 1
        row[u] = 0
        return row

    def unit_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.unit_edges())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OneTwoInstance)
            and self.n == other.n
            and self.unit_adj == other.unit_adj
        )

    def __repr__(self) -> str:
        return f"OneTwoInstance(n={self.n}, unit={self.num_unit_edges()})"


Instance = MetricInstance | GraphInstance | OneTwoInstance


def validate_metric(matrix) -> list[tuple[int, int, int]]:
    """Check a symmetric non-negative matrix for triangle-inequality violations.

    Returns the empty list iff the matrix is a metric, otherwise every
    violating triple (x, z, y) with c(x,z) + c(z,y) < c(x,y). Asymmetry,
    negative entries and nonzero diagonals raise ValueError instead of being
    reported as triples.
    """
    mat = np.asarray(matrix, dtype=np.int64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("matrix must be square")
    if np.any(mat < 0):
        raise ValueError("matrix has negative entries")
    if np.any(np.diagonal(mat) != 0):
        raise ValueError("matrix has nonzero diagonal")
    if not np.array_equal(mat, mat.T):
        raise ValueError("matrix is not symmetric")
    n = mat.shape[0]
    violations = []
    for x in range(n):
        for z in range(n):
            if z == x:
                continue
            # vector over y: c(x,z) + c(z,y) < c(x,y)
            bad = np.nonzero(mat[x, z] + mat[z] < mat[x])[0]
            for y in bad:
                if y != x and y != z:
                    violations.append((x, z, int(y)))
    return violations


def graph_metric(graph: SimpleGraph) -> GraphInstance:
    """All-pairs hop distances of a connected graph, as a TSP instance."""
    return GraphInstance(graph)


def duplicate_vertex(instance: MetricInstance, v: int) -> MetricInstance:
    """Append a zero-distance copy of vertex v.

    The copy v' gets c(v,v') = 0 and c(v',w) = c(v,w) for all w; the result
    is again a metric.
    """
    if not (0 <= v < instance.n):
        raise ValueError(f"vertex {v} out of range")
    n = instance.n
    mat = np.zeros((n + 1, n + 1), dtype=np.int64)
    mat[:n, :n] = instance.cost
    mat[n, :n] = instance.cost[v]
    mat[:n, n] = instance.cost[v]
    mat[n, v] = 0
    mat[v, n] = 0
    mat[n, n] = 0
    return MetricInstance(mat)

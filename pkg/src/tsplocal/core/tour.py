"""Tours: cyclic vertex permutations with a fixed orientation."""

from __future__ import annotations

from .instance import Instance


class Tour:
    """A cyclic permutation of 0..n-1, read with a fixed orientation.

    The edge multiset is {(order[i], order[i+1 mod n])}. Tours are immutable.
    """

    __slots__ = ("order",)

    def __init__(self, order):
        seq = tuple(int(v) for v in order)
        n = len(seq)
        if sorted(seq) != list(range(n)):
            raise ValueError("tour must be a permutation of 0..n-1")
        self.order = seq

    @property
    def n(self) -> int:
        return len(self.order)

    def edges(self) -> list[tuple[int, int]]:
        """Oriented edges (tail, head) along the cycle."""
        o = self.order
        n = len(o)
        return [(o[i], o[(i + 1) % n]) for i in range(n)]

    def edge_set(self) -> frozenset[frozenset[int]]:
        o = self.order
        n = len(o)
        return frozenset(frozenset((o[i], o[(i + 1) % n])) for i in range(n))

    def successor(self) -> dict[int, int]:
        o = self.order
        n = len(o)
        return {o[i]: o[(i + 1) % n] for i in range(n)}

    def canonical(self) -> "Tour":
        """Rotate so order[0] == 0 and orient so order[1] < order[-1]."""
        o = list(self.order)
        n = len(o)
        if n == 0:
            return Tour(())
        i = o.index(0)
        o = o[i:] + o[:i]
        if n > 2 and o[1] > o[-1]:
            o = [o[0]] + o[:0:-1]
        return Tour(o)

    def same_cycle(self, other: "Tour") -> bool:
        return self.canonical().order == other.canonical().order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tour) and self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"Tour({list(self.order)})"


def tour_cost(instance: Instance, tour: Tour) -> int:
    """Sum of edge costs along the cycle."""
    if tour.n != instance.n:
        raise ValueError(
            f"tour has {tour.n} vertices but instance has {instance.n}"
        )
    o = tour.order
    n = len(o)
    return sum(instance.c(o[i], o[(i + 1) % n]) for i in range(n))


def tour_from_edge_set(edges, n: int) -> Tour:
    """Rebuild a Tour from an n-edge set forming a single Hamiltonian cycle.

    Deterministic orientation: start at vertex 0 and move toward its
    smaller-id neighbor.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    count = 0
    for e in edges:
        u, v = tuple(e)
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if count != n or any(len(a) != 2 for a in adj.values()):
        raise ValueError("edge set is not a union of cycles covering 0..n-1")
    order = [0]
    prev = -1
    cur = 0
    nxt = min(adj[0])
    while nxt != 0:
        order.append(nxt)
        prev, cur = cur, nxt
        a, b = adj[cur]
        nxt = b if a == prev else a
    if len(order) != n:
        raise ValueError("edge set is not a single Hamiltonian cycle")
    return Tour(order)

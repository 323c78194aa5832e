"""k-moves: exhaustive improving-move search and the local search loop."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core.instance import Instance
from ..core.tour import Tour, tour_cost, tour_from_edge_set

UEdge = frozenset[int]


@dataclass(frozen=True)
class KMove:
    """Replace `removed` tour edges by `added` edges; delta is the cost change.

    Applying a move to its source tour yields a valid tour whose cost differs
    by exactly delta = cost(added) - cost(removed).
    """

    removed: frozenset[UEdge]
    added: frozenset[UEdge]
    delta: int

    def size(self) -> int:
        return len(self.removed)


def apply_kmove(instance: Instance, tour: Tour, move: KMove) -> Tour:
    """Apply the move, re-deriving and checking cost from scratch."""
    edges = set(tour.edge_set())
    if not move.removed <= edges:
        raise ValueError("move removes edges not on the tour")
    if move.added & edges:
        raise ValueError("move adds edges already on the tour")
    edges -= move.removed
    edges |= move.added
    new_tour = tour_from_edge_set(edges, tour.n)
    if tour_cost(instance, new_tour) - tour_cost(instance, tour) != move.delta:
        raise ValueError("move delta does not match re-evaluated costs")
    return new_tour


def _reconnections(paths: list[tuple[int, int]]):
    """All perfect matchings on path endpoints that close a single cycle.

    Each path contributes two ports (its endpoints; equal for singleton
    paths). Matchings are enumerated deterministically; single-cycle closure
    is detected by union-find over the paths, rejecting self-loops and
    parallel added edges.
    """
    j = len(paths)
    ports = []  # (vertex, path_id)
    for pid, (a, b) in enumerate(paths):
        ports.append((a, pid))
        ports.append((b, pid))

    def matchings(free: list[int]):
        if not free:
            yield []
            return
        first = free[0]
        for idx in range(1, len(free)):
            other = free[idx]
            rest = free[1:idx] + free[idx + 1 :]
            for tail in matchings(rest):
                yield [(first, other)] + tail

    for pairing in matchings(list(range(2 * j))):
        ufparent = list(range(j))

        def find(x: int) -> int:
            while ufparent[x] != x:
                ufparent[x] = ufparent[ufparent[x]]
                x = ufparent[x]
            return x

        added = []
        ok = True
        merges = 0
        for pa, pb in pairing:
            va, ia = ports[pa]
            vb, ib = ports[pb]
            if va == vb:
                ok = False
                break
            added.append(frozenset((va, vb)))
            ra, rb = find(ia), find(ib)
            if ra != rb:
                ufparent[ra] = rb
                merges += 1
        if not ok or merges != j - 1:
            continue
        if len(set(added)) != j:
            continue  # parallel added edges
        yield added


def _paths_after_removal(tour: Tour, removed_idx: tuple[int, ...]) -> list[tuple[int, int]]:
    """Endpoints (start, end) of the tour paths left by removing edges at the
    given positions, in tour order starting after the first removed edge."""
    o = tour.order
    n = len(o)
    paths = []
    for a, b in zip(removed_idx, removed_idx[1:] + (removed_idx[0] + n,)):
        # path runs from position a+1 to position b (inclusive)
        paths.append((o[(a + 1) % n], o[b % n]))
    return paths


def find_improving_kmove(instance: Instance, tour: Tour, k: int) -> KMove | None:
    """First improving move replacing at most k tour edges, or None.

    Deterministic scan: move size ascending, then removed-edge index tuples in
    lexicographic order, then reconnection patterns in enumeration order. The
    returned move strictly decreases the tour cost.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    n = tour.n
    if n < 4:
        return None
    o = tour.order
    edge_cost = [instance.c(o[i], o[(i + 1) % n]) for i in range(n)]
    tour_edges = tour.edge_set()
    for j in range(2, k + 1):
        if j > n:
            break
        for removed_idx in combinations(range(n), j):
            removed = [
                frozenset((o[i], o[(i + 1) % n])) for i in removed_idx
            ]
            removed_cost = sum(edge_cost[i] for i in removed_idx)
            paths = _paths_after_removal(tour, removed_idx)
            for added in _reconnections(paths):
                added_cost = sum(
                    instance.c(*sorted(e)) for e in added
                )
                if added_cost >= removed_cost:
                    continue
                removed_set = frozenset(removed)
                added_set = frozenset(added)
                overlap = removed_set & added_set
                move = KMove(
                    removed=removed_set - overlap,
                    added=added_set - overlap,
                    delta=added_cost - removed_cost,
                )
                if not move.removed:
                    continue
                if move.added & tour_edges:
                    continue  # re-adds a surviving tour edge: not a tour
                return move
    return None


def k_opt(instance: Instance, tour: Tour, k: int) -> Tour:
    """Iterate improving k-moves to a fixed point.

    Every applied move strictly decreases the (integer) cost, so the loop
    terminates.
    """
    current = tour
    cost = tour_cost(instance, current)
    while True:
        move = find_improving_kmove(instance, current, k)
        if move is None:
            return current
        current = apply_kmove(instance, current, move)
        new_cost = tour_cost(instance, current)
        if new_cost >= cost:
            raise AssertionError("k-move failed to decrease cost")
        cost = new_cost

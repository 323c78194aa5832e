"""Exact baselines: Held-Karp optimum and the double-tree witness tour."""

from __future__ import annotations

import numpy as np

from ..core.instance import GraphInstance, Instance
from ..core.tour import Tour, tour_cost

HELD_KARP_LIMIT = 18


def held_karp(instance: Instance) -> tuple[Tour, int]:
    """Provably optimal tour by subset dynamic programming, n <= 18."""
    n = instance.n
    if n > HELD_KARP_LIMIT:
        raise ValueError(f"n={n} exceeds the Held-Karp limit {HELD_KARP_LIMIT}")
    if n < 3:
        raise ValueError("need at least 3 vertices")
    cost = np.empty((n, n), dtype=np.int64)
    for u in range(n):
        cost[u] = instance.cost_row(u)

    m = n - 1  # vertices 1..n-1 encoded in the mask
    size = 1 << m
    INF = np.int64(2**62)
    dp = np.full((size, m), INF, dtype=np.int64)
    parent = np.full((size, m), -1, dtype=np.int32)
    for j in range(m):
        dp[1 << j, j] = cost[0, j + 1]
    masks_by_popcount: list[list[int]] = [[] for _ in range(m + 1)]
    for mask in range(1, size):
        masks_by_popcount[bin(mask).count("1")].append(mask)
    for pc in range(2, m + 1):
        for mask in masks_by_popcount[pc]:
            members = [j for j in range(m) if mask >> j & 1]
            for j in members:
                pm = mask ^ (1 << j)
                prev = dp[pm]
                cand = prev + cost[1:, j + 1]
                # exclude vertices not in pm (their dp is INF anyway)
                best = int(np.argmin(cand))
                dp[mask, j] = cand[best]
                parent[mask, j] = best
    full = size - 1
    closing = dp[full] + cost[1:n, 0]
    last = int(np.argmin(closing))
    best_cost = int(closing[last])
    order = [0]
    mask, j = full, last
    chain = []
    while j >= 0:
        chain.append(j + 1)
        mask, j = mask ^ (1 << j), int(parent[mask, j])
    order.extend(reversed(chain))
    tour = Tour(order)
    if tour_cost(instance, tour) != best_cost:
        raise AssertionError("Held-Karp reconstruction mismatch")
    return tour, best_cost


def minimum_spanning_tree(instance: Instance) -> list[tuple[int, int]]:
    """Prim's algorithm over the full metric, deterministic tie-breaks."""
    n = instance.n
    in_tree = [False] * n
    in_tree[0] = True
    best = np.array(instance.cost_row(0), dtype=np.int64, copy=True)
    best_from = np.zeros(n, dtype=np.int64)
    edges: list[tuple[int, int]] = []
    for _ in range(n - 1):
        pick, pick_cost = -1, None
        for v in range(n):
            if not in_tree[v] and (pick_cost is None or best[v] < pick_cost):
                pick, pick_cost = v, best[v]
        edges.append((int(best_from[pick]), pick))
        in_tree[pick] = True
        row = instance.cost_row(pick)
        for v in range(n):
            if not in_tree[v] and row[v] < best[v]:
                best[v] = row[v]
                best_from[v] = pick
    return edges


def double_tree_bound(instance: Instance) -> Tour:
    """MST doubled, Euler walk, shortcut: a tour of cost <= 2 * MST.

    For a GraphInstance the MST uses unit edges only, so the witness costs at
    most 2(n-1).
    """
    n = instance.n
    if n == 1:
        return Tour([0])
    mst = minimum_spanning_tree(instance)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in mst:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    # DFS preorder of the tree = shortcut Euler walk of the doubled tree
    order = []
    seen = [False] * n
    stack = [0]
    while stack:
        u = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        order.append(u)
        for w in reversed(adj[u]):
            if not seen[w]:
                stack.append(w)
    tour = Tour(order)
    mst_cost = sum(instance.c(u, v) for u, v in mst)
    if tour_cost(instance, tour) > 2 * mst_cost:
        raise AssertionError("double-tree shortcut exceeded twice the MST")
    if isinstance(instance, GraphInstance):
        assert tour_cost(instance, tour) <= 2 * (n - 1)
    return tour

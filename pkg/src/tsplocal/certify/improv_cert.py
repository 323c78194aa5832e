"""Independent k-improv-optimality certification.

Flat enumeration over all (deletions, additions) subsets with total size at
most k, as opposed to the pruned DFS in localsearch. Deletion-only moves are
provably never improving (deleting cannot reduce components, cannot add
cycles at equal components, and cannot remove singletons), so every move
needs at least one addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core.instance import OneTwoInstance
from ..localsearch.improv import (
    IMPROV_K_CAP,
    ImprovMove,
    TwoMatching,
    apply_improv_move,
    count_structure,
)
from .kopt_cert import BudgetExceededError


@dataclass(frozen=True)
class ImprovCertificate:
    certified: bool
    k: int
    searched: int
    counterexample: ImprovMove | None = None


def verify_k_improv_optimal(
    instance: OneTwoInstance,
    tm: TwoMatching,
    k: int,
    budget: int | None = 50_000_000,
) -> ImprovCertificate:
    """Exhaustive confirmation that no improving k-improv-move exists."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > IMPROV_K_CAP:
        raise ValueError(f"k={k} exceeds the supported cap {IMPROV_K_CAP}")
    base_key = tm.key()
    current = sorted(tm.edges, key=sorted)
    candidates = [
        frozenset((u, v))
        for u in range(instance.n)
        for v in sorted(instance.unit_adj[u])
        if u < v and frozenset((u, v)) not in tm.edges
    ]
    degree = [0] * instance.n
    for e in tm.edges:
        for v in e:
            degree[v] += 1
    searched = 0
    for num_add in range(1, k + 1):
        max_del = k - num_add
        for adds in combinations(candidates, num_add):
            excess: dict[int, int] = {}
            for e in adds:
                for v in e:
                    d = degree[v] + sum(1 for e2 in adds if v in e2)
                    if d > 2:
                        excess[v] = d - 2
            # each deletion lowers one vertex degree by at most 1
            if excess and max(excess.values()) > max_del:
                searched += 1
                continue
            for num_del in range(0, max_del + 1):
                for dels in combinations(current, num_del):
                    searched += 1
                    if budget is not None and searched > budget:
                        raise BudgetExceededError(
                            f"improv budget {budget} exceeded"
                        )
                    if not _fixes_excess(excess, dels):
                        continue
                    edges = (tm.edges - frozenset(dels)) | frozenset(adds)
                    key = count_structure(instance.n, edges)
                    if (key[0], -key[1], key[2]) < base_key:
                        move = ImprovMove(frozenset(dels), frozenset(adds))
                        apply_improv_move(instance, tm, move)  # re-validate
                        return ImprovCertificate(False, k, searched, move)
    return ImprovCertificate(True, k, searched)


def _fixes_excess(excess: dict[int, int], dels) -> bool:
    if not excess:
        return True
    remaining = dict(excess)
    for e in dels:
        for v in e:
            if v in remaining:
                remaining[v] -= 1
                if remaining[v] == 0:
                    del remaining[v]
    return not remaining

"""Alternating walks: the Lin-Kernighan move primitive and its gain."""

from __future__ import annotations

from dataclasses import dataclass

from ..core.instance import Instance
from ..core.tour import Tour


@dataclass(frozen=True)
class AlternatingWalk:
    """Vertex sequence x0..x_{2m} whose edges alternate tour / non-tour.

    Odd-position edges (x_{2i}, x_{2i+1}) lie on the reference tour, the
    following edge (x_{2i+1}, x_{2i+2}) does not.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) % 2 == 0:
            raise ValueError("alternating walk needs an even edge count, "
                             "i.e. an odd number of vertex entries")

    def num_edges(self) -> int:
        return len(self.vertices) - 1


def validate_alternating(tour: Tour, vertices) -> None:
    """Raise unless edge t is a tour edge exactly for odd t (1-based)."""
    edges = tour.edge_set()
    seq = tuple(vertices)
    for t in range(1, len(seq)):
        e = frozenset((seq[t - 1], seq[t]))
        if len(e) == 1:
            raise ValueError(f"degenerate step at position {t}")
        on_tour = e in edges
        if t % 2 == 1 and not on_tour:
            raise ValueError(f"edge {t} must be a tour edge")
        if t % 2 == 0 and on_tour:
            raise ValueError(f"edge {t} must not be a tour edge")


def gain(instance: Instance, walk, tour: Tour | None = None) -> int:
    """Signed gain: tour-edge costs minus non-tour-edge costs along the walk.

    If `tour` is given the alternation pattern is validated first.
    """
    seq = tuple(walk.vertices) if isinstance(walk, AlternatingWalk) else tuple(walk)
    if tour is not None:
        validate_alternating(tour, seq)
    total = 0
    for t in range(1, len(seq)):
        c = instance.c(seq[t - 1], seq[t])
        total += c if t % 2 == 1 else -c
    return total


def is_proper(instance: Instance, walk, tour: Tour | None = None) -> bool:
    """True iff every even prefix (x0..x_{2i}), i >= 1, has strictly positive gain."""
    seq = tuple(walk.vertices) if isinstance(walk, AlternatingWalk) else tuple(walk)
    if tour is not None:
        validate_alternating(tour, seq)
    total = 0
    for t in range(1, len(seq)):
        c = instance.c(seq[t - 1], seq[t])
        total += c if t % 2 == 1 else -c
        if t % 2 == 0 and total <= 0:
            return False
    return True

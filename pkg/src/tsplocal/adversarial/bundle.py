"""Construction bundles: instance + engineered tour + witness tour."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from ..core.instance import GraphInstance, Instance, MetricInstance, OneTwoInstance
from ..core.io import read_instance, read_tour, write_instance, write_tour
from ..core.tour import Tour, tour_cost


@dataclass(frozen=True)
class ConstructionBundle:
    """An adversarial instance with its engineered locally-optimal tour and a
    cheap witness tour bounding the optimum from above."""

    instance: Instance
    engineered_tour: Tour
    witness_tour: Tour
    params: dict = field(default_factory=dict)
    provenance: str = ""

    def __post_init__(self):
        for t in (self.engineered_tour, self.witness_tour):
            if t.n != self.instance.n:
                raise ValueError("bundle tour does not fit the instance")

    def engineered_cost(self) -> int:
        return tour_cost(self.instance, self.engineered_tour)

    def witness_cost(self) -> int:
        return tour_cost(self.instance, self.witness_tour)

    def ratio_floor(self) -> Fraction:
        """Exact lower bound on the local-search approximation ratio."""
        return Fraction(self.engineered_cost(), self.witness_cost())


_FORMAT_BY_TYPE = {
    MetricInstance: "full-matrix",
    GraphInstance: "edge-list",
    OneTwoInstance: "unit-edge-list",
}


def write_bundle(bundle: ConstructionBundle, directory: str) -> None:
    """Serialize as a directory: instance, two tours, params manifest."""
    os.makedirs(directory, exist_ok=True)
    fmt = _FORMAT_BY_TYPE[type(bundle.instance)]
    with open(os.path.join(directory, "instance." + fmt.replace("-", "_")), "wb") as fh:
        fh.write(write_instance(bundle.instance, fmt))
    with open(os.path.join(directory, "engineered.tour"), "wb") as fh:
        fh.write(write_tour(bundle.engineered_tour))
    with open(os.path.join(directory, "witness.tour"), "wb") as fh:
        fh.write(write_tour(bundle.witness_tour))
    lines = [f"format={fmt}"]
    for key in sorted(bundle.params):
        lines.append(f"{key}={bundle.params[key]}")
    if bundle.provenance:
        lines.append(f"provenance={bundle.provenance}")
    with open(os.path.join(directory, "params.txt"), "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_bundle(directory: str) -> ConstructionBundle:
    with open(os.path.join(directory, "params.txt"), "r", encoding="ascii") as fh:
        manifest = dict(
            line.split("=", 1) for line in fh.read().splitlines() if line
        )
    fmt = manifest.pop("format")
    provenance = manifest.pop("provenance", "")
    with open(os.path.join(directory, "instance." + fmt.replace("-", "_")), "rb") as fh:
        instance = read_instance(fh.read(), fmt)
    with open(os.path.join(directory, "engineered.tour"), "rb") as fh:
        engineered = read_tour(fh.read())
    with open(os.path.join(directory, "witness.tour"), "rb") as fh:
        witness = read_tour(fh.read())
    return ConstructionBundle(instance, engineered, witness, manifest, provenance)

from .bundle import ConstructionBundle, read_bundle, write_bundle
from .gadget import COLOR_SLOTS, GADGET_EDGES, Gadget, gadget_S
from .graphtsp import build_graph_tsp_lower, extend_graph_tsp
from .onetwo import EXTRA_UNIT_LINKS, build_12tsp_lower

__all__ = [
    "COLOR_SLOTS",
    "ConstructionBundle",
    "EXTRA_UNIT_LINKS",
    "GADGET_EDGES",
    "Gadget",
    "build_12tsp_lower",
    "build_graph_tsp_lower",
    "extend_graph_tsp",
    "gadget_S",
    "read_bundle",
    "write_bundle",
]

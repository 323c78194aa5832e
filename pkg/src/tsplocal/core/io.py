"""Instance and tour file IO.

Formats:
  * ``full-matrix``    TSPLIB-compatible subset (TYPE TSP, EDGE_WEIGHT_TYPE
                       EXPLICIT, EDGE_WEIGHT_FORMAT FULL_MATRIX), integers.
  * ``edge-list``      first line "n m", then m lines "u v" (0-indexed);
                       parses to a GraphInstance.
  * ``unit-edge-list`` same layout, edges are the unit-cost pairs of a
                       OneTwoInstance.
  * tours              TSPLIB .tour style: TOUR_SECTION, one (1-indexed)
                       vertex per line, -1 terminator.

Round trip: read(write(x)) == x with tours in canonical form.
"""

from __future__ import annotations

import numpy as np

from ..core_formats import (
    EdgeListParseError as ParseError,
    read_edge_list_text,
    tokens_with_columns as _tokens_with_columns,
    write_edge_list_text,
)
from ..extremal.graph import SimpleGraph
from .instance import GraphInstance, Instance, MetricInstance, OneTwoInstance
from .tour import Tour

FORMATS = ("full-matrix", "edge-list", "unit-edge-list")


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        return data.decode("ascii")
    return data


# -- full matrix (TSPLIB subset) ------------------------------------------


def _write_full_matrix(instance: MetricInstance) -> bytes:
    lines = [
        "NAME : instance",
        "TYPE : TSP",
        f"DIMENSION : {instance.n}",
        "EDGE_WEIGHT_TYPE : EXPLICIT",
        "EDGE_WEIGHT_FORMAT : FULL_MATRIX",
        "EDGE_WEIGHT_SECTION",
    ]
    for row in instance.cost:
        lines.append(" ".join(str(int(x)) for x in row))
    lines.append("EOF")
    return ("\n".join(lines) + "\n").encode("ascii")


def _read_full_matrix(text: str) -> MetricInstance:
    dimension = None
    weights: list[int] = []
    in_section = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "EOF":
            continue
        if in_section:
            for col, tok in _tokens_with_columns(raw):
                try:
                    weights.append(int(tok))
                except ValueError:
                    raise ParseError(f"bad weight {tok!r}", lineno, col) from None
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            key = key.strip().upper()
            value = value.strip()
            if key == "DIMENSION":
                try:
                    dimension = int(value)
                except ValueError:
                    raise ParseError(f"bad DIMENSION {value!r}", lineno) from None
            elif key == "TYPE" and value.upper() != "TSP":
                raise ParseError(f"unsupported TYPE {value!r}", lineno)
            elif key == "EDGE_WEIGHT_TYPE" and value.upper() != "EXPLICIT":
                raise ParseError(f"unsupported EDGE_WEIGHT_TYPE {value!r}", lineno)
            elif key == "EDGE_WEIGHT_FORMAT" and value.upper() != "FULL_MATRIX":
                raise ParseError(f"unsupported EDGE_WEIGHT_FORMAT {value!r}", lineno)
        elif line == "EDGE_WEIGHT_SECTION":
            if dimension is None:
                raise ParseError("EDGE_WEIGHT_SECTION before DIMENSION", lineno)
            in_section = True
        else:
            raise ParseError(f"unexpected line {line!r}", lineno)
    if dimension is None:
        raise ParseError("missing DIMENSION", 1)
    if len(weights) != dimension * dimension:
        raise ParseError(
            f"expected {dimension * dimension} weights, got {len(weights)}", 1
        )
    mat = np.array(weights, dtype=np.int64).reshape(dimension, dimension)
    if not np.array_equal(mat, mat.T):
        raise ParseError("matrix is not symmetric", 1)
    return MetricInstance(mat)


# -- edge lists ------------------------------------------------------------


def _write_edge_list(n: int, edges: list[tuple[int, int]]) -> bytes:
    return write_edge_list_text(n, edges).encode("ascii")


def _read_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    return read_edge_list_text(text)


def write_graph(graph: SimpleGraph) -> bytes:
    return _write_edge_list(graph.n, graph.edges())


def read_graph(data: bytes | str) -> SimpleGraph:
    n, edges = _read_edge_list(_decode(data))
    return SimpleGraph(n, edges)


# -- public instance API ----------------------------------------------------


def write_instance(instance: Instance, format: str) -> bytes:
    if format == "full-matrix":
        if not isinstance(instance, MetricInstance):
            raise ValueError("full-matrix format requires a MetricInstance")
        return _write_full_matrix(instance)
    if format == "edge-list":
        if not isinstance(instance, GraphInstance):
            raise ValueError("edge-list format requires a GraphInstance")
        return _write_edge_list(instance.graph.n, instance.graph.edges())
    if format == "unit-edge-list":
        if not isinstance(instance, OneTwoInstance):
            raise ValueError("unit-edge-list format requires a OneTwoInstance")
        return _write_edge_list(instance.n, instance.unit_edges())
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def read_instance(data: bytes | str, format: str) -> Instance:
    text = _decode(data)
    if format == "full-matrix":
        return _read_full_matrix(text)
    if format == "edge-list":
        n, edges = _read_edge_list(text)
        return GraphInstance(SimpleGraph(n, edges))
    if format == "unit-edge-list":
        n, edges = _read_edge_list(text)
        return OneTwoInstance(n, edges)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


# -- tours ------------------------------------------------------------------


def write_tour(tour: Tour) -> bytes:
    """Serialize in canonical form, TSPLIB style (1-indexed, -1 terminator)."""
    canon = tour.canonical()
    lines = [
        "NAME : tour",
        "TYPE : TOUR",
        f"DIMENSION : {canon.n}",
        "TOUR_SECTION",
    ]
    lines.extend(str(v + 1) for v in canon.order)
    lines.append("-1")
    lines.append("EOF")
    return ("\n".join(lines) + "\n").encode("ascii")


def read_tour(data: bytes | str) -> Tour:
    order = []
    in_section = False
    done = False
    for lineno, raw in enumerate(_decode(data).splitlines(), start=1):
        line = raw.strip()
        if not line or line == "EOF":
            continue
        if line == "TOUR_SECTION":
            in_section = True
            continue
        if not in_section:
            continue
        if done:
            raise ParseError("content after -1 terminator", lineno)
        for col, tok in _tokens_with_columns(raw):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad vertex {tok!r}", lineno, col) from None
            if v == -1:
                done = True
                break
            order.append(v - 1)
    if not done:
        raise ParseError("missing -1 terminator", 1)
    return Tour(order)

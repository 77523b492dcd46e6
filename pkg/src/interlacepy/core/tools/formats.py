"""Parser for the text input formats.

Every format is UTF-8, whitespace separated, with ``#`` comments and a
header line naming the kind of object and its number of vertices (or ground
elements). Vertices are numbered ``0 .. n-1`` and become the labels
``"0" .. "n-1"``.

example::

    # K2
    graph 2
    e 0 1

    # one vertex with two loops, arcs 0 -> 0 twice
    digraph4 1
    a 0 0
    a 0 0

    # a triangle drawn in the plane
    plane 3
    e 0 0 1
    e 1 1 2
    e 2 2 0
    rot 0 0:0 2:1
    rot 1 1:0 0:1
    rot 2 2:0 1:1

    setsystem 3
    f 0 1 2
    f
"""

from __future__ import annotations

import regex

from ...errors import FormatParseError
from ..delta.set_system import SetSystem
from ..eulerian.hosts import FourRegularGraph, TwoInTwoOutDigraph
from ..graphs.graph import Graph
from ..plane.plane_graph import PlaneGraph

KINDS = ("graph", "digraph4", "graph4", "plane", "setsystem")

HEADER = regex.compile(r"^(?P<kind>[a-z0-9]+)\s+(?P<n>\d+)$")
PAIR = regex.compile(r"^(?P<tag>[ea])\s+(?P<u>\d+)\s+(?P<v>\d+)$")
PLANE_EDGE = regex.compile(r"^e\s+(?P<id>\d+)\s+(?P<u>\d+)\s+(?P<v>\d+)$")
ROTATION = regex.compile(r"^rot\s+(?P<v>\d+)(?:\s+(?P<end>\d+:[01]))*$")
FEASIBLE = regex.compile(r"^f(?:\s+(?P<element>\d+))*$")


def _content_lines(text: str):
    """``(line_number, content)`` of the lines left after removing comments."""
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if content:
            yield number, content


def _vertex(value: str, n: int, number: int) -> str:
    if int(value) >= n:
        raise FormatParseError(f"vertex {value} out of range 0..{n - 1}", number)
    return str(int(value))


def _pairs(lines, tag: str, n: int) -> list:
    pairs = []
    for number, content in lines:
        match = PAIR.match(content)
        if match is None or match["tag"] != tag:
            raise FormatParseError(f"expected '{tag} u v', got {content!r}", number)
        pairs.append((_vertex(match["u"], n, number), _vertex(match["v"], n, number)))
    return pairs


def _labels(n: int) -> list:
    return [str(i) for i in range(n)]


def _parse_graph(lines, n: int) -> Graph:
    return Graph.from_edges(_labels(n), _pairs(lines, "e", n))


def _parse_graph4(lines, n: int) -> FourRegularGraph:
    return FourRegularGraph.from_edges(_labels(n), _pairs(lines, "e", n))


def _parse_digraph4(lines, n: int) -> TwoInTwoOutDigraph:
    return TwoInTwoOutDigraph.from_edges(_labels(n), _pairs(lines, "a", n))


def _parse_plane(lines, n: int) -> PlaneGraph:
    edges: dict = {}
    rotations: dict = {}
    for number, content in lines:
        match = PLANE_EDGE.match(content)
        if match is not None:
            edge_id = int(match["id"])
            if edge_id in edges:
                raise FormatParseError(f"edge {edge_id} defined twice", number)
            edges[edge_id] = (_vertex(match["u"], n, number), _vertex(match["v"], n, number))
            continue
        match = ROTATION.match(content)
        if match is None:
            raise FormatParseError(f"expected 'e id u v' or 'rot v id:end ...', got {content!r}", number)
        vertex = _vertex(match["v"], n, number)
        if vertex in rotations:
            raise FormatParseError(f"rotation at {vertex} given twice", number)
        ends = []
        for end in match.captures("end"):
            edge_id, side = end.split(":")
            if int(edge_id) not in edges:
                raise FormatParseError(f"rotation names undefined edge {edge_id}", number)
            ends.append((int(edge_id), int(side)))
        rotations[vertex] = ends
    return PlaneGraph.from_rotations(_labels(n), edges, rotations)


def _parse_setsystem(lines, n: int) -> SetSystem:
    sets = []
    for number, content in lines:
        match = FEASIBLE.match(content)
        if match is None:
            raise FormatParseError(f"expected 'f <elements...>', got {content!r}", number)
        members = [_vertex(e, n, number) for e in match.captures("element")]
        if len(set(members)) != len(members):
            raise FormatParseError("repeated element in a feasible set", number)
        sets.append(members)
    return SetSystem.from_sets(_labels(n), sets)


PARSERS = {
    "graph": _parse_graph,
    "graph4": _parse_graph4,
    "digraph4": _parse_digraph4,
    "plane": _parse_plane,
    "setsystem": _parse_setsystem,
}


def parse_text(text: str, expected=None) -> tuple:
    """Parse one object.

    :param text: file content
    :param expected: kind or tuple of kinds the caller accepts
    :return: ``(kind, object)``
    :raise FormatParseError: with the number of the offending line
    """
    lines = list(_content_lines(text))
    if not lines:
        raise FormatParseError("empty input")
    number, header = lines[0]
    match = HEADER.match(header)
    if match is None or match["kind"] not in PARSERS:
        raise FormatParseError(f"expected a header '<{'|'.join(KINDS)}> <n>', got {header!r}", number)
    kind = match["kind"]
    if expected is not None:
        accepted = (expected,) if isinstance(expected, str) else tuple(expected)
        if kind not in accepted:
            raise FormatParseError(f"expected {' or '.join(accepted)} input, got {kind}", number)
    return kind, PARSERS[kind](lines[1:], int(match["n"]))


def parse_file(path: str, expected=None) -> tuple:
    with open(path, encoding="utf-8") as input_file:
        return parse_text(input_file.read(), expected)

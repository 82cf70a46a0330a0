"""The edge-labeled directed graph A(n) of hyperbinary expansions.

Vertices are the expansions in H(n) (shortlex-sorted, ids are positions in
that order); arcs are the single-step reductions among them, labeled
SINGLE (->) or DOUBLE (->>).  A completed graph is immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .words import (
    binary_expansion,
    minimal_expansion,
    render,
    shortlex_key,
    validate_expansion,
)

DEFAULT_LIMIT = 10**6


class SizeLimitError(Exception):
    """Raised when H(n) would exceed the requested vertex limit."""


class Label:
    SINGLE = "single"  # ->   patterns x02y -> x10y and 2y -> 10y
    DOUBLE = "double"  # ->>  pattern  x12y -> x20y

    ALL = (SINGLE, DOUBLE)


#: one-letter codes used in DOT output
_DOT_LABEL = {Label.SINGLE: "s", Label.DOUBLE: "d"}


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    label: str
    position: int  # zero-based index of the leftmost digit modified in the tail


def single_step_reductions(w: str) -> list[tuple[str, str, int]]:
    """All children of ``w`` under one reduction, as (child, label, position).

    Ordered by ascending position.  The leading ``2y -> 10y`` rule (the only
    one that lengthens the word) is assigned position 0.
    """
    validate_expansion(w)
    out: list[tuple[str, str, int]] = []
    if w.startswith("2"):
        out.append(("10" + w[1:], Label.SINGLE, 0))
    for i in range(len(w) - 1):
        pair = w[i : i + 2]
        if pair == "02":
            out.append((w[:i] + "10" + w[i + 2 :], Label.SINGLE, i))
        elif pair == "12":
            out.append((w[:i] + "20" + w[i + 2 :], Label.DOUBLE, i))
    out.sort(key=lambda c: c[2])
    return out


def enumerate_expansions(n: int, limit: int = DEFAULT_LIMIT) -> list[str]:
    """H(n) in shortlex order, as the reduction closure of the minimal expansion."""
    seen = {minimal_expansion(n)}
    frontier = list(seen)
    while frontier:
        w = frontier.pop()
        for child, _, _ in single_step_reductions(w):
            if child not in seen:
                if len(seen) >= limit:
                    raise SizeLimitError(f"|H({n})| exceeds limit {limit}")
                seen.add(child)
                frontier.append(child)
    return sorted(seen, key=shortlex_key)


@dataclass(frozen=True)
class HbGraph:
    n: int
    vertices: tuple[str, ...]
    arcs: tuple[Arc, ...]
    source: int
    sink: int

    @cached_property
    def index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.vertices)}

    @cached_property
    def out_arcs_table(self) -> tuple[tuple[Arc, ...], ...]:
        table: list[list[Arc]] = [[] for _ in self.vertices]
        for arc in self.arcs:
            table[arc.tail].append(arc)
        return tuple(tuple(row) for row in table)

    @cached_property
    def in_arcs_table(self) -> tuple[tuple[Arc, ...], ...]:
        table: list[list[Arc]] = [[] for _ in self.vertices]
        for arc in self.arcs:
            table[arc.head].append(arc)
        return tuple(tuple(row) for row in table)

    @cached_property
    def arc_by_pair(self) -> dict[tuple[int, int], Arc]:
        # at most one arc joins an ordered pair of expansions
        return {(a.tail, a.head): a for a in self.arcs}

    def out_arcs(self, v: int) -> tuple[Arc, ...]:
        return self.out_arcs_table[v]

    def in_arcs(self, v: int) -> tuple[Arc, ...]:
        return self.in_arcs_table[v]

    def word(self, v: int) -> str:
        return self.vertices[v]


def build_graph(n: int, limit: int = DEFAULT_LIMIT) -> HbGraph:
    """Construct A(n) by breadth-first closure from the minimal expansion."""
    verts = enumerate_expansions(n, limit)
    index = {w: i for i, w in enumerate(verts)}
    arcs = []
    for w in verts:
        for child, label, pos in single_step_reductions(w):
            arcs.append(Arc(index[w], index[child], label, pos))
    arcs.sort(key=lambda a: (a.tail, a.position))
    return HbGraph(
        n=n,
        vertices=tuple(verts),
        arcs=tuple(arcs),
        source=index[minimal_expansion(n)],
        sink=index[binary_expansion(n)],
    )


def counts(g: HbGraph) -> tuple[int, int, int]:
    """(b, a, v): vertex count, arc count, cyclomatic number a - b + 1."""
    b = len(g.vertices)
    a = len(g.arcs)
    return (b, a, a - b + 1)


def descendants_subgraph(g: HbGraph, start: int) -> HbGraph:
    """Induced subgraph on ``start`` and everything reachable from it."""
    if not 0 <= start < len(g.vertices):
        raise ValueError(f"unknown vertex id {start}")
    reach = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for arc in g.out_arcs(v):
            if arc.head not in reach:
                reach.add(arc.head)
                frontier.append(arc.head)
    verts = sorted((g.vertices[v] for v in reach), key=shortlex_key)
    index = {w: i for i, w in enumerate(verts)}
    arcs = tuple(
        Arc(index[g.vertices[a.tail]], index[g.vertices[a.head]], a.label, a.position)
        for a in g.arcs
        if a.tail in reach and a.head in reach
    )
    # the original sink is reachable from every vertex
    return HbGraph(
        n=g.n,
        vertices=tuple(verts),
        arcs=arcs,
        source=index[g.vertices[start]],
        sink=index[g.vertices[g.sink]],
    )


def export_dot(g: HbGraph, place: dict[Arc, int] | None = None) -> str:
    """Deterministic DOT rendering; optional per-arc ``place`` attributes."""
    lines = [f"digraph A{g.n} {{"]
    for w in g.vertices:
        lines.append(f'  "{render(w)}";')
    for arc in g.arcs:
        attrs = f'label="{_DOT_LABEL[arc.label]}"'
        if place is not None:
            attrs += f" place={place[arc]}"
        tail, head = render(g.vertices[arc.tail]), render(g.vertices[arc.head])
        lines.append(f'  "{tail}" -> "{head}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: HbGraph) -> str:
    """Machine-readable JSON with the same deterministic ordering as DOT."""
    doc = {
        "n": g.n,
        "vertices": list(g.vertices),
        "arcs": [
            {"tail": a.tail, "head": a.head, "label": a.label, "position": a.position}
            for a in g.arcs
        ],
    }
    return json.dumps(doc, separators=(",", ":"))

"""Block decomposition and the Cartesian-product view of A(n).

A minimal expansion of an even number factors uniquely into blocks
1^t 2 (type 1) and 2^t (type 2), with no two consecutive type-2 blocks;
odd numbers carry an extra tail of 1s.  A(n) embeds as an induced
subgraph into the Cartesian product of the path graphs of its blocks,
which yields the place map, place-preserving maps and checking paths.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .graphs import (
    DEFAULT_LIMIT,
    Arc,
    HbGraph,
    build_graph,
)
from .words import minimal_expansion, validate_word, value


class BlockKind(enum.Enum):
    TYPE1 = 1  # the word 1^t 2
    TYPE2 = 2  # the word 2^t


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("block parameter t must be >= 1")

    @property
    def word(self) -> str:
        if self.kind is BlockKind.TYPE1:
            return "1" * self.t + "2"
        return "2" * self.t

    @property
    def word_length(self) -> int:
        return self.t + 1 if self.kind is BlockKind.TYPE1 else self.t

    @property
    def value(self) -> int:
        return value(self.word)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    trailing_ones: int

    @property
    def word(self) -> str:
        return "".join(b.word for b in self.blocks) + "1" * self.trailing_ones


def decompose(w: str) -> BlockDecomposition:
    """Unique block decomposition of a minimal expansion (digits in {1,2})."""
    validate_word(w)
    if "0" in w:
        raise ValueError(f"not a minimal expansion (contains 0): {w!r}")
    core = w.rstrip("1")
    trailing_ones = len(w) - len(core)
    blocks: list[Block] = []
    i = 0
    while i < len(core):
        if core[i] == "1":
            j = i
            while core[j] == "1":
                j += 1
            # core ends with 2, so core[j] == "2"
            blocks.append(Block(BlockKind.TYPE1, j - i))
            i = j + 1
        else:
            j = i
            while j < len(core) and core[j] == "2":
                j += 1
            blocks.append(Block(BlockKind.TYPE2, j - i))
            i = j
    return BlockDecomposition(tuple(blocks), trailing_ones)


def block_path_graph(b: Block) -> HbGraph:
    """The directed path graph A(value(b)) of a single block."""
    return build_graph(b.value)


def path_order(g: HbGraph) -> list[int]:
    """Vertex ids of a directed path graph, from source to sink."""
    order = [g.source]
    while g.out_arcs(order[-1]):
        (arc,) = g.out_arcs(order[-1])
        order.append(arc.head)
    if len(order) != len(g.vertices):
        raise ValueError("graph is not a directed path")
    return order


@dataclass(frozen=True)
class PlacedGraph:
    graph: HbGraph
    decomposition: BlockDecomposition
    factors: tuple[tuple[str, ...], ...]  # per-vertex factor tuple, untruncated
    place: dict[Arc, int]  # 1-based block index of each arc

    @cached_property
    def block_graphs(self) -> tuple[HbGraph, ...]:
        return tuple(block_path_graph(b) for b in self.decomposition.blocks)


def _split_off_first_factor(word: str, first_value: int, rest_value: int) -> tuple[str, str]:
    """Split an expansion as (first untruncated factor, rest expansion).

    The rest has the digit count of binary(rest_value) (long) or one less
    (short); in the long case the first factor regains its truncated final 0.
    Exactly one of the two candidate splits is valid.
    """
    found = None
    bin_len = rest_value.bit_length()
    for k, pad in ((bin_len, "0"), (bin_len - 1, "")):
        if not 0 < k < len(word):
            continue
        prefix, suffix = word[:-k] + pad, word[-k:]
        if suffix[0] != "0" and value(suffix) == rest_value and value(prefix) == first_value:
            if found is not None:
                raise AssertionError(f"ambiguous factor split of {word!r}")
            found = (prefix, suffix)
    if found is None:
        raise AssertionError(f"no factor split of {word!r}")
    return found


def factor_tuple(word: str, blocks: tuple[Block, ...]) -> tuple[str, ...]:
    """Per-block factors of one expansion, per the product embedding."""
    if not blocks:
        if word:
            raise ValueError("nonempty word with empty block list")
        return ()
    if len(blocks) == 1:
        return (word,)
    rest_word = "".join(b.word for b in blocks[1:])
    first, rest = _split_off_first_factor(word, blocks[0].value, value(rest_word))
    return (first,) + factor_tuple(rest, blocks[1:])


def embed(n: int, limit: int = DEFAULT_LIMIT) -> PlacedGraph:
    """Build A(n) together with its embedding into the product of block paths."""
    if n % 2:
        raise ValueError(f"embed requires an even n, got {n}")
    g = build_graph(n, limit)
    dec = decompose(minimal_expansion(n))
    factors = tuple(factor_tuple(w, dec.blocks) for w in g.vertices)
    place: dict[Arc, int] = {}
    for arc in g.arcs:
        fx, fy = factors[arc.tail], factors[arc.head]
        changed = [i for i in range(len(fx)) if fx[i] != fy[i]]
        if len(changed) != 1:
            raise AssertionError(f"arc {arc} changes {len(changed)} factors")
        place[arc] = changed[0] + 1
    return PlacedGraph(graph=g, decomposition=dec, factors=factors, place=place)


def place_map(pg: PlacedGraph, arc: Arc) -> int:
    """1-based index of the factor on which the arc's reduction occurs."""
    try:
        return pg.place[arc]
    except KeyError:
        raise ValueError(f"unknown arc {arc}") from None


def place_preserving_map(pg: PlacedGraph, e: Arc) -> dict[Arc, Arc]:
    """The canonical correspondence out_arcs(tail e) - {e} -> out_arcs(head e).

    Each e_x = (x, x') maps to the unique e_y = (y, y') such that (x', y')
    is an arc; existence and uniqueness failures are raised, not repaired.
    """
    g = pg.graph
    if e not in pg.place:
        raise ValueError(f"unknown arc {e}")
    mapping: dict[Arc, Arc] = {}
    for e_x in g.out_arcs(e.tail):
        if e_x == e:
            continue
        matches = [e_y for e_y in g.out_arcs(e.head) if (e_x.head, e_y.head) in g.arc_by_pair]
        if len(matches) != 1:
            raise AssertionError(
                f"place-preserving map through {e} not well-defined at {e_x}: "
                f"{len(matches)} completions"
            )
        mapping[e_x] = matches[0]
    return mapping


def _check_path(g: HbGraph, path: list[Arc] | tuple[Arc, ...]) -> None:
    for prev, nxt in zip(path, path[1:]):
        if prev.head != nxt.tail:
            raise ValueError("arcs do not form a directed path")
    for arc in path:
        if (arc.tail, arc.head) not in g.arc_by_pair or g.arc_by_pair[(arc.tail, arc.head)] != arc:
            raise ValueError(f"arc {arc} not in graph")


def place_preserving_through_path(
    pg: PlacedGraph, path: list[Arc] | tuple[Arc, ...], start: int | None = None
) -> dict[Arc, Arc]:
    """Composition of the single-arc maps along a path, maximally restricted.

    For the empty path, ``start`` must be given; the result is the identity
    on the out-arcs of ``start``.
    """
    g = pg.graph
    _check_path(g, path)
    if not path:
        if start is None:
            raise ValueError("empty path requires a start vertex")
        return {a: a for a in g.out_arcs(start)}
    current = {a: a for a in g.out_arcs(path[0].tail)}
    for e in path:
        alpha = place_preserving_map(pg, e)
        current = {src: alpha[img] for src, img in current.items() if img in alpha}
    return current


def is_checking_path(pg: PlacedGraph, path: list[Arc] | tuple[Arc, ...]) -> bool:
    """True iff each arc avoids the image of the map through its predecessor."""
    _check_path(pg.graph, path)
    for prev, nxt in zip(path, path[1:]):
        if nxt in place_preserving_map(pg, prev).values():
            return False
    return True


def _can_prepend(pg: PlacedGraph, e1: Arc) -> bool:
    g = pg.graph
    for e in g.in_arcs(e1.tail):
        if e1 not in place_preserving_map(pg, e).values():
            return True
    return False


def maximal_checking_paths_from(
    pg: PlacedGraph,
    e1: Arc,
    length: int | None = None,
    first_label: str | None = None,
    second_label: str | None = None,
    last_label: str | None = None,
) -> list[tuple[Arc, ...]]:
    """All maximal checking paths starting with e1, by exhaustive search.

    A path is maximal when it cannot be extended to a checking path on
    either end, so if some arc can be prepended to e1 there are none.
    The optional constraints filter the result set.
    """
    g = pg.graph
    if e1 not in pg.place:
        raise ValueError(f"unknown arc {e1}")
    results: list[tuple[Arc, ...]] = []
    if _can_prepend(pg, e1):
        return results

    def extend(path: list[Arc]) -> None:
        image = set(place_preserving_map(pg, path[-1]).values())
        nexts = [e for e in g.out_arcs(path[-1].head) if e not in image]
        if not nexts:
            results.append(tuple(path))
            return
        for e in sorted(nexts, key=lambda a: a.position):
            path.append(e)
            extend(path)
            path.pop()

    extend([e1])

    def keep(p: tuple[Arc, ...]) -> bool:
        if length is not None and len(p) != length:
            return False
        if first_label is not None and p[0].label != first_label:
            return False
        if second_label is not None and (len(p) < 2 or p[1].label != second_label):
            return False
        if last_label is not None and p[-1].label != last_label:
            return False
        return True

    return [p for p in results if keep(p)]

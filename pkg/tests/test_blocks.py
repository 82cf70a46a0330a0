import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cached_embed, cached_graph, oracle_expansions
from hbgraphs.blocks import (
    Block,
    BlockKind,
    block_path_graph,
    decompose,
    embed,
    factor_tuple,
    is_checking_path,
    maximal_checking_paths_from,
    path_order,
    place_map,
    place_preserving_map,
    place_preserving_through_path,
)
from hbgraphs.graphs import Label, counts
from hbgraphs.iso import labeled_iso
from hbgraphs.words import binary_expansion, minimal_expansion, value


def arc(g, tail, head):
    return g.arc_by_pair[(g.index[tail], g.index[head])]


def test_block_words():
    assert Block(BlockKind.TYPE1, 3).word == "1112"
    assert Block(BlockKind.TYPE2, 2).word == "22"
    assert Block(BlockKind.TYPE1, 1).word_length == 2
    assert Block(BlockKind.TYPE2, 4).word_length == 4
    with pytest.raises(ValueError):
        Block(BlockKind.TYPE1, 0)


def test_decompose_examples():
    dec = decompose("12122")
    assert [(b.kind, b.t) for b in dec.blocks] == [
        (BlockKind.TYPE1, 1),
        (BlockKind.TYPE1, 1),
        (BlockKind.TYPE2, 1),
    ]
    assert dec.trailing_ones == 0
    assert decompose("1").blocks == ()
    assert decompose("1").trailing_ones == 1
    dec = decompose("122")
    assert [(b.kind, b.t) for b in dec.blocks] == [(BlockKind.TYPE1, 1), (BlockKind.TYPE2, 1)]
    assert value("12") == 4 and value("2") == 2


def test_decompose_rejects_zero_digit():
    with pytest.raises(ValueError):
        decompose("102")


@given(st.integers(0, 10**5))
def test_decompose_roundtrip(n):
    w = minimal_expansion(n)
    dec = decompose(w)
    assert dec.word == w
    assert (dec.trailing_ones == 0) == (n % 2 == 0)
    for first, second in zip(dec.blocks, dec.blocks[1:]):
        assert not (first.kind is BlockKind.TYPE2 and second.kind is BlockKind.TYPE2)


def test_block_path_graphs():
    g = block_path_graph(Block(BlockKind.TYPE1, 1))
    order = path_order(g)
    assert [g.vertices[v] for v in order] == ["12", "20", "100"]
    labels = [g.arc_by_pair[(order[i], order[i + 1])].label for i in range(len(order) - 1)]
    assert labels == [Label.DOUBLE, Label.SINGLE]

    g = block_path_graph(Block(BlockKind.TYPE2, 1))
    assert [g.vertices[v] for v in path_order(g)] == ["2", "10"]

    g = block_path_graph(Block(BlockKind.TYPE2, 3))
    order = path_order(g)
    assert [g.vertices[v] for v in order] == ["222", "1022", "1102", "1110"]
    assert all(a.label == Label.SINGLE for a in g.arcs)


def test_block_path_graph_shape():
    for t in range(1, 6):
        g1 = block_path_graph(Block(BlockKind.TYPE1, t))
        chain = path_order(g1)
        assert len(chain) == t + 2
        labels = [g1.arc_by_pair[(chain[i], chain[i + 1])].label for i in range(t + 1)]
        assert labels == [Label.DOUBLE] * t + [Label.SINGLE]
        g2 = block_path_graph(Block(BlockKind.TYPE2, t))
        assert len(path_order(g2)) == t + 1
        assert all(a.label == Label.SINGLE for a in g2.arcs)


def test_embed_a10():
    pg = cached_embed(10)
    expected = {
        "122": ("12", "2"),
        "202": ("20", "2"),
        "1002": ("100", "2"),
        "210": ("20", "10"),
        "1010": ("100", "10"),
    }
    got = {w: pg.factors[i] for i, w in enumerate(pg.graph.vertices)}
    assert got == expected


def test_embed_edge_cases():
    pg = cached_embed(0)
    assert pg.decomposition.blocks == ()
    assert pg.factors == ((),)
    pg20 = cached_embed(20)
    assert len(pg20.factors) == 8
    assert all(len(f) == 2 for f in pg20.factors)
    assert {value(f[0].rstrip("0") or "0") for f in pg20.factors} <= {4, 2, 1}
    with pytest.raises(ValueError):
        embed(21)


def test_factor_tuple_rejects_garbage():
    with pytest.raises(ValueError):
        factor_tuple("12", ())


def test_place_map_examples():
    pg = cached_embed(10)
    g = pg.graph
    assert place_map(pg, arc(g, "122", "202")) == 1
    assert place_map(pg, arc(g, "202", "210")) == 2
    assert place_map(pg, arc(g, "202", "1002")) == 1


def test_place_preserving_map_examples():
    pg = cached_embed(10)
    g = pg.graph
    m = place_preserving_map(pg, arc(g, "202", "1002"))
    assert m == {arc(g, "202", "210"): arc(g, "1002", "1010")}
    assert place_preserving_map(pg, arc(g, "122", "202")) == {}

    pg20 = cached_embed(20)
    g20 = pg20.graph
    m = place_preserving_map(pg20, arc(g20, "1212", "2012"))
    assert m[arc(g20, "1212", "1220")] == arc(g20, "2012", "2020")


def test_place_preserving_through_path():
    pg = cached_embed(10)
    g = pg.graph
    e1 = arc(g, "122", "202")
    e2 = arc(g, "202", "1002")
    ident = place_preserving_through_path(pg, [], start=g.source)
    assert ident == {e1: e1}
    single = place_preserving_through_path(pg, [e2])
    assert single == place_preserving_map(pg, e2)
    assert place_preserving_through_path(pg, [e1, e2]) == {}
    with pytest.raises(ValueError):
        place_preserving_through_path(pg, [e2, e1])
    with pytest.raises(ValueError):
        place_preserving_through_path(pg, [])


def test_checking_path_fixtures():
    pg = cached_embed(10)
    g = pg.graph
    e1 = arc(g, "122", "202")
    assert is_checking_path(pg, [e1, arc(g, "202", "1002")])
    assert is_checking_path(pg, [e1, arc(g, "202", "210")])
    for e in g.arcs:
        assert is_checking_path(pg, [e])
    # (202 -> 1002, 1002 -> 1010) fails: the second arc is the image of (202, 210)
    assert not is_checking_path(pg, [arc(g, "202", "1002"), arc(g, "1002", "1010")])


def test_maximal_checking_paths():
    pg = cached_embed(10)
    g = pg.graph
    e1 = arc(g, "122", "202")
    paths = maximal_checking_paths_from(pg, e1)
    tails = {tuple(g.vertices[a.head] for a in p) for p in paths}
    assert ("202", "1002") in tails
    assert ("202", "210") in tails

    pg2 = cached_embed(2)
    (e,) = pg2.graph.arcs
    assert maximal_checking_paths_from(pg2, e) == [(e,)]


def test_maximal_checking_path_source_run_lengths():
    # minimal expansion 1^{t-1}2 (n = 2^t): unique maximal path of length t
    for t in range(1, 7):
        pg = cached_embed(2**t)
        (e1,) = pg.graph.out_arcs(pg.graph.source)
        paths = maximal_checking_paths_from(pg, e1)
        assert len(paths) == 1 and len(paths[0]) == t
    # minimal expansion 2^t (n = 2^{t+1} - 2): source arc labeled ->
    for t in range(1, 7):
        pg = cached_embed(2 ** (t + 1) - 2)
        (e1,) = pg.graph.out_arcs(pg.graph.source)
        assert e1.label == Label.SINGLE
        paths = maximal_checking_paths_from(pg, e1)
        assert len(paths) == 1 and len(paths[0]) == t


def test_maximal_checking_paths_constraints():
    pg = cached_embed(10)
    e1 = arc(pg.graph, "122", "202")
    assert maximal_checking_paths_from(pg, e1, length=2, first_label=Label.DOUBLE)
    assert maximal_checking_paths_from(pg, e1, last_label=Label.DOUBLE) == []


def test_export_dot_with_places():
    from hbgraphs.graphs import export_dot

    pg = cached_embed(10)
    dot = export_dot(pg.graph, place=pg.place)
    assert '"122" -> "202" [label="d" place=1];' in dot
    assert '"202" -> "210" [label="s" place=2];' in dot


def _factor_steps(pg, vid):
    """Per-factor path positions of one vertex's image tuple."""
    steps = []
    for i, bg in enumerate(pg.block_graphs):
        order = path_order(bg)
        steps.append(order.index(bg.index[pg.factors[vid][i]]))
    return steps


@pytest.mark.parametrize("n", range(0, 200, 2))
def test_constraints_never_violated(n):
    pg = cached_embed(n)
    blocks = pg.decomposition.blocks
    lasts = [len(path_order(bg)) - 1 for bg in pg.block_graphs]
    for vid in range(len(pg.graph.vertices)):
        steps = _factor_steps(pg, vid)
        for i in range(len(blocks) - 1):
            k1, k2 = blocks[i].kind, blocks[i + 1].kind
            if k1 is BlockKind.TYPE1 and k2 is BlockKind.TYPE2:
                assert not (steps[i] == 0 and steps[i + 1] >= 1)
            elif k1 is BlockKind.TYPE1 and k2 is BlockKind.TYPE1:
                assert not (steps[i] == 0 and steps[i + 1] == lasts[i + 1])
            else:  # TYPE2 then TYPE1
                assert not (steps[i] < lasts[i] and steps[i + 1] == lasts[i + 1])


@pytest.mark.parametrize("n", range(2, 200, 2))
def test_descendant_factorization(n):
    pg = cached_embed(n)
    blocks = pg.decomposition.blocks
    rest = "".join(b.word for b in blocks[1:])
    start_word = binary_expansion(blocks[0].value) + rest
    g = pg.graph
    from hbgraphs.graphs import descendants_subgraph

    sub = descendants_subgraph(g, g.index[start_word])
    target = cached_graph(value(rest))
    assert labeled_iso(sub, target) is not None


@given(st.integers(1, 256).map(lambda k: 2 * k))
@settings(max_examples=40, deadline=None)
def test_embed_bijection_count(n):
    pg = cached_embed(n)
    assert len(set(pg.factors)) == len(oracle_expansions(n))

import math

import pytest
from hypothesis import given, settings

from conftest import cycle, path, spider, star
from lgmult.enumeration import canonical_key, enumerate_trees
from lgmult.graphs import build_graph, summarize
from lgmult.linegraph import (
    EmptyGraph,
    NoSecondBlock,
    block_block_distance,
    block_structure,
    line_graph,
    vertex_block_distance,
)
from test_graphs import connected_graphs


def test_line_graph_of_path_and_cycle():
    m = line_graph(path(4))
    assert summarize(m.line).is_path and m.line.vertex_count == 3
    m = line_graph(cycle(5))
    assert summarize(m.line).is_cycle and m.line.vertex_count == 5


def test_line_graph_of_star_is_triangle():
    m = line_graph(star(3))
    assert m.line.vertex_count == 3 and m.line.edge_count == 3


def test_line_graph_maps_are_inverse():
    g = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    m = line_graph(g)
    for e_id in range(g.edge_count):
        assert m.vertex_to_edge[m.edge_to_vertex[e_id]] == e_id
    for v in range(m.line.vertex_count):
        assert m.edge_to_vertex[m.vertex_to_edge[v]] == v


def test_line_graph_adjacency_is_shared_endpoint():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    m = line_graph(g)
    for u in range(m.line.vertex_count):
        for v in range(u + 1, m.line.vertex_count):
            e, f = g.edges[m.vertex_to_edge[u]], g.edges[m.vertex_to_edge[v]]
            shares = len(set(e) & set(f)) == 1
            assert m.line.has_edge(u, v) == shares


def test_line_graph_rejects_edgeless():
    with pytest.raises(EmptyGraph):
        line_graph(build_graph(3, []))


def test_line_graph_isomorphism_families():
    for n in range(3, 51):
        assert canonical_key(line_graph(cycle(n)).line) == canonical_key(cycle(n))
    for n in range(3, 51):
        assert canonical_key(line_graph(path(n)).line) == canonical_key(path(n - 1))


def test_block_structure_triangle():
    bs = block_structure(line_graph(star(3)).line)
    assert len(bs.blocks) == 1
    assert bs.major_blocks == bs.external_blocks == bs.blocks
    assert sorted(bs.external_vertices) == [0, 1, 2]


def test_block_structure_spider_legs_two():
    lt = line_graph(spider(3, 2)).line
    bs = block_structure(lt)
    majors = [b for b in bs.major_blocks]
    assert len(majors) == 1 and len(majors[0]) == 3
    assert len(bs.external_vertices) == 3
    for v in bs.external_vertices:
        assert vertex_block_distance(lt, v, majors[0]) == 1


def test_block_structure_path_has_no_major_block():
    bs = block_structure(line_graph(path(5)).line)
    assert list(bs.major_blocks) == []
    assert all(len(b) == 2 for b in bs.blocks)


def test_vertex_block_distance_long_leg():
    lt = line_graph(spider(3, 5)).line
    bs = block_structure(lt)
    (major,) = bs.major_blocks
    assert max(vertex_block_distance(lt, v, major) for v in bs.external_vertices) == 4
    for v in major:
        assert vertex_block_distance(lt, v, major) == 0


def test_block_block_distance_examples():
    # double spider: two degree-3 centers joined by a three-edge path
    g = build_graph(
        8,
        [(0, 1), (0, 2), (3, 6), (3, 7), (0, 4), (4, 5), (5, 3)],
    )
    lt = line_graph(g).line
    bs = block_structure(lt)
    b1, b2 = bs.major_blocks
    assert block_block_distance(lt, b1, b2) == 2

    lt2 = line_graph(spider(3, 2)).line
    bs2 = block_structure(lt2)
    shared = [b for b in bs2.blocks if set(b) & set(bs2.major_blocks[0])]
    touching = [b for b in shared if b != bs2.major_blocks[0]]
    assert block_block_distance(lt2, touching[0], bs2.major_blocks[0]) == 0

    with pytest.raises(NoSecondBlock):
        bs3 = block_structure(line_graph(star(3)).line)
        block_block_distance(line_graph(star(3)).line, bs3.blocks[0], bs3.blocks[0])


def test_tree_line_graph_block_laws():
    # blocks of L(T) are cliques; every cutpoint lies in exactly two blocks;
    # external vertices biject with pendant edges (= pendant vertices once
    # n >= 3; P_2 has two pendant vertices sharing its single pendant edge)
    assert len(block_structure(line_graph(path(2)).line).external_vertices) == 1
    for n in range(3, 11):
        for t in enumerate_trees(n):
            lt = line_graph(t).line
            bs = block_structure(lt)
            for b in bs.blocks:
                for i, u in enumerate(b):
                    for v in b[i + 1 :]:
                        assert lt.has_edge(u, v)
            for cut in summarize(lt).cut_vertices:
                assert sum(1 for b in bs.blocks if cut in b) == 2
            assert len(bs.external_vertices) == summarize(t).pendant_count


@settings(max_examples=60)
@given(connected_graphs(max_n=8))
def test_line_graph_edge_count_formula(g):
    m = line_graph(g) if g.edge_count else None
    if m is None:
        return
    expected = sum(math.comb(g.degree(v), 2) for v in range(g.vertex_count))
    assert m.line.edge_count == expected

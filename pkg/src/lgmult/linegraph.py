"""Line graphs and the block vocabulary of line graphs of trees.

The line graph has one vertex per edge of the base graph, with adjacency
exactly when two base edges share an endpoint.  For a tree T, L(T) is a
block graph: every block is a clique, every cutpoint lies in exactly two
blocks, and the vertices corresponding to pendant edges of T are the
external vertices.  The certifier's tree conditions are phrased through
distances between vertices and blocks of L(T), so those live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    Graph,
    GraphError,
    bfs_distances,
    build_graph,
    is_connected,
    Disconnected,
)


class EmptyGraph(GraphError):
    """The line graph of an edgeless graph has no vertices."""


class NoSecondBlock(GraphError):
    """Asked for the distance from a block to itself."""


@dataclass(frozen=True)
class LineGraphMap:
    """Line graph together with the edge <-> vertex correspondence.

    Both maps are index tuples: edge_to_vertex[edge id] = line vertex id and
    vertex_to_edge[line vertex id] = edge id, mutually inverse.
    """

    base: Graph
    line: Graph
    edge_to_vertex: tuple[int, ...]
    vertex_to_edge: tuple[int, ...]

    def edge_of_vertex(self, line_vertex: int) -> tuple[int, int]:
        return self.base.edges[self.vertex_to_edge[line_vertex]]


@lru_cache(maxsize=None)
def line_graph(g: Graph) -> LineGraphMap:
    """Construct L(g); raises EmptyGraph when g has no edges."""
    m = g.edge_count
    if m == 0:
        raise EmptyGraph("line graph needs at least one base edge")
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for eid, (u, v) in enumerate(g.edges):
        incident[u].append(eid)
        incident[v].append(eid)
    line_edges: set[tuple[int, int]] = set()
    for ids in incident:
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                a, b = ids[i], ids[j]
                line_edges.add((a, b) if a < b else (b, a))
    line = build_graph(m, sorted(line_edges))
    idx = tuple(range(m))
    return LineGraphMap(base=g, line=line, edge_to_vertex=idx, vertex_to_edge=idx)


@dataclass(frozen=True)
class BlockStructure:
    """Biconnected decomposition with the tree-condition vocabulary.

    blocks are vertex tuples sorted internally and listed by smallest
    member.  A vertex lying in two or more blocks is internal, otherwise
    external.  Major blocks have >= 3 vertices; a major block of order s
    counts as external when at least s-1 external vertices have it among
    their nearest major blocks, or when it is the only major block.
    nearest_major[v] records every nearest major block index for the
    external vertex v (ties all count).
    """

    graph: Graph
    blocks: tuple[tuple[int, ...], ...]
    major_blocks: tuple[tuple[int, ...], ...]
    external_vertices: tuple[int, ...]
    internal_vertices: tuple[int, ...]
    external_blocks: tuple[tuple[int, ...], ...]
    nearest_major: dict[int, tuple[tuple[int, ...], ...]]

    def to_json_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "major_blocks": [list(b) for b in self.major_blocks],
            "external_vertices": list(self.external_vertices),
            "internal_vertices": list(self.internal_vertices),
            "external_blocks": [list(b) for b in self.external_blocks],
        }


def _biconnected_blocks(g: Graph) -> list[tuple[int, ...]]:
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    inc: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.edges):
        inc[u].append(eid)
        inc[v].append(eid)
    blocks: list[tuple[int, ...]] = []
    estack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            blocks.append((root,))
            disc[root] = timer
            timer += 1
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(inc[v]):
                stack[-1] = (v, i + 1)
                eid = inc[v][i]
                if eid == parent_edge[v]:
                    continue
                a, b = g.edges[eid]
                w = b if a == v else a
                if disc[w] == -1:
                    estack.append((v, w))
                    parent_edge[w] = eid
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        comp: set[int] = set()
                        while estack:
                            x, y = estack.pop()
                            comp.add(x)
                            comp.add(y)
                            if (x, y) == (p, v):
                                break
                        blocks.append(tuple(sorted(comp)))
    blocks.sort()
    return blocks


def block_structure(lt: Graph) -> BlockStructure:
    """Blocks of a connected graph plus the major/external classification."""
    if not is_connected(lt):
        raise Disconnected("block structure is defined here for connected graphs")
    blocks = tuple(_biconnected_blocks(lt))
    containing: list[int] = [0] * lt.vertex_count
    for b in blocks:
        for v in b:
            containing[v] += 1
    external = tuple(v for v in range(lt.vertex_count) if containing[v] <= 1)
    internal = tuple(v for v in range(lt.vertex_count) if containing[v] > 1)
    major = tuple(b for b in blocks if len(b) >= 3)
    nearest: dict[int, tuple[tuple[int, ...], ...]] = {}
    if major:
        for v in external:
            dist = bfs_distances(lt, v)
            per_block = [min(dist[u] for u in b) for b in major]
            best = min(per_block)
            nearest[v] = tuple(b for b, d in zip(major, per_block) if d == best)
    if len(major) == 1:
        ext_blocks = major
    else:
        ext_blocks = tuple(
            b
            for b in major
            if sum(1 for v in external if b in nearest[v]) >= len(b) - 1
        )
    return BlockStructure(
        graph=lt,
        blocks=blocks,
        major_blocks=major,
        external_vertices=external,
        internal_vertices=internal,
        external_blocks=ext_blocks,
        nearest_major=nearest,
    )


def vertex_block_distance(lt: Graph, v: int, b: tuple[int, ...]) -> int:
    """min over u in b of d(v, u)."""
    dist = bfs_distances(lt, v)
    best = None
    for u in b:
        d = dist[u]
        if d is not None and (best is None or d < best):
            best = d
    if best is None:
        raise GraphError(f"block {b} unreachable from vertex {v}")
    return best


def block_block_distance(lt: Graph, b1: tuple[int, ...], b2: tuple[int, ...]) -> int:
    """min pairwise vertex distance between two distinct blocks."""
    if set(b1) == set(b2):
        raise NoSecondBlock("need two distinct blocks to measure a distance")
    # multi-source BFS out of b1
    dist: list[int | None] = [None] * lt.vertex_count
    frontier = list(dict.fromkeys(b1))
    for u in frontier:
        dist[u] = 0
    d = 0
    targets = set(b2)
    best = min((0 for u in frontier if u in targets), default=None)
    if best is not None:
        return 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in lt.adj[u]:
                if dist[w] is None:
                    dist[w] = d
                    if w in targets:
                        return d
                    nxt.append(w)
        frontier = nxt
    raise GraphError("blocks lie in different components")

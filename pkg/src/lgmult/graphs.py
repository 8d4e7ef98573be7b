"""Undirected simple graphs with the structural bookkeeping the toolkit needs.

Vertices are 0..n-1, edges are stored as normalized (u, v) pairs with u < v,
and the edge id is the position in the edge list.  Everything downstream
(line graphs, certificates, the verifier) leans on that id stability.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class InvalidVertex(GraphError):
    pass


class InvalidEdge(GraphError):
    """Loop edges and other malformed pairs."""


class DuplicateEdge(GraphError):
    pass


class Unreachable(GraphError):
    """Raised by distance() when the endpoints are in different components."""


class Disconnected(GraphError):
    """Raised by operations whose statements assume a connected graph."""


class NotAPendantPath(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Build through build_graph(); the constructor assumes already-validated
    input.  ``adj[v]`` is a sorted tuple of neighbors.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]


def build_graph(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and construct a Graph; edge ids follow the input order."""
    if vertex_count < 0:
        raise InvalidVertex(f"negative vertex count {vertex_count}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
            raise InvalidVertex(f"edge {pair} has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise InvalidEdge(f"loop edge at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
        edges.append(e)
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(vertex_count, tuple(edges), adj)


@dataclass(frozen=True)
class StructureSummary:
    connected: bool
    cyclomatic: int
    pendant_count: int
    pendant_vertices: tuple[int, ...]
    major_vertices: tuple[int, ...]
    bridges: tuple[tuple[int, int], ...]
    cut_vertices: tuple[int, ...]
    is_cycle: bool
    is_path: bool
    is_tree: bool


class PendantPath(NamedTuple):
    """Maximal hanging path, listed from the free end toward the attachment."""

    vertices: tuple[int, ...]
    attachment: int


class PendantCycle(NamedTuple):
    """Cycle whose only major vertex has degree exactly 3; sequence starts there."""

    vertices: tuple[int, ...]
    major: int


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.vertex_count
    out: list[list[int]] = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return len(components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Distances from source; None marks unreachable vertices."""
    dist: list[int | None] = [None] * g.vertex_count
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if dist[w] is None:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    """Shortest-path length; raises Unreachable across components."""
    if not (0 <= u < g.vertex_count) or not (0 <= v < g.vertex_count):
        raise InvalidVertex(f"vertex pair ({u}, {v}) out of range")
    d = bfs_distances(g, u)[v]
    if d is None:
        raise Unreachable(f"no path between {u} and {v}")
    return d


def _bridges_and_cuts(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Iterative low-link traversal; works per component."""
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    bridges: list[tuple[int, int]] = []
    cuts: set[int] = set()
    # incidence: edge ids per vertex, to skip only the tree edge we came by
    inc: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.edges):
        inc[u].append(eid)
        inc[v].append(eid)
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
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
                    disc[w] = low[w] = timer
                    timer += 1
                    parent_edge[w] = eid
                    if v == root:
                        root_children += 1
                    stack.append((w, 0))
                else:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        e = g.edges[parent_edge[v]]
                        bridges.append(e)
                    if p != root and low[v] >= disc[p]:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    bridges.sort()
    return bridges, sorted(cuts)


@lru_cache(maxsize=None)
def summarize(g: Graph) -> StructureSummary:
    """Connectivity, cyclomatic number, pendant/major vertices, bridges, cuts.

    The cyclomatic number is |E| - |V| + (number of components), which is the
    usual c(G) whenever the graph is connected.  Results are memoized; Graph
    is immutable so this is safe.
    """
    degs = g.degrees()
    comps = components(g)
    connected = len(comps) <= 1
    c = g.edge_count - g.vertex_count + len(comps)
    pend = tuple(v for v, d in enumerate(degs) if d == 1)
    major = tuple(v for v, d in enumerate(degs) if d >= 3)
    bridges, cuts = _bridges_and_cuts(g)
    n = g.vertex_count
    is_cycle = connected and n >= 3 and all(d == 2 for d in degs)
    is_path = connected and (n == 1 or (len(pend) == 2 and not major))
    is_tree = connected and c == 0
    return StructureSummary(
        connected=connected,
        cyclomatic=c,
        pendant_count=len(pend),
        pendant_vertices=pend,
        major_vertices=major,
        bridges=tuple(bridges),
        cut_vertices=tuple(cuts),
        is_cycle=is_cycle,
        is_path=is_path,
        is_tree=is_tree,
    )


def pendant_paths(g: Graph) -> list[PendantPath]:
    """All maximal pendant paths of a connected graph.

    Walks from each degree-1 vertex through degree-2 vertices until a vertex
    of degree >= 3; that vertex is the attachment and keeps degree >= 2 after
    the deletion.  Paths and cycles have no attachment, hence no pendant path.
    """
    if not is_connected(g):
        raise Disconnected("pendant_paths needs a connected graph")
    out: list[PendantPath] = []
    for leaf in range(g.vertex_count):
        if g.degree(leaf) != 1:
            continue
        seq = [leaf]
        prev, cur = leaf, g.adj[leaf][0]
        while g.degree(cur) == 2:
            seq.append(cur)
            a, b = g.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        if g.degree(cur) >= 3:
            out.append(PendantPath(tuple(seq), cur))
    out.sort(key=lambda p: p.vertices[0])
    return out


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep`` with dense relabeling; returns old->new map."""
    kept = sorted(set(keep))
    relabel = {old: new for new, old in enumerate(kept)}
    edges = [
        (relabel[u], relabel[v])
        for (u, v) in g.edges
        if u in relabel and v in relabel
    ]
    return build_graph(len(kept), edges), relabel


def delete_pendant_path(g: Graph, p: PendantPath) -> tuple[Graph, dict[int, int]]:
    """Remove a pendant path returned by pendant_paths; ids are compacted."""
    if tuple(p) not in {tuple(q) for q in pendant_paths(g)}:
        raise NotAPendantPath(f"{p!r} is not a maximal pendant path of this graph")
    keep = set(range(g.vertex_count)) - set(p.vertices)
    return induced_subgraph(g, keep)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Graph minus one edge; vertex ids unchanged, edge ids re-packed."""
    u, v = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
    if (u, v) not in g.edges:
        raise InvalidEdge(f"edge {e} not in graph")
    return build_graph(g.vertex_count, [f for f in g.edges if f != (u, v)])


def pendant_cycles(g: Graph) -> list[PendantCycle]:
    """Cycles with exactly one major vertex, that vertex of degree exactly 3.

    The sequence starts at the major vertex and proceeds toward its
    smaller-id cycle neighbor.  Found by walking the degree-2 chain from each
    candidate major vertex; re-arriving at the start closes a pendant cycle.
    """
    if not is_connected(g):
        raise Disconnected("pendant_cycles needs a connected graph")
    found: dict[frozenset[int], PendantCycle] = {}
    for u in range(g.vertex_count):
        if g.degree(u) != 3:
            continue
        for first in g.adj[u]:
            if g.degree(first) != 2:
                continue
            seq = [u, first]
            prev, cur = u, first
            while True:
                a, b = g.adj[cur]
                prev, cur = cur, (b if a == prev else a)
                if cur == u:
                    key = frozenset(seq)
                    if key not in found:
                        found[key] = PendantCycle(tuple(seq), u)
                    break
                if g.degree(cur) != 2:
                    break
                seq.append(cur)
    cycles = sorted(found.values(), key=lambda c: min(c.vertices))
    # the walk above records the traversal from each side; keep the one
    # that starts toward the smaller neighbor
    canon = []
    for cyc in cycles:
        u = cyc.major
        in_cycle = set(cyc.vertices)
        nbrs = sorted(w for w in g.adj[u] if w in in_cycle and g.degree(w) == 2)
        if len(nbrs) == 2 and cyc.vertices[1] != nbrs[0]:
            canon.append(PendantCycle((u,) + tuple(reversed(cyc.vertices[1:])), u))
        else:
            canon.append(cyc)
    return canon

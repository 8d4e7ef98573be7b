"""Shared constructors for the shapes the tests keep reaching for."""

from lgmult.graphs import Graph, build_graph


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(legs: int) -> Graph:
    return build_graph(legs + 1, [(0, i) for i in range(1, legs + 1)])


def spider(legs: int, leg_len: int) -> Graph:
    """Center 0, legs laid out consecutively."""
    edges = []
    v = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            edges.append((prev, v))
            prev = v
            v += 1
    return build_graph(v, edges)


def cycle_plus_pendant(order: int) -> Graph:
    """C_order with one extra pendant edge at vertex 0."""
    edges = [(i, (i + 1) % order) for i in range(order)] + [(0, order)]
    return build_graph(order + 1, edges)

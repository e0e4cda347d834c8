import itertools

import networkx as nx

from trees.spanning import all_min_spanning_trees
from trees.ultrametric import pairs


def membership_triangle(w):
    """In every triangle the largest weight is attained at least twice."""

    for i, j, k in itertools.combinations(range(1, w.n + 1), 3):
        values = sorted((w(i, j), w(i, k), w(j, k)))
        if values[1] != values[2]:
            return False
    return True


def membership_cycle(w):
    """
    In every cycle the largest weight is attained at least twice.

    A cycle whose unique maximum is uv exists iff u and v are already
    joined by edges strictly lighter than uv, so edges are swept in
    increasing weight and each weight level is tested before it is merged.
    """

    blocks = nx.utils.UnionFind(range(1, w.n + 1))
    by_weight = sorted(w.as_dict().items(), key=lambda item: item[1])
    for _, level in itertools.groupby(by_weight, key=lambda item: item[1]):
        level = [e for e, _ in level]
        if any(blocks[u] == blocks[v] for u, v in level):
            return False
        for u, v in level:
            blocks.union(u, v)
    return True


def membership_mst(w):
    """Every edge lies in some minimum spanning tree."""

    covered = frozenset().union(*all_min_spanning_trees(w.n, w))
    return covered == frozenset(pairs(w.n))


def cycle_maxima(w, cycle):
    """Maximum edges of a cycle given as a vertex sequence."""

    edges = [tuple(sorted(e)) for e in zip(cycle, cycle[1:] + cycle[:1])]
    top = max(w(*e) for e in edges)
    return frozenset(e for e in edges if w(*e) == top)


def cycle_maxima_by_triangles(w, cycle):
    """
    Edges of the cycle that are maximum in every triangle they form with
    a vertex of the cycle; equals cycle_maxima on the Bergman fan of K_n.
    """

    edges = [tuple(sorted(e)) for e in zip(cycle, cycle[1:] + cycle[:1])]
    found = set()
    for u, v in edges:
        if all(w(u, v) >= max(w(u, x), w(v, x)) for x in cycle if x not in (u, v)):
            found.add((u, v))
    return frozenset(found)

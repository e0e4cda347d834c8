import functools
import itertools
import logging
import math

import networkx as nx

from matroids.errors import BergmanError, ResourceLimitError
from trees.ultrametric import edge_weighting, pair_index, pairs


logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_N = 8  # 8^6 = 262144 labelled trees

TREE_BUDGET = 10**6


@functools.lru_cache(maxsize=None)
def labelled_trees(n):
    """Every spanning tree of K_n as a tuple of edge indices, one per Pruefer code."""

    if n == 1:
        return ((),)
    if n == 2:
        return ((0,),)
    index = pair_index(n)
    trees = []
    for code in itertools.product(range(n), repeat=n - 2):
        T = nx.from_prufer_sequence(list(code))
        trees.append(tuple(sorted(index[tuple(sorted((u + 1, v + 1)))] for u, v in T.edges)))
    logger.debug("listed %d labelled trees on %d vertices", len(trees), n)
    return tuple(trees)


def _integer_weights(values):
    scale = math.lcm(*(x.denominator for x in values)) if values else 1
    return [int(x * scale) for x in values]


def min_spanning_trees_bruteforce(n, w):
    w = edge_weighting(n, w)
    if n > BRUTE_FORCE_MAX_N:
        raise ResourceLimitError("brute force spanning trees only up to n = {}".format(BRUTE_FORCE_MAX_N))
    scaled = _integer_weights(w.values)
    edges = pairs(n)
    totals = [(sum(scaled[k] for k in T), T) for T in labelled_trees(n)]
    best = min(total for total, _ in totals)
    return frozenset(frozenset(edges[k] for k in T) for total, T in totals if total == best)


def min_spanning_trees_cycle_breaking(n, w, budget=TREE_BUDGET):
    """
    Start from K_n and repeatedly delete a maximum edge of some cycle; the
    trees reachable this way are the minimum spanning trees. Branching over
    the maxima e_1..e_m of the chosen cycle, branch j deletes e_j and keeps
    e_1..e_{j-1} for good, so every tree is produced exactly once.
    """

    w = edge_weighting(n, w)
    weight = w.as_dict()
    G = nx.Graph()
    G.add_nodes_from(range(1, n + 1))
    G.add_edges_from(weight)
    found = set()

    def branch(kept):
        if G.number_of_edges() == n - 1:
            found.add(frozenset(tuple(sorted(e)) for e in G.edges))
            if len(found) > budget:
                raise ResourceLimitError("more than {} minimum spanning trees".format(budget))
            return
        cycle = [tuple(sorted(e)) for e in nx.find_cycle(G)]
        top = max(weight[e] for e in cycle)
        maxima = [e for e in cycle if weight[e] == top]
        for j, e in enumerate(maxima):
            if e in kept:
                continue
            G.remove_edge(*e)
            branch(kept | frozenset(maxima[:j]))
            G.add_edge(*e)

    branch(frozenset())
    return frozenset(found)


def all_min_spanning_trees(n, w, budget=TREE_BUDGET):
    """
    Minimum spanning trees of the weighted K_n. Up to BRUTE_FORCE_MAX_N
    both enumerations run and must agree.
    """

    trees = min_spanning_trees_cycle_breaking(n, w, budget)
    if n <= BRUTE_FORCE_MAX_N:
        expected = min_spanning_trees_bruteforce(n, w)
        if trees != expected:
            raise BergmanError(
                "cycle breaking found {} minimum spanning trees, brute force {}".format(len(trees), len(expected))
            )
    return trees


def tree_weight(T, w):
    weight = w.as_dict()
    return sum(weight[e] for e in T)

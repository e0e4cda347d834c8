import math

from matroids.matroid import ENUMERATION_BUDGET, bases_of_graph, complete_graph_matroid
from matroids.weights import min_bases_greedy
from trees.sampling import random_delta, random_ultrametric
from trees.spanning import labelled_trees, min_spanning_trees_bruteforce, min_spanning_trees_cycle_breaking
from trees.ultrametric import delta_to_weights, pairs
from suites.common import Group, finish, get_params, get_rng


NAME = "mst-oracle"

MAX_N = 6


def count_spanning_trees(M, n):
    """
    Pruefer codes always; the networkx iterator and the basis enumeration
    only while C(n(n-1)/2, n-1) stays inside the enumeration budget.
    """

    counts = [len(labelled_trees(n))]
    if math.comb(len(pairs(n)), n - 1) <= ENUMERATION_BUDGET:
        counts += [len(bases_of_graph(M)), len(M.bases())]
    return counts


def run_suite(params):
    params = get_params(params)
    rng = get_rng(params)
    max_n = params["max_n"] or MAX_N

    agree = Group("cycle-breaking-equals-bruteforce")
    greedy = Group("greedy-equals-cycle-breaking")
    cayley = Group("spanning-tree-count")

    for n in range(3, max_n + 1):
        M = complete_graph_matroid(n)
        edges = pairs(n)
        counts = count_spanning_trees(M, n)
        cayley.check(all(c == n ** (n - 2) for c in counts), "n=%d: counts %s", n, counts)
        for k in range(params["samples"]):
            delta = random_delta(n, rng) if k % 2 else random_ultrametric(n, rng)
            w = delta_to_weights(delta)
            trees = min_spanning_trees_cycle_breaking(n, w)
            values = [str(x) for x in w.values]
            agree.check(trees == min_spanning_trees_bruteforce(n, w), "n=%d w=%s", n, values)
            family = min_bases_greedy(M, w.values)
            mapped = frozenset(frozenset(edges[e - 1] for e in B) for B in family)
            greedy.check(mapped == trees, "n=%d w=%s", n, values)

    return finish(NAME, [agree, greedy, cayley])

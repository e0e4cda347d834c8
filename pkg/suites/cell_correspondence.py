from fixtures.k4 import get_tied_balanced_distances
from matroids.matroid import complete_graph_matroid
from matroids.weights import flag_of, min_bases_greedy
from trees.cells import order_complex_subdivides_tree_space
from trees.equidistant import (
    ranked_topology,
    topology_from_min_bases,
    tree_to_ultrametric,
    ultrametric_to_tree,
    unranked_topology,
)
from trees.sampling import perturb_heights, random_tree
from trees.ultrametric import delta_to_weights, weighting_from_values, weights_to_delta
from suites.common import Group, finish, get_params, get_rng


NAME = "cell-correspondence"

SIZES = (4, 5)


def get_pair(n, rng):
    """Two trees on n leaves; half of the time the second shares the first's shape."""

    T = random_tree(n, rng, ties=True, negative=False)
    if rng.random() < 0.5:
        return T, perturb_heights(T, rng)
    return T, random_tree(n, rng, ties=True, negative=False)


def get_tied_tree():
    return ultrametric_to_tree(weights_to_delta(weighting_from_values(get_tied_balanced_distances())))


def run_suite(params):
    params = get_params(params)
    rng = get_rng(params)
    sizes = (params["n"],) if params["n"] else SIZES

    coarse = Group("unranked-iff-same-min-bases")
    fine = Group("ranked-iff-same-flag")
    recovered = Group("topology-from-min-bases")
    tied = Group("tied-height-vertex")
    subdivision = Group("fine-refines-coarse")

    def describe(T):
        return [str(x) for x in delta_to_weights(tree_to_ultrametric(T)).values]

    for n in sizes:
        M = complete_graph_matroid(n)
        for _ in range(params["samples"]):
            T1, T2 = get_pair(n, rng)
            w1 = delta_to_weights(tree_to_ultrametric(T1)).values
            w2 = delta_to_weights(tree_to_ultrametric(T2)).values
            family1, family2 = min_bases_greedy(M, w1), min_bases_greedy(M, w2)
            coarse.check(
                (unranked_topology(T1) == unranked_topology(T2)) == (family1 == family2),
                "n=%d %s / %s", n, describe(T1), describe(T2),
            )
            fine.check(
                (ranked_topology(T1) == ranked_topology(T2)) == (flag_of(w1) == flag_of(w2)),
                "n=%d %s / %s", n, describe(T1), describe(T2),
            )
            recovered.check(topology_from_min_bases(n, family1) == unranked_topology(T1), "n=%d %s", n, describe(T1))
        report = order_complex_subdivides_tree_space(n)
        subdivision.check(report.consistent, "n=%d %s", n, report)

    T = get_tied_tree()
    levels = ranked_topology(T).levels
    tied.check(
        len(levels) == 2 and len(levels[0]) == 2,
        "levels %s", [sorted(map(sorted, level)) for level in levels],
    )
    untied = perturb_heights(T, rng)
    while len(ranked_topology(untied).levels) != 3:
        untied = perturb_heights(T, rng)
    tied.check(unranked_topology(untied) == unranked_topology(T) and ranked_topology(untied) != ranked_topology(T))

    return finish(NAME, [coarse, fine, recovered, tied, subdivision])

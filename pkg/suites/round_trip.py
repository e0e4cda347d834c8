from trees.cells import flag_of_tree, tree_of_flag
from trees.equidistant import ranked_topology, tree_from_json, tree_to_json, tree_to_ultrametric, ultrametric_to_tree
from trees.sampling import random_tree
from suites.common import Group, finish, get_params, get_rng


NAME = "round-trip"

MAX_N = 7


def run_suite(params):
    params = get_params(params)
    rng = get_rng(params)
    max_n = params["max_n"] or MAX_N

    heights = Group("tree-distance-tree")
    ranked = Group("ranked-topology")
    codec = Group("json")
    flags = Group("flag-tree-flag")

    for _ in range(params["samples"]):
        n = rng.randrange(2, max_n + 1)
        T = random_tree(n, rng, ties=True, negative=True)
        back = ultrametric_to_tree(tree_to_ultrametric(T))
        heights.check(back == T, "n=%d %s", n, tree_to_json(T))
        ranked.check(ranked_topology(back) == ranked_topology(T), "n=%d %s", n, tree_to_json(T))
        codec.check(tree_from_json(tree_to_json(T)) == T, "n=%d %s", n, tree_to_json(T))
        F = flag_of_tree(T)
        flags.check(flag_of_tree(tree_of_flag(n, F)) == F, "n=%d %s", n, F.to_lists())

    return finish(NAME, [heights, ranked, codec, flags])

from matroids.matroid import complete_graph_matroid
from matroids.weights import in_bergman_fan
from trees.membership import (
    cycle_maxima,
    cycle_maxima_by_triangles,
    membership_cycle,
    membership_mst,
    membership_triangle,
)
from trees.sampling import random_delta, random_ultrametric
from trees.ultrametric import delta_to_weights, is_ultrametric
from suites.common import Group, finish, get_params, get_rng


NAME = "ultrametric-fan"

SIZES = (4, 5, 6)


def get_samples(n, rng, samples):
    for _ in range(samples):
        yield random_delta(n, rng)
    for _ in range(samples):
        yield random_ultrametric(n, rng)


def run_suite(params):
    params = get_params(params)
    rng = get_rng(params)
    sizes = (params["n"],) if params["n"] else SIZES

    triangle = Group("triangle")
    cycle = Group("cycle")
    mst = Group("mst")
    fan = Group("bergman-fan")
    maxima = Group("cycle-maxima")

    for n in sizes:
        M = complete_graph_matroid(n)
        for delta in get_samples(n, rng, params["samples"]):
            w = delta_to_weights(delta)
            expected = is_ultrametric(delta)
            values = [str(x) for x in w.values]
            triangle.check(membership_triangle(w) == expected, "n=%d w=%s", n, values)
            cycle.check(membership_cycle(w) == expected, "n=%d w=%s", n, values)
            mst.check(membership_mst(w) == expected, "n=%d w=%s", n, values)
            fan.check(in_bergman_fan(M, w.values) == expected, "n=%d w=%s", n, values)
            if expected:
                order = list(range(1, n + 1))
                rng.shuffle(order)
                walk = order[: rng.randrange(3, n + 1)]
                maxima.check(
                    cycle_maxima(w, walk) == cycle_maxima_by_triangles(w, walk), "n=%d w=%s cycle=%s", n, values, walk
                )

    return finish(NAME, [triangle, cycle, mst, fan, maxima])

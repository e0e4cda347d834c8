import math

import sympy

from matroids.lattice import lattice_of_flats, mobius_hat
from matroids.matroid import complete_graph_matroid
from suites.common import Group, finish, get_params


NAME = "mobius-partition"

MAX_N = 7


def run_suite(params):
    params = get_params(params)
    max_n = params["max_n"] or MAX_N

    mobius = Group("mobius-hat")
    bell = Group("bell-count")

    for n in range(3, max_n + 1):
        L = lattice_of_flats(complete_graph_matroid(n))
        value = mobius_hat(L)
        mobius.check(value == math.factorial(n - 1), "n=%d: mobius_hat=%d", n, value)
        bell.check(len(L) == sympy.bell(n), "n=%d: %d flats", n, len(L))

    return finish(NAME, [mobius, bell])

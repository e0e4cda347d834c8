from fixtures.catalog import get_euler_matroids
from matroids.fan import order_complex_fine, reduced_euler
from matroids.io import matroid_from_json
from matroids.lattice import lattice_of_flats, mobius_hat
from suites.common import Group, finish, get_params


NAME = "euler-shadow"


def run_suite(params):
    get_params(params)

    euler = Group("reduced-euler")
    pure = Group("pure")

    for name, doc in get_euler_matroids().items():
        M = matroid_from_json(doc)
        L = lattice_of_flats(M)
        SC = order_complex_fine(M, L)
        chi = reduced_euler(SC)
        expected = (-1) ** (M.rank_full - 2) * mobius_hat(L)
        euler.check(chi == expected, "%s: reduced euler %d, expected %d", name, chi, expected)
        pure.check(SC.is_pure() and SC.dimension == M.rank_full - 2, "%s: dimension %d", name, SC.dimension)

    return finish(NAME, [euler, pure])

from fixtures.catalog import get_uniform
from fixtures.k4 import get_matroid as get_k4
from matroids.fan import adjacent_pairs, coarse_cells, diamond_classes, diamond_equivalence, maximal_flags
from matroids.io import matroid_from_json
from matroids.lattice import lattice_of_flats
from suites.common import Group, finish, get_params


NAME = "diamond"


def run_suite(params):
    get_params(params)

    agree = Group("conditions-agree")
    classes = Group("classes-match-cells")

    for name, doc in (("K4", get_k4()), ("U(3,5)", get_uniform(3, 5))):
        M = matroid_from_json(doc)
        L = lattice_of_flats(M)
        for F, G, i in adjacent_pairs(maximal_flags(L)):
            report = diamond_equivalence(M, F, G)
            agree.check(report.agree, "%s rank %d %s / %s: %s", name, i, F.to_lists(), G.to_lists(), report)
        # top-dimensional coarse cells are the unions of the diamond classes
        top = [cell for cell in coarse_cells(M, L) if cell.dimension == M.rank_full - 2]
        expected = {frozenset(F for F in cell.member_flags if len(F.sets) == M.rank_full + 1) for cell in top}
        found = set(diamond_classes(M, L))
        classes.check(found == expected, "%s: %d classes, %d cells", name, len(found), len(expected))

    return finish(NAME, [agree, classes])

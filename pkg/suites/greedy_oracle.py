from fixtures.catalog import get_matroids
from matroids.io import matroid_from_json
from matroids.matroid import verify_basis_exchange
from matroids.weights import greedy_basis, min_bases_bruteforce, min_bases_greedy, random_weights
from suites.common import Group, finish, get_params, get_rng


NAME = "greedy-oracle"


def run_suite(params):
    params = get_params(params)
    rng = get_rng(params)

    equal = Group("greedy-equals-bruteforce")
    exchange = Group("basis-exchange")
    single = Group("greedy-run-is-minimum")

    for name, doc in get_matroids().items():
        M = matroid_from_json(doc)
        for _ in range(params["samples"]):
            w = random_weights(M.n, rng)
            family = min_bases_greedy(M, w)
            equal.check(family == min_bases_bruteforce(M, w), "%s w=%s", name, [str(x) for x in w])
            exchange.check(verify_basis_exchange(family.bases), "%s w=%s", name, [str(x) for x in w])
            single.check(greedy_basis(M, w) in family, "%s w=%s", name, [str(x) for x in w])

    return finish(NAME, [equal, exchange, single])

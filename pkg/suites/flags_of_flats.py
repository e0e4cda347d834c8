import itertools
import math

from fixtures.catalog import get_uniform
from fixtures.k4 import get_matroid as get_k4
from matroids.errors import BergmanError
from matroids.io import matroid_from_json
from matroids.lattice import flat_product_law
from matroids.weights import decompose_minors, flag_of, is_valid_flag, matroid_of_flag, minor_sum_bases
from suites.common import Group, finish, get_params


NAME = "flags-of-flats"

WEIGHT_VALUES = (0, 1, 2, 3)


def get_flags(n):
    """Every flag of an integer weight vector with entries in WEIGHT_VALUES."""
    return sorted({flag_of(w) for w in itertools.product(WEIGHT_VALUES, repeat=n)}, key=lambda F: F.to_lists())


def run_suite(params):
    get_params(params)

    closed = Group("valid-iff-closed")
    product = Group("basis-product-law")
    decomposition = Group("minor-sum")
    flats = Group("flat-product-law")

    for name, doc in (("K4", get_k4()), ("U(3,5)", get_uniform(3, 5))):
        M = matroid_from_json(doc)
        for F in get_flags(M.n):
            try:
                valid = is_valid_flag(M, F)
            except BergmanError as ex:
                closed.check(False, "%s %s: %s", name, F.to_lists(), ex)
                continue
            closed.check(True)
            if not valid:
                continue
            family = matroid_of_flag(M, F).bases()
            counts = [len(minor.bases()) for minor in decompose_minors(M, F)]
            product.check(len(family) == math.prod(counts), "%s %s: %d vs %s", name, F.to_lists(), len(family), counts)
            decomposition.check(family == minor_sum_bases(M, F), "%s %s", name, F.to_lists())
            left, right = flat_product_law(M, F)
            flats.check(left == right, "%s %s: %d flats vs %d", name, F.to_lists(), left, right)

    return finish(NAME, [closed, product, decomposition, flats])

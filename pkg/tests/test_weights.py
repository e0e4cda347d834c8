import math
import random
from fractions import Fraction

import pytest

from fixtures.catalog import get_matroids
from fixtures.k4 import get_labels
from matroids.errors import InvalidInputError
from matroids.io import matroid_from_json
from matroids.matroid import UniformMatroid, build_uniform, complete_graph_matroid, direct_sum
from matroids.weights import (
    Flag,
    decompose_minors,
    flag_of,
    greedy_basis,
    in_bergman_fan,
    is_valid_flag,
    matroid_of_flag,
    min_bases_bruteforce,
    min_bases_greedy,
    minor_sum_bases,
    random_weights,
    representative_weights,
)


def edges(*names):
    return frozenset(get_labels().index(name) + 1 for name in names)


def get_test_flag(*chain):
    return Flag.from_chain([edges(*names) for names in chain], 6)


def test_flag_of():
    assert flag_of((0, 1, 2, 0, 2)).to_lists() == [[], [1, 4], [1, 2, 4], [1, 2, 3, 4, 5]]
    assert flag_of((5, 5, 5)).to_lists() == [[], [1, 2, 3]]
    assert flag_of((3, 1, 2)).to_lists() == [[], [2], [2, 3], [1, 2, 3]]


def test_flag_validation():
    with pytest.raises(InvalidInputError):
        Flag(({1}, {1, 2}))
    with pytest.raises(InvalidInputError):
        Flag((set(), {1, 2}, {1, 2}))
    with pytest.raises(InvalidInputError):
        Flag((set(), {2, 3}))


def test_representative_weights():
    F = flag_of(("1/2", "3", "1/2", "7"))
    assert representative_weights(F) == (0, 1, 0, 2)
    assert flag_of(representative_weights(F)) == F


def test_min_bases_examples(k4):
    K3 = complete_graph_matroid(3)
    assert min_bases_greedy(K3, (1, 1, 2)).sorted() == [[1, 2]]
    assert min_bases_bruteforce(K3, (1, 1, 2)).sorted() == [[1, 2]]

    assert min_bases_greedy(k4, (1,) * 6) == k4.bases()

    w = [0 if name in ("AB", "CD") else 1 for name in get_labels()]
    family = min_bases_greedy(k4, w)
    assert family == min_bases_bruteforce(k4, w)
    assert len(family) == 4
    assert all(edges("AB", "CD") <= B for B in family)


def test_min_bases_uniform():
    assert min_bases_greedy(build_uniform(2, 3), (1, 2, 3)).sorted() == [[1, 2]]
    assert min_bases_bruteforce(build_uniform(2, 3), (1, 2, 3)).sorted() == [[1, 2]]
    assert min_bases_greedy(build_uniform(1, 2), (5, 5)).sorted() == [[1], [2]]


def test_greedy_matches_bruteforce(k4):
    rng = random.Random(7)
    for M in (k4, build_uniform(3, 5)):
        for _ in range(50):
            w = random_weights(M.n, rng)
            family = min_bases_greedy(M, w)
            assert family == min_bases_bruteforce(M, w)
            assert greedy_basis(M, w) in family


def test_weights_length_checked(k4):
    with pytest.raises(InvalidInputError):
        min_bases_greedy(k4, (1, 2, 3))
    with pytest.raises(InvalidInputError):
        min_bases_greedy(k4, (0.5,) * 6)


def test_matroid_of_flag(k4):
    M_F = matroid_of_flag(k4, get_test_flag(["AB"], ["AB", "CD"]))
    assert M_F.loops() == frozenset()
    assert M_F.rank_full == 3

    M_G = matroid_of_flag(k4, get_test_flag(["AB", "AC"]))
    assert edges("BC") <= M_G.loops()

    assert matroid_of_flag(k4, Flag.from_chain([], 6)).bases() == k4.bases()


def test_decompose_minors(k4):
    minors = decompose_minors(k4, get_test_flag(["AB"]))
    assert [len(m.bases()) for m in minors] == [1, 8]

    U = build_uniform(2, 4)
    F = Flag.from_chain([{1}], 4)
    minors = decompose_minors(U, F)
    assert all(isinstance(m, UniformMatroid) for m in minors)
    assert [(m.r, m.n) for m in minors] == [(1, 1), (1, 3)]
    assert minor_sum_bases(U, F) == matroid_of_flag(U, F).bases()

    # {1, 2} spans U(2, 4), so only one basis meets it in rank many elements
    assert len(matroid_of_flag(U, Flag.from_chain([{1, 2}], 4)).bases()) == 1

    P = direct_sum(build_uniform(1, 2), build_uniform(1, 2))
    F = Flag.from_chain([{1, 2}], 4)
    assert [(m.rank_full, m.n, len(m.bases())) for m in decompose_minors(P, F)] == [(1, 2, 2), (1, 2, 2)]
    assert math.prod(len(m.bases()) for m in decompose_minors(P, F)) == len(matroid_of_flag(P, F).bases()) == 4


def test_minor_sum_k4(k4):
    F = get_test_flag(["AB"], ["AB", "CD"])
    assert minor_sum_bases(k4, F) == matroid_of_flag(k4, F).bases()


def test_is_valid_flag(k4):
    assert not is_valid_flag(k4, get_test_flag(["AB", "AC"]))
    assert is_valid_flag(k4, get_test_flag(["AB"], ["AB", "CD"]))
    assert in_bergman_fan(k4, ("2",) * 6)
    assert not in_bergman_fan(build_uniform(0, 2), (1, 2))


def get_test_weights_in_class(w, rng):
    """Move every level of w to a new value, keeping the order of the levels."""

    levels = sorted(set(w))
    moved = {}
    value = Fraction(rng.randrange(-5, 5), rng.randrange(1, 4))
    for level in levels:
        moved[level] = value
        value += Fraction(rng.randrange(1, 7), rng.randrange(1, 4))
    return tuple(moved[x] for x in w)


def test_same_flag_same_min_bases(rng):
    for name, doc in get_matroids().items():
        M = matroid_from_json(doc)
        for _ in range(40):
            w = random_weights(M.n, rng)
            v = get_test_weights_in_class(w, rng)
            assert flag_of(v) == flag_of(w), name
            family = min_bases_greedy(M, w)
            assert min_bases_greedy(M, v) == family, (name, w, v)
            assert matroid_of_flag(M, flag_of(w)).bases().bases == family.bases, name

import random

from fractions import Fraction

import pytest

from matroids.errors import ResourceLimitError
from trees.sampling import random_delta, random_ultrametric
from trees.spanning import (
    all_min_spanning_trees,
    labelled_trees,
    min_spanning_trees_bruteforce,
    min_spanning_trees_cycle_breaking,
    tree_weight,
)
from trees.ultrametric import delta_to_weights, weighting_from_values


def test_labelled_trees():
    assert len(labelled_trees(4)) == 16
    assert len(labelled_trees(5)) == 125
    assert labelled_trees(2) == ((0,),)


def test_triangle():
    trees = all_min_spanning_trees(3, (1, 1, 2))
    assert trees == frozenset([frozenset([(1, 2), (1, 3)])])

    assert len(all_min_spanning_trees(3, (4, 4, 4))) == 3


def test_constant_k4():
    assert len(min_spanning_trees_cycle_breaking(4, (1,) * 6)) == 16
    assert len(min_spanning_trees_bruteforce(4, (1,) * 6)) == 16


def test_tree_weight():
    w = weighting_from_values(["1", "3/2", "2", "3/2", "2", "2"])
    trees = all_min_spanning_trees(4, w)
    assert {tree_weight(T, w) for T in trees} == {Fraction(9, 2)}
    # (1,2) is forced, then one of the two 3/2 edges and one of the three 2 edges
    assert len(trees) == 6


def test_two_enumerations_agree():
    rng = random.Random(3)
    for n in (3, 4, 5, 6):
        for _ in range(10):
            for delta in (random_delta(n, rng), random_ultrametric(n, rng)):
                w = delta_to_weights(delta)
                assert min_spanning_trees_cycle_breaking(n, w) == min_spanning_trees_bruteforce(n, w)


def test_limits():
    with pytest.raises(ResourceLimitError):
        min_spanning_trees_bruteforce(9, (1,) * 36)
    with pytest.raises(ResourceLimitError):
        min_spanning_trees_cycle_breaking(4, (1,) * 6, budget=5)

from fractions import Fraction

import pytest

from fixtures.k4 import get_caterpillar_distances
from matroids.errors import InvalidInputError
from trees.ultrametric import (
    DissimilarityMap,
    delta_from_json,
    delta_to_json,
    delta_to_weights,
    edge_weighting,
    is_ultrametric,
    pairs,
    ultrametric_witness,
    weighting_from_values,
    weights_to_delta,
)


def get_test_delta(values):
    return weights_to_delta(weighting_from_values(values))


def test_pairs():
    assert pairs(4) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def test_validation():
    with pytest.raises(InvalidInputError):
        DissimilarityMap.from_matrix([[0, 1], [2, 0]])
    with pytest.raises(InvalidInputError):
        DissimilarityMap.from_matrix([[1, 1], [1, 0]])
    with pytest.raises(InvalidInputError):
        DissimilarityMap.from_matrix([[0, 1, 2], [1, 0, 1]])
    with pytest.raises(InvalidInputError):
        DissimilarityMap.from_matrix([[0, 0.5], [0.5, 0]])
    with pytest.raises(InvalidInputError):
        weighting_from_values([1, 2])
    with pytest.raises(InvalidInputError):
        edge_weighting(4, [1, 2, 3])


def test_is_ultrametric():
    assert is_ultrametric(get_test_delta([3] * 10))
    assert is_ultrametric(get_test_delta([1, 2, 2]))
    assert not is_ultrametric(get_test_delta([1, 2, 3]))
    assert ultrametric_witness(get_test_delta([1, 2, 3])) == (1, 2, 3)
    assert is_ultrametric(get_test_delta(get_caterpillar_distances()))
    assert is_ultrametric([[0, 1], [1, 0]])


def test_weights_delta_roundtrip():
    w = weighting_from_values(get_caterpillar_distances())
    delta = weights_to_delta(w)
    assert delta(1, 3) == Fraction(3, 2)
    assert delta(4, 1) == 2
    assert delta_to_weights(delta) == w
    assert w(3, 1) == Fraction(3, 2)


def test_json():
    delta = get_test_delta(get_caterpillar_distances())
    doc = delta_to_json(delta)
    assert doc["n"] == 4
    assert doc["d"][0] == ["0", "1", "3/2", "2"]
    assert delta_from_json(doc) == delta

    with pytest.raises(InvalidInputError):
        delta_from_json({"d": [[0]]})

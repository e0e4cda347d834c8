from fractions import Fraction

import pytest

from fixtures import k4, linear
from fixtures.catalog import get_matroids
from matroids.errors import BergmanError, InvalidInputError
from matroids.io import (
    family_to_json,
    flag_from_json,
    flag_to_json,
    matroid_from_json,
    matroid_to_json,
    weights_from_json,
    weights_to_json,
)
from matroids.matroid import BasisMatroid, GraphicMatroid, LinearMatroid, UniformMatroid
from matroids.rational import format_rational, is_decimal, to_rational


def test_to_rational():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(" -2 ") == -2
    assert to_rational(4) == 4
    for bad in (0.5, True, "1/0", "x", None):
        with pytest.raises(InvalidInputError):
            to_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert is_decimal(Fraction(3, 40))
    assert not is_decimal(Fraction(1, 3))


def test_matroid_kinds():
    kinds = {name: type(matroid_from_json(doc)) for name, doc in get_matroids().items()}
    assert kinds["K4"] is GraphicMatroid
    assert kinds["U(2,4)"] is UniformMatroid
    assert kinds["linear"] is LinearMatroid
    assert kinds["parallel"] is BasisMatroid


def test_matroid_json_roundtrip():
    for doc in (k4.get_matroid(), linear.get_matroid(), get_matroids()["parallel"], get_matroids()["U(3,5)"]):
        assert matroid_to_json(matroid_from_json(doc)) == doc


def test_malformed_matroids():
    for doc in (
        [],
        {"type": "graphic", "vertices": 2},
        {"type": "graphic", "vertices": 2, "edges": [[0, 1, 2]]},
        {"type": "graphic", "vertices": "2", "edges": [[0, 1]]},
        {"type": "uniform", "r": 1},
        {"type": "linear", "matrix": [["1", "2"], ["3"]]},
        {"type": "bases", "n": 4, "bases": [[1, 2], [3, 4]]},
        {"type": "polymatroid"},
    ):
        with pytest.raises(InvalidInputError):
            matroid_from_json(doc)
    assert issubclass(InvalidInputError, BergmanError)


def test_weights_and_flags():
    assert weights_from_json(["1/2", "2"], 2) == (Fraction(1, 2), 2)
    assert weights_to_json((Fraction(1, 2), Fraction(2))) == ["1/2", "2"]
    with pytest.raises(InvalidInputError):
        weights_from_json("1/2")
    with pytest.raises(InvalidInputError):
        weights_from_json(["1"], 2)

    lists = [[], [1], [1, 2, 3]]
    assert flag_to_json(flag_from_json(lists)) == lists


def test_family_json():
    M = matroid_from_json(get_matroids()["parallel"])
    assert family_to_json(M.bases()) == {"r": 2, "bases": [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}

import functools
import itertools
import math

from dataclasses import dataclass

from matroids.errors import InvalidInputError
from matroids.rational import format_rational, to_rational


@functools.lru_cache(maxsize=None)
def pairs(n):
    """(1, 2), (1, 3), ..., (n - 1, n): the edge order of K_n everywhere."""
    return tuple(itertools.combinations(range(1, n + 1), 2))


@functools.lru_cache(maxsize=None)
def pair_index(n):
    return {p: k for k, p in enumerate(pairs(n))}


@dataclass(frozen=True)
class DissimilarityMap:
    n: int
    d: tuple

    def __post_init__(self):
        rows = tuple(tuple(to_rational(x) for x in row) for row in self.d)
        object.__setattr__(self, "d", rows)
        if self.n < 1 or len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise InvalidInputError("dissimilarity map must be a {0}x{0} matrix".format(self.n))
        for i in range(self.n):
            if rows[i][i] != 0:
                raise InvalidInputError("diagonal entry ({0}, {0}) is not zero".format(i + 1))
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidInputError("matrix is not symmetric at ({}, {})".format(j + 1, i + 1))

    @classmethod
    def from_matrix(cls, rows):
        rows = [list(row) for row in rows]
        return cls(len(rows), rows)

    def __call__(self, i, j):
        return self.d[i - 1][j - 1]


@dataclass(frozen=True)
class EdgeWeighting:
    n: int
    values: tuple

    def __post_init__(self):
        values = tuple(to_rational(x) for x in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != math.comb(self.n, 2):
            raise InvalidInputError(
                "K_{} has {} edges, weighting has {} values".format(self.n, math.comb(self.n, 2), len(values))
            )

    def __call__(self, i, j):
        if i > j:
            i, j = j, i
        return self.values[pair_index(self.n)[(i, j)]]

    def as_dict(self):
        return dict(zip(pairs(self.n), self.values))


def edge_weighting(n, values):
    if isinstance(values, EdgeWeighting):
        if values.n != n:
            raise InvalidInputError("weighting is for K_{}, expected K_{}".format(values.n, n))
        return values
    return EdgeWeighting(n, tuple(values))


def weighting_from_values(values):
    """Infer n from the C(n, 2) values."""

    values = tuple(values)
    n = (1 + math.isqrt(1 + 8 * len(values))) // 2
    if math.comb(n, 2) != len(values):
        raise InvalidInputError("{} is not a number of edges of a complete graph".format(len(values)))
    return EdgeWeighting(n, values)


def delta_to_weights(delta):
    return EdgeWeighting(delta.n, tuple(delta(i, j) for i, j in pairs(delta.n)))


def weights_to_delta(w):
    rows = [[0] * w.n for _ in range(w.n)]
    for (i, j), x in w.as_dict().items():
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = x
    return DissimilarityMap(w.n, rows)


def as_delta(delta):
    if isinstance(delta, DissimilarityMap):
        return delta
    return DissimilarityMap.from_matrix(delta)


def ultrametric_witness(delta):
    """First triple (i, j, k) whose largest value is attained once, or None."""

    delta = as_delta(delta)
    for i, j, k in itertools.combinations(range(1, delta.n + 1), 3):
        values = sorted((delta(i, j), delta(i, k), delta(j, k)))
        if values[1] != values[2]:
            return (i, j, k)
    return None


def is_ultrametric(delta):
    return ultrametric_witness(delta) is None


def delta_from_json(doc):
    try:
        n = doc["n"]
        return DissimilarityMap(n, doc["d"])
    except (KeyError, TypeError) as ex:
        raise InvalidInputError("distance matrix JSON needs 'n' and 'd': {!r}".format(ex)) from ex


def delta_to_json(delta):
    return {"n": delta.n, "d": [[format_rational(x) for x in row] for row in delta.d]}

import itertools

import networkx as nx
import pytest

from fixtures.catalog import get_matroids
from fixtures.k4 import get_edges, get_labels
from matroids.errors import InvalidInputError, ResourceLimitError
from matroids.io import matroid_from_json
from matroids.matroid import (
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    UniformMatroid,
    bases_of_graph,
    build_graphic,
    build_linear,
    build_uniform,
    closure,
    complete_graph_matroid,
    contract,
    direct_sum,
    enumerate_bases,
    from_bases,
    loops,
    rank,
    restrict,
    verify_basis_exchange,
)


def edges(*names):
    return frozenset(get_labels().index(name) + 1 for name in names)


def test_complete_graph_k4(k4):
    assert k4.rank_full == 3
    assert len(k4.bases()) == 16
    assert isinstance(k4, GraphicMatroid)


def test_small_graphs():
    path = build_graphic(3, [(0, 1), (1, 2)])
    assert path.rank_full == 2
    assert len(path.bases()) == 1

    triangle = complete_graph_matroid(3)
    assert triangle.rank_full == 2
    assert len(triangle.bases()) == 3


def test_graphic_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        build_graphic(3, [])
    with pytest.raises(InvalidInputError):
        build_graphic(2, [(0, 2)])


def test_uniform():
    assert len(build_uniform(2, 4).bases()) == 6

    empty = build_uniform(0, 3)
    assert empty.bases().bases == frozenset([frozenset()])
    assert loops(empty) == frozenset({1, 2, 3})

    assert len(build_uniform(3, 3).bases()) == 1

    with pytest.raises(InvalidInputError):
        build_uniform(4, 3)


def test_linear():
    M = build_linear([["1", "0", "0", "1"], ["0", "1", "0", "1"], ["0", "0", "1", "0"]])
    assert rank(M, {1, 2, 4}) == 2
    assert M.rank_full == 3

    with_zero = build_linear([[1, 0], [0, 0]])
    assert loops(with_zero) == frozenset({2})

    identity = build_linear([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert len(identity.bases()) == 1


def test_linear_rejects_floats():
    with pytest.raises(InvalidInputError):
        build_linear([[0.5, 1]])


def test_rank(k4):
    assert rank(k4, k4.ground) == 3
    assert rank(k4, edges("AB", "AC", "BC")) == 2
    assert rank(build_uniform(2, 4), {1, 2, 3}) == 2

    with pytest.raises(InvalidInputError):
        rank(k4, {7})


def test_closure(k4):
    assert closure(k4, edges("AB", "AC")) == edges("AB", "AC", "BC")
    assert closure(build_uniform(2, 4), {1}) == frozenset({1})


def test_loops(k4):
    assert loops(k4) == frozenset()
    assert loops(from_bases(4, [[1, 2], [1, 3]])) == frozenset({4})


def test_restrict_triangle(k4):
    T = restrict(k4, edges("AB", "AC", "BC"))
    assert isinstance(T, GraphicMatroid)
    assert T.rank_full == 2
    assert len(T.bases()) == 3
    assert T.labels == (1, 2, 4)


def test_contract_edge(k4):
    M = contract(k4, edges("AB"))
    assert isinstance(M, GraphicMatroid)
    assert M.n == 5
    assert M.rank_full == 2
    assert len(M.bases()) == 8
    assert M.labels == (2, 3, 4, 5, 6)


def test_minors_keep_backing():
    U = build_uniform(2, 4)
    assert isinstance(U.contract({1}), UniformMatroid)
    assert U.contract({1}).r == 1
    assert isinstance(U.restrict({1, 2}), UniformMatroid)

    L = build_linear([[1, 0, 1], [0, 1, 1]])
    assert isinstance(L.restrict({1, 3}), LinearMatroid)
    assert L.restrict({1, 3}).rank_full == 2


def test_direct_sum():
    M = direct_sum(build_uniform(1, 2), build_uniform(1, 2))
    assert M.n == 4
    assert M.rank_full == 2
    assert len(M.bases()) == 4


def test_basis_exchange():
    assert verify_basis_exchange([[1, 2], [2, 3], [1, 3]])
    assert not verify_basis_exchange([[1, 2], [3, 4]])
    assert verify_basis_exchange([[1, 2]])

    with pytest.raises(InvalidInputError):
        verify_basis_exchange([[1], [1, 2]])
    with pytest.raises(InvalidInputError):
        from_bases(4, [[1, 2], [3, 4]])


def test_bases_match_spanning_tree_iterator(k4):
    assert bases_of_graph(k4) == k4.bases()
    assert len(bases_of_graph(complete_graph_matroid(5))) == 125


def test_budget():
    with pytest.raises(ResourceLimitError):
        complete_graph_matroid(5).bases(budget=10)


def get_test_matroids():
    found = {name: matroid_from_json(doc) for name, doc in get_matroids().items()}
    found["U(3,7)"] = build_uniform(3, 7)
    found["K4+AB"] = build_graphic(4, get_edges() + [[0, 1]])
    return found


def get_test_subsets(M):
    return [frozenset(c) for k in range(M.n + 1) for c in itertools.combinations(range(1, M.n + 1), k)]


def test_rank_monotone_and_unit_increase():
    for name, M in get_test_matroids().items():
        subsets = get_test_subsets(M)
        for S in subsets:
            assert 0 <= M.rank(S) <= len(S), name
            for e in M.ground - S:
                assert M.rank(S | {e}) - M.rank(S) in (0, 1), (name, sorted(S), e)
        for S, T in itertools.product(subsets, repeat=2):
            if S <= T:
                assert M.rank(S) <= M.rank(T) <= M.rank(S) + len(T - S), (name, sorted(S), sorted(T))


def test_rank_submodular():
    for name, M in get_test_matroids().items():
        subsets = get_test_subsets(M)
        for S, T in itertools.product(subsets, repeat=2):
            assert M.rank(S | T) + M.rank(S & T) <= M.rank(S) + M.rank(T), (name, sorted(S), sorted(T))


def test_closure_axioms():
    for name, M in get_test_matroids().items():
        for S in get_test_subsets(M):
            cl = M.closure(S)
            assert S <= cl, name
            assert M.closure(cl) == cl, name
            assert M.rank(cl) == M.rank(S), name
            # exchange: f in cl(S + e) - cl(S) puts e in cl(S + f)
            for e, f in itertools.permutations(M.ground - S, 2):
                if f in M.closure(S | {e}) and f not in cl:
                    assert e in M.closure(S | {f}), (name, sorted(S), e, f)


def test_graphic_rank_matches_union_find(rng):
    vertices = 6
    edges = [(rng.randrange(vertices), rng.randrange(vertices)) for _ in range(12)]
    M = build_graphic(vertices, edges)

    for _ in range(1000):
        S = frozenset(e for e in M.ground if rng.random() < 0.5)
        blocks = nx.utils.UnionFind(range(vertices))
        for e in S:
            blocks.union(*edges[e - 1])
        components = len({blocks[v] for v in range(vertices)})
        assert M.rank(S) == vertices - components, (edges, sorted(S))
        assert M.closure(S) == Matroid._closure(M, S), (edges, sorted(S))


def test_enumerated_bases_pass_exchange():
    for name, M in get_test_matroids().items():
        family = enumerate_bases(M)
        assert len(family) > 0, name
        assert all(len(B) == M.rank_full for B in family), name
        assert verify_basis_exchange(family), name

import random

from trees.cells import flag_of_tree, order_complex_subdivides_tree_space, tree_of_flag
from trees.equidistant import ranked_topology, unranked_topology
from trees.sampling import perturb_heights, random_delta, random_tree, random_ultrametric
from trees.ultrametric import is_ultrametric


def test_subdivision_k4():
    report = order_complex_subdivides_tree_space(4)
    print("subdivision: {}".format(report))

    assert report.fine_cells == 31
    assert report.coarse_cells == 25
    assert report.consistent


def test_subdivision_k3():
    report = order_complex_subdivides_tree_space(3)
    assert (report.fine_cells, report.coarse_cells) == (3, 3)
    assert report.consistent


def test_flag_tree_roundtrip():
    rng = random.Random(5)
    for _ in range(20):
        T = random_tree(rng.randrange(3, 7), rng)
        F = flag_of_tree(T)
        assert ranked_topology(tree_of_flag(T.n, F)) == ranked_topology(T)


def test_random_tree():
    rng = random.Random(2)
    for n in range(2, 8):
        T = random_tree(n, rng)
        assert T.n == n
        assert is_ultrametric(random_ultrametric(n, rng))


def test_random_tree_is_seeded():
    assert random_tree(6, random.Random(9)) == random_tree(6, random.Random(9))


def test_perturb_heights():
    rng = random.Random(4)
    for _ in range(20):
        T = random_tree(rng.randrange(2, 7), rng)
        assert unranked_topology(perturb_heights(T, rng)) == unranked_topology(T)


def test_random_delta():
    delta = random_delta(5, random.Random(1))
    assert all(delta(i, j) == delta(j, i) > 0 for i in range(1, 6) for j in range(1, 6) if i != j)

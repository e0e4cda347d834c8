from fractions import Fraction

from trees.equidistant import EquidistantTree, leaf, node, tree_to_ultrametric
from trees.ultrametric import DissimilarityMap


DEFAULT_VALUES = 4


def random_delta(n, rng, values=DEFAULT_VALUES):
    """
    Symmetric rational matrix with zero diagonal. Entries come from a
    handful of halves so that ties, and now and then ultrametrics, occur.
    """

    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = Fraction(rng.randrange(1, 2 * values + 1), 2)
    return DissimilarityMap(n, rows)


def random_tree(n, rng, ties=True, negative=True):
    """
    Agglomerative: at each new height two or three clusters merge, and
    with ties on a second disjoint merge may happen at the same height.
    With negative on the first heights may lie below the leaves.
    """

    clusters = [leaf(i) for i in range(1, n + 1)]
    height = Fraction(-rng.randrange(0, 3)) if negative else Fraction(0)
    while len(clusters) > 1:
        height += Fraction(rng.randrange(1, 4), rng.choice((1, 2)))
        rng.shuffle(clusters)
        k = min(len(clusters), rng.choice((2, 2, 3)))
        merged = [node(height, clusters[:k])]
        rest = clusters[k:]
        if ties and len(rest) >= 2 and rng.random() < 0.3:
            merged.append(node(height, rest[:2]))
            rest = rest[2:]
        clusters = rest + merged
    return EquidistantTree(clusters[0])


def random_ultrametric(n, rng, ties=True):
    return tree_to_ultrametric(random_tree(n, rng, ties=ties, negative=False))


def perturb_heights(T, rng):
    """New heights on the same unranked topology; the ranking may change."""

    def rebuild(v):
        if v.is_leaf:
            return v
        children = [rebuild(c) for c in v.children]
        floor = max((c.height for c in children if not c.is_leaf), default=None)
        step = Fraction(rng.randrange(1, 8), 4)
        return node(step - 1 if floor is None else floor + step, children)

    return EquidistantTree(rebuild(T.root))

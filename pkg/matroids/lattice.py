import logging
import math

import networkx as nx

from matroids.errors import InvalidInputError, ResourceLimitError
from matroids.weights import Flag, matroid_of_flag


logger = logging.getLogger(__name__)

FLAT_BUDGET = 10**5


def flat_key(F):
    return (len(F), sorted(F))


class FlatLattice:
    """
    Lattice of flats of a matroid with its Hasse diagram.

    hasse is a DiGraph with an edge F -> G whenever G covers F; every
    node carries its rank in the "rank" attribute.
    """

    def __init__(self, matroid, hasse):
        self.matroid = matroid
        self.hasse = hasse
        self.rank = dict(hasse.nodes(data="rank"))
        self.flats = tuple(sorted(hasse.nodes, key=lambda F: (self.rank[F],) + flat_key(F)))
        self.bottom = self.flats[0]
        self.top = self.flats[-1]

    def __len__(self):
        return len(self.flats)

    def __contains__(self, F):
        return frozenset(F) in self.rank

    @property
    def height(self):
        return self.rank[self.top]

    def by_rank(self, k):
        return [F for F in self.flats if self.rank[F] == k]

    def atoms(self):
        return self.by_rank(1)

    def rank_counts(self):
        return [len(self.by_rank(k)) for k in range(self.height + 1)]

    def proper(self):
        return [F for F in self.flats if F != self.bottom and F != self.top]

    def meet(self, F, G):
        return frozenset(F) & frozenset(G)

    def join(self, F, G):
        return self.matroid.closure(frozenset(F) | frozenset(G))

    def interval(self, F, G):
        F, G = frozenset(F), frozenset(G)
        if F not in self or G not in self:
            raise InvalidInputError("interval endpoints must be flats")
        return [H for H in self.flats if F <= H <= G]

    def is_graded(self):
        return all(self.rank[G] == self.rank[F] + 1 for F, G in self.hasse.edges)

    def maximal_chains(self):
        """Every maximal chain bottom < ... < top, as tuples of flats."""

        stack = [(self.bottom,)]
        while stack:
            chain = stack.pop()
            if chain[-1] == self.top:
                yield chain
                continue
            for G in sorted(self.hasse.successors(chain[-1]), key=flat_key, reverse=True):
                stack.append(chain + (G,))


def lattice_of_flats(M, budget=FLAT_BUDGET):
    """
    Breadth-first by rank: the flats of rank k + 1 are the closures of
    F + e over flats F of rank k and e outside F.
    """

    bottom = M.closure(frozenset())
    hasse = nx.DiGraph()
    hasse.add_node(bottom, rank=0)
    level = [bottom]
    for k in range(M.rank_full):
        upper = set()
        for F in level:
            for e in sorted(M.ground - F):
                G = M.closure(F | {e})
                if G not in hasse:
                    hasse.add_node(G, rank=k + 1)
                    if hasse.number_of_nodes() > budget:
                        raise ResourceLimitError("more than {} flats".format(budget))
                hasse.add_edge(F, G)
                upper.add(G)
        level = sorted(upper, key=flat_key)
    L = FlatLattice(M, hasse)
    logger.debug("lattice of flats of %r: %d flats, ranks %s", M, len(L), L.rank_counts())
    return L


def mobius(L):
    """mu(bottom, x) for every flat x, by mu(x) = -sum of mu(y) over y < x."""

    mu = {}
    for x in L.flats:
        if x == L.bottom:
            mu[x] = 1
        else:
            mu[x] = -sum(mu[y] for y in nx.ancestors(L.hasse, x))
    return mu


def mobius_hat(L):
    return (-1) ** L.height * mobius(L)[L.top]


def interval(L, F, G):
    return L.interval(F, G)


def flat_product_law(M, F):
    """
    Number of flats of M_F next to the product of the sizes of the
    intervals [F_{i-1}, F_i] of L_M; the two agree for flags of flats.
    """

    if not isinstance(F, Flag):
        F = Flag(F)
    L = lattice_of_flats(M)
    sizes = [len(L.interval(lower, upper)) for lower, upper in zip(F.sets, F.sets[1:])]
    return len(lattice_of_flats(matroid_of_flag(M, F))), math.prod(sizes)

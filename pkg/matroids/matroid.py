import itertools
import logging
import math

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
import sympy

from matroids.errors import InvalidInputError, ResourceLimitError
from matroids.rational import to_rational


logger = logging.getLogger(__name__)

ENUMERATION_BUDGET = 10**6  # max C(n, r) candidate subsets

GRAPHIC = "graphic"
UNIFORM = "uniform"
LINEAR = "linear"
BASES = "bases"


@dataclass(frozen=True)
class BasisFamily:
    r: int
    bases: frozenset

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __contains__(self, basis):
        return frozenset(basis) in self.bases

    def sorted(self):
        return sorted(sorted(b) for b in self.bases)

    def support(self):
        """Elements that lie in at least one basis."""
        return frozenset().union(*self.bases) if self.bases else frozenset()


def basis_family(r, bases):
    family = frozenset(frozenset(b) for b in bases)
    for b in family:
        if len(b) != r:
            raise InvalidInputError("basis {} does not have {} elements".format(sorted(b), r))
    return BasisFamily(r, family)


def check_budget(count, budget, what):
    if count > budget:
        raise ResourceLimitError("{} needs {} candidates, budget is {}".format(what, count, budget))


class Matroid:
    """
    Rank oracle on the ground set 1..n.

    Subclasses store one backing (graphic, uniform, linear, bases) and
    implement _rank; everything else is derived from it. Instances are
    never mutated after construction, the caches only memoize.

    labels[i - 1] names the element that position i came from when the
    matroid was produced as a minor or a direct sum.
    """

    kind = None

    def __init__(self, n, labels=None):
        if n < 0:
            raise InvalidInputError("ground set size must be non-negative")
        self.n = n
        self.labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
        if len(self.labels) != n:
            raise InvalidInputError("expected {} labels, got {}".format(n, len(self.labels)))
        self._rank_cache = {}
        self._closure_cache = {}
        self._bases = None

    def __repr__(self):
        return "{}(n={}, r={})".format(type(self).__name__, self.n, self.rank_full)

    @property
    def ground(self):
        return frozenset(range(1, self.n + 1))

    @property
    def rank_full(self):
        return self.rank(self.ground)

    def subset(self, S):
        S = frozenset(S)
        for e in S:
            if isinstance(e, bool) or not isinstance(e, int) or not 1 <= e <= self.n:
                raise InvalidInputError("element {!r} is not in the ground set 1..{}".format(e, self.n))
        return S

    def rank(self, S):
        S = self.subset(S)
        if S not in self._rank_cache:
            self._rank_cache[S] = self._rank(S)
        return self._rank_cache[S]

    def _rank(self, S):
        raise NotImplementedError

    def closure(self, S):
        S = self.subset(S)
        if S not in self._closure_cache:
            self._closure_cache[S] = self._closure(S)
        return self._closure_cache[S]

    def _closure(self, S):
        r = self.rank(S)
        return S | frozenset(e for e in self.ground - S if self.rank(S | {e}) == r)

    def is_flat(self, S):
        S = self.subset(S)
        return self.closure(S) == S

    def is_independent(self, S):
        S = self.subset(S)
        return self.rank(S) == len(S)

    def loops(self):
        return frozenset(e for e in self.ground if self.rank({e}) == 0)

    def bases(self, budget=ENUMERATION_BUDGET):
        if self._bases is None:
            r = self.rank_full
            check_budget(math.comb(self.n, r), budget, "basis enumeration")
            found = [frozenset(c) for c in itertools.combinations(range(1, self.n + 1), r) if self.rank(c) == r]
            self._bases = BasisFamily(r, frozenset(found))
            logger.debug("enumerated %d bases of %r", len(found), self)
        return self._bases

    def restrict(self, S):
        S = self.subset(S)
        positions = sorted(S)
        index = {e: i + 1 for i, e in enumerate(positions)}
        rS = self.rank(S)
        found = [
            frozenset(index[e] for e in c)
            for c in itertools.combinations(positions, rS)
            if self.rank(c) == rS
        ]
        return BasisMatroid(len(positions), found, labels=[self.labels[e - 1] for e in positions], check=False)

    def contract(self, S):
        S = self.subset(S)
        rest = sorted(self.ground - S)
        index = {e: i + 1 for i, e in enumerate(rest)}
        r = self.rank_full
        k = r - self.rank(S)
        found = [
            frozenset(index[e] for e in c)
            for c in itertools.combinations(rest, k)
            if self.rank(S.union(c)) == r
        ]
        return BasisMatroid(len(rest), found, labels=[self.labels[e - 1] for e in rest], check=False)


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element i is the i-th edge."""

    kind = GRAPHIC

    def __init__(self, vertices, edges, labels=None):
        self.vertices = vertices
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        for u, v in self.edges:
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise InvalidInputError("edge ({}, {}) has an endpoint outside 0..{}".format(u, v, vertices - 1))
        super().__init__(len(self.edges), labels)

    def graph(self, S=None):
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.vertices))
        elements = self.ground if S is None else S
        G.add_edges_from(self.edges[e - 1] for e in elements)
        return G

    def _rank(self, S):
        return self.vertices - nx.number_connected_components(self.graph(S))

    def _closure(self, S):
        block = {}
        for i, component in enumerate(nx.connected_components(self.graph(S))):
            for v in component:
                block[v] = i
        return frozenset(e for e in self.ground if block[self.edges[e - 1][0]] == block[self.edges[e - 1][1]])

    def restrict(self, S):
        S = self.subset(S)
        positions = sorted(S)
        return GraphicMatroid(
            self.vertices,
            [self.edges[e - 1] for e in positions],
            labels=[self.labels[e - 1] for e in positions],
        )

    def contract(self, S):
        S = self.subset(S)
        blocks = nx.utils.UnionFind(range(self.vertices))
        for e in S:
            blocks.union(*self.edges[e - 1])
        roots = sorted({blocks[v] for v in range(self.vertices)})
        relabel = {root: i for i, root in enumerate(roots)}
        rest = sorted(self.ground - S)
        return GraphicMatroid(
            len(roots),
            [(relabel[blocks[self.edges[e - 1][0]]], relabel[blocks[self.edges[e - 1][1]]]) for e in rest],
            labels=[self.labels[e - 1] for e in rest],
        )


class UniformMatroid(Matroid):
    kind = UNIFORM

    def __init__(self, r, n, labels=None):
        if not 0 <= r <= n:
            raise InvalidInputError("uniform matroid needs 0 <= r <= n, got r={} n={}".format(r, n))
        self.r = r
        super().__init__(n, labels)

    def _rank(self, S):
        return min(len(S), self.r)

    def restrict(self, S):
        S = self.subset(S)
        positions = sorted(S)
        return UniformMatroid(min(self.r, len(S)), len(S), labels=[self.labels[e - 1] for e in positions])

    def contract(self, S):
        S = self.subset(S)
        rest = sorted(self.ground - S)
        return UniformMatroid(self.r - min(len(S), self.r), len(rest), labels=[self.labels[e - 1] for e in rest])


class LinearMatroid(Matroid):
    """Column matroid of a matrix with exact rational entries."""

    kind = LINEAR

    def __init__(self, rows, labels=None, n=None):
        rows = [[to_rational(x) for x in row] for row in rows]
        if n is None:
            if not rows:
                raise InvalidInputError("matrix has no rows, pass n explicitly")
            n = len(rows[0])
        for row in rows:
            if len(row) != n:
                raise InvalidInputError("ragged matrix: expected {} columns, got {}".format(n, len(row)))
        self.rows = tuple(tuple(row) for row in rows)
        self.matrix = sympy.Matrix(
            len(rows), n, [sympy.Rational(x.numerator, x.denominator) for row in rows for x in row]
        )
        super().__init__(n, labels)

    def _rank(self, S):
        if not S or not self.rows:
            return 0
        return self.matrix.extract(list(range(len(self.rows))), [e - 1 for e in sorted(S)]).rank()

    def restrict(self, S):
        S = self.subset(S)
        positions = sorted(S)
        return LinearMatroid(
            [[row[e - 1] for e in positions] for row in self.rows],
            labels=[self.labels[e - 1] for e in positions],
            n=len(positions),
        )


class BasisMatroid(Matroid):
    kind = BASES

    def __init__(self, n, bases, labels=None, check=True):
        family = frozenset(frozenset(b) for b in bases)
        if not family:
            raise InvalidInputError("a matroid has at least one basis")
        sizes = {len(b) for b in family}
        if len(sizes) != 1:
            raise InvalidInputError("bases have mixed cardinalities {}".format(sorted(sizes)))
        super().__init__(n, labels)
        for b in family:
            self.subset(b)
        if check and not verify_basis_exchange(family):
            raise InvalidInputError("family violates the basis exchange axiom")
        self._bases = BasisFamily(sizes.pop(), family)

    def _rank(self, S):
        return max(len(b & S) for b in self._bases.bases)


def build_graphic(vertices, edges):
    edges = list(edges)
    if not edges:
        raise InvalidInputError("graphic matroid needs at least one edge")
    if vertices < 1:
        raise InvalidInputError("graph needs at least one vertex")
    return GraphicMatroid(vertices, edges)


def complete_graph_matroid(n):
    """M(K_n); element k is the k-th pair (i, j), i < j, in lexicographic order."""

    return build_graphic(n, itertools.combinations(range(n), 2))


def build_uniform(r, n):
    if n < 1:
        raise InvalidInputError("ground set needs at least one element")
    return UniformMatroid(r, n)


def build_linear(matrix):
    M = LinearMatroid(matrix)
    if M.n < 1:
        raise InvalidInputError("matrix needs at least one column")
    return M


def from_bases(n, bases, check=True):
    return BasisMatroid(n, bases, check=check)


def rank(M, S):
    return M.rank(S)


def closure(M, S):
    return M.closure(S)


def loops(M):
    return M.loops()


def restrict(M, S):
    return M.restrict(S)


def contract(M, S):
    return M.contract(S)


def direct_sum(M1, M2):
    """M2's elements are shifted to n1 + 1 .. n1 + n2."""

    labels = M1.labels + M2.labels
    if isinstance(M1, GraphicMatroid) and isinstance(M2, GraphicMatroid):
        shift = M1.vertices
        edges = list(M1.edges) + [(u + shift, v + shift) for u, v in M2.edges]
        return GraphicMatroid(M1.vertices + M2.vertices, edges, labels=labels)
    found = [b1 | frozenset(e + M1.n for e in b2) for b1 in M1.bases() for b2 in M2.bases()]
    return BasisMatroid(M1.n + M2.n, found, labels=labels, check=False)


def direct_sum_all(matroids):
    result = BasisMatroid(0, [frozenset()])
    for M in matroids:
        result = direct_sum(result, M) if result.n else M
    return result


def enumerate_bases(M, budget=ENUMERATION_BUDGET):
    return M.bases(budget)


def bases_of_graph(M):
    """Bases of a connected simple graphic matroid listed by networkx's spanning tree iterator."""

    G = nx.Graph()
    G.add_nodes_from(range(M.vertices))
    element = {}
    for e, (u, v) in enumerate(M.edges, start=1):
        if u == v or G.has_edge(u, v):
            raise InvalidInputError("spanning tree iterator needs a simple graph")
        G.add_edge(u, v)
        element[frozenset((u, v))] = e
    if not nx.is_connected(G):
        raise InvalidInputError("spanning tree iterator needs a connected graph")
    found = [
        frozenset(element[frozenset(uv)] for uv in T.edges)
        for T in nx.algorithms.tree.mst.SpanningTreeIterator(G)
    ]
    return BasisFamily(M.vertices - 1, frozenset(found))


def verify_basis_exchange(family):
    """
    True iff for all B1, B2 and e in B1 - B2 some f in B2 - B1 makes
    B1 - e + f a member again.
    """

    family = frozenset(frozenset(b) for b in family)
    if len({len(b) for b in family}) > 1:
        raise InvalidInputError("family has mixed cardinalities")
    for b1 in family:
        for b2 in family:
            for e in b1 - b2:
                if not any((b1 - {e}) | {f} in family for f in b2 - b1):
                    return False
    return True


def weight_of(basis, w):
    return sum((Fraction(w[e - 1]) for e in basis), Fraction(0))

import itertools
import logging

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

import networkx as nx

from matroids.errors import InvalidInputError, NotUltrametricError
from matroids.matroid import complete_graph_matroid
from matroids.rational import format_rational, is_decimal, to_rational
from trees.ultrametric import DissimilarityMap, as_delta, pair_index, ultrametric_witness


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeNode:
    """
    A leaf (label set, height 0) or an internal vertex with a height.
    Children are kept sorted by their smallest leaf label.
    """

    height: Fraction
    children: tuple = ()
    label: int = None
    leaves: frozenset = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "height", to_rational(self.height))
        children = tuple(sorted(self.children, key=lambda c: min(c.leaves)))
        object.__setattr__(self, "children", children)
        if self.label is not None:
            object.__setattr__(self, "leaves", frozenset([self.label]))
        else:
            object.__setattr__(self, "leaves", frozenset().union(*(c.leaves for c in children)))

    @property
    def is_leaf(self):
        return self.label is not None

    def internal_nodes(self):
        if self.is_leaf:
            return
        yield self
        for child in self.children:
            yield from child.internal_nodes()


def leaf(i):
    return TreeNode(Fraction(0), (), i)


def node(height, children):
    return TreeNode(to_rational(height), tuple(children))


@dataclass(frozen=True)
class EquidistantTree:
    """
    Rooted tree with leaves 1..n at height 0. Internal edges go strictly
    up; edges into leaves may have any sign.
    """

    root: TreeNode

    def __post_init__(self):
        if self.root.is_leaf:
            raise InvalidInputError("an equidistant tree needs at least two leaves")
        seen = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            if v.is_leaf:
                if v.height != 0:
                    raise InvalidInputError("leaf {} is not at height 0".format(v.label))
                seen.append(v.label)
                continue
            if len(v.children) < 2:
                raise InvalidInputError("internal vertex at height {} has fewer than two children".format(v.height))
            for child in v.children:
                if not child.is_leaf and child.height >= v.height:
                    raise InvalidInputError(
                        "internal edge from height {} down to {} is not positive".format(v.height, child.height)
                    )
                stack.append(child)
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise InvalidInputError("leaves must be labelled 1..n exactly once, got {}".format(sorted(seen)))

    @property
    def n(self):
        return len(self.root.leaves)

    def internal_nodes(self):
        return list(self.root.internal_nodes())


@dataclass(frozen=True)
class UnrankedTopology:
    clusters: frozenset


@dataclass(frozen=True)
class RankedTopology:
    """Clusters grouped by height, lowest level first; a level with several clusters is a tie."""

    levels: tuple

    @property
    def unranked(self):
        return UnrankedTopology(frozenset().union(*self.levels))


def tree_to_ultrametric(T):
    """d(i, j) = 2 h(lca(i, j))."""

    n = T.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for v in T.internal_nodes():
        for a, b in itertools.combinations(v.children, 2):
            for i in a.leaves:
                for j in b.leaves:
                    rows[i - 1][j - 1] = rows[j - 1][i - 1] = 2 * v.height
    return DissimilarityMap(n, rows)


def ultrametric_to_tree(delta):
    """
    Single linkage at merge height d/2. All clusters joined at the same
    value merge in one step, so ties give multifurcations or distinct
    vertices of equal height.
    """

    delta = as_delta(delta)
    witness = ultrametric_witness(delta)
    if witness is not None:
        raise NotUltrametricError(witness)
    if delta.n < 2:
        raise InvalidInputError("an equidistant tree needs at least two leaves")
    clusters = [leaf(i) for i in range(1, delta.n + 1)]
    values = sorted({delta(i, j) for i in range(1, delta.n + 1) for j in range(i + 1, delta.n + 1)})
    for t in values:
        joined = nx.Graph()
        joined.add_nodes_from(range(len(clusters)))
        for a, b in itertools.combinations(range(len(clusters)), 2):
            if delta(min(clusters[a].leaves), min(clusters[b].leaves)) == t:
                joined.add_edge(a, b)
        merged = []
        for component in nx.connected_components(joined):
            if len(component) == 1:
                merged.append(clusters[component.pop()])
            else:
                merged.append(node(t / 2, [clusters[k] for k in component]))
        clusters = merged
    return EquidistantTree(clusters[0])


def unranked_topology(T):
    return UnrankedTopology(frozenset(v.leaves for v in T.internal_nodes()))


def ranked_topology(T):
    levels = {}
    for v in T.internal_nodes():
        levels.setdefault(v.height, set()).add(v.leaves)
    return RankedTopology(tuple(frozenset(levels[h]) for h in sorted(levels)))


def closer_pair(clusters, triple):
    """The pair of the triple split off from the third by some cluster, or None for a fan."""

    found = [
        (a, b)
        for a, b in itertools.combinations(triple, 2)
        if any(a in C and b in C and (set(triple) - {a, b}).isdisjoint(C) for C in clusters)
    ]
    return found[0] if found else None


def _triangle_maxima(n, ordered, bases, M, index, triangle):
    edges = [index[p] for p in itertools.combinations(triangle, 2)]
    maxima = set()
    for e in edges:
        T = next((B for B in ordered if e in B), None)
        if T is None:
            raise InvalidInputError("edge {} lies in no minimum spanning tree".format(e))
        for x in edges:
            if x == e:
                continue
            swapped = (T - {e}) | {x}
            if len(swapped) == n - 1 and M.is_independent(swapped):
                if swapped in bases:
                    maxima.add(e)
                break
    return [p for p in itertools.combinations(triangle, 2) if index[p] in maxima]


def topology_from_min_bases(n, family):
    """
    Tree shape from the minimum spanning trees of an ultrametric weighting
    of K_n. An edge e of a triangle is maximum iff swapping it for another
    triangle edge in a minimum tree through e stays minimum; the maxima of
    each triangle tell which leaf branched off first.
    """

    M = complete_graph_matroid(n)
    index = {p: k + 1 for p, k in pair_index(n).items()}
    bases = frozenset(family)
    ordered = sorted(bases, key=sorted)
    triples = []
    for triangle in itertools.combinations(range(1, n + 1), 3):
        maxima = _triangle_maxima(n, ordered, bases, M, index, triangle)
        if len(maxima) == 3:
            continue
        if len(maxima) != 2:
            raise InvalidInputError("triangle {} has {} maximum edges".format(triangle, len(maxima)))
        close = next(p for p in itertools.combinations(triangle, 2) if p not in maxima)
        triples.append((close, (set(triangle) - set(close)).pop()))

    clusters = set()

    def build(X):
        if len(X) == 1:
            return
        joined = nx.Graph()
        joined.add_nodes_from(X)
        for (a, b), c in triples:
            if a in X and b in X and c in X:
                joined.add_edge(a, b)
        parts = list(nx.connected_components(joined))
        if len(parts) == 1:
            raise InvalidInputError("triple data on {} does not split".format(sorted(X)))
        clusters.add(frozenset(X))
        for part in parts:
            build(frozenset(part))

    build(frozenset(range(1, n + 1)))
    for triangle in itertools.combinations(range(1, n + 1), 3):
        observed = next((close for close, c in triples if set(close) | {c} == set(triangle)), None)
        if closer_pair(clusters, triangle) != observed:
            raise InvalidInputError("triple data is not consistent with a tree at {}".format(triangle))
    return UnrankedTopology(frozenset(clusters))


def _node_to_json(v):
    if v.is_leaf:
        return {"leaf": v.label}
    return {"height": format_rational(v.height), "children": [_node_to_json(c) for c in v.children]}


def _node_from_json(doc):
    if not isinstance(doc, dict):
        raise InvalidInputError("tree node must be an object, got {!r}".format(doc))
    if "leaf" in doc:
        if isinstance(doc["leaf"], bool) or not isinstance(doc["leaf"], int):
            raise InvalidInputError("leaf label must be an integer")
        return leaf(doc["leaf"])
    try:
        return node(doc["height"], [_node_from_json(c) for c in doc["children"]])
    except (KeyError, TypeError) as ex:
        raise InvalidInputError("internal node needs 'height' and 'children': {!r}".format(ex)) from ex


def tree_to_json(T):
    return _node_to_json(T.root)


def tree_from_json(doc):
    return EquidistantTree(_node_from_json(doc))


def _decimal(x):
    if is_decimal(x):
        with localcontext() as ctx:
            ctx.prec = 100
            text = format(Decimal(x.numerator) / Decimal(x.denominator), "f")
        return text, False
    return repr(float(x)), True


def to_newick(T):
    """Newick with branch lengths; lengths that are not finite decimals are rounded."""

    lossy = []

    def render(v, parent_height):
        if v.is_leaf:
            text = str(v.label)
        else:
            text = "(" + ",".join(render(c, v.height) for c in v.children) + ")"
        if parent_height is None:
            return text
        length, rounded = _decimal(parent_height - v.height)
        lossy.append(rounded)
        return "{}:{}".format(text, length)

    text = render(T.root, None) + ";"
    if any(lossy):
        logger.warning("newick export rounded %d branch lengths", sum(lossy))
    return text

import itertools
import json
import logging

from dataclasses import dataclass

import networkx as nx

from matroids.errors import BergmanError, InvalidInputError, ResourceLimitError
from matroids.lattice import flat_key, lattice_of_flats
from matroids.weights import Flag, matroid_of_flag, min_bases_bruteforce, representative_weights


logger = logging.getLogger(__name__)

FLAG_BUDGET = 10**6


@dataclass(frozen=True)
class SimplicialComplex:
    """
    vertices[k] is the flat behind vertex id k; maximal_faces are sorted
    tuples of ids. Every subset of a maximal face is a face.
    """

    vertices: tuple
    maximal_faces: tuple

    def faces(self):
        found = set()
        for face in self.maximal_faces:
            for size in range(1, len(face) + 1):
                found.update(itertools.combinations(face, size))
        return found

    def f_vector(self):
        counts = [0] * (self.dimension + 1)
        for face in self.faces():
            counts[len(face) - 1] += 1
        return counts

    @property
    def dimension(self):
        return max((len(face) - 1 for face in self.maximal_faces), default=-1)

    def is_pure(self):
        return len({len(face) for face in self.maximal_faces}) <= 1

    def skeleton(self):
        G = nx.Graph()
        G.add_nodes_from(range(len(self.vertices)))
        for face in self.maximal_faces:
            G.add_edges_from(itertools.combinations(face, 2))
        return G

    def is_connected(self):
        return bool(self.vertices) and nx.is_connected(self.skeleton())


EMPTY_COMPLEX = SimplicialComplex((), ())


@dataclass(frozen=True)
class CoarseCell:
    member_flags: frozenset
    signature: object

    @property
    def dimension(self):
        return max(len(F.proper()) for F in self.member_flags) - 1

    def flats(self):
        return frozenset(G for F in self.member_flags for G in F.proper())

    def sort_key(self):
        return (self.dimension, sorted(F.to_lists() for F in self.member_flags))


@dataclass(frozen=True)
class DiamondReport:
    rank: int
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool

    @property
    def agree(self):
        return self.cond_i == self.cond_ii == self.cond_iii == self.cond_iv


def order_complex_fine(M, L=None):
    """
    Order complex of the proper part of the lattice of flats; its faces
    are the valid flags. Empty when M has loops or rank <= 1.
    """

    if M.loops() or M.rank_full <= 1:
        return EMPTY_COMPLEX
    L = L or lattice_of_flats(M)
    vertices = tuple(L.proper())
    ids = {F: k for k, F in enumerate(vertices)}
    faces = sorted(tuple(ids[F] for F in chain[1:-1]) for chain in L.maximal_chains())
    SC = SimplicialComplex(vertices, tuple(faces))
    logger.debug("fine complex of %r: %d vertices, %d maximal faces", M, len(vertices), len(faces))
    return SC


def reduced_euler(SC):
    return sum((-1) ** k * f for k, f in enumerate(SC.f_vector())) - 1


def valid_flags(M, L=None, budget=FLAG_BUDGET):
    """Every flag of flats, the trivial one included; none when M has loops."""

    if M.loops():
        return []
    L = L or lattice_of_flats(M)
    proper = set(L.proper())
    flags = []
    stack = [()]
    while stack:
        chain = stack.pop()
        flags.append(Flag.from_chain(chain, M.n))
        if len(flags) > budget:
            raise ResourceLimitError("more than {} flags".format(budget))
        start = chain[-1] if chain else L.bottom
        for G in sorted(nx.descendants(L.hasse, start) & proper, key=flat_key, reverse=True):
            stack.append(chain + (G,))
    return sorted(flags, key=lambda F: (len(F.sets), F.to_lists()))


def maximal_flags(L):
    return [Flag(chain) for chain in L.maximal_chains()]


def _maximal_valid(M, F):
    r = M.rank_full
    return len(F.sets) == r + 1 and all(M.rank(S) == i and M.is_flat(S) for i, S in enumerate(F.sets))


def adjacent_pairs(flags):
    """Pairs of maximal flags that differ in exactly one rank, with that rank."""

    buckets = {}
    for F in flags:
        for i in range(1, len(F.sets) - 1):
            buckets.setdefault((i, F.sets[:i], F.sets[i + 1 :]), []).append(F)
    pairs = []
    for (i, _, _), members in sorted(buckets.items(), key=lambda item: item[0][0]):
        for F, G in itertools.combinations(members, 2):
            pairs.append((F, G, i))
    return pairs


def diamond_equivalence(M, F, G):
    if F.n != M.n or G.n != M.n:
        raise InvalidInputError("flags and matroid have different ground sets")
    if not (_maximal_valid(M, F) and _maximal_valid(M, G)):
        raise InvalidInputError("diamond criterion needs maximal flags of flats")
    differ = [i for i, (S, T) in enumerate(zip(F.sets, G.sets)) if S != T]
    if len(differ) != 1:
        raise InvalidInputError("flags are not adjacent, they differ in ranks {}".format(differ))
    i = differ[0]
    lower, middle, other, upper = F.sets[i - 1], F.sets[i], G.sets[i], F.sets[i + 1]
    signature = matroid_of_flag(M, F).bases()
    cond_i = signature == matroid_of_flag(M, G).bases()
    cond_ii = signature == matroid_of_flag(M, F.without(i)).bases()
    cond_iii = middle | other == upper
    between = {M.closure(lower | {e}) for e in upper - lower}
    cond_iv = len(between) == 2
    return DiamondReport(i, cond_i, cond_ii, cond_iii, cond_iv)


def diamond_classes(M, L=None):
    """Maximal flags merged along adjacent pairs whose rank-2 interval is a diamond."""

    L = L or lattice_of_flats(M)
    flags = maximal_flags(L)
    blocks = nx.utils.UnionFind(flags)
    for F, G, _ in adjacent_pairs(flags):
        if diamond_equivalence(M, F, G).cond_iv:
            blocks.union(F, G)
    return frozenset(frozenset(block) for block in blocks.to_sets())


def coarse_cells(M, L=None, budget=FLAG_BUDGET):
    """
    Nontrivial valid flags grouped by the basis family of M_F. The trivial
    flag is the constant-weight direction and belongs to no cell.
    """

    if M.loops():
        return []
    groups = {}
    for F in valid_flags(M, L, budget):
        if F.is_trivial():
            continue
        groups.setdefault(matroid_of_flag(M, F).bases(), []).append(F)
    cells = [CoarseCell(frozenset(flags), signature) for signature, flags in groups.items()]
    cells.sort(key=CoarseCell.sort_key)
    logger.debug("coarse subdivision of %r: %d cells", M, len(cells))
    return cells


def check_signatures(M, cells):
    """
    Flags whose representative weight vector does not reproduce the
    cell signature through the brute-force minimum; empty when consistent.
    """

    mismatches = []
    for cell in cells:
        for F in cell.member_flags:
            if min_bases_bruteforce(M, representative_weights(F)) != cell.signature:
                mismatches.append(F)
    return mismatches


def coarse_graph(cells):
    """1-skeleton of the coarse subdivision, nodes are indices into cells."""

    single = {}
    for k, cell in enumerate(cells):
        for F in cell.member_flags:
            if len(F.proper()) == 1:
                single[F.proper()[0]] = k
    G = nx.Graph()
    for k, cell in enumerate(cells):
        if cell.dimension == 0:
            G.add_node(k, flats=sorted((sorted(H) for H in cell.flats())))
    for k, cell in enumerate(cells):
        if cell.dimension != 1:
            continue
        ends = sorted({single[H] for H in cell.flats() if cells[single[H]].dimension == 0})
        if len(ends) != 2:
            raise BergmanError("edge cell {} has {} vertex cells".format(k, len(ends)))
        G.add_edge(*ends, cell=k)
    return G


def smooth_degree_two(G):
    """Replace every path u - v - w through a degree-2 vertex v by an edge u - w."""

    H = nx.Graph(G)
    changed = True
    while changed:
        changed = False
        for v in sorted(H.nodes):
            neighbours = list(H.neighbors(v))
            if len(neighbours) == 2 and not H.has_edge(*neighbours):
                H.remove_node(v)
                H.add_edge(*neighbours)
                changed = True
                break
    return H


def _flat_label(F):
    return ",".join(str(e) for e in sorted(F))


def _complex_document(SC):
    return {
        "vertices": [{"id": k, "flat": sorted(F)} for k, F in enumerate(SC.vertices)],
        "maximal_faces": [list(face) for face in SC.maximal_faces],
    }


def _dot(name, nodes, edges):
    lines = ["graph {} {{".format(name)]
    for k, label in nodes:
        lines.append('  {} [label="{}"];'.format(k, label))
    for u, v in edges:
        lines.append("  {} -- {};".format(u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_complex(SC, fmt="json", cells=None):
    """
    JSON for any complex; DOT only for complexes of dimension <= 1. With
    cells the coarse subdivision is exported instead of the fine one.
    """

    if fmt == "json":
        doc = _complex_document(SC)
        if cells is not None:
            doc["cells"] = [
                {"flags": sorted(F.to_lists() for F in cell.member_flags), "n_bases": len(cell.signature)}
                for cell in cells
            ]
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt != "dot":
        raise InvalidInputError("unknown format {!r}".format(fmt))
    if SC.dimension > 1:
        raise InvalidInputError("DOT export needs a complex of dimension <= 1, got {}".format(SC.dimension))
    if cells is None:
        nodes = [(k, _flat_label(F)) for k, F in enumerate(SC.vertices)]
        edges = sorted(SC.skeleton().edges)
        return _dot("fine", nodes, edges).encode()
    G = coarse_graph(cells)
    nodes = [(k, " | ".join(_flat_label(F) for F in G.nodes[k]["flats"])) for k in sorted(G.nodes)]
    edges = sorted(tuple(sorted(e)) for e in G.edges)
    return _dot("coarse", nodes, edges).encode()

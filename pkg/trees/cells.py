import logging

from dataclasses import dataclass

from matroids.fan import FLAG_BUDGET, coarse_cells
from matroids.lattice import lattice_of_flats
from matroids.matroid import complete_graph_matroid
from matroids.weights import flag_of, representative_weights
from trees.equidistant import ranked_topology, tree_to_ultrametric, ultrametric_to_tree, unranked_topology
from trees.ultrametric import EdgeWeighting, delta_to_weights, weights_to_delta


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivisionReport:
    n: int
    fine_cells: int
    coarse_cells: int
    ranked_topologies: int
    unranked_topologies: int
    coarse_cells_single_shape: bool

    @property
    def consistent(self):
        return (
            self.coarse_cells_single_shape
            and self.fine_cells == self.ranked_topologies
            and self.coarse_cells == self.unranked_topologies
        )


def tree_of_flag(n, F):
    """The equidistant tree of the representative weights of a flag of flats of M(K_n)."""

    w = [x + 1 for x in representative_weights(F)]
    return ultrametric_to_tree(weights_to_delta(EdgeWeighting(n, tuple(w))))


def flag_of_tree(T):
    return flag_of(delta_to_weights(tree_to_ultrametric(T)).values)


def order_complex_subdivides_tree_space(n, budget=FLAG_BUDGET):
    """
    Walk the coarse cells of M(K_n) and the flags inside them. Each flag is
    a fine cell and must give its own ranked topology; all flags of one
    coarse cell must give the same unranked topology, and different coarse
    cells different ones.
    """

    M = complete_graph_matroid(n)
    cells = coarse_cells(M, lattice_of_flats(M), budget)
    ranked = set()
    shapes = set()
    single = True
    fine = 0
    for cell in cells:
        cell_shapes = set()
        for F in cell.member_flags:
            T = tree_of_flag(n, F)
            ranked.add(ranked_topology(T))
            cell_shapes.add(unranked_topology(T))
            fine += 1
        single = single and len(cell_shapes) == 1
        shapes |= cell_shapes
    report = SubdivisionReport(n, fine, len(cells), len(ranked), len(shapes), single)
    logger.debug("subdivision of tree space on %d leaves: %r", n, report)
    return report

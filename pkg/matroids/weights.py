import itertools
import logging
import math

from dataclasses import dataclass
from fractions import Fraction

from matroids.errors import BergmanError, InvalidInputError
from matroids.matroid import (
    ENUMERATION_BUDGET,
    BasisFamily,
    BasisMatroid,
    check_budget,
    direct_sum_all,
    weight_of,
)
from matroids.rational import to_rationals


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flag:
    """
    Strict chain empty = F_0 < F_1 < ... < F_{k+1} = {1..n}.
    Stored as a tuple of frozensets including both ends.
    """

    sets: tuple

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if len(sets) < 2 and sets != (frozenset(),):
            raise InvalidInputError("a flag needs at least the empty set and the ground set")
        if sets[0]:
            raise InvalidInputError("a flag starts with the empty set")
        n = len(sets[-1])
        if sets[-1] != frozenset(range(1, n + 1)):
            raise InvalidInputError("a flag ends with the full ground set 1..n")
        for lower, upper in zip(sets, sets[1:]):
            if not lower < upper:
                raise InvalidInputError("flag is not strictly nested at {} / {}".format(sorted(lower), sorted(upper)))

    @classmethod
    def from_chain(cls, chain, n):
        """Wrap a chain of proper subsets with the empty set and the ground set."""
        ground = frozenset(range(1, n + 1))
        sets = [frozenset(s) for s in chain]
        if not sets or sets[0]:
            sets.insert(0, frozenset())
        if sets[-1] != ground:
            sets.append(ground)
        return cls(tuple(sets))

    @property
    def n(self):
        return len(self.sets[-1])

    def proper(self):
        return self.sets[1:-1]

    def layers(self):
        return [upper - lower for lower, upper in zip(self.sets, self.sets[1:])]

    def without(self, i):
        return Flag(self.sets[:i] + self.sets[i + 1 :])

    def is_trivial(self):
        return len(self.sets) <= 2

    def to_lists(self):
        return [sorted(s) for s in self.sets]


def weight_vector(values, n=None):
    w = to_rationals(values)
    if n is not None and len(w) != n:
        raise InvalidInputError("weight vector has {} entries, ground set has {}".format(len(w), n))
    return w


def flag_of(w):
    w = to_rationals(w)
    n = len(w)
    levels = sorted(set(w))
    sets = [frozenset()]
    for value in levels:
        sets.append(sets[-1] | frozenset(i + 1 for i in range(n) if w[i] == value))
    if n == 0:
        return Flag((frozenset(),))
    return Flag(tuple(sets))


def representative_weights(F):
    """Layer i of the flag gets weight i - 1, a point inside its weight class."""

    w = [None] * F.n
    for index, layer in enumerate(F.layers()):
        for e in layer:
            w[e - 1] = Fraction(index)
    return tuple(w)


def random_weights(n, rng, values=4):
    """Halves and whole numbers below values, so ties are common."""
    return tuple(Fraction(rng.randrange(2 * values), rng.choice((1, 2))) for _ in range(n))


def _check_flag(M, F):
    if F.n != M.n:
        raise InvalidInputError("flag lives on 1..{}, matroid on 1..{}".format(F.n, M.n))


def greedy_basis(M, w):
    """One run of the greedy algorithm, ties broken by element index."""

    w = weight_vector(w, M.n)
    basis = frozenset()
    for e in sorted(M.ground, key=lambda e: (w[e - 1], e)):
        if M.is_independent(basis | {e}):
            basis = basis | {e}
    return basis


def min_bases_greedy(M, w, budget=ENUMERATION_BUDGET):
    """
    All possible outputs of the greedy algorithm: per layer of flag_of(w),
    the subsets X with |X| = r(F_i) - r(F_{i-1}) that extend a basis of
    F_{i-1} to a basis of F_i. The family is their product.
    """

    w = weight_vector(w, M.n)
    F = flag_of(w)
    choices = []
    for lower, upper in zip(F.sets, F.sets[1:]):
        layer = sorted(upper - lower)
        need = M.rank(upper) - M.rank(lower)
        check_budget(math.comb(len(layer), need), budget, "greedy layer")
        target = M.rank(upper)
        choices.append([frozenset(c) for c in itertools.combinations(layer, need) if M.rank(lower.union(c)) == target])
    check_budget(math.prod(len(c) for c in choices), budget, "greedy product")
    found = frozenset(frozenset().union(*parts) for parts in itertools.product(*choices))
    return BasisFamily(M.rank_full, found)


def min_bases_bruteforce(M, w, budget=ENUMERATION_BUDGET):
    w = weight_vector(w, M.n)
    family = M.bases(budget)
    weights = {b: weight_of(b, w) for b in family}
    best = min(weights.values())
    return BasisFamily(family.r, frozenset(b for b, value in weights.items() if value == best))


def matroid_of_flag(M, F, budget=ENUMERATION_BUDGET):
    """
    M_F as an explicit matroid: bases of M meeting every F_i in r(F_i)
    elements. F does not have to be a flag of flats.
    """

    _check_flag(M, F)
    targets = [(S, M.rank(S)) for S in F.sets]
    found = [b for b in M.bases(budget) if all(len(b & S) == r for S, r in targets)]
    return BasisMatroid(M.n, found, check=False)


def decompose_minors(M, F):
    """[(M|F_i)/F_{i-1}] for i = 1..k+1, each on its layer in ascending order."""

    _check_flag(M, F)
    minors = []
    for lower, upper in zip(F.sets, F.sets[1:]):
        index = {e: i + 1 for i, e in enumerate(sorted(upper))}
        minors.append(M.restrict(upper).contract({index[e] for e in lower}))
    return minors


def minor_sum_bases(M, F):
    """Basis family of the direct sum of decompose_minors, in M's elements."""

    order = [e for layer in F.layers() for e in sorted(layer)]
    total = direct_sum_all(decompose_minors(M, F))
    family = total.bases()
    return BasisFamily(family.r, frozenset(frozenset(order[p - 1] for p in b) for b in family))


def is_valid_flag(M, F):
    """
    M_F has no loops. Decided twice: from the loops of M_F and from
    whether every member of F is a flat; the two answers must coincide.
    """

    _check_flag(M, F)
    loop_free = not matroid_of_flag(M, F).loops()
    all_flats = all(M.is_flat(S) for S in F.sets)
    if loop_free != all_flats:
        raise BergmanError("flag {} is loop-free={} but all-flats={}".format(F.to_lists(), loop_free, all_flats))
    return loop_free


def in_bergman_fan(M, w):
    return is_valid_flag(M, flag_of(weight_vector(w, M.n)))

from matroids.errors import InvalidInputError
from matroids.matroid import (
    BasisMatroid,
    GraphicMatroid,
    LinearMatroid,
    UniformMatroid,
    build_graphic,
    build_linear,
    build_uniform,
    from_bases,
)
from matroids.rational import format_rational, to_rationals
from matroids.weights import Flag


def _integer(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError("{} must be an integer, got {!r}".format(what, value))
    return value


def matroid_from_json(doc):
    """
    {"type": "graphic", "vertices": k, "edges": [[u, v], ...]}  vertices 0..k-1
    {"type": "uniform", "r": r, "n": n}
    {"type": "linear", "matrix": [["p/q", ...], ...]}
    {"type": "bases", "n": n, "bases": [[...], ...]}
    """

    if not isinstance(doc, dict) or "type" not in doc:
        raise InvalidInputError("matroid description needs a 'type' field")
    kind = doc["type"]
    try:
        if kind == "graphic":
            edges = []
            for edge in doc["edges"]:
                if len(edge) != 2:
                    raise InvalidInputError("edge {!r} is not a pair".format(edge))
                edges.append((_integer(edge[0], "endpoint"), _integer(edge[1], "endpoint")))
            return build_graphic(_integer(doc["vertices"], "vertices"), edges)
        if kind == "uniform":
            return build_uniform(_integer(doc["r"], "r"), _integer(doc["n"], "n"))
        if kind == "linear":
            return build_linear(doc["matrix"])
        if kind == "bases":
            bases = [[_integer(e, "element") for e in b] for b in doc["bases"]]
            return from_bases(_integer(doc["n"], "n"), bases)
    except (KeyError, TypeError) as ex:
        raise InvalidInputError("malformed {} matroid: {!r}".format(kind, ex)) from ex
    raise InvalidInputError("unknown matroid type {!r}".format(kind))


def matroid_to_json(M):
    if isinstance(M, GraphicMatroid):
        return {"type": "graphic", "vertices": M.vertices, "edges": [list(e) for e in M.edges]}
    if isinstance(M, UniformMatroid):
        return {"type": "uniform", "r": M.r, "n": M.n}
    if isinstance(M, LinearMatroid):
        return {"type": "linear", "matrix": [[format_rational(x) for x in row] for row in M.rows]}
    if isinstance(M, BasisMatroid):
        return {"type": "bases", "n": M.n, "bases": M.bases().sorted()}
    raise InvalidInputError("cannot serialize {!r}".format(M))


def weights_from_json(values, n=None):
    if not isinstance(values, list):
        raise InvalidInputError("weights must be a JSON array of 'p/q' strings")
    w = to_rationals(values)
    if n is not None and len(w) != n:
        raise InvalidInputError("weight vector has {} entries, ground set has {}".format(len(w), n))
    return w


def weights_to_json(w):
    return [format_rational(x) for x in w]


def flag_from_json(lists):
    return Flag(tuple(frozenset(s) for s in lists))


def flag_to_json(F):
    return F.to_lists()


def family_to_json(family):
    return {"r": family.r, "bases": family.sorted()}


def lattice_to_json(L):
    ids = {F: k for k, F in enumerate(L.flats)}
    return {
        "flats": [{"id": ids[F], "flat": sorted(F), "rank": L.rank[F]} for F in L.flats],
        "covers": sorted([ids[F], ids[G]] for F, G in L.hasse.edges),
    }

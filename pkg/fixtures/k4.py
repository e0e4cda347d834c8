# The complete graph on A, B, C, D. Edge k is the k-th pair in lexicographic
# order, so AB, AC, AD, BC, BD, CD are elements 1..6.


def get_edges():
    return [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]


def get_labels():
    return ["AB", "AC", "AD", "BC", "BD", "CD"]


def get_matroid():
    return {"type": "graphic", "vertices": 4, "edges": get_edges()}


def get_caterpillar_distances():
    # ((A, B), C), D with heights 1/2, 3/4, 1
    return ["1", "3/2", "2", "3/2", "2", "2"]


def get_tied_balanced_distances():
    # (A, B) and (C, D) joined at the same height
    return ["1", "2", "2", "2", "2", "1"]

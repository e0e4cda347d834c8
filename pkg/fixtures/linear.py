# Columns 1..4 span a plane and are pairwise independent inside it;
# column 5 sticks out of the plane.


def get_matrix():
    return [
        ["1", "0", "1", "1/2", "0"],
        ["0", "1", "1", "-1/3", "0"],
        ["0", "0", "0", "0", "2"],
    ]


def get_matroid():
    return {"type": "linear", "matrix": get_matrix()}


def get_flat_counts():
    return [1, 5, 5, 1]


def get_mobius_hat():
    return 3

from fixtures import k4, linear


def get_complete_graph(n):
    return {"type": "graphic", "vertices": n, "edges": [[i, j] for i in range(n) for j in range(i + 1, n)]}


def get_uniform(r, n):
    return {"type": "uniform", "r": r, "n": n}


def get_parallel_pair():
    # rank 2 on four elements, 1 and 2 parallel
    return {"type": "bases", "n": 4, "bases": [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}


def get_matroids():
    return {
        "K3": get_complete_graph(3),
        "K4": k4.get_matroid(),
        "U(2,3)": get_uniform(2, 3),
        "U(2,4)": get_uniform(2, 4),
        "U(3,5)": get_uniform(3, 5),
        "linear": linear.get_matroid(),
        "parallel": get_parallel_pair(),
    }


def get_euler_matroids():
    return {
        "K4": k4.get_matroid(),
        "K5": get_complete_graph(5),
        "U(2,4)": get_uniform(2, 4),
        "U(2,5)": get_uniform(2, 5),
        "U(3,5)": get_uniform(3, 5),
        "U(3,3)": get_uniform(3, 3),
        "linear": linear.get_matroid(),
    }

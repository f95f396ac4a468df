from functools import wraps
from types import GeneratorType


def chunks(l, n):
    """Yield successive n-sized chunks from l."""
    return [l[i : i + n] for i in range(0, len(l), n)]


def listify(func):
    @wraps(func)
    def new_func(*args, **kwargs):
        retval = func(*args, **kwargs)
        if isinstance(retval, GeneratorType):
            return list(retval)
        return retval

    return new_func


def pairs(n):
    """
    Lists every unordered vertex pair of a graph on `n` vertices in lexicographic order.

    :param n: The vertex count.
    :return: A list of `(u, v)` tuples with `u < v`.
    """
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def column_major_pairs(n):
    """
    Lists every unordered vertex pair in the order graph6 packs the upper triangle: for each column `j`, rows
    `0..j-1`.
    """
    return [(i, j) for j in range(1, n) for i in range(j)]

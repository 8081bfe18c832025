"""Exhaustive reference computations, deliberately naive and independent of the solvers."""
from itertools import combinations, product


def adjacent(g, u, v):
    return (g.rows[u] >> v) & 1 == 1


def is_clique(g, verts):
    return all(adjacent(g, u, v) for u, v in combinations(verts, 2))


def is_independent(g, verts):
    return not any(adjacent(g, u, v) for u, v in combinations(verts, 2))


def brute_clique_number(g):
    for size in range(g.n, 0, -1):
        if any(is_clique(g, s) for s in combinations(range(g.n), size)):
            return size
    return 0


def brute_independence_number(g):
    for size in range(g.n, 0, -1):
        if any(is_independent(g, s) for s in combinations(range(g.n), size)):
            return size
    return 0


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_chromatic_number(g):
    """Smallest k admitting a proper assignment in {0..k-1}^n."""
    if g.n == 0:
        return 0
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if adjacent(g, u, v)]
    for k in range(1, g.n + 1):
        # fixing vertex 0 to colour 0 loses nothing
        for rest in product(range(k), repeat=g.n - 1):
            c = (0,) + rest
            if all(c[u] != c[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def brute_chromatic_by_partitions(g):
    return min((len(p) for p in set_partitions(list(range(g.n)))
                if all(is_independent(g, b) for b in p)), default=0)


def brute_cochromatic_number(g):
    return min((len(p) for p in set_partitions(list(range(g.n)))
                if all(is_independent(g, b) or is_clique(g, b) for b in p)), default=0)


def brute_count_colorings(g, k):
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if adjacent(g, u, v)]
    return sum(1 for c in product(range(k), repeat=g.n) if all(c[u] != c[v] for u, v in edges))

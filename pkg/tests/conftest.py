"""Shared test helpers: independent brute-force oracles and generators.

Everything here deliberately avoids the production solver paths so the
tests cross-check two unrelated implementations.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, groupby

from degseqopt import Graph


# ---------------------------------------------------------------------------
# naive exact solvers (subset enumeration, smallest-first / largest-first)


def naive_domination(g: Graph) -> int:
    n = g.n
    if n == 0:
        return 0
    closed = [set(g.adjacency_sets[v]) | {v} for v in range(n)]
    everything = set(range(n))
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            covered = set()
            for v in subset:
                covered |= closed[v]
            if covered == everything:
                return size
    raise AssertionError("the full vertex set always dominates")


def naive_independence(g: Graph) -> int:
    n = g.n
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return 0


def naive_clique(g: Graph) -> int:
    n = g.n
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return 0


def all_graphs(n: int):
    """Every labeled graph on n vertices (use only for small n)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


# ---------------------------------------------------------------------------
# random graph generators (seeded by the caller)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n <= 1:
        return Graph(n)
    if n == 2:
        return Graph(2, [(0, 1)])
    pruefer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in pruefer:
        degree[x] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for x in pruefer:
        leaf = leaves.pop(0)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            import bisect

            bisect.insort(leaves, x)
    u, v = leaves[0], leaves[1]
    edges.append((min(u, v), max(u, v)))
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """Random tree plus ``extra_edges`` distinct chords."""
    tree = random_tree(rng, n)
    present = set(tree.edges())
    non_edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in present
    ]
    if extra_edges > len(non_edges):
        raise ValueError("not enough non-edges")
    chords = rng.sample(non_edges, extra_edges)
    return Graph(n, sorted(present | set(chords)))


# ---------------------------------------------------------------------------
# independent bipartite existence checks


def bipartite_exists_bruteforce(lower_left, upper_left, lower_right, upper_right) -> bool:
    """Exhaustive search for a bipartite graph within the degree bounds.

    Assigns left vertices one at a time; right vertices are tracked as a
    sorted multiset of (remaining need, remaining capacity) pairs, which
    makes identical right vertices interchangeable and the memo small.
    """
    m = len(lower_left)
    start = tuple(sorted(zip(lower_right, upper_right)))

    @lru_cache(maxsize=None)
    def exists(i: int, state: tuple) -> bool:
        if i == m:
            return all(need == 0 for need, _ in state)
        total_need = sum(need for need, _ in state)
        if total_need > sum(upper_left[i:]):
            return False
        classes = [(key, len(list(grp))) for key, grp in groupby(state)]
        a, b = lower_left[i], upper_left[i]

        def assign(ci: int, total: int, picks: list[int]) -> bool:
            if total > b:
                return False
            if ci == len(classes):
                if total < a:
                    return False
                new: list[tuple[int, int]] = []
                for ((need, cap), mult), t in zip(classes, picks):
                    new.extend([(need, cap)] * (mult - t))
                    new.extend([(max(0, need - 1), cap - 1)] * t)
                return exists(i + 1, tuple(sorted(new)))
            (need, cap), mult = classes[ci]
            top = min(mult, b - total) if cap > 0 else 0
            for t in range(top, -1, -1):
                picks.append(t)
                if assign(ci + 1, total + t, picks):
                    picks.pop()
                    return True
                picks.pop()
            return False

        return assign(0, 0, [])

    result = exists(0, start)
    exists.cache_clear()
    return result


def bipartite_exact_hh(left_degrees, right_degrees) -> bool:
    """Bipartite Havel-Hakimi style check for exact degrees on both sides."""
    if sum(left_degrees) != sum(right_degrees):
        return False
    rights = sorted(right_degrees, reverse=True)
    for d in sorted(left_degrees, reverse=True):
        if d > len(rights):
            return False
        if d > 0 and rights[d - 1] == 0:
            return False
        for i in range(d):
            rights[i] -= 1
        rights.sort(reverse=True)
    return all(r == 0 for r in rights)


def iter_bound_pairs(max_bound: int):
    """All (lower, upper) pairs with 0 <= lower <= upper <= max_bound."""
    return [
        (a, b) for a in range(max_bound + 1) for b in range(a, max_bound + 1)
    ]


def iter_bound_multisets(size: int, max_bound: int):
    """All multisets of (lower, upper) pairs of the given size."""
    return combinations_with_replacement_list(iter_bound_pairs(max_bound), size)


def combinations_with_replacement_list(items, size):
    from itertools import combinations_with_replacement

    return combinations_with_replacement(items, size)

"""Exact solvers for domination, independence, and clique numbers.

Two engines sit behind one interface:

* subset tables for small vertex counts: one big-integer bitmap over all
  2^n vertex subsets marks the dominating (resp. independent) ones, built
  with n shift-and-mask doubling steps;
* branch and bound beyond the table range: minimum set cover over closed
  neighborhoods for domination, and a clique-cover-bounded search for
  independence.

Both are exact; graphs are first split into connected components (gamma
and alpha are additive over components, omega is a maximum).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import TooLarge
from .graphs import Graph

__all__ = [
    "DEFAULT_SOLVER_LIMIT",
    "domination_number",
    "independence_number",
    "clique_number",
]

DEFAULT_SOLVER_LIMIT = 32
_TABLE_MAX = 14  # 2^14-bit bitmaps; beyond this branch and bound takes over


@lru_cache(maxsize=None)
def _tables(n: int):
    """Shared bitmap helpers for subset tables of width 2^n.

    ALLOW[b] marks the subset indices whose bit b is clear; BY_SIZE[c]
    marks the indices of popcount c; FULL is the all-ones bitmap.
    """
    width = 1 << n
    allow = []
    for b in range(n):
        unit = (1 << (1 << b)) - 1
        m = unit
        span = 1 << (b + 1)
        while span < width:
            m |= m << span
            span <<= 1
        allow.append(m & ((1 << width) - 1))
    by_size = [1]
    for v in range(n):
        shift = 1 << v
        new = [0] * (v + 2)
        for c in range(v + 1):
            new[c] |= by_size[c]
            new[c + 1] |= by_size[c] << shift
        by_size = new
    full = (1 << width) - 1
    return allow, tuple(by_size), full


def _subsets_avoiding(bits: int, allow: list[int], full: int) -> int:
    """Bitmap of subset indices disjoint from ``bits``."""
    out = full
    while bits:
        lb = bits & -bits
        out &= allow[lb.bit_length() - 1]
        bits ^= lb
    return out


def _dominating_bitmap(masks: tuple[int, ...], n: int) -> int:
    allow, _, full = _tables(n)
    dom = full
    for u in range(n):
        cn = masks[u] | (1 << u)
        dom &= full ^ _subsets_avoiding(cn, allow, full)
    return dom


def _independent_bitmap(masks: tuple[int, ...], n: int) -> int:
    allow, _, full = _tables(n)
    ind = 1
    for v in range(n):
        lower = masks[v] & ((1 << v) - 1)
        ind |= (ind & _subsets_avoiding(lower, allow, full)) << (1 << v)
    return ind


def _smallest_member(bitmap: int, n: int) -> tuple[int, int]:
    _, by_size, _ = _tables(n)
    for c in range(n + 1):
        hit = bitmap & by_size[c]
        if hit:
            return c, (hit & -hit).bit_length() - 1
    raise AssertionError("bitmap is empty")


def _largest_member(bitmap: int, n: int) -> tuple[int, int]:
    _, by_size, _ = _tables(n)
    for c in range(n, -1, -1):
        hit = bitmap & by_size[c]
        if hit:
            return c, (hit & -hit).bit_length() - 1
    raise AssertionError("bitmap is empty")


def _bits(mask: int):
    while mask:
        lb = mask & -mask
        yield lb.bit_length() - 1
        mask ^= lb


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _gamma_table(masks: tuple[int, ...], n: int) -> tuple[int, set[int]]:
    size, subset = _smallest_member(_dominating_bitmap(masks, n), n)
    return size, set(_bits(subset))


def _alpha_table(masks: tuple[int, ...], n: int) -> tuple[int, set[int]]:
    size, subset = _largest_member(_independent_bitmap(masks, n), n)
    return size, set(_bits(subset))


def _gamma_branch_bound(masks: tuple[int, ...], n: int) -> tuple[int, set[int]]:
    """Minimum set cover over closed-neighborhood masks."""
    full = (1 << n) - 1
    cn = [masks[v] | (1 << v) for v in range(n)]

    # greedy initial cover for the upper bound
    uncovered = full
    greedy: list[int] = []
    while uncovered:
        v = max(range(n), key=lambda x: (_popcount(cn[x] & uncovered), -x))
        greedy.append(v)
        uncovered &= ~cn[v]
    best_size = len(greedy)
    best_set = list(greedy)

    def rec(uncovered: int, chosen: list[int]) -> None:
        nonlocal best_size, best_set
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = list(chosen)
            return
        max_cover = max(_popcount(cn[v] & uncovered) for v in range(n))
        lower = (_popcount(uncovered) + max_cover - 1) // max_cover
        if len(chosen) + lower >= best_size:
            return
        # branch on the hardest-to-cover uncovered vertex; its coverers
        # are exactly its closed neighborhood
        u = min(_bits(uncovered), key=lambda x: _popcount(cn[x]))
        cands = sorted(_bits(cn[u]), key=lambda v: (-_popcount(cn[v] & uncovered), v))
        for v in cands:
            chosen.append(v)
            rec(uncovered & ~cn[v], chosen)
            chosen.pop()

    rec(full, [])
    return best_size, set(best_set)


def _alpha_branch_bound(masks: tuple[int, ...], n: int) -> tuple[int, set[int]]:
    """Maximum independent set with a greedy clique-cover upper bound."""
    cn = [masks[v] | (1 << v) for v in range(n)]
    best_size = 0
    best_set: set[int] = set()

    def clique_cover_bound(pool: int) -> int:
        cliques: list[int] = []
        for v in _bits(pool):
            for i, c in enumerate(cliques):
                if c & ~masks[v] == 0:
                    cliques[i] = c | (1 << v)
                    break
            else:
                cliques.append(1 << v)
        return len(cliques)

    def rec(pool: int, current: list[int]) -> None:
        nonlocal best_size, best_set
        if not pool:
            if len(current) > best_size:
                best_size = len(current)
                best_set = set(current)
            return
        if len(current) + clique_cover_bound(pool) <= best_size:
            return
        v = max(_bits(pool), key=lambda x: (_popcount(masks[x] & pool), -x))
        current.append(v)
        rec(pool & ~cn[v], current)
        current.pop()
        rec(pool & ~(1 << v), current)

    rec((1 << n) - 1, [])
    return best_size, best_set


def _induced_masks(g: Graph, vertices: list[int]) -> tuple[int, ...]:
    index = {v: i for i, v in enumerate(vertices)}
    masks = []
    for v in vertices:
        m = 0
        for w in g.adjacency_sets[v]:
            if w in index:
                m |= 1 << index[w]
        masks.append(m)
    return tuple(masks)


def _solve_components(g: Graph, component_solver) -> tuple[int, set[int]]:
    total = 0
    chosen: set[int] = set()
    for comp in g.connected_components():
        masks = _induced_masks(g, comp)
        size, local = component_solver(masks, len(comp))
        total += size
        chosen.update(comp[i] for i in local)
    return total, chosen


def _check_limit(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise TooLarge(f"graph has {g.n} vertices, solver limit is {limit}")


def domination_number(g: Graph, limit: int = DEFAULT_SOLVER_LIMIT) -> tuple[int, frozenset[int]]:
    """Exact domination number of ``g`` plus one minimum dominating set."""
    _check_limit(g, limit)
    if g.n == 0:
        return 0, frozenset()
    if g.n <= _TABLE_MAX:
        size, chosen = _gamma_table(g.adjacency_masks, g.n)
        return size, frozenset(chosen)

    def solve(masks, n):
        if n <= _TABLE_MAX:
            return _gamma_table(masks, n)
        return _gamma_branch_bound(masks, n)

    size, chosen = _solve_components(g, solve)
    return size, frozenset(chosen)


def independence_number(g: Graph, limit: int = DEFAULT_SOLVER_LIMIT) -> tuple[int, frozenset[int]]:
    """Exact independence number of ``g`` plus one maximum independent set."""
    _check_limit(g, limit)
    if g.n == 0:
        return 0, frozenset()
    if g.n <= _TABLE_MAX:
        size, chosen = _alpha_table(g.adjacency_masks, g.n)
        return size, frozenset(chosen)

    def solve(masks, n):
        if n <= _TABLE_MAX:
            return _alpha_table(masks, n)
        return _alpha_branch_bound(masks, n)

    size, chosen = _solve_components(g, solve)
    return size, frozenset(chosen)


def clique_number(g: Graph, limit: int = DEFAULT_SOLVER_LIMIT) -> int:
    """Exact clique number, computed as the independence number of the complement."""
    _check_limit(g, limit)
    if g.n == 0:
        return 0
    full = (1 << g.n) - 1
    if g.adjacency_masks is not None:
        comp_masks = tuple(full ^ g.adjacency_masks[v] ^ (1 << v) for v in range(g.n))
        if g.n <= _TABLE_MAX:
            return _alpha_table(comp_masks, g.n)[0]
        comp = Graph._from_masks(g.n, comp_masks)
        return independence_number(comp, limit)[0]
    return independence_number(g.complement(), limit)[0]

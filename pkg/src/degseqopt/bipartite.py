"""Bipartite degree feasibility with per-vertex lower and upper bounds.

Feasibility is the Gale-Ryser inequality family generalized to degree
intervals: a bipartite graph with left degrees in [a_i, b_i] and right
degrees in [a'_j, b'_j] exists iff every prefix of the sorted lower
bounds on one side is covered by the capped upper bounds of the other.
Construction goes through an integral max-flow with lower bounds, so a
feasible spec always yields a concrete, deterministic realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import Infeasible, InvalidSequence
from .graphs import Graph

__all__ = [
    "BipartiteDegreeSpec",
    "gale_ryser_feasible",
    "build_bounded_bipartite",
]


@dataclass(frozen=True)
class BipartiteDegreeSpec:
    """Degree bounds for the two classes of a bipartite graph.

    Lower-bound sequences are stored non-increasing (the order Gale-Ryser
    style prefix conditions require); upper bounds travel with their
    vertices, and the permutations back to input order are recorded.
    """

    lower_left: tuple[int, ...]
    upper_left: tuple[int, ...]
    lower_right: tuple[int, ...]
    upper_right: tuple[int, ...]
    left_order: tuple[int, ...]
    right_order: tuple[int, ...]

    @classmethod
    def create(cls, lower_left, upper_left, lower_right, upper_right) -> "BipartiteDegreeSpec":
        ll, ul, lo = _sort_side(lower_left, upper_left, "left")
        lr, ur, ro = _sort_side(lower_right, upper_right, "right")
        return cls(ll, ul, lr, ur, lo, ro)

    @classmethod
    def exact(cls, left_degrees, right_degrees) -> "BipartiteDegreeSpec":
        """Spec with equal lower and upper bounds (classical exact degrees)."""
        return cls.create(left_degrees, left_degrees, right_degrees, right_degrees)

    @property
    def m(self) -> int:
        return len(self.lower_left)

    @property
    def n(self) -> int:
        return len(self.lower_right)

    @cached_property
    def is_exact(self) -> bool:
        return self.lower_left == self.upper_left and self.lower_right == self.upper_right


def _sort_side(lower, upper, side):
    lower = [int(x) for x in lower]
    upper = [int(x) for x in upper]
    if len(lower) != len(upper):
        raise InvalidSequence(f"{side} lower/upper lengths differ")
    if any(x < 0 for x in lower) or any(x < 0 for x in upper):
        raise InvalidSequence(f"{side} bounds must be non-negative")
    if any(a > b for a, b in zip(lower, upper)):
        raise InvalidSequence(f"{side} has a lower bound above its upper bound")
    order = sorted(range(len(lower)), key=lambda i: (-lower[i], i))
    return (
        tuple(lower[i] for i in order),
        tuple(upper[i] for i in order),
        tuple(order),
    )


def gale_ryser_feasible(spec: BipartiteDegreeSpec) -> bool:
    """True iff some bipartite graph meets all four bound families."""
    for k in range(1, spec.m + 1):
        lhs = sum(spec.lower_left[:k])
        rhs = sum(min(k, b) for b in spec.upper_right)
        if lhs > rhs:
            return False
    for k in range(1, spec.n + 1):
        lhs = sum(spec.lower_right[:k])
        rhs = sum(min(k, b) for b in spec.upper_left)
        if lhs > rhs:
            return False
    return True


class _Dinic:
    """Small deterministic max-flow: arcs explored in insertion order."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for idx in self.head[u]:
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(u: int, limit: int) -> int:
                if u == t:
                    return limit
                while it[u] < len(self.head[u]):
                    idx = self.head[u][it[u]]
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] == level[u] + 1:
                        pushed = dfs(v, min(limit, self.cap[idx]))
                        if pushed:
                            self.cap[idx] -= pushed
                            self.cap[idx ^ 1] += pushed
                            return pushed
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 60)
                if not pushed:
                    break
                flow += pushed


def build_bounded_bipartite(spec: BipartiteDegreeSpec) -> Graph:
    """Construct a bipartite graph meeting all four bound families.

    Vertices 0..m-1 are the left class (in the spec's sorted order),
    m..m+n-1 the right class.  Solved as a feasible circulation: source ->
    left arcs carry [a_i, b_i], unit left -> right arcs, right -> sink
    arcs carry [a'_j, b'_j]; lower bounds are shifted out by the standard
    super-source reduction.  Raises Infeasible on an infeasible spec.
    """
    if not gale_ryser_feasible(spec):
        raise Infeasible("degree-bound spec admits no bipartite graph")
    m, n = spec.m, spec.n
    # nodes: s, left 1..m, right m+1..m+n, t, super source, super sink
    s, t = 0, m + n + 1
    ss, tt = m + n + 2, m + n + 3
    net = _Dinic(m + n + 4)
    excess = [0] * (m + n + 2)

    def arc(u, v, low, cap):
        excess[v] += low
        excess[u] -= low
        return net.add_edge(u, v, cap - low)

    for i in range(m):
        arc(s, 1 + i, spec.lower_left[i], spec.upper_left[i])
    pair_arcs: dict[tuple[int, int], int] = {}
    for i in range(m):
        for j in range(n):
            pair_arcs[(i, j)] = arc(1 + i, 1 + m + j, 0, 1)
    for j in range(n):
        arc(1 + m + j, t, spec.lower_right[j], spec.upper_right[j])
    net.add_edge(t, s, m * n + 1)

    need = 0
    for node, ex in enumerate(excess):
        if ex > 0:
            net.add_edge(ss, node, ex)
            need += ex
        elif ex < 0:
            net.add_edge(node, tt, -ex)
    if net.max_flow(ss, tt) != need:
        raise Infeasible("no feasible circulation for the degree-bound spec")

    edges = [
        (i, m + j)
        for (i, j), idx in pair_arcs.items()
        if net.cap[idx] == 0  # unit arc saturated => edge present
    ]
    g = Graph(m + n, sorted(edges))
    _audit(spec, g)
    return g


def _audit(spec: BipartiteDegreeSpec, g: Graph) -> None:
    for i in range(spec.m):
        d = g.degree(i)
        if not spec.lower_left[i] <= d <= spec.upper_left[i]:
            raise Infeasible(f"left vertex {i} degree {d} violates bounds")
    for j in range(spec.n):
        d = g.degree(spec.m + j)
        if not spec.lower_right[j] <= d <= spec.upper_right[j]:
            raise Infeasible(f"right vertex {j} degree {d} violates bounds")

"""Labeled simple-graph model, 2-switch mutation, and re-checkable witnesses.

Vertices are 0-based internally (``u_1`` in reports corresponds to vertex 0).
Graphs are immutable after construction; every mutation-like operation
returns a new graph.  For n <= 64 the primary adjacency representation is
one bitmask per vertex, which the exact solvers rely on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import PreconditionViolated, InvalidWitness
from .sequences import DegreeSequence, normalize

__all__ = [
    "Graph",
    "WitnessClaim",
    "RealizationWitness",
    "WitnessReport",
    "degree_sequence",
    "two_switch",
    "validate_witness",
    "parse_edge_list_text",
    "graph_from_json_obj",
    "graph_to_json_obj",
    "witness_to_json_obj",
]

_MASK_LIMIT = 64


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency lives in per-vertex neighbor bitmasks when n <= 64 (plus
    derived closed-neighborhood masks); neighbor sets are always available
    as views and agree with the masks by construction.
    """

    __slots__ = ("n", "_adj_sets", "_adj_masks", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            sets[u].add(v)
            sets[v].add(u)
        self._adj_sets = tuple(frozenset(s) for s in sets)
        if n <= _MASK_LIMIT:
            masks = [0] * n
            for u in range(n):
                m = 0
                for v in sets[u]:
                    m |= 1 << v
                masks[u] = m
            self._adj_masks = tuple(masks)
        else:
            self._adj_masks = None

    @classmethod
    def _from_masks(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        """Trusted fast constructor used by the enumeration hot path."""
        g = cls.__new__(cls)
        g.n = n
        g._adj_masks = masks
        g._adj_sets = None
        return g

    @property
    def adjacency_masks(self) -> tuple[int, ...] | None:
        """Per-vertex neighbor bitmasks, present when n <= 64."""
        return self._adj_masks

    @property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        if self._adj_sets is None:
            sets = []
            for u in range(self.n):
                m = self._adj_masks[u]
                s = set()
                while m:
                    lb = m & -m
                    s.add(lb.bit_length() - 1)
                    m ^= lb
                sets.append(frozenset(s))
            self._adj_sets = tuple(sets)
        return self._adj_sets

    def closed_neighborhood_mask(self, v: int) -> int:
        return self._adj_masks[v] | (1 << v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency_sets[v]))

    def degree(self, v: int) -> int:
        if self._adj_masks is not None:
            return bin(self._adj_masks[v]).count("1")
        return len(self._adj_sets[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.n))

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        if self._adj_masks is not None:
            return bool(self._adj_masks[u] >> v & 1)
        return v in self._adj_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            if self._adj_masks is not None:
                m = self._adj_masks[u] >> (u + 1) << (u + 1)
                while m:
                    lb = m & -m
                    out.append((u, lb.bit_length() - 1))
                    m ^= lb
            else:
                out.extend((u, v) for v in sorted(self._adj_sets[u]) if v > u)
        return out

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.adjacency_sets[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.connected_components())

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, edges)

    def with_edges_swapped(self, removed, added) -> "Graph":
        edge_set = set(self.edges())
        for u, v in removed:
            edge_set.discard((min(u, v), max(u, v)))
        for u, v in added:
            edge_set.add((min(u, v), max(u, v)))
        return Graph(self.n, sorted(edge_set))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges() == other.edges()

    def __hash__(self):
        return hash((self.n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def degree_sequence(g: Graph) -> DegreeSequence:
    """Sorted degree sequence of ``g``."""
    return normalize(g.degrees)


def two_switch(g: Graph, xy: tuple[int, int], xpyp: tuple[int, int]) -> Graph:
    """Exchange disjoint edges xy, x'y' for the non-edges xx', yy'.

    Degrees are preserved vertex by vertex.  Raises PreconditionViolated
    naming the failing pair when the edges are not disjoint, not present,
    or the replacement pairs are already adjacent.
    """
    x, y = xy
    xp, yp = xpyp
    if not all(0 <= v < g.n for v in (x, y, xp, yp)):
        raise PreconditionViolated(f"vertex out of range in {xy}, {xpyp}")
    if len({x, y, xp, yp}) != 4:
        raise PreconditionViolated(f"edges {xy} and {xpyp} are not disjoint")
    if not g.has_edge(x, y):
        raise PreconditionViolated(f"{xy} is not an edge")
    if not g.has_edge(xp, yp):
        raise PreconditionViolated(f"{xpyp} is not an edge")
    if g.has_edge(x, xp):
        raise PreconditionViolated(f"({x}, {xp}) is already an edge")
    if g.has_edge(y, yp):
        raise PreconditionViolated(f"({y}, {yp}) is already an edge")
    return g.with_edges_swapped([(x, y), (xp, yp)], [(x, xp), (y, yp)])


class WitnessClaim(enum.Enum):
    """Structural claims a realization witness can carry.

    The head is the vertex prefix u_1..u_k of the sorted sequence, the tail
    is the rest.  A set "dominates" when every vertex outside it has a
    neighbor inside it.
    """

    HEAD_DOMINATING = "head_dominating"
    TAIL_DOMINATING = "tail_dominating"
    HEAD_INDEPENDENT = "head_independent"
    TAIL_INDEPENDENT = "tail_independent"
    IS_FOREST = "is_forest"


@dataclass(frozen=True)
class WitnessReport:
    """Per-claim outcome of a witness validation."""

    degrees_match: bool
    claim_results: dict
    ok: bool


@dataclass(frozen=True)
class RealizationWitness:
    """A graph together with the structural claims it certifies.

    ``split_k`` partitions the vertices into head {0..k-1} and tail
    {k..n-1}.  Degrees must realize the sequence positionally: the vertex
    at position i has degree ``sequence.entries[i]``.  Claims are stored,
    never trusted; build through :meth:`checked` to fail fast.
    """

    graph: Graph
    sequence: DegreeSequence
    split_k: int
    claims: frozenset = field(default_factory=frozenset)

    @classmethod
    def checked(cls, graph, sequence, split_k, claims) -> "RealizationWitness":
        w = cls(graph, sequence, split_k, frozenset(claims))
        report = validate_witness(w)
        if not report.ok:
            failing = [c.value for c, ok in report.claim_results.items() if not ok]
            raise InvalidWitness(
                f"witness for {sequence.entries} at k={split_k} failed: "
                f"degrees_match={report.degrees_match}, failing claims={failing}"
            )
        return w

    @property
    def head(self) -> tuple[int, ...]:
        return tuple(range(self.split_k))

    @property
    def tail(self) -> tuple[int, ...]:
        return tuple(range(self.split_k, self.graph.n))


def _dominates(g: Graph, inside: range, outside: range) -> bool:
    inside_set = set(inside)
    return all(
        any(w in inside_set for w in g.adjacency_sets[v]) for v in outside
    )


def _independent(g: Graph, vertices: range) -> bool:
    vs = list(vertices)
    return all(not g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def validate_witness(w: RealizationWitness) -> WitnessReport:
    """Re-check every stored claim; returns a per-claim pass/fail report."""
    g = w.graph
    k = w.split_k
    degrees_match = (
        g.n == w.sequence.n
        and 0 <= k <= g.n
        and all(g.degree(i) == w.sequence.entries[i] for i in range(g.n))
    )
    head = range(0, k)
    tail = range(k, g.n)
    checks = {
        WitnessClaim.HEAD_DOMINATING: lambda: _dominates(g, head, tail),
        WitnessClaim.TAIL_DOMINATING: lambda: _dominates(g, tail, head),
        WitnessClaim.HEAD_INDEPENDENT: lambda: _independent(g, head),
        WitnessClaim.TAIL_INDEPENDENT: lambda: _independent(g, tail),
        WitnessClaim.IS_FOREST: lambda: g.is_forest(),
    }
    results = {claim: checks[claim]() for claim in sorted(w.claims, key=lambda c: c.value)}
    ok = degrees_match and all(results.values())
    return WitnessReport(degrees_match=degrees_match, claim_results=results, ok=ok)


def parse_edge_list_text(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "i j" (1-based)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        edges.append((i - 1, j - 1))
    return Graph(n, edges)


def graph_from_json_obj(obj: dict) -> Graph:
    """Build a graph from {"n": int, "edges": [[i, j], ...]} with 1-based indices."""
    n = int(obj["n"])
    edges = [(int(e[0]) - 1, int(e[1]) - 1) for e in obj.get("edges", [])]
    return Graph(n, edges)


def graph_to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.edges()]}


def witness_to_json_obj(w: RealizationWitness) -> dict:
    return {
        "sequence": list(w.sequence.entries),
        "k": w.split_k,
        "claims": sorted(c.value for c in w.claims),
        "edges": [[u + 1, v + 1] for u, v in w.graph.edges()],
    }

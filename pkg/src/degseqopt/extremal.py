"""Extremal graph parameters over all realizations of a degree sequence.

Computes, for a graphic sequence d:

* omega_max(d), alpha_max(d): the largest clique/independence number of
  any realization, by the iterated clique-peeling reduction;
* gamma_min(d): the smallest domination number of any realization, by
  scanning split sizes k upward from the Slater number and testing, for
  each cross-degree profile bounded by the maximum degree, whether the
  head part, tail part, and connecting bipartite graph all exist;
* gamma_min_forest(d), alpha_max_forest(d): closed formulas over forest
  realizations, with constructive witnesses attached;
* the domination bound check gamma(G) <= 3*slater + 2*(cycle excess) - 2
  for connected graphs.

Zero entries are always split off first: each isolated vertex adds one to
any minimum dominating set and one to any maximum independent set.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .bipartite import BipartiteDegreeSpec, build_bounded_bipartite, gale_ryser_feasible
from .errors import NotConnected, NotForestSequence, NotGraphic, PreconditionViolated
from .graphs import Graph, RealizationWitness, WitnessClaim, degree_sequence
from .realize import (
    _hh_edges,
    _independent_tail_edges,
    independent_dominating_head_forest,
    independent_tail_forest,
)
from .sequences import (
    DegreeSequence,
    _graphic_erdos_gallai,
    annihilation,
    is_forest_sequence,
    is_graphic,
    normalize,
    slater,
)
from .solvers import DEFAULT_SOLVER_LIMIT, domination_number

__all__ = [
    "ExtremalParameter",
    "BoundChain",
    "ExtremalResult",
    "SlaterBoundReport",
    "bound_chain",
    "omega_max",
    "alpha_max",
    "gamma_min_bounded",
    "gamma_min_forest",
    "gamma_min_forest_fastpath",
    "alpha_max_forest",
    "check_slater_bound",
]


class ExtremalParameter(enum.Enum):
    OMEGA_MAX = "omega_max"
    ALPHA_MAX = "alpha_max"
    GAMMA_MIN = "gamma_min"
    GAMMA_MIN_FOREST = "gamma_min_forest"
    ALPHA_MAX_FOREST = "alpha_max_forest"


@dataclass(frozen=True)
class BoundChain:
    """Sequence-level bounds carried along for cross-checks.

    ``forest_gamma_low``/``forest_gamma_high`` bracket the smallest forest
    domination number whenever the sequence is a forest sequence.
    """

    slater: int
    annihilation: int
    n0: int
    forest_gamma_low: int
    forest_gamma_high: int


def bound_chain(d: DegreeSequence) -> BoundChain:
    sl = slater(d)
    a = annihilation(d)
    return BoundChain(
        slater=sl,
        annihilation=a,
        n0=d.n0,
        forest_gamma_low=sl,
        forest_gamma_high=d.n - a + d.n0,
    )


@dataclass(frozen=True)
class ExtremalResult:
    """A computed extremal value with optional witness and bound chain.

    When zero entries are present, gamma witnesses cover the positive part
    only (isolated vertices would have to join the dominating set but sit
    at the tail of the sorted order); ``value`` always refers to the full
    sequence.
    """

    parameter: ExtremalParameter
    value: int
    bound_chain: BoundChain
    achieving_k: int | None = None
    witness: RealizationWitness | None = None

    def __post_init__(self) -> None:
        if self.parameter in (ExtremalParameter.GAMMA_MIN, ExtremalParameter.GAMMA_MIN_FOREST):
            assert self.value >= self.bound_chain.slater
            if self.witness is not None:
                assert self.witness.split_k == self.achieving_k
                assert WitnessClaim.HEAD_DOMINATING in self.witness.claims
                assert self.value == self.achieving_k + self.bound_chain.n0
        if self.parameter in (ExtremalParameter.ALPHA_MAX, ExtremalParameter.ALPHA_MAX_FOREST):
            assert self.value <= self.bound_chain.annihilation
            if self.witness is not None:
                assert WitnessClaim.TAIL_INDEPENDENT in self.witness.claims
                assert self.witness.graph.n - self.witness.split_k == self.value


# ---------------------------------------------------------------------------
# largest clique / independence number over realizations


def _rao_clique_feasible(entries: tuple[int, ...], k: int) -> bool:
    """Can some realization contain a clique on the k largest-degree vertices?

    Peels the clique vertices one at a time: drop the first entry, lower
    the next d following entries by one, and re-sort only the tail beyond
    the remaining clique entries.  Feasible iff the final tail is graphic
    and nothing goes negative on the way.
    """
    seq = list(entries)
    for i in range(k):
        v = seq.pop(0)
        remaining_clique = k - i - 1
        if v < remaining_clique or v > len(seq):
            return False
        for t in range(v):
            seq[t] -= 1
            if seq[t] < 0:
                return False
        tail = seq[remaining_clique:]
        tail.sort(reverse=True)
        seq[remaining_clique:] = tail
    return _graphic_erdos_gallai(seq)


def omega_max(d: DegreeSequence) -> ExtremalResult:
    """Largest clique number among all realizations of ``d``."""
    if not is_graphic(d):
        raise NotGraphic(f"{d.entries} is not graphic")
    chain = bound_chain(d)
    candidates = [k for k in range(1, d.n + 1) if d.entries[k - 1] >= k - 1]
    for k in sorted(candidates, reverse=True):
        if _rao_clique_feasible(d.entries, k):
            return ExtremalResult(ExtremalParameter.OMEGA_MAX, k, chain)
    raise AssertionError("k = 1 is always feasible for a graphic sequence")


def alpha_max(d: DegreeSequence) -> ExtremalResult:
    """Largest independence number among all realizations of ``d``.

    Equals the largest clique number over realizations of the complement
    sequence (n-1-d_n, ..., n-1-d_1).
    """
    if not is_graphic(d):
        raise NotGraphic(f"{d.entries} is not graphic")
    comp = normalize([d.n - 1 - x for x in d.entries])
    value = omega_max(comp).value
    return ExtremalResult(ExtremalParameter.ALPHA_MAX, value, bound_chain(d))


# ---------------------------------------------------------------------------
# smallest domination number over realizations (bounded maximum degree)


@lru_cache(maxsize=65536)
def _graphic_cached(entries: tuple[int, ...]) -> bool:
    return _graphic_erdos_gallai(entries)


def _profiles_by_sum(caps: list[int]) -> dict[int, list[tuple[int, ...]]]:
    """Non-increasing positive sequences with v_i <= caps[i], grouped by sum."""
    out: dict[int, list[tuple[int, ...]]] = {}
    seq: list[int] = []

    def rec(i: int, hi: int, total: int) -> None:
        if i == len(caps):
            out.setdefault(total, []).append(tuple(seq))
            return
        for v in range(min(hi, caps[i]), 0, -1):
            seq.append(v)
            rec(i + 1, v, total + v)
            seq.pop()

    rec(0, max(caps, default=0), 0)
    return out


def _split_feasible(pos: DegreeSequence, k: int, delta: int):
    """First cross-degree profile (head, tail) making split size k feasible.

    A profile fixes how many edges each vertex sends across the split.
    Feasibility needs graphic leftovers on both sides plus an exact-degree
    bipartite graph between them; the two profile sums must agree since
    both count the cross edges.
    """
    p = pos.n
    if k == p:
        return "whole"
    head_caps = [min(pos.entries[i], delta, p - k) for i in range(k)]
    tail_caps = [min(pos.entries[k + j], delta, k) for j in range(p - k)]
    head_groups = _profiles_by_sum(head_caps)
    tail_groups = _profiles_by_sum(tail_caps)
    common = sorted(set(head_groups) & set(tail_groups))
    for total in common:
        lefts = [
            L
            for L in head_groups[total]
            if _graphic_cached(
                tuple(sorted((pos.entries[i] - L[i] for i in range(k)), reverse=True))
            )
        ]
        if not lefts:
            continue
        rights = [
            R
            for R in tail_groups[total]
            if _graphic_cached(
                tuple(sorted((pos.entries[k + j] - R[j] for j in range(p - k)), reverse=True))
            )
        ]
        for L in lefts:
            for R in rights:
                if gale_ryser_feasible(BipartiteDegreeSpec.exact(L, R)):
                    return L, R
    return None


def _positional_edges(residuals: list[int], offset: int) -> list[tuple[int, int]]:
    """Havel-Hakimi edges realizing possibly-unsorted residual degrees."""
    order = sorted(range(len(residuals)), key=lambda i: (-residuals[i], i))
    sorted_deg = tuple(residuals[i] for i in order)
    return [(offset + order[a], offset + order[b]) for a, b in _hh_edges(sorted_deg)]


def _assemble_split_witness(pos, k, head_profile, tail_profile) -> RealizationWitness:
    p = pos.n
    edges = _positional_edges(
        [pos.entries[i] - head_profile[i] for i in range(k)], 0
    )
    edges += _positional_edges(
        [pos.entries[k + j] - tail_profile[j] for j in range(p - k)], k
    )
    spec = BipartiteDegreeSpec.exact(head_profile, tail_profile)
    h = build_bounded_bipartite(spec)
    edges += [
        (spec.left_order[u], k + spec.right_order[v - k]) for u, v in h.edges()
    ]
    claims = {WitnessClaim.HEAD_DOMINATING, WitnessClaim.TAIL_DOMINATING}
    return RealizationWitness.checked(Graph(p, sorted(edges)), pos, k, claims)


def gamma_min_bounded(d: DegreeSequence, delta_cap: int | None = None) -> ExtremalResult:
    """Smallest domination number among all realizations of ``d``.

    The profile scan enumerates O(n^(2*delta)) cross-degree profiles per
    split size, so runtime grows quickly with the maximum degree; passing
    ``delta_cap`` rejects sequences whose maximum entry exceeds it.
    """
    if not is_graphic(d):
        raise NotGraphic(f"{d.entries} is not graphic")
    if delta_cap is not None and d.max_entry > delta_cap:
        raise PreconditionViolated(
            f"maximum entry {d.max_entry} exceeds delta cap {delta_cap}"
        )
    delta = d.max_entry if delta_cap is None else delta_cap
    if delta > 4 and d.n >= 40:
        warnings.warn(
            f"profile scan over degree bound {delta} at n={d.n} may be very slow",
            RuntimeWarning,
            stacklevel=2,
        )
    chain = bound_chain(d)
    pos = d.positive_part()
    if pos is None:
        return ExtremalResult(ExtremalParameter.GAMMA_MIN, d.n, chain)
    for k in range(slater(pos), pos.n + 1):
        found = _split_feasible(pos, k, delta)
        if found is None:
            continue
        if found == "whole":
            graph = Graph(pos.n, _hh_edges(pos.entries))
            witness = RealizationWitness.checked(
                graph, pos, pos.n, {WitnessClaim.HEAD_DOMINATING}
            )
        else:
            witness = _assemble_split_witness(pos, k, *found)
        return ExtremalResult(
            ExtremalParameter.GAMMA_MIN,
            k + d.n0,
            chain,
            achieving_k=k,
            witness=witness,
        )
    raise AssertionError("k = n is always feasible")


# ---------------------------------------------------------------------------
# forest-restricted parameters: closed formulas with witnesses


def gamma_min_forest(d: DegreeSequence) -> ExtremalResult:
    """Smallest domination number among all forest realizations of ``d``.

    On the positive part the value is min(k1, k2) where k1 is the first
    split whose head degree sum reaches the tail degree sum and k2 the
    first split admitting an independent dominating head; each isolated
    vertex then adds one.
    """
    if not is_forest_sequence(d):
        raise NotForestSequence(f"{d.entries} is not a forest sequence")
    chain = bound_chain(d)
    pos = d.positive_part()
    if pos is None:
        return ExtremalResult(ExtremalParameter.GAMMA_MIN_FOREST, d.n, chain)
    p = pos.n
    k1 = next(k for k in range(1, p + 1) if pos.prefix(k) >= pos.suffix(k))
    k2 = None
    for k in range(1, p + 1):
        if pos.prefix(k) < p - k:
            continue
        surplus = pos.suffix(k) - pos.prefix(k)
        if 0 <= surplus <= max(0, 2 * (pos.count_ge(2) - k) - 2):
            k2 = k
            break
    if k2 is not None and k2 < k1:
        witness = independent_dominating_head_forest(pos, k2)
        best = k2
    else:
        witness = independent_tail_forest(pos, k1)
        best = k1
    return ExtremalResult(
        ExtremalParameter.GAMMA_MIN_FOREST,
        best + d.n0,
        chain,
        achieving_k=best,
        witness=witness,
    )


def gamma_min_forest_fastpath(d: DegreeSequence) -> ExtremalResult:
    """Closed form for leaf-rich forest sequences.

    Requires positive entries with even sum at most 2n-2 and at least as
    many leaves as the total degree of the non-leaf vertices; then the
    smallest forest domination number equals
    (#degrees >= 2) + (n1 - sum of degrees >= 2) / 2, which also equals
    both the Slater number and n - annihilation.
    """
    if d.n0 > 0:
        raise PreconditionViolated(f"{d.entries} has zero entries")
    if d.total & 1 or d.total > 2 * d.n - 2:
        raise PreconditionViolated(f"{d.entries} is not a forest sequence")
    n_ge2 = d.count_ge(2)
    heavy_sum = d.prefix(n_ge2)
    n1 = d.count_eq(1)
    if n1 < heavy_sum:
        raise PreconditionViolated(
            f"needs at least {heavy_sum} leaves, sequence has {n1}"
        )
    value = n_ge2 + (n1 - heavy_sum) // 2
    return ExtremalResult(ExtremalParameter.GAMMA_MIN_FOREST, value, bound_chain(d))


def alpha_max_forest(d: DegreeSequence) -> ExtremalResult:
    """Largest independence number among all forest realizations of ``d``.

    Equals the annihilation number.  The witness realizes the positive
    part with an independent tail of that size and appends the isolated
    vertices to the independent side.
    """
    if not is_forest_sequence(d):
        raise NotForestSequence(f"{d.entries} is not a forest sequence")
    chain = bound_chain(d)
    a = annihilation(d)
    pos = d.positive_part()
    if pos is None:
        witness = RealizationWitness.checked(
            Graph(d.n), d, 0, {WitnessClaim.IS_FOREST, WitnessClaim.TAIL_INDEPENDENT}
        )
        return ExtremalResult(
            ExtremalParameter.ALPHA_MAX_FOREST, d.n, chain, achieving_k=0, witness=witness
        )
    k = pos.n - annihilation(pos)
    edges = _independent_tail_edges(pos.entries, k)
    claims = {WitnessClaim.IS_FOREST, WitnessClaim.TAIL_INDEPENDENT}
    if d.n0 == 0:
        claims.add(WitnessClaim.HEAD_DOMINATING)  # isolated vertices break this
    witness = RealizationWitness.checked(Graph(d.n, edges), d, k, claims)
    return ExtremalResult(
        ExtremalParameter.ALPHA_MAX_FOREST, a, chain, achieving_k=k, witness=witness
    )


# ---------------------------------------------------------------------------
# domination vs Slater number on concrete connected graphs


@dataclass(frozen=True)
class SlaterBoundReport:
    """Outcome of the connected-graph bound gamma <= 3*slater + 2k - 2.

    ``cycle_excess`` is k = m - (n - 1).  A failing report would be a
    counterexample to the bound and must never occur.
    """

    holds: bool
    gamma: int
    slater: int
    cycle_excess: int
    bound: int


def check_slater_bound(g: Graph, limit: int = DEFAULT_SOLVER_LIMIT) -> SlaterBoundReport:
    if g.n < 1:
        raise PreconditionViolated("graph must have at least one vertex")
    if not g.is_connected():
        raise NotConnected("bound applies to connected graphs only")
    gamma, _ = domination_number(g, limit=limit)
    sl = slater(degree_sequence(g))
    k = g.m - (g.n - 1)
    bound = 3 * sl + 2 * k - 2
    return SlaterBoundReport(
        holds=gamma <= bound, gamma=gamma, slater=sl, cycle_excess=k, bound=bound
    )

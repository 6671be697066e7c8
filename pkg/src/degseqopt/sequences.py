"""Degree-sequence data model, graphicality tests, and sequence-level bounds.

A degree sequence is stored sorted non-increasing together with the
permutation back to the caller's order.  On top of the data model this
module provides the two classical realizability predicates (simple graph,
forest) and the two sequence-level bounds used throughout the package:
the Slater number (a lower bound on the domination number of every
realization) and the annihilation number (an upper bound on the
independence number of every realization).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidSequence

__all__ = [
    "DegreeSequence",
    "normalize",
    "parse_sequence_text",
    "is_graphic",
    "is_forest_sequence",
    "slater",
    "annihilation",
]


@dataclass(frozen=True)
class DegreeSequence:
    """A validated non-increasing sequence of vertex degrees.

    ``entries`` is sorted non-increasing; ``original_order[i]`` is the
    position that ``entries[i]`` occupied in the raw input, so the raw
    input can always be reconstructed.  Instances are immutable and safe
    to share across threads.
    """

    entries: tuple[int, ...]
    original_order: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise InvalidSequence("degree sequence must be non-empty")
        if any(self.entries[i] < self.entries[i + 1] for i in range(len(self.entries) - 1)):
            raise InvalidSequence("entries must be non-increasing")
        if self.entries[-1] < 0:
            raise InvalidSequence("entries must be non-negative")
        if sorted(self.original_order) != list(range(len(self.entries))):
            raise InvalidSequence("original_order must be a permutation")

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def total(self) -> int:
        return sum(self.entries)

    @cached_property
    def _prefix(self) -> tuple[int, ...]:
        # _prefix[k] = sum of the k largest entries; _prefix[0] = 0
        acc = [0]
        for x in self.entries:
            acc.append(acc[-1] + x)
        return tuple(acc)

    def prefix(self, k: int) -> int:
        """Sum of the ``k`` largest entries."""
        return self._prefix[k]

    def suffix(self, k: int) -> int:
        """Sum of the entries after the ``k`` largest ones."""
        return self.total - self._prefix[k]

    @cached_property
    def _count_ge(self) -> tuple[int, ...]:
        # _count_ge[v] = number of entries >= v, for v in 0..max_entry+1
        top = self.entries[0]
        counts = [0] * (top + 2)
        for x in self.entries:
            counts[x] += 1
        cge = [0] * (top + 2)
        running = 0
        for v in range(top + 1, -1, -1):
            running += counts[v] if v <= top else 0
            cge[v] = running
        return tuple(cge)

    def count_ge(self, value: int) -> int:
        """Number of entries that are at least ``value``."""
        if value <= 0:
            return self.n
        if value > self.entries[0]:
            return 0
        return self._count_ge[value]

    def count_eq(self, value: int) -> int:
        """Number of entries equal to ``value``."""
        return self.count_ge(value) - self.count_ge(value + 1)

    @property
    def n0(self) -> int:
        """Number of zero entries."""
        return self.count_eq(0)

    @property
    def positive_count(self) -> int:
        return self.n - self.n0

    @property
    def max_entry(self) -> int:
        return self.entries[0]

    def positive_part(self) -> "DegreeSequence | None":
        """The sub-sequence of positive entries, or None if all are zero."""
        p = self.positive_count
        if p == 0:
            return None
        return DegreeSequence(self.entries[:p], tuple(range(p)))

    def to_input_order(self) -> list[int]:
        """Reconstruct the raw input the sequence was normalized from."""
        out = [0] * self.n
        for i, pos in enumerate(self.original_order):
            out[pos] = self.entries[i]
        return out

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def normalize(raw: Iterable[int]) -> DegreeSequence:
    """Sort a raw list of degrees non-increasing, recording the permutation.

    Entries only need to be non-negative integers here; upper-bound checks
    (entry <= n-1) belong to graphicality, not to normalization.  Idempotent
    on already-sorted input.
    """
    values = [int(x) for x in raw]
    if not values:
        raise InvalidSequence("degree sequence must be non-empty")
    if any(x < 0 for x in values):
        raise InvalidSequence(f"negative entry in {values}")
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    return DegreeSequence(
        entries=tuple(values[i] for i in order),
        original_order=tuple(order),
    )


def parse_sequence_text(text: str) -> DegreeSequence:
    """Parse a comma- or whitespace-separated degree sequence, e.g. "3,2,2,1"."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if not parts:
        raise InvalidSequence("empty sequence text")
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise InvalidSequence(f"not an integer sequence: {text!r}") from exc
    return normalize(values)


def _graphic_erdos_gallai(d: Sequence[int]) -> bool:
    """Erdos-Gallai test on a non-increasing list.  Linear after the sort.

    Accepts the empty list (trivially graphic).  Entries >= len(d) are
    rejected here rather than at construction time.
    """
    n = len(d)
    if n == 0 or d[0] == 0:
        return True
    if d[0] >= n or d[-1] < 0:
        return False
    total = 0
    pref = [0] * (n + 1)
    for i, x in enumerate(d):
        total += x
        pref[i + 1] = total
    if total & 1:
        return False
    m = n  # entries >= k, maintained by a two-pointer as k grows
    for k in range(1, n + 1):
        while m > 0 and d[m - 1] < k:
            m -= 1
        t = max(k, m)
        rhs = k * (k - 1) + k * max(0, m - k) + (total - pref[t])
        if pref[k] > rhs:
            return False
        if m <= k:
            # beyond the Durfee index the inequalities cannot fail
            break
    return True


def _graphic_havel_hakimi(d: Sequence[int]) -> bool:
    """Havel-Hakimi test by iterated reduction of the largest entry."""
    seq = sorted(d, reverse=True)
    while seq and seq[0] > 0:
        v = seq.pop(0)
        if v > len(seq):
            return False
        for i in range(v):
            seq[i] -= 1
            if seq[i] < 0:
                return False
        seq.sort(reverse=True)
    return True


def is_graphic(d: DegreeSequence) -> bool:
    """True iff some simple graph realizes ``d``.

    Erdos-Gallai is the production path; the Havel-Hakimi reduction is kept
    as an independent cross-check under ``__debug__``.
    """
    result = _graphic_erdos_gallai(d.entries)
    assert result == _graphic_havel_hakimi(d.entries), d.entries
    return result


def is_forest_sequence(d: DegreeSequence) -> bool:
    """True iff some forest realizes ``d``.

    For sequences with a positive entry this is exactly: even degree sum of
    at most ``2 * (#positive entries) - 2``.  The all-zero sequence is
    special-cased to True (the empty forest realizes it even though the
    sum formula, which presumes an edge, would reject it).
    """
    if d.total == 0:
        return True
    if d.total & 1:
        return False
    return d.total <= 2 * (d.n - d.n0) - 2


def slater(d: DegreeSequence) -> int:
    """Smallest k such that the k largest degrees sum to at least n - k.

    Lower bound on the domination number of every realization of ``d``.
    Always in 1..n since k = n makes the right side non-positive.
    """
    n = d.n
    for k in range(1, n + 1):
        if d.prefix(k) >= n - k:
            return k
    raise AssertionError("unreachable: k = n always satisfies the inequality")


def annihilation(d: DegreeSequence) -> int:
    """Largest a such that the a smallest degrees sum to at most the rest.

    Upper bound on the independence number of every realization of ``d``.
    Computed from the definition (largest feasible a) rather than as
    n - min{k : prefix(k) >= suffix(k)}; the two agree whenever the total
    is positive but differ on all-zero sequences, where only the
    definitional form satisfies a(d + (0,)) = a(d) + 1.
    """
    n = d.n
    for a in range(n, -1, -1):
        if d.suffix(n - a) <= d.prefix(n - a):
            return a
    return 0

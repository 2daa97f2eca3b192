"""Partial orders encoding the shape of minimal permutations with d descents.

A permutation with descent composition (b_1, .., b_k) splits into k maximal
decreasing-by-position blocks: block j carries b_j descents, so b_j + 1
elements.  Its shape poset has one node per position 1..n.  Within a block,
later positions sit below earlier ones (values decrease along the block).
Every ascent, at the last position i of a block, contributes a diamond on
positions i-1, i, i+1, i+2: position i is the bottom, i+1 the top, and i-1,
i+2 are two incomparable middle nodes.

The labellings of such a poset with 1..n that place larger values above
smaller ones are exactly the minimal permutations with that descent
composition, which is what makes these posets worth enumerating.

Covers are stored as (lower, upper) pairs of positions: the value at
``lower`` must be smaller than the value at ``upper``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .perm import Permutation

__all__ = [
    "DescentComposition",
    "DiamondPoset",
    "LadderPoset",
    "authorized_labellings",
    "build_poset",
    "compositions",
    "count_labellings",
    "ladder",
    "poset_edges",
]


@dataclass(frozen=True)
class DescentComposition:
    """Descent counts of the maximal decreasing blocks, left to right; all >= 1."""

    run_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "run_lengths", tuple(self.run_lengths))
        if not self.run_lengths:
            raise ValueError("composition needs at least one block")
        if any(b < 1 for b in self.run_lengths):
            raise ValueError("every block must carry at least one descent")

    @property
    def d(self) -> int:
        return sum(self.run_lengths)

    @property
    def n(self) -> int:
        return self.d + len(self.run_lengths)

    def ascent_positions(self) -> tuple[int, ...]:
        """One-based positions of the ascents separating consecutive blocks."""
        out = []
        pos = 0
        for b in self.run_lengths[:-1]:
            pos += b + 1
            out.append(pos)
        return tuple(out)


def compositions(d: int, n: int) -> list[DescentComposition]:
    """All descent compositions of permutations of size n with d descents.

    There are none unless d+1 <= n <= 2*d (blocks have >= 2 elements), in
    which case the compositions of d into n-d positive parts are returned in
    lexicographic order.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    parts = n - d
    if parts < 1 or parts > d:
        return []

    def gen(total: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            yield (total,)
            return
        for first in range(1, total - k + 2):
            for rest in gen(total - first, k - 1):
                yield (first,) + rest

    return [DescentComposition(t) for t in gen(d, parts)]


@dataclass(frozen=True)
class DiamondPoset:
    """Poset on positions 1..size with covers (lower, upper); always acyclic."""

    size: int
    covers: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "covers", frozenset(self.covers))
        for lo, up in self.covers:
            if not (1 <= lo <= self.size and 1 <= up <= self.size) or lo == up:
                raise ValueError(f"cover ({lo}, {up}) out of range")
        # Kahn's algorithm; a leftover node means the cover relation has a cycle.
        indegree = {x: 0 for x in range(1, self.size + 1)}
        above: dict[int, list[int]] = {x: [] for x in indegree}
        for lo, up in self.covers:
            indegree[up] += 1
            above[lo].append(up)
        ready = [x for x, deg in indegree.items() if deg == 0]
        seen = 0
        while ready:
            x = ready.pop()
            seen += 1
            for y in above[x]:
                indegree[y] -= 1
                if indegree[y] == 0:
                    ready.append(y)
        if seen != self.size:
            raise ValueError("cover relation contains a cycle")


@dataclass(frozen=True)
class LadderPoset(DiamondPoset):
    """The all-ascents shape: two chains of length d joined by d rungs."""

    steps: int


def build_poset(composition: DescentComposition) -> DiamondPoset:
    """Shape poset of the minimal permutations with the given composition."""
    covers: set[tuple[int, int]] = set()
    pos = 1
    blocks = composition.run_lengths
    for j, b in enumerate(blocks):
        for p in range(pos, pos + b):
            covers.add((p + 1, p))
        if j + 1 < len(blocks):
            i = pos + b  # the ascent position at the end of this block
            covers.add((i, i + 2))
            covers.add((i - 1, i + 1))
        pos += b + 1
    return DiamondPoset(composition.n, frozenset(covers))


def ladder(d: int) -> LadderPoset:
    """Ladder with d steps: the poset of the size-2d minimal permutations.

    Odd positions 2i-1 form the upper line, even positions 2i the lower line;
    node 2i sits below node 2i-1 and both lines increase rightward.
    """
    if d < 1:
        raise ValueError("a ladder needs at least one step")
    base = build_poset(DescentComposition((1,) * d))
    return LadderPoset(base.size, base.covers, d)


def _upper_neighbours(poset: DiamondPoset) -> dict[int, tuple[int, ...]]:
    up: dict[int, list[int]] = {x: [] for x in range(1, poset.size + 1)}
    for lo, hi in poset.covers:
        up[lo].append(hi)
    return {x: tuple(ys) for x, ys in up.items()}


def authorized_labellings(poset: DiamondPoset) -> Iterator[Permutation]:
    """All labellings of the poset with 1..n placing larger values higher.

    Values are assigned n down to 1; each value goes to a node all of whose
    upper covers are already labelled.  Results are yielded as permutations
    in position order, sorted lexicographically.  Counts stay small at the
    scales this project works at (bounded by a Catalan number), so the full
    set is materialized before sorting.
    """
    n = poset.size
    up = _upper_neighbours(poset)
    labels: dict[int, int] = {}
    unassigned = set(range(1, n + 1))
    found: list[tuple[int, ...]] = []

    def assign(value: int) -> None:
        if value == 0:
            found.append(tuple(labels[pos] for pos in range(1, n + 1)))
            return
        for node in sorted(unassigned):
            if all(u not in unassigned for u in up[node]):
                unassigned.remove(node)
                labels[node] = value
                assign(value - 1)
                del labels[node]
                unassigned.add(node)

    assign(n)
    found.sort()
    for word in found:
        yield Permutation(word)


def count_labellings(poset: DiamondPoset) -> int:
    """Number of authorized labellings, without materializing them.

    Dynamic programming over the down-sets of the poset: peel the largest
    remaining value off a maximal node and memoize on the remaining set
    (a bitmask).  The layered block structure keeps the number of distinct
    down-sets small, far below 2**n.
    """
    n = poset.size
    upmask = [0] * (n + 1)
    for lo, hi in poset.covers:
        upmask[lo] |= 1 << (hi - 1)
    memo: dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = 0
        m = mask
        while m:
            bit = m & -m
            m ^= bit
            node = bit.bit_length()
            if upmask[node] & mask == 0:
                total += count(mask ^ bit)
        memo[mask] = total
        return total

    return count((1 << n) - 1)


def poset_edges(poset: DiamondPoset) -> str:
    """Edge-list export, one cover per line as ``lower -> upper``."""
    return "\n".join(f"{lo} -> {up}" for lo, up in sorted(poset.covers))

"""Shared oracles for the test suite.

Everything here re-derives results from first principles (breadth-first
search over raw step semantics, standardized-subsequence sets, direct
definition checks) so the library's faster algorithms are compared against
definitions rather than against themselves.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from permdl import DuplicationStep, Permutation, apply_step


def standardized(word: tuple[int, ...]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(ranks[v] for v in word)


def descent_total(word: tuple[int, ...]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


@lru_cache(maxsize=None)
def subsequence_patterns(values: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Standardizations of every non-empty subsequence of ``values``."""
    out = set()
    n = len(values)
    for r in range(1, n + 1):
        for idx in itertools.combinations(range(n), r):
            out.add(standardized(tuple(values[i] for i in idx)))
    return frozenset(out)


def definition_minimal(p: Permutation, d: int) -> bool:
    """Minimality straight from the definition.

    d descents, and no proper subsequence standardizes to a permutation
    with d descents.  Exponential in n; keep n small.
    """
    values = p.values
    n = len(values)
    if descent_total(values) != d:
        return False
    for r in range(d + 1, n):
        for idx in itertools.combinations(range(n), r):
            if descent_total(tuple(values[i] for i in idx)) == d:
                return False
    return True


@lru_cache(maxsize=None)
def all_steps(n: int) -> tuple[DuplicationStep, ...]:
    return tuple(
        DuplicationStep(frozenset(c))
        for r in range(n + 1)
        for c in itertools.combinations(range(1, n + 1), r)
    )


@lru_cache(maxsize=None)
def bfs_distances(n: int) -> dict[tuple[int, ...], int]:
    """Fewest steps from the identity to each permutation of size n.

    Plain breadth-first search trying all 2**n kept-first subsets at every
    state; the ground truth for every step-count claim.
    """
    steps = all_steps(n)
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            p = Permutation(t)
            for s in steps:
                q = apply_step(p, s).values
                if q not in dist:
                    dist[q] = dist[t] + 1
                    nxt.append(q)
        frontier = nxt
    return dist


def dyck_words(d: int) -> list[str]:
    """All balanced U/D words of length 2d never dipping below the axis."""
    out: list[str] = []

    def build(word: list[str], ups: int, downs: int) -> None:
        if len(word) == 2 * d:
            out.append("".join(word))
            return
        if ups < d:
            word.append("U")
            build(word, ups + 1, downs)
            word.pop()
        if downs < ups:
            word.append("D")
            build(word, ups, downs + 1)
            word.pop()

    build([], 0, 0)
    return out


def rule_label_multisets(depth: int) -> list[list[int]]:
    """Label multisets per level predicted by the succession rule alone.

    Axiom label 2; a node labelled k has children labelled 2, 3, .., k+1.
    Works purely on labels, never touching permutations.
    """
    levels = [[2]]
    for _ in range(depth - 1):
        levels.append(sorted(kid for k in levels[-1] for kid in range(2, k + 2)))
    return levels

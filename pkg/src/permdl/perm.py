"""Permutations as one-based words, with descent and run statistics.

A permutation of size n is the word of its values: a tuple containing each
integer 1..n exactly once.  Positions are one-based everywhere in this
package, so "a descent at position i" relates the i-th and (i+1)-th values,
with 1 <= i <= n-1.  The size-0 permutation is deliberately rejected; every
genome has at least one marker.

All types are immutable values and all operations are pure functions, so
objects can be shared freely across threads or worker processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "DescentSet",
    "Permutation",
    "RunDecomposition",
    "all_permutations",
    "descent_count",
    "descents",
    "identity",
    "maximal_runs",
    "parse_permutation",
    "remove_element",
    "run_count",
    "standardize",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation over the values 1..n, n >= 1.

    >>> Permutation((2, 1, 4, 3)).n
    4
    >>> str(Permutation((6, 9, 8, 4, 1, 3, 7, 2, 5)))
    '6 9 8 4 1 3 7 2 5'
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise ValueError("a permutation must have size at least 1")
        seen = [False] * (n + 1)
        for v in values:
            if not 1 <= v <= n:
                raise ValueError(f"value {v} out of range 1..{n}")
            if seen[v]:
                raise ValueError(f"duplicate value {v}")
            seen[v] = True

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


@dataclass(frozen=True)
class DescentSet:
    """Positions i (one-based, 1 <= i <= n-1) whose value exceeds the next one."""

    positions: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class RunDecomposition:
    """The maximal increasing contiguous segments of a permutation, left to right."""

    runs: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.runs)


def parse_permutation(text: str) -> Permutation:
    """Parse whitespace- or comma-separated one-based values.

    >>> parse_permutation("6 9 8 4 1 3 7 2 5").values
    (6, 9, 8, 4, 1, 3, 7, 2, 5)
    >>> parse_permutation("2,1").values
    (2, 1)
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty permutation input")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"not an integer: {tok!r}") from None
    n = len(values)
    seen: set[int] = set()
    for tok, v in zip(tokens, values):
        if not 1 <= v <= n:
            raise ValueError(f"value {tok!r} out of range 1..{n}")
        if v in seen:
            raise ValueError(f"duplicate value {tok!r}")
        seen.add(v)
    return Permutation(tuple(values))


def descent_count(word: Sequence[int]) -> int:
    """Number of adjacent out-of-order pairs in any sequence of distinct values."""
    return sum(1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def run_count(word: Sequence[int]) -> int:
    """Number of maximal increasing contiguous segments; always descents + 1."""
    return descent_count(word) + 1


def descents(p: Permutation) -> DescentSet:
    """Descent set of p, as one-based positions in increasing order.

    >>> descents(Permutation((6, 9, 8, 4, 1, 3, 7, 2, 5))).positions
    (2, 3, 4, 7)
    >>> descents(Permutation((1, 2, 3))).count
    0
    """
    v = p.values
    return DescentSet(tuple(i + 1 for i in range(len(v) - 1) if v[i] > v[i + 1]))


def maximal_runs(p: Permutation) -> RunDecomposition:
    """Split p into its maximal increasing substrings.

    >>> [list(r) for r in maximal_runs(Permutation((6, 9, 8, 4, 1, 3, 7, 2, 5))).runs]
    [[6, 9], [8], [4], [1, 3, 7], [2, 5]]
    """
    runs: list[tuple[int, ...]] = []
    current = [p.values[0]]
    for v in p.values[1:]:
        if v > current[-1]:
            current.append(v)
        else:
            runs.append(tuple(current))
            current = [v]
    runs.append(tuple(current))
    return RunDecomposition(tuple(runs))


def standardize(word: Sequence[int]) -> Permutation:
    """Renumber distinct integers to 1..k, preserving relative order.

    >>> standardize((1, 5, 6, 3)).values
    (1, 3, 4, 2)
    >>> standardize((42,)).values
    (1,)
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        dup = next(v for v in word if word.count(v) > 1)
        raise ValueError(f"duplicate value {dup}")
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    return Permutation(tuple(rank[v] for v in word))


def remove_element(p: Permutation, index: int) -> Permutation:
    """Delete the value at one-based ``index`` and renumber to 1..n-1.

    >>> remove_element(Permutation((3, 1, 4, 2)), 3).values
    (3, 1, 2)
    """
    if p.n == 1:
        raise ValueError("cannot remove from a permutation of size 1")
    if not 1 <= index <= p.n:
        raise ValueError(f"index {index} out of range 1..{p.n}")
    return standardize(p.values[: index - 1] + p.values[index:])


def identity(n: int) -> Permutation:
    """The increasing permutation 1 2 .. n."""
    if n < 1:
        raise ValueError("size must be at least 1")
    return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of size n in lexicographic order.  For small n only."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)

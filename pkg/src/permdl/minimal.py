"""Minimal permutations with d descents.

A permutation is minimal for its descent count d when no proper pattern of
it keeps d descents; equivalently (and this is what ``is_minimal`` checks)
it has exactly d descents and every ascent sits strictly inside, flanked by
descents, with its four-element neighbourhood ordered like 2 1 4 3 or
3 1 4 2.  ``is_minimal_oracle`` verifies the same property the slow way,
by deleting one element at a time, and exists so the two routes can be
played against each other in tests.

Minimal permutations with d descents have sizes between d+1 and 2d.  The
slice of a given size can be enumerated either by filtering all n!
permutations (small n) or by enumerating authorized labellings of the shape
posets of the descent compositions; the two paths are cross-checked where
they overlap.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .perm import Permutation, descent_count
from .posets import (
    DescentComposition,
    authorized_labellings,
    build_poset,
    compositions,
    count_labellings,
)

__all__ = [
    "BasisSlice",
    "MinimalityReport",
    "count_basis",
    "count_by_diamond_type",
    "enumerate_basis",
    "enumerate_basis_brute",
    "enumerate_basis_compositions",
    "is_minimal",
    "is_minimal_oracle",
    "slice_to_text",
]

# Brute-force filtering of S_n stays affordable up to this size; beyond it
# the composition route is the only sane one.
_BRUTE_SIZE_LIMIT = 9


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of a minimality check, with an independently checkable witness.

    When ``is_minimal`` is false, either the descent count itself is off
    (``descent_count`` differs from the requested d) or ``bad_ascent`` names
    an ascent position whose neighbourhood breaks the required shape; in the
    latter case ``removable_position`` points at an element whose deletion
    keeps the descent count, proving non-minimality on its own.
    """

    is_minimal: bool
    descent_count: int
    bad_ascent: int | None = None
    removable_position: int | None = None


def _word_is_minimal(w: tuple[int, ...], d: int) -> bool:
    # Fast path shared by the enumerators: no report, raw tuples.
    n = len(w)
    count = 0
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            count += 1
            if count > d:
                return False
        else:
            if i == 0 or i == n - 2:
                return False
            # The pair before an ascent always descends here: a previous
            # ascent would have returned already.  Require the next pair to
            # descend and the four values to interleave as 2143 or 3142.
            if not (w[i + 1] > w[i + 2] and w[i - 1] < w[i + 1] and w[i] < w[i + 2]):
                return False
    return count == d


def is_minimal(p: Permutation, d: int) -> MinimalityReport:
    """Check minimality for d descents via the local ascent conditions.

    >>> is_minimal(Permutation((6, 4, 2, 1, 9, 7, 3, 8, 5)), 6).is_minimal
    True
    >>> report = is_minimal(Permutation((1, 3, 2)), 1)
    >>> report.is_minimal, report.removable_position
    (False, 1)
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    v = p.values
    n = p.n
    dc = descent_count(v)
    if dc != d:
        return MinimalityReport(False, dc)

    def bad(ascent: int, removable: int) -> MinimalityReport:
        return MinimalityReport(False, dc, bad_ascent=ascent, removable_position=removable)

    for i in range(1, n):  # one-based ascent position i pairs values i and i+1
        if v[i - 1] > v[i]:
            continue
        if i == 1:
            return bad(i, 1)  # drop the first element, the ascent survives as a front
        if i == n - 1:
            return bad(i, n)
        if v[i] < v[i + 1]:
            return bad(i, i + 1)  # two ascents in a row: the middle element is idle
        if v[i - 2] > v[i]:
            return bad(i, i)  # neighbourhood like 3 1 2: deleting the 1 keeps counts
        if v[i - 1] > v[i + 1]:
            return bad(i, i + 1)  # neighbourhood like 2 3 1: deleting the 3 keeps counts
    return MinimalityReport(True, dc)


def is_minimal_oracle(p: Permutation, d: int) -> bool:
    """Removal-based minimality check: every single deletion must lose a descent.

    Deleting one element never raises the descent count, so if any proper
    pattern of p kept d descents, some single deletion would too.  That makes
    single deletions a complete test and keeps this oracle independent of the
    local characterization used by ``is_minimal``.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if p.n < 2:
        raise ValueError("oracle needs size at least 2")
    v = p.values
    if descent_count(v) != d:
        return False
    for i in range(p.n):
        if descent_count(v[:i] + v[i + 1 :]) >= d:
            return False
    return True


@dataclass(frozen=True)
class BasisSlice:
    """All minimal permutations with d descents of one size, sorted lexicographically."""

    d: int
    n: int
    members: tuple[Permutation, ...]

    @property
    def count(self) -> int:
        return len(self.members)


@lru_cache(maxsize=None)
def _brute_words(d: int, n: int) -> tuple[tuple[int, ...], ...]:
    found = [
        w
        for w in itertools.permutations(range(1, n + 1))
        if _word_is_minimal(w, d)
    ]
    found.sort()
    return tuple(found)


def _brute_chunk(first: int, d: int, n: int) -> list[tuple[int, ...]]:
    rest = [v for v in range(1, n + 1) if v != first]
    return [
        (first,) + w
        for w in itertools.permutations(rest)
        if _word_is_minimal((first,) + w, d)
    ]


def _composition_words(run_lengths: tuple[int, ...]) -> list[tuple[int, ...]]:
    poset = build_poset(DescentComposition(run_lengths))
    return [p.values for p in authorized_labellings(poset)]


def enumerate_basis_brute(d: int, n: int, jobs: int = 1) -> BasisSlice:
    """Filter all n! permutations.  Only sensible for small n."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if n < d + 1 or n > 2 * d:
        return BasisSlice(d, n, ())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_brute_chunk, range(1, n + 1), itertools.repeat(d), itertools.repeat(n))
            words = sorted(w for chunk in chunks for w in chunk)
    else:
        words = list(_brute_words(d, n))
    return BasisSlice(d, n, tuple(Permutation(w) for w in words))


def enumerate_basis_compositions(d: int, n: int, jobs: int = 1) -> BasisSlice:
    """Enumerate authorized labellings per descent composition and merge."""
    if d < 1:
        raise ValueError("d must be at least 1")
    comps = compositions(d, n)
    keys = [c.run_lengths for c in comps]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            groups = list(pool.map(_composition_words, keys))
    else:
        groups = [_composition_words(k) for k in keys]
    words = sorted(w for group in groups for w in group)
    return BasisSlice(d, n, tuple(Permutation(w) for w in words))


def enumerate_basis(d: int, n: int, jobs: int = 1) -> BasisSlice:
    """The size-n slice of minimal permutations with d descents.

    Sizes outside d+1 .. 2d yield an empty slice.  Small sizes go through
    the brute-force filter, larger ones through the composition route; both
    produce the same lexicographically sorted members.
    """
    if n <= _BRUTE_SIZE_LIMIT:
        return enumerate_basis_brute(d, n, jobs=jobs)
    return enumerate_basis_compositions(d, n, jobs=jobs)


def count_basis(d: int, n: int) -> int:
    """Number of size-n minimal permutations with d descents.

    Computed by the down-set dynamic program per composition, so no member
    is materialized.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    return sum(count_labellings(build_poset(c)) for c in compositions(d, n))


def count_by_diamond_type(d: int) -> tuple[int, int]:
    """Split the size-(d+2) slice by the shape of its single ascent.

    Returns (n1, n2) where n1 counts members whose ascent neighbourhood is
    ordered like 2 1 4 3 and n2 those ordered like 3 1 4 2.
    """
    if d < 2:
        raise ValueError("the size-(d+2) slice needs d >= 2")
    n1 = n2 = 0
    for p in enumerate_basis(d, d + 2).members:
        v = p.values
        ascent = next(i for i in range(1, p.n) if v[i - 1] < v[i])  # one-based position
        if v[ascent - 2] < v[ascent + 1]:  # value before the ascent vs value after it
            n1 += 1
        else:
            n2 += 1
    return n1, n2


def slice_to_text(s: BasisSlice) -> str:
    """Slice export: a counted header line, then one permutation per line."""
    lines = [f"# d={s.d} n={s.n} count={s.count}"]
    lines.extend(str(p) for p in s.members)
    return "\n".join(lines)

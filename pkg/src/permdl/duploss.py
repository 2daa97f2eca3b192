"""Whole-genome duplication-loss steps on permutations.

One evolution step duplicates the whole permutation in tandem and loses one
copy of every element.  The surviving arrangement is fully described by the
set of values whose first copy is kept: the result is the subsequence of
kept values, in the old order, followed by the subsequence of the remaining
values, in the old order.

A step at most doubles the number of maximal increasing runs, and the run
structure is the whole story: building a permutation from the identity takes
exactly ceil(log2(run count)) steps, so a budget of p steps reaches exactly
the permutations with at most 2**p - 1 descents.  ``min_steps`` computes the
cost, ``synthesize_scenario`` exhibits a shortest witness, and
``reachable_within`` answers the budget question without constructing
anything.

Randomized scenarios use an explicit splitmix64 generator (documented on
``SplitMix64``) rather than the interpreter's RNG so that seeded runs are
reproducible bit for bit anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .perm import Permutation, descent_count, identity, maximal_runs

__all__ = [
    "DuplicationStep",
    "Scenario",
    "SplitMix64",
    "apply_step",
    "min_steps",
    "random_evolution",
    "reachable_within",
    "replay",
    "scenario_from_json",
    "scenario_to_json",
    "synthesize_scenario",
]


@dataclass(frozen=True)
class DuplicationStep:
    """One duplication-loss event: the values whose first copy survives."""

    kept_first: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kept_first", frozenset(self.kept_first))


def apply_step(p: Permutation, step: DuplicationStep) -> Permutation:
    """Apply one duplication-loss step.

    >>> step = DuplicationStep(frozenset({1, 2, 4, 5}))
    >>> apply_step(Permutation((1, 2, 3, 4, 5, 6, 7)), step).values
    (1, 2, 4, 5, 3, 6, 7)
    """
    extra = step.kept_first - set(p.values)
    if extra:
        raise ValueError(f"kept values not in the permutation: {sorted(extra)}")
    kept = tuple(v for v in p.values if v in step.kept_first)
    lost = tuple(v for v in p.values if v not in step.kept_first)
    return Permutation(kept + lost)


def min_steps(p: Permutation) -> int:
    """Exact number of steps needed to produce p from the identity.

    >>> min_steps(Permutation((6, 9, 8, 4, 1, 3, 7, 2, 5)))
    3
    >>> min_steps(Permutation((1, 2, 3)))
    0
    """
    runs = descent_count(p.values) + 1
    return (runs - 1).bit_length()  # ceil(log2(runs)), 0 for the identity


def reachable_within(p: Permutation, budget: int) -> bool:
    """True when p can be produced from the identity in at most ``budget`` steps."""
    if budget < 0:
        raise ValueError("budget must be at least 0")
    return descent_count(p.values) <= (1 << budget) - 1


@dataclass(frozen=True)
class Scenario:
    """A derivation: steps that replay from ``start`` (the identity) to ``end``."""

    start: Permutation
    steps: tuple[DuplicationStep, ...]
    end: Permutation


def replay(scenario: Scenario) -> Permutation:
    """Run the steps from ``start``; equals ``end`` for any valid scenario."""
    current = scenario.start
    for step in scenario.steps:
        current = apply_step(current, step)
    return current


def synthesize_scenario(target: Permutation) -> Scenario:
    """A shortest derivation of ``target`` from the identity.

    Works backward: a permutation with runs R1..Rk is the image of the
    permutation obtained by sorting each union Ri | R(i+m) into one block,
    m = ceil(k/2), under the step keeping the values of R1..Rm first.
    Halving the run count each time lands on the identity after exactly
    ceil(log2(k)) steps.
    """
    steps: list[DuplicationStep] = []
    current = target
    while True:
        runs = maximal_runs(current).runs
        k = len(runs)
        if k == 1:
            break
        m = (k + 1) // 2
        merged = []
        for i in range(m):
            block = runs[i] + (runs[i + m] if i + m < k else ())
            merged.append(tuple(sorted(block)))
        steps.append(DuplicationStep(frozenset(v for r in runs[:m] for v in r)))
        current = Permutation(tuple(itertools.chain.from_iterable(merged)))
    steps.reverse()
    return Scenario(identity(target.n), tuple(steps), target)


class SplitMix64:
    """Deterministic 64-bit generator for reproducible random scenarios.

    The state advances by the 64-bit odd constant 0x9E3779B97F4A7C15; each
    output mixes the new state with two xorshift-multiply rounds (constants
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB) and a final 31-bit xorshift.
    The stream depends only on ``seed`` reduced mod 2**64, never on the
    platform or interpreter, so golden outputs are portable.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self.state = seed & self.MASK

    def next_word(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def coin(self) -> bool:
        return bool(self.next_word() & 1)


def random_evolution(n: int, steps: int, seed: int) -> Scenario:
    """Run ``steps`` random duplication-loss steps from the identity of size n.

    Each step keeps each value's first copy independently with probability
    one half.  Draw order is fixed: one splitmix64 word per value 1..n, per
    step, in that nesting, taking the word's low bit.  Identical arguments
    therefore produce identical scenarios on any platform.
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    if steps < 0:
        raise ValueError("steps must be at least 0")
    rng = SplitMix64(seed)
    current = identity(n)
    taken: list[DuplicationStep] = []
    for _ in range(steps):
        kept = frozenset(v for v in range(1, n + 1) if rng.coin())
        step = DuplicationStep(kept)
        taken.append(step)
        current = apply_step(current, step)
    return Scenario(identity(n), tuple(taken), current)


def scenario_to_json(scenario: Scenario) -> dict:
    """Wire format: ``{"n": .., "steps": [[kept values].., ..], "end": [..]}``."""
    return {
        "n": scenario.start.n,
        "steps": [sorted(step.kept_first) for step in scenario.steps],
        "end": list(scenario.end.values),
    }


def scenario_from_json(obj: dict) -> Scenario:
    """Parse and validate the wire format; replaying must reproduce ``end``."""
    try:
        n = int(obj["n"])
        raw_steps = obj["steps"]
        raw_end = obj["end"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed scenario object: {exc}") from None
    steps = tuple(DuplicationStep(frozenset(int(v) for v in kept)) for kept in raw_steps)
    end = Permutation(tuple(int(v) for v in raw_end))
    if end.n != n:
        raise ValueError(f"end permutation has size {end.n}, expected {n}")
    scenario = Scenario(identity(n), steps, end)
    if replay(scenario) != end:
        raise ValueError("steps do not replay to the stated end permutation")
    return scenario

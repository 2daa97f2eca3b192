#!/usr/bin/env python3
"""Simulate random duplication-loss walks and check the descent bound.

Each trial applies a fixed number of whole-genome duplication-loss steps to
the identity, then verifies two things: the end permutation never exceeds
2^steps - 1 descents, and an optimal scenario for it can be synthesized and
replayed with exactly ceil(log2(runs)) steps.

Example:
    python scripts/evolution_demo.py -n 12 --steps 3 --trials 5 --seed 42
"""

from __future__ import annotations

import argparse

from permdl import (
    descents,
    maximal_runs,
    min_steps,
    random_evolution,
    replay,
    synthesize_scenario,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-n", "--size", type=int, default=10)
    parser.add_argument("--steps", type=int, default=3)
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    bound = 2**args.steps - 1
    for trial in range(args.trials):
        scenario = random_evolution(args.size, args.steps, args.seed + trial)
        end = scenario.end
        d = descents(end).count
        assert d <= bound, f"descent bound violated: {d} > {bound}"
        optimal = synthesize_scenario(end)
        assert replay(optimal).values == end.values
        assert len(optimal.steps) == min_steps(end)
        print(
            f"trial {trial}: end {end} | descents {d} <= {bound} | "
            f"runs {maximal_runs(end).count} | optimal steps {len(optimal.steps)}"
        )


if __name__ == "__main__":
    main()

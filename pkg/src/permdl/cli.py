"""Command-line interface.

Every command is deterministic for fixed arguments (including --seed), and
identical invocations print byte-identical output, regardless of --jobs.
Exit codes: 0 for success or a true predicate, 1 for a false predicate
(``check`` on a non-minimal permutation), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Sequence

from .bijections import (
    DyckPath,
    EcoNode,
    NonIntervalSubset,
    dyck_to_perm,
    eco_children,
    eco_root,
    perm_to_dyck,
    phi1,
    phi1_inverse,
    phi2,
    phi2_inverse,
)
from .duploss import (
    Scenario,
    apply_step,
    min_steps,
    random_evolution,
    scenario_to_json,
    synthesize_scenario,
)
from .minimal import count_basis, enumerate_basis, is_minimal, slice_to_text
from .perm import Permutation, descents, maximal_runs, parse_permutation
from .posets import DescentComposition, build_poset, ladder, poset_edges

FORMATS = ("plain", "json", "bfile", "csv")


def _values_or_dash(values: Iterable[int]) -> str:
    text = " ".join(str(v) for v in sorted(values))
    return text or "-"


def _default_jobs() -> int:
    raw = os.environ.get("PERMDL_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(lines: Iterable[str]) -> None:
    for line in lines:
        print(line)


def _reject_formats(fmt: str, allowed: Sequence[str]) -> None:
    if fmt not in allowed:
        raise ValueError(f"format {fmt!r} does not apply here (use {'/'.join(allowed)})")


# ---------------------------------------------------------------------------
# commands


def cmd_stats(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json", "csv"))
    p = parse_permutation(args.perm)
    ds = descents(p)
    runs = maximal_runs(p).runs
    cost = min_steps(p)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "permutation": list(p.values),
                    "descent_count": ds.count,
                    "descent_positions": list(ds.positions),
                    "runs": [list(r) for r in runs],
                    "min_steps": cost,
                }
            )
        )
        return 0
    runs_text = " | ".join(" ".join(str(v) for v in r) for r in runs)
    if args.format == "csv":
        _emit(
            [
                "statistic,value",
                f"permutation,{p}",
                f"descent_count,{ds.count}",
                f"descent_positions,{' '.join(str(i) for i in ds.positions) or '-'}",
                f"runs,{runs_text.replace(' | ', '|')}",
                f"min_steps,{cost}",
            ]
        )
        return 0
    lines = [f"permutation: {p}"]
    if ds.count:
        lines.append(f"descents: {ds.count} at positions {' '.join(str(i) for i in ds.positions)}")
    else:
        lines.append("descents: 0")
    lines.append(f"runs: {runs_text}")
    lines.append(f"min steps: {cost}")
    if args.grid:
        for v in range(p.n, 0, -1):
            lines.append(" ".join("o" if x == v else "." for x in p.values))
    _emit(lines)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    p = parse_permutation(args.perm)
    report = is_minimal(p, args.descents)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "minimal": report.is_minimal,
                    "expected_descents": args.descents,
                    "descent_count": report.descent_count,
                    "bad_ascent": report.bad_ascent,
                    "removable_position": report.removable_position,
                }
            )
        )
        return 0 if report.is_minimal else 1
    if report.is_minimal:
        print(f"minimal with {args.descents} descents")
        return 0
    if report.bad_ascent is None:
        print(f"not minimal: has {report.descent_count} descents, expected {args.descents}")
    else:
        pos = report.removable_position
        value = p.values[pos - 1]
        print(
            f"not minimal: ascent at position {report.bad_ascent} violates the "
            f"diamond condition; removing position {pos} (value {value}) keeps "
            f"the descent count at {args.descents}"
        )
    return 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    d = args.descents
    if d < 1:
        raise ValueError("d must be at least 1")
    if args.size is None:
        sizes = list(range(d + 1, 2 * d + 1))
        counts = [count_basis(d, n) for n in sizes]
        total = sum(counts)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "d": d,
                        "counts": {str(n): c for n, c in zip(sizes, counts)},
                        "total": total,
                    }
                )
            )
        elif args.format == "bfile":
            _emit(f"{n} {c}" for n, c in zip(sizes, counts))
        elif args.format == "csv":
            _emit(["n,count"] + [f"{n},{c}" for n, c in zip(sizes, counts)])
        else:
            _emit([f"# d={d} sizes {d + 1}..{2 * d}"])
            _emit(f"{n} {c}" for n, c in zip(sizes, counts))
            print(f"total {total}")
        return 0
    n = args.size
    if args.count_only:
        count = count_basis(d, n)
        if args.format == "json":
            print(json.dumps({"d": d, "n": n, "count": count}))
        elif args.format == "bfile":
            print(f"{n} {count}")
        elif args.format == "csv":
            _emit(["n,count", f"{n},{count}"])
        else:
            print(count)
        return 0
    _reject_formats(args.format, ("plain", "json", "csv"))
    basis_slice = enumerate_basis(d, n, jobs=args.jobs)
    members = basis_slice.members
    truncated = args.limit is not None and len(members) > args.limit
    shown = members[: args.limit] if truncated else members
    if args.format == "json":
        payload = {
            "d": d,
            "n": n,
            "count": basis_slice.count,
            "members": [list(p.values) for p in shown],
        }
        if truncated:
            payload["truncated"] = True
        print(json.dumps(payload))
    elif args.format == "csv":
        _emit(["index,permutation"] + [f"{i},{p}" for i, p in enumerate(shown, start=1)])
        if truncated:
            print(f"# truncated at {args.limit}")
    else:
        print(f"# d={d} n={n} count={basis_slice.count}")
        _emit(str(p) for p in shown)
        if truncated:
            print(f"# truncated at {args.limit}")
    return 0


def _scenario_lines(scenario: Scenario) -> list[str]:
    lines = []
    current = scenario.start
    for i, step in enumerate(scenario.steps, start=1):
        after = apply_step(current, step)
        lines.append(f"step {i}: keep {_values_or_dash(step.kept_first)} | {current} -> {after}")
        current = after
    lines.append(f"end: {current}")
    return lines


def cmd_scenario(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    target = parse_permutation(args.perm)
    scenario = synthesize_scenario(target)
    if args.format == "json":
        print(json.dumps(scenario_to_json(scenario)))
        return 0
    _emit([f"target: {target}", f"steps: {len(scenario.steps)}"])
    _emit(_scenario_lines(scenario))
    return 0


def cmd_evolve(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    scenario = random_evolution(args.size, args.steps, args.seed)
    if args.format == "json":
        print(json.dumps(scenario_to_json(scenario)))
        return 0
    _emit([f"n: {args.size}", f"steps: {args.steps}", f"seed: {args.seed}"])
    _emit(_scenario_lines(scenario))
    return 0


def _parse_subset(text: str) -> frozenset[int]:
    tokens = [t for t in text.replace(",", " ").split() if t]
    if not tokens:
        raise ValueError("empty subset")
    values = set()
    for tok in tokens:
        try:
            values.add(int(tok))
        except ValueError:
            raise ValueError(f"not an integer: {tok!r}") from None
    return frozenset(values)


def cmd_bijection_dyck(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    text = args.arg.strip()
    if set(text) <= {"U", "D"}:
        path = DyckPath(text)
        perm = dyck_to_perm(path)
    else:
        perm = parse_permutation(text)
        path = perm_to_dyck(perm)
    if args.format == "json":
        print(json.dumps({"path": path.steps, "permutation": list(perm.values)}))
    elif set(text) <= {"U", "D"}:
        print(perm)
    else:
        print(path.steps)
    return 0


def _resolve_subset(args: argparse.Namespace) -> NonIntervalSubset:
    if args.descents is None:
        raise ValueError("-d is required to interpret the subset")
    return NonIntervalSubset(args.descents, _parse_subset(args.arg))


def cmd_bijection_phi1(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    if args.invert:
        perm = parse_permutation(args.arg)
        subset = phi1_inverse(perm)
    else:
        subset = _resolve_subset(args)
        perm = phi1(subset)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "d": subset.d,
                    "subset": sorted(subset.elements),
                    "permutation": list(perm.values),
                }
            )
        )
    elif args.invert:
        print(",".join(str(v) for v in sorted(subset.elements)))
    else:
        print(perm)
    return 0


def cmd_bijection_phi2(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    if args.invert:
        perm = parse_permutation(args.arg)
        subset = phi2_inverse(perm)
        _, cls = phi2(subset)
    else:
        subset = _resolve_subset(args)
        perm, cls = phi2(subset)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "d": subset.d,
                    "subset": sorted(subset.elements),
                    "permutation": list(perm.values),
                    "type": cls.type_tag,
                    "diamond": {
                        "ascent_position": cls.ascent_position,
                        "left": cls.left,
                        "bottom": cls.bottom,
                        "top": cls.top,
                        "right": cls.right,
                    },
                }
            )
        )
    elif args.invert:
        print(",".join(str(v) for v in sorted(subset.elements)))
    else:
        print(perm)
        print(f"type: {cls.type_tag}")
    return 0


def _tree_json(node: EcoNode, depth: int) -> dict:
    payload: dict = {"perm": list(node.perm.values), "label": node.label}
    if depth > 1:
        payload["children"] = [_tree_json(kid, depth - 1) for kid in eco_children(node)]
    return payload


def cmd_bijection_tree(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    if args.depth < 1:
        raise ValueError("depth must be at least 1")
    if args.format == "json":
        print(json.dumps({"depth": args.depth, "root": _tree_json(eco_root(), args.depth)}))
        return 0
    sizes = []

    def walk(node: EcoNode, level: int) -> None:
        if len(sizes) < level:
            sizes.append(0)
        sizes[level - 1] += 1
        print(f"{'  ' * (level - 1)}{node.perm}")
        if level < args.depth:
            for kid in eco_children(node):
                walk(kid, level + 1)

    walk(eco_root(), 1)
    print(f"level sizes: {' '.join(str(s) for s in sizes)}")
    return 0


def cmd_poset(args: argparse.Namespace) -> int:
    _reject_formats(args.format, ("plain", "json"))
    if (args.composition is None) == (args.ladder is None):
        raise ValueError("give exactly one of --composition or --ladder")
    if args.ladder is not None:
        poset = ladder(args.ladder)
    else:
        lengths = []
        for tok in args.composition.replace(",", " ").split():
            try:
                lengths.append(int(tok))
            except ValueError:
                raise ValueError(f"not an integer: {tok!r}") from None
        poset = build_poset(DescentComposition(tuple(lengths)))
    if args.format == "json":
        print(json.dumps({"size": poset.size, "covers": sorted(list(c) for c in poset.covers)}))
    else:
        print(poset_edges(poset))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain", help="output format")
    common.add_argument("--jobs", type=int, default=_default_jobs(), help="parallel workers (env PERMDL_JOBS)")
    common.add_argument("--limit", type=int, default=None, help="truncate long listings")

    parser = argparse.ArgumentParser(prog="permdl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", parents=[common], help="descents, runs, and step cost of a permutation")
    p_stats.add_argument("perm", help="permutation, e.g. '6 9 8 4 1 3 7 2 5'")
    p_stats.add_argument("--grid", action="store_true", help="append a dot-grid rendering")
    p_stats.set_defaults(func=cmd_stats)

    p_check = sub.add_parser("check", parents=[common], help="test minimality for d descents")
    p_check.add_argument("perm")
    p_check.add_argument("-d", "--descents", type=int, required=True)
    p_check.set_defaults(func=cmd_check)

    p_enum = sub.add_parser("enumerate", parents=[common], help="list or count minimal permutations")
    p_enum.add_argument("-d", "--descents", type=int, required=True)
    p_enum.add_argument("-n", "--size", type=int, default=None)
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_scen = sub.add_parser("scenario", parents=[common], help="shortest derivation from the identity")
    p_scen.add_argument("perm")
    p_scen.set_defaults(func=cmd_scenario)

    p_bij = sub.add_parser("bijection", parents=[common], help="slice bijections")
    bij_sub = p_bij.add_subparsers(dest="bijection", required=True)

    b_dyck = bij_sub.add_parser("dyck", parents=[common], help="Dyck path <-> size-2d member")
    b_dyck.add_argument("arg", help="a U/D word, or a permutation to map back")
    b_dyck.set_defaults(func=cmd_bijection_dyck)

    for name, func in (("phi1", cmd_bijection_phi1), ("phi2", cmd_bijection_phi2)):
        b = bij_sub.add_parser(name, parents=[common], help=f"{name}: subset <-> size-(d+2) member")
        b.add_argument("arg", help="subset '1,2,5' (or a permutation with --invert)")
        b.add_argument("-d", "--descents", type=int, default=None)
        b.add_argument("--invert", action="store_true")
        b.set_defaults(func=func)

    b_tree = bij_sub.add_parser("tree", parents=[common], help="generating tree of the size-2d slices")
    b_tree.add_argument("--depth", type=int, default=4)
    b_tree.set_defaults(func=cmd_bijection_tree)

    p_evolve = sub.add_parser("evolve", parents=[common], help="random duplication-loss walk")
    p_evolve.add_argument("-n", "--size", type=int, required=True)
    p_evolve.add_argument("--steps", type=int, required=True)
    p_evolve.add_argument("--seed", type=int, default=0)
    p_evolve.set_defaults(func=cmd_evolve)

    p_poset = sub.add_parser("poset", parents=[common], help="export a shape poset as an edge list")
    p_poset.add_argument("--composition", default=None, help="descent composition, e.g. '3,3,1,7,2'")
    p_poset.add_argument("--ladder", type=int, default=None, help="ladder with this many steps")
    p_poset.set_defaults(func=cmd_poset)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

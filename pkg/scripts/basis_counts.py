#!/usr/bin/env python3
"""Tabulate how many minimal permutations with d descents exist per size.

The sizes d+1, d+2, and 2d have closed forms; the sizes in between do not,
so the table and the --series diagonals are computed, never predicted.

Examples:
    python scripts/basis_counts.py --max-d 8
    python scripts/basis_counts.py --series 3 --max-d 12
    python scripts/basis_counts.py --series 3 --max-d 12 --bfile
"""

from __future__ import annotations

import argparse

from permdl import count_basis


def print_table(max_d: int) -> None:
    for d in range(1, max_d + 1):
        counts = [count_basis(d, n) for n in range(d + 1, 2 * d + 1)]
        row = " ".join(str(c) for c in counts)
        print(f"d={d:<2} sizes {d + 1}..{2 * d}: {row} (total {sum(counts)})")


def print_series(offset: int, max_d: int, bfile: bool) -> None:
    # counts at size d + offset, one value per d where that size is feasible
    start = max(1, offset - 1) if offset <= 1 else offset
    for d in range(max(1, start), max_d + 1):
        n = d + offset
        if not d + 1 <= n <= 2 * d:
            continue
        value = count_basis(d, n)
        print(f"{d} {value}" if bfile else f"d={d} size={n}: {value}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-d", type=int, default=8)
    parser.add_argument(
        "--series",
        type=int,
        default=None,
        metavar="OFFSET",
        help="print the diagonal at size d+OFFSET instead of the full table",
    )
    parser.add_argument("--bfile", action="store_true", help="emit bare 'd count' lines")
    args = parser.parse_args()
    if args.series is None:
        print_table(args.max_d)
    else:
        print_series(args.series, args.max_d, args.bfile)


if __name__ == "__main__":
    main()

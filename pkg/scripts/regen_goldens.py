#!/usr/bin/env python3
"""Regenerate tests/golden/basis_totals.txt with the brute-force route.

The golden file pins the per-d totals; this script recomputes them by the
slowest, most direct method available (full permutation scans) so a stale
or hand-edited golden file cannot hide a counting bug.
"""

from __future__ import annotations

from pathlib import Path

from permdl import enumerate_basis_brute

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden" / "basis_totals.txt"


def main() -> None:
    lines = ["# total count of minimal permutations with d descents, all sizes"]
    for d in range(2, 6):
        total = sum(enumerate_basis_brute(d, n).count for n in range(d + 1, 2 * d + 1))
        lines.append(f"{d} {total}")
        print(lines[-1])
    GOLDEN.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {GOLDEN}")


if __name__ == "__main__":
    main()

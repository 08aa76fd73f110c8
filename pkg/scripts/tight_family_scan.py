#!/usr/bin/env python3
"""Compare the exact strong chromatic index of the triangle-with-leaves
family against the constructive coloring and the palette guarantee.

Every edge of this family conflicts with every other, so the exact value
is the edge count 3D-3; the scan shows where the constructive bound
8D-4 sits relative to that.

Usage: python scripts/tight_family_scan.py [--max-d 9]
"""

from __future__ import annotations

import argparse

from strongedge import exact_chi_s, strong_color, triangle_with_leaves, verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=9)
    args = ap.parse_args()

    print(f"{'D':>3} {'exact':>6} {'3D-3':>5} {'algorithm':>9} {'8D-4':>5} {'ok':>3}")
    for d in range(2, args.max_d + 1):
        g = triangle_with_leaves(d)
        result = exact_chi_s(g)
        coloring, stats = strong_color(g)
        ok = verify_all(g, coloring).ok and result.chi_s == 3 * d - 3
        print(f"{d:>3} {result.chi_s:>6} {3 * d - 3:>5} {stats.colors_used:>9} "
              f"{8 * d - 4:>5} {'yes' if ok else 'NO':>3}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

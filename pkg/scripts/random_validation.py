#!/usr/bin/env python3
"""Seeded randomized validation of the corona coloring pipeline.

Draws random connected cubic pairs, runs the dispatcher, and verifies every
output is proper and equitable.  Optionally cross-checks the claimed range
against the exact oracle on coronas small enough to decide.
"""
import argparse
import random
import time

import eqcorona as eq


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--sizes", type=int, nargs="+", default=[4, 6, 8, 10, 12])
    parser.add_argument("--oracle-max-vertices", type=int, default=0,
                        help="cross-check exact chi= on coronas up to this size")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.time()
    rules_seen: dict[str, int] = {}
    checked = 0
    for i in range(args.pairs):
        n, m = rng.choice(args.sizes), rng.choice(args.sizes)
        g = eq.random_connected_cubic(n, rng.randrange(10**6))
        h = eq.random_connected_cubic(m, rng.randrange(10**6))
        layout = eq.corona(g, h)
        report = eq.equitable_color_corona(g, h, layout=layout)
        check = eq.verify(layout.base, report.coloring)
        if not (check.proper and check.equitable):
            raise SystemExit(f"pair {i} (n={n}, m={m}): verification failed")
        rules_seen[report.rule_fired] = rules_seen.get(report.rule_fired, 0) + 1
        if layout.base.n <= args.oracle_max_vertices:
            chi = eq.corona_equitable_chromatic_number(layout, h)
            lo, hi = report.claimed_range
            if not lo <= chi <= report.colors_used <= chi + 1:
                raise SystemExit(f"pair {i}: sandwich violated (chi={chi})")
            checked += 1

    print(f"{args.pairs} pairs verified in {time.time() - start:.1f}s"
          + (f", {checked} oracle cross-checks" if checked else ""))
    for rule, count in sorted(rules_seen.items()):
        print(f"  {count:>5}  {rule}")


if __name__ == "__main__":
    main()

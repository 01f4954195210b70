#!/usr/bin/env python3
"""Walk one graph through the reduction pipeline.

Pads the vertex count to a multiple of 10, balances the independence target
to 4m/10, validates the target-vs-type-coloring equivalence by exact search,
builds the K33 corona decision instance, and compares the lifted coloring
with the structured oracle's verdict.
"""
import argparse

import eqcorona as eq


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("graph", nargs="?", default="petersen")
    parser.add_argument("-k", type=int, default=4, help="independence target")
    args = parser.parse_args()

    h = eq.named_graph(args.graph)
    print(f"input: {args.graph} ({h.n} vertices), target k={args.k}")
    alpha = eq.max_independent_set(h)
    print(f"alpha = {alpha.size}, witness {sorted(alpha.witness)}")

    padded = eq.pad_mod10(h, args.k)
    print(f"padded: j={padded.j} blocks, {padded.m_prime} vertices, "
          f"target {padded.threshold}")
    balanced = eq.reduce_to_balanced_threshold(padded.graph, padded.threshold)
    print(f"balanced: r={balanced.r} ({balanced.provenance}), "
          f"{balanced.m_prime} vertices, threshold {balanced.threshold}")
    inst_alpha = eq.max_independent_set(balanced.graph).size
    answer = inst_alpha >= balanced.threshold
    print(f"instance alpha = {inst_alpha} -> answer {answer} "
          f"(original: {alpha.size >= args.k})")
    assert answer == (alpha.size >= args.k)

    if h.n % 10 == 0:
        report = eq.alpha_type_equivalence_check(h)
        print(f"equivalence on the input graph: alpha_ok={report.alpha_ok}, "
              f"type coloring={report.coloring_ok}, agree={report.agree}")
        if report.alpha_ok:
            print(f"  balanced-remainder set: {report.independent_set}")
            typed = eq.coloring_of_type(
                h, (4 * h.n // 10, 3 * h.n // 10, 3 * h.n // 10))
            inst = eq.build_decision_instance(h, "k33")
            lifted = eq.color_from_type(inst.layout, typed)
            check = eq.verify(inst.layout.base, lifted)
            oracle = eq.corona_equitable4(inst.layout, h)
            print(f"  K33 corona ({inst.layout.base.n} vertices): lifted "
                  f"4-coloring proper={check.proper} equitable={check.equitable} "
                  f"sequence={check.sequence}; oracle feasible={oracle.feasible}")


if __name__ == "__main__":
    main()

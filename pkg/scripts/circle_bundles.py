#!/usr/bin/env python3
"""Print integral cohomology tables of circle bundles over flag manifolds.

For K = {i} the projectivized line bundle over G/P_i carries a circle
bundle G/P^s whose cohomology is determined by the cup-with-omega
matrices on G/P_i: even groups are their cokernels, odd groups are free
on their kernels.  This prints one row per nonzero group, with the kernel
combinations spelled out in the Schubert basis.

Examples:
    python3 scripts/circle_bundles.py
    python3 scripts/circle_bundles.py F4/1 --degree 26
    python3 scripts/circle_bundles.py E6/2 --degree 29
"""

import argparse

from schubert import LieType, enumerate_cosets, gysin_analysis

DEFAULT_TARGETS = ("F4/1", "E6/2")


def parse_target(text):
    try:
        name, node = text.split("/")
        return LieType.parse(name), int(node)
    except ValueError:
        raise SystemExit(f"bad target {text!r}: expected TYPE/NODE, e.g. F4/1")


def kernel_text(vec, level):
    parts = []
    for j, c in enumerate(vec, start=1):
        if not c:
            continue
        head = {1: "", -1: "-"}.get(c, f"{c}*")
        parts.append(f"{head}s({level},{j})")
    return " + ".join(parts).replace("+ -", "- ")


def report(lie_type, node, degree):
    table = enumerate_cosets(lie_type, {node})
    top_r = (degree + 1) // 2 if degree is not None else table.lmax + 1
    gysin = gysin_analysis(table, node, top_r)
    print(f"== circle bundle over {lie_type}/P{node}, degrees 0..{2 * top_r} ==")
    print(f"{'degree':>6}  group")
    limit = degree if degree is not None else 2 * top_r
    for k in range(0, limit + 1):
        group = gysin.group(k)
        if group.is_trivial():
            continue
        print(f"{k:>6}  {group}")
        for vec in gysin.odd_kernels.get(k, []):
            print(f"{'':>6}  generated by {kernel_text(vec, (k + 1) // 2 - 1)}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("targets", nargs="*", default=list(DEFAULT_TARGETS),
                    help="TYPE/NODE pairs (default: %(default)s)")
    ap.add_argument("--degree", type=int, default=None,
                    help="top cohomological degree (default: all of them)")
    args = ap.parse_args()
    for target in args.targets:
        lie_type, node = parse_target(target)
        report(lie_type, node, args.degree)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Compute Schubert presentations of flag-manifold cohomology rings.

For each TYPE/NODE target this selects a minimal set of Schubert classes
generating H*(G/P; Z), sweeps the graded kernel for a minimal relation
set, and prints the resulting ring presentation together with the degrees
where relations appear.  With --giambelli it also prints, level by level,
the generator polynomial mapping onto each Schubert class.

Examples:
    python3 scripts/presentations.py
    python3 scripts/presentations.py F4/1 --giambelli 6
    python3 scripts/presentations.py E7/2 --up-to 18
"""

import argparse
from time import perf_counter

from schubert import (
    LieType,
    enumerate_cosets,
    giambelli,
    minimal_generators,
    minimal_relations,
)

DEFAULT_TARGETS = ("F4/1", "E6/2", "E7/2")


def parse_target(text):
    try:
        name, node = text.split("/")
        return LieType.parse(name), int(node)
    except ValueError:
        raise SystemExit(f"bad target {text!r}: expected TYPE/NODE, e.g. F4/1")


def report(lie_type, node, up_to, show_giambelli):
    t0 = perf_counter()
    table = enumerate_cosets(lie_type, {node})
    gens = minimal_generators(table)
    bound = up_to if up_to is not None else table.lmax
    pres = minimal_relations(table, gens, bound)
    elapsed = perf_counter() - t0

    print(f"== {lie_type}/P{node}  ({table.total} Schubert classes, "
          f"complex dimension {table.lmax}) ==")
    print(pres.text())
    degrees = ", ".join(str(2 * d) for d in pres.relation_degrees())
    print(f"relation degrees (cohomological): {degrees}")
    print(f"computed in {elapsed:.1f}s (kernel sweep up to level {bound})")

    for m in range(1, show_giambelli + 1):
        polys = giambelli(table, gens, m)
        for j, poly in enumerate(polys, start=1):
            print(f"  s({m},{j}) = {poly}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("targets", nargs="*", default=list(DEFAULT_TARGETS),
                    help="TYPE/NODE pairs (default: %(default)s)")
    ap.add_argument("--up-to", type=int, default=None,
                    help="level bound for the relation sweep "
                         "(default: the dimension of G/P)")
    ap.add_argument("--giambelli", type=int, default=0, metavar="M",
                    help="also print Giambelli polynomials for levels 1..M")
    args = ap.parse_args()
    for target in args.targets:
        lie_type, node = parse_target(target)
        report(lie_type, node, args.up_to, args.giambelli)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Hunt for coset triples that meet pairwise without meeting globally.

For three left cosets, the count of triples whose pairs all intersect can
exceed the count of triples sharing a common point.  This script scans the
catalog for the smallest witnesses of strict slack and tabulates how common
it is, group by group.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations_with_replacement

import cosetlab as cl


def scan_group(name: str, max_order: int):
    g = cl.load_catalog_group(name)
    if g.n > max_order:
        return None
    subs = cl.enumerate_subgroups(g)
    witnesses = []
    triples = 0
    for i, j, k in combinations_with_replacement(range(len(subs)), 3):
        c = cl.census(subs[i], subs[j], subs[k])
        triples += 1
        if c.s_triple is not None and c.s_triple > c.meet_all:
            witnesses.append(
                (
                    (subs[i].order, subs[j].order, subs[k].order),
                    c.s_triple,
                    c.meet_all,
                )
            )
    return g, triples, witnesses


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=24)
    ap.add_argument("--show", type=int, default=3, help="witnesses to print per group")
    args = ap.parse_args()

    total = 0
    smallest = None
    for name in cl.catalog_names():
        result = scan_group(name, args.max_order)
        if result is None:
            continue
        g, triples, witnesses = result
        total += len(witnesses)
        if witnesses and (smallest is None or g.n < smallest[0]):
            smallest = (g.n, name, witnesses[0])
        if not witnesses:
            continue
        print(f"{name} (order {g.n}): {len(witnesses)}/{triples} triples strictly slack")
        for orders, s3, meet in witnesses[: args.show]:
            print(f"  subgroup orders {orders}: pairwise-meeting {s3} > common-point {meet}")

    print(f"\n{total} strictly slack triples in catalog groups up to order {args.max_order}")
    if smallest:
        n, name, (orders, s3, meet) = smallest
        print(
            f"smallest witness: {name} (order {n}), subgroup orders {orders},"
            f" {s3} pairwise-meeting vs {meet} with a common point"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())

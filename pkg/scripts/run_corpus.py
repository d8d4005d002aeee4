#!/usr/bin/env python3
"""Run the whole corpus grid: decompose each group over each coprime prime
field, check the oracle agreement, and print one line per entry plus
timing totals."""

import argparse
import itertools
import sys
import time

from grpalg.field import make_field
from grpalg.groups import FiniteGroup, d1_group, d2_group, metacyclic_group
from grpalg.idempotents import decompose
from grpalg.oracle import center_split, q_class_count

PRIMES = (3, 5, 7, 11, 13)

METACYCLIC_TUPLES = [
    (4, 2, 0, 3), (5, 4, 0, 2), (7, 3, 0, 2),
    (9, 3, 0, 4), (8, 2, 0, 3), (16, 4, 0, 3),
]


def a4_group():
    perms = sorted(itertools.permutations(range(4)))
    even = [p for p in perms
            if sum(1 for i in range(4) for j in range(i) if p[j] > p[i]) % 2 == 0]
    ident = tuple(range(4))
    even.sort(key=lambda p: (p != ident, p))
    idx = {p: i for i, p in enumerate(even)}
    table = [[idx[tuple(p[r[i]] for i in range(4))] for r in even] for p in even]
    return FiniteGroup(table, name="A4")


def corpus():
    yield metacyclic_group(3, 2, 0, 2)   # S3
    yield metacyclic_group(4, 2, 0, 3)   # D8
    yield d2_group(1)                    # Q8
    yield a4_group()
    yield metacyclic_group(12, 1, 0, 1)  # Z_12
    for tup in METACYCLIC_TUPLES:
        yield metacyclic_group(*tup)
    for m in (2, 3, 4):
        yield d1_group(m)
        yield d2_group(m)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-oracle", action="store_true",
                    help="only run the decomposition engine")
    args = ap.parse_args()
    t_start = time.time()
    failures = 0
    for G in corpus():
        for q in PRIMES:
            if G.order % q == 0:
                continue
            t0 = time.time()
            tower = make_field(q)
            summary, descriptors = decompose(G, tower)
            status = "ok"
            if not args.skip_oracle:
                engine = sorted(d.idempotent.key() for d in descriptors)
                oracle = sorted(e.key() for e in center_split(G, tower))
                if engine != oracle or len(oracle) != q_class_count(G, q):
                    status = "ORACLE MISMATCH"
                    failures += 1
            print(f"{G.name:<14} q={q:<3} {summary.format():<60} "
                  f"{status}  {time.time() - t0:6.2f}s")
    print(f"\ntotal {time.time() - t_start:.1f}s, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Print the closed-form Wedderburn tables and automorphism terms for the
two 2-group families over a grid of (m, q), flagging any disagreement with
the generic engine."""

import argparse
import sys

from grpalg.autgroup import aut_description, format_aut
from grpalg.families import (
    d1_aut_closed_form,
    d1_closed_form,
    d2_aut_closed_form,
    d2_closed_form,
    lambda_of,
)
from grpalg.field import make_field
from grpalg.groups import d1_group, d2_group
from grpalg.idempotents import decompose


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5, 7, 13])
    ap.add_argument("--check-engine", action="store_true",
                    help="also run the generic engine and compare")
    args = ap.parse_args()
    bad = 0
    for fam, form, autf, groupf in (
            ("d1", d1_closed_form, d1_aut_closed_form, d1_group),
            ("d2", d2_closed_form, d2_aut_closed_form, d2_group)):
        for m in args.m:
            for q in args.q:
                amap = form(m, q)
                comp = " + ".join(
                    (f"M_{d}(F_{q}^{l})" if l > 1 else f"M_{d}(F_{q})")
                    + (f"^({mult})" if mult > 1 else "")
                    for (d, l), mult in sorted(amap.items()))
                print(f"{fam}(m={m}) q={q} lambda={lambda_of(q)}")
                print(f"  algebra: {comp}")
                print(f"  aut:     {format_aut(autf(m, q))}")
                if args.check_engine:
                    s, _ = decompose(groupf(m), make_field(q))
                    ok = s.components == amap and \
                        aut_description(s) == autf(m, q)
                    print(f"  engine:  {'agrees' if ok else 'DISAGREES'}")
                    if not ok:
                        bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

"""Closed-form Wedderburn data for two families of 2-groups of order
2^{m+2}: the family built from Z_{2^m} x Z_2 x Z_2 with a single nontrivial
commutator (d1_group) and the metacyclic family <a, b | a^{2^{m+1}} = 1,
b^2 = a^2, b^{-1} a b = a^{2^m + 1}> (d2_group).

Everything here is a function of m and the 2-adic valuation lambda of
q -+ 1; the maps return {(d, l): multiplicity} and are checked to account
for the full dimension 2^{m+2}.
"""

from __future__ import annotations

from .autgroup import aut_description
from .errors import EvenQ, InternalInconsistency
from .groups import d1_group, d1_index, subgroup_closure
from .idempotents import WedderburnSummary


def lambda_of(q: int) -> int:
    """2-adic valuation of q - 1 when q = 1 (mod 4), of q + 1 when
    q = 3 (mod 4); always >= 2."""
    if q % 2 == 0:
        raise EvenQ(f"q = {q} is even")
    target = q - 1 if q % 4 == 1 else q + 1
    lam = 0
    while target % 2 == 0:
        target //= 2
        lam += 1
    if lam < 2:
        raise InternalInconsistency(f"valuation {lam} < 2 for q = {q}")
    return lam


def _checked(amap: dict, m: int) -> dict:
    amap = {k: v for k, v in amap.items() if v > 0}
    dim = sum(d * d * l * mult for (d, l), mult in amap.items())
    if dim != 1 << (m + 2):
        raise InternalInconsistency(
            f"closed form sums to dimension {dim}, expected {1 << (m + 2)}")
    return amap


def d1_closed_form(m: int, q: int) -> dict:
    """(d, l) -> multiplicity for the order-2^{m+2} group d1_group(m)."""
    lam = lambda_of(q)
    if q % 4 == 1:
        if m < 1:
            raise ValueError("m must be >= 1")
        if m <= lam:
            amap = {(1, 1): 1 << (m + 1), (2, 1): 1 << (m - 1)}
        elif m == lam + 1:
            amap = {(1, 1): 1 << (m + 1), (2, 2): 1 << (m - 2)}
        else:
            amap = {(1, 1): 1 << (lam + 2)}
            for a in range(lam + 1, m):
                amap[(1, 1 << (a - lam))] = 1 << (lam + 1)
            amap[(2, 1 << (m - lam))] = 1 << (lam - 1)
    else:
        if m < 2:
            raise ValueError("m must be >= 2 when q = 3 (mod 4)")
        if m <= lam + 1:
            amap = {(1, 1): 8, (1, 2): (1 << m) - 4, (2, 2): 1 << (m - 2)}
        elif m == lam + 2:
            amap = {(1, 1): 8, (1, 2): (1 << m) - 4, (2, 4): 1 << (m - 3)}
        else:
            amap = {(1, 1): 8, (1, 2): (1 << (lam + 2)) - 4}
            for a in range(lam + 2, m):
                amap[(1, 1 << (a - lam))] = 1 << (lam + 1)
            amap[(2, 1 << (m - lam))] = 1 << (lam - 1)
    return _checked(amap, m)


def d2_closed_form(m: int, q: int) -> dict:
    """(d, l) -> multiplicity for the order-2^{m+2} group d2_group(m)."""
    lam = lambda_of(q)
    if q % 4 == 1:
        if m < 1:
            raise ValueError("m must be >= 1")
        if m <= lam:
            amap = {(1, 1): 1 << (m + 1), (2, 1): 1 << (m - 1)}
        else:
            amap = {(1, 1): 1 << (lam + 1)}
            for a in range(lam + 1, m + 1):
                amap[(1, 1 << (a - lam))] = 1 << lam
            amap[(2, 1 << (m - lam))] = 1 << (lam - 1)
    else:
        if m < 2:
            raise ValueError("m must be >= 2 when q = 3 (mod 4)")
        if m <= lam + 1:
            amap = {(1, 1): 4, (1, 2): (1 << m) - 2, (2, 2): 1 << (m - 2)}
        else:
            amap = {(1, 1): 4, (1, 2): (1 << (lam + 1)) - 2}
            for a in range(lam + 2, m + 1):
                amap[(1, 1 << (a - lam))] = 1 << lam
            amap[(2, 1 << (m - lam))] = 1 << (lam - 1)
    return _checked(amap, m)


def d1_summary(m: int, q: int) -> WedderburnSummary:
    return WedderburnSummary(order=1 << (m + 2), q=q,
                             components=d1_closed_form(m, q))


def d2_summary(m: int, q: int) -> WedderburnSummary:
    return WedderburnSummary(order=1 << (m + 2), q=q,
                             components=d2_closed_form(m, q))


def d1_aut_closed_form(m: int, q: int):
    return aut_description(d1_summary(m, q))


def d2_aut_closed_form(m: int, q: int):
    return aut_description(d2_summary(m, q))


def d1_normal_subgroup_list(m: int):
    """The non-identity normal subgroups of d1_group(m), by generator data:
      (i)   <t^{2^a}, x>, <t^{2^a}, y>, <t^{2^a}, xy>, <t^{2^a}, x, y>
            for 0 <= a <= m-1;
      (ii)  <t^{2^b} x>, <t^{2^b} y>, <t^{2^{m-1}}, t^{2^b} xy>,
            <t^{2^{m-1}}, x, t^{2^b} y>, <t^{2^{m-1}}, t^{2^b} x, y>,
            <t^{2^b} x, t^{2^b} y> for 0 <= b <= m-2;
      (iii) <t^{2^c}> for 0 <= c <= m-1.
    Asserted distinct and normal; sorted by (order, members)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    from .errors import InternalInconsistency
    from .groups import is_normal

    G = d1_group(m)

    def el(c, e, f):
        return d1_index(m, c, e, f)

    zc = 1 << (m - 1)  # exponent of the commutator t^{2^{m-1}}
    gens_list = []
    for a in range(m):
        p = 1 << a
        gens_list += [[el(p, 0, 0), el(0, 1, 0)],
                      [el(p, 0, 0), el(0, 0, 1)],
                      [el(p, 0, 0), el(0, 1, 1)],
                      [el(p, 0, 0), el(0, 1, 0), el(0, 0, 1)]]
    for b in range(m - 1):
        p = 1 << b
        gens_list += [[el(p, 1, 0)],
                      [el(p, 0, 1)],
                      [el(zc, 0, 0), el(p, 1, 1)],
                      [el(zc, 0, 0), el(0, 1, 0), el(p, 0, 1)],
                      [el(zc, 0, 0), el(p, 1, 0), el(0, 0, 1)],
                      [el(p, 1, 0), el(p, 0, 1)]]
    for c in range(m):
        gens_list.append([el(1 << c, 0, 0)])
    out = {}
    for gens in gens_list:
        H = subgroup_closure(G, gens)
        if H.members in out:
            raise InternalInconsistency(f"duplicate listed subgroup {H.members}")
        if not is_normal(G, H):
            raise InternalInconsistency(f"listed subgroup not normal: {gens}")
        out[H.members] = H
    return sorted(out.values(), key=lambda H: (H.order, H.members))

"""Independent verification of the decomposition: split the center of
F_q[G] into primitive idempotents by plain linear algebra (minimal
polynomials of class sums, factorization, CRT interpolation), and count
the expected number of components from q-classes of conjugacy classes.
Shares only field and group-algebra arithmetic with the main engine.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .algebra import AlgebraElement, GroupAlgebra
from .errors import NotSemisimple
from .field import (
    factor_polynomial,
    poly_divmod,
    poly_mod,
    poly_mul,
    poly_scale,
    poly_sub,
    poly_trim,
)
from .groups import FiniteGroup, conjugacy_classes


def q_class_count(G: FiniteGroup, q: int) -> int:
    """Number of orbits of conjugacy classes under class(g) -> class(g^q):
    the number of simple components of F_q[G] when gcd(q,|G|) = 1."""
    if gcd(q, G.order) != 1:
        raise NotSemisimple(f"gcd({q}, {G.order}) != 1")
    classes = conjugacy_classes(G)
    class_of = {}
    for idx, cls in enumerate(classes):
        for g in cls:
            class_of[g] = idx
    step = [class_of[G.power(cls[0], q)] for cls in classes]
    seen = set()
    count = 0
    for i in range(len(classes)):
        if i in seen:
            continue
        count += 1
        j = i
        while j not in seen:
            seen.add(j)
            j = step[j]
    return count


def class_sums(A: GroupAlgebra):
    out = []
    for cls in conjugacy_classes(A.group):
        c = np.zeros(A.group.order, dtype=np.int16)
        c[list(cls)] = 1
        out.append(A.element(c))
    return out


def _minimal_polynomial(A: GroupAlgebra, z: AlgebraElement, e: AlgebraElement):
    """Minimal polynomial of multiplication by z on the ideal generated by
    the central idempotent e; also returns the power list [e, ze, z²e, ...]
    so that polynomials can be evaluated at z cheaply.

    Gauss-Jordan over the power rows with tracked combinations: each basis
    row is fully reduced against the others, so the first power that
    single-pass-reduces to zero yields the (monic) dependency directly.
    """
    F = A.field
    nmax = A.group.order + 1
    powers = [e]
    basis = {}  # pivot column -> (reduced row, combo over power indices)
    deg = 0
    while True:
        v = powers[-1].coeffs.copy()
        combo = np.zeros(nmax, dtype=np.int16)
        combo[deg] = 1
        for piv, (br, bc) in basis.items():
            c = int(v[piv])
            if c:
                v = F.add_np[v, F.neg_np[F.mul_np[c, br]]]
                combo = F.add_np[combo, F.neg_np[F.mul_np[c, bc]]]
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return poly_trim([int(c) for c in combo]), powers
        piv = int(nz[0])
        inv = F.inv(int(v[piv]))
        v = F.mul_np[inv, v]
        combo = F.mul_np[inv, combo]
        for p2, (br, bc) in list(basis.items()):
            c = int(br[piv])
            if c:
                basis[p2] = (F.add_np[br, F.neg_np[F.mul_np[c, v]]],
                             F.add_np[bc, F.neg_np[F.mul_np[c, combo]]])
        basis[piv] = (v, combo)
        powers.append(powers[-1] * z)
        deg += 1


def _eval_at_powers(A: GroupAlgebra, poly, powers):
    F = A.field
    acc = A.zero()
    for i, c in enumerate(poly):
        if c:
            acc = acc + powers[i].scale(c)
    return acc


def center_split(G: FiniteGroup, tower):
    """Primitive idempotents of the center of F_q[G], found by refining
    blocks with CRT interpolation idempotents of class-sum minimal
    polynomials.  Returned sorted by coefficient tuple."""
    q = tower.q
    if gcd(q, G.order) != 1:
        raise NotSemisimple(f"gcd({q}, {G.order}) != 1")
    A = GroupAlgebra(G, tower)
    F = tower.base
    sums = class_sums(A)
    blocks = [A.one()]
    for z in sums:
        refined = []
        for e in blocks:
            mp, powers = _minimal_polynomial(A, z, e)
            mp = poly_scale(F, F.inv(mp[-1]), mp)
            factors = factor_polynomial(F, mp)
            if any(mult > 1 for _, mult in factors):
                raise NotSemisimple(
                    "class sum has a repeated minimal-polynomial factor")
            if len(factors) == 1:
                refined.append(e)
                continue
            for h, _ in factors:
                # u = (mp/h) * inv(mp/h mod h); u(z)*e is the h-block piece
                comp = poly_divmod(F, mp, list(h))[0]
                comp_mod = poly_mod(F, comp, list(h))
                inv = _poly_inverse_mod(F, comp_mod, list(h))
                u = poly_mod(F, poly_mul(F, comp, inv), mp)
                refined.append(_eval_at_powers(A, u, powers))
        blocks = refined
    return sorted(blocks, key=lambda e: e.key())


def _poly_inverse_mod(F, f, m):
    """Inverse of f modulo m (coprime), by extended Euclid."""
    r0, r1 = poly_trim(list(m)), poly_trim(list(f))
    t0, t1 = [], [F.one]
    while r1:
        qq, rem = poly_divmod(F, r0, r1)
        r0, r1 = r1, rem
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, qq, t1))
    if len(r0) != 1:
        raise NotSemisimple("minimal-polynomial factors are not coprime")
    return poly_scale(F, F.inv(r0[0]), t0)

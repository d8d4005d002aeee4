"""Exact arithmetic in F_q and its extensions F_{q^s}.

Base fields F_q (q = p^a) represent elements as integer indices 0..q-1;
index i encodes the coefficient vector (c_0, ..., c_{a-1}) with
i = sum c_k p^k, so the constant c embeds as the index c.  Scalar
arithmetic goes through precomputed q x q tables (both plain lists for
scalar lookups and numpy arrays for vectorized use by the group-algebra
layer).  Extensions F_{q^s} represent elements as length-s tuples of base
indices and do schoolbook polynomial arithmetic modulo a deterministic
lex-least irreducible.
"""

from __future__ import annotations

import itertools
import threading
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import InternalInconsistency, NotCoprime, NotPrime

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, exact for n < 3.3e24
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def mult_order(n: int, q: int) -> int:
    """Least s >= 1 with q^s = 1 mod n; ord_1(q) = 1 by convention."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return 1
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    s, acc = 1, q % n
    while acc != 1:
        acc = acc * q % n
        s += 1
    return s


# ---------------------------------------------------------------------------
# Polynomials over a base field.  Coefficients are base-field indices,
# low-degree first, with no trailing zeros ([] is the zero polynomial).
# ---------------------------------------------------------------------------

def poly_trim(f):
    i = len(f)
    while i > 0 and f[i - 1] == 0:
        i -= 1
    return f[:i]


def poly_deg(f):
    return len(f) - 1


def poly_add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return poly_trim(out)


def poly_sub(F, f, g):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = F.sub(out[i], c)
    return poly_trim(out)


def poly_scale(F, c, f):
    if c == 0:
        return []
    return poly_trim([F.mul(c, x) for x in f])


def poly_mul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(out)


def poly_divmod(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    lg_inv = F.inv(g[-1])
    quot = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and any(f):
        f = poly_trim(f)
        if len(f) - 1 < dg:
            break
        c = F.mul(f[-1], lg_inv)
        shift = len(f) - 1 - dg
        quot[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = F.sub(f[shift + i], F.mul(c, b))
    return poly_trim(quot), poly_trim(f)


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_monic(F, f):
    if not f:
        return f
    if f[-1] == F.one:
        return list(f)
    return poly_scale(F, F.inv(f[-1]), f)


def poly_gcd(F, f, g):
    f, g = poly_trim(list(f)), poly_trim(list(g))
    while g:
        f, g = g, poly_mod(F, f, g)
    return poly_monic(F, f)


def poly_pow_mod(F, f, e, m):
    result = [F.one]
    base = poly_mod(F, f, m)
    while e > 0:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), m)
        base = poly_mod(F, poly_mul(F, base, base), m)
        e >>= 1
    return result


def poly_deriv(F, f):
    return poly_trim([F.mul(F.from_int(i), c) for i, c in enumerate(f)][1:])


def poly_eval(F, f, x):
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def is_irreducible(F, f) -> bool:
    """Deterministic test: x^{q^s} = x mod f and gcd(x^{q^{s/l}} - x, f) = 1
    for every prime l | s."""
    f = poly_monic(F, poly_trim(list(f)))
    s = poly_deg(f)
    if s < 1:
        return False
    if s == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    x = [0, F.one]
    h = list(x)
    powers = {}
    for i in range(1, s + 1):
        h = poly_pow_mod(F, h, F.q, f)
        powers[i] = h
    if poly_sub(F, powers[s], x):
        return False
    for ell in prime_factors(s):
        g = poly_gcd(F, poly_sub(F, powers[s // ell], x), f)
        if poly_deg(g) != 0:
            return False
    return True


def lex_least_irreducible(F, s):
    """Lex-least monic irreducible of degree s over F (coefficients compared
    low-degree-first in F's element-lex order).  For s >= 2 the constant
    term must be nonzero, so those candidates are skipped wholesale."""
    if s == 1:
        return (0, F.one)
    lex = list(F.elements_lex())
    for c0 in lex:
        if c0 == F.zero:
            continue
        for rest in itertools.product(lex, repeat=s - 1):
            f = [c0, *rest, F.one]
            if is_irreducible(F, f):
                return tuple(f)
    raise InternalInconsistency(f"no irreducible of degree {s} found")


# ---------------------------------------------------------------------------
# Base field F_q
# ---------------------------------------------------------------------------

MAX_BASE_ORDER = 4096


class BaseField:
    """F_{p^a} with table-backed arithmetic on integer element indices."""

    def __init__(self, p: int, a: int = 1):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if a < 1:
            raise ValueError("exponent must be >= 1")
        q = p ** a
        if q > MAX_BASE_ORDER:
            raise ValueError(f"base field order {q} exceeds cap {MAX_BASE_ORDER}")
        self.p, self.a, self.q = p, a, q
        self.order = q
        self.degree = a
        self.zero, self.one = 0, 1
        if a == 1:
            self.modulus = None
            add = [[(i + j) % p for j in range(p)] for i in range(p)]
            mul = [[(i * j) % p for j in range(p)] for i in range(p)]
        else:
            prime = BaseField(p, 1)
            self.modulus = lex_least_irreducible(prime, a)
            tuples = [self._index_to_coeffs_raw(i) for i in range(q)]
            polys = [poly_trim(list(t)) for t in tuples]
            add = [[0] * q for _ in range(q)]
            mul = [[0] * q for _ in range(q)]
            mod = list(self.modulus)
            for i in range(q):
                for j in range(i, q):
                    s = self._coeffs_to_index(poly_add(prime, polys[i], polys[j]))
                    add[i][j] = add[j][i] = s
                    m = self._coeffs_to_index(
                        poly_mod(prime, poly_mul(prime, polys[i], polys[j]), mod))
                    mul[i][j] = mul[j][i] = m
        self.add_t, self.mul_t = add, mul
        self.neg_t = [0] * q
        for i in range(q):
            row = add[i]
            self.neg_t[i] = row.index(0)
        self.inv_t = [0] * q
        for i in range(1, q):
            self.inv_t[i] = self.mul_t[i].index(1)
        self.add_np = np.array(add, dtype=np.int16)
        self.mul_np = np.array(mul, dtype=np.int16)
        self.neg_np = np.array(self.neg_t, dtype=np.int16)
        self.inv_np = np.array(self.inv_t, dtype=np.int16)

    # -- scalar ops on indices
    def add(self, i, j):
        return self.add_t[i][j]

    def sub(self, i, j):
        return self.add_t[i][self.neg_t[j]]

    def neg(self, i):
        return self.neg_t[i]

    def mul(self, i, j):
        return self.mul_t[i][j]

    def inv(self, i):
        if i == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_t[i]

    def pow(self, i, e):
        if e < 0:
            i, e = self.inv(i), -e
        result, base = 1, i
        while e > 0:
            if e & 1:
                result = self.mul_t[result][base]
            base = self.mul_t[base][base]
            e >>= 1
        return result

    def from_int(self, k: int) -> int:
        return k % self.p

    # -- representation helpers
    def _index_to_coeffs_raw(self, i):
        p = self.p
        return tuple((i // p ** k) % p for k in range(self.a))

    def _coeffs_to_index(self, coeffs):
        return sum(c * self.p ** k for k, c in enumerate(coeffs))

    def coeffs_of(self, i) -> tuple:
        """Coefficient vector (c_0, ..., c_{a-1}) over F_p."""
        return self._index_to_coeffs_raw(i)

    def lex_key(self, i):
        return self._index_to_coeffs_raw(i)

    def elements_lex(self):
        """All element indices in coefficient-lex order (c_0 compared first)."""
        for c in itertools.product(range(self.p), repeat=self.a):
            yield sum(ck * self.p ** k for k, ck in enumerate(c))

    # degree-1 "extension" protocol, so root-of-unity search is uniform
    def embed(self, c):
        return c

    def trace(self, x):
        return x

    def __repr__(self):
        return f"F_{self.q}" if self.a == 1 else f"F_{self.q} (= F_{self.p}^{self.a})"


# ---------------------------------------------------------------------------
# Extension field F_{q^s}, elements are length-s tuples of base indices
# ---------------------------------------------------------------------------

class ExtField:
    def __init__(self, base: BaseField, s: int):
        if s < 2:
            raise ValueError("use the base field for s = 1")
        self.base, self.s = base, s
        self.degree = s
        self.order = base.q ** s
        self.modulus = lex_least_irreducible(base, s)
        self.zero = (0,) * s
        self.one = (1,) + (0,) * (s - 1)
        self._trace_vec = None
        self._frob_cols = None

    def embed(self, c) -> tuple:
        return (c,) + (0,) * (self.s - 1)

    def add(self, x, y):
        a = self.base.add_t
        return tuple(a[xi][yi] for xi, yi in zip(x, y))

    def sub(self, x, y):
        a, n = self.base.add_t, self.base.neg_t
        return tuple(a[xi][n[yi]] for xi, yi in zip(x, y))

    def neg(self, x):
        n = self.base.neg_t
        return tuple(n[xi] for xi in x)

    def mul(self, x, y):
        base, s = self.base, self.s
        add, mul = base.add_t, base.mul_t
        prod = [0] * (2 * s - 1)
        for i, xi in enumerate(x):
            if xi:
                row = mul[xi]
                for j, yj in enumerate(y):
                    if yj:
                        prod[i + j] = add[prod[i + j]][row[yj]]
        mod = self.modulus
        neg = base.neg_t
        for d in range(2 * s - 2, s - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                row = mul[c]
                for i in range(s):
                    mi = mod[i]
                    if mi:
                        prod[d - s + i] = add[prod[d - s + i]][neg[row[mi]]]
        return tuple(prod[:s])

    def pow(self, x, e):
        if e < 0:
            x, e = self.inv(x), -e
        result, b = self.one, x
        while e > 0:
            if e & 1:
                result = self.mul(result, b)
            b = self.mul(b, b)
            e >>= 1
        return result

    def inv(self, x):
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero")
        F = self.base
        # extended Euclid on (modulus, x) over the base field
        r0, r1 = list(self.modulus), poly_trim(list(x))
        t0, t1 = [], [F.one]
        while r1:
            qpoly, rem = poly_divmod(F, r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, poly_sub(F, t0, poly_mul(F, qpoly, t1))
        if poly_deg(r0) != 0:
            raise InternalInconsistency("modulus not irreducible")
        t = poly_scale(F, F.inv(r0[0]), t0)
        return tuple(t + [0] * (self.s - len(t)))

    # -- Frobenius / trace
    def _prep_frobenius(self):
        F, s = self.base, self.s
        xq = self.pow((0, 1) + (0,) * (s - 2), F.q)
        cols = [self.one]
        for _ in range(s - 1):
            cols.append(self.mul(cols[-1], xq))
        self._frob_cols = cols  # image of basis X^j under y -> y^q
        tvec = []
        for j in range(s):
            v = tuple(F.one if i == j else 0 for i in range(s))
            acc, cur = v, v
            for _ in range(s - 1):
                cur = self._frob_apply(cur)
                acc = self.add(acc, cur)
            if any(acc[1:]):
                raise InternalInconsistency("trace of basis element not in base field")
            tvec.append(acc[0])
        self._trace_vec = tvec

    def _frob_apply(self, x):
        acc = self.zero
        for j, xj in enumerate(x):
            if xj:
                col = self._frob_cols[j]
                acc = self.add(acc, tuple(self.base.mul(xj, c) for c in col))
        return acc

    def frobenius(self, x):
        """x^q, computed through the precomputed linear map."""
        if self._frob_cols is None:
            self._prep_frobenius()
        return self._frob_apply(x)

    def trace(self, x):
        """Trace to the base field; returns a base-field index."""
        if self._trace_vec is None:
            self._prep_frobenius()
        F = self.base
        acc = 0
        for xj, tj in zip(x, self._trace_vec):
            if xj and tj:
                acc = F.add(acc, F.mul(xj, tj))
        return acc

    def lex_key(self, x):
        bk = self.base.lex_key
        return tuple(bk(c) for c in x)

    def elements_lex(self):
        base_lex = list(self.base.elements_lex())
        for c in itertools.product(base_lex, repeat=self.s):
            yield c

    def __repr__(self):
        return f"F_{self.base.q}^{self.s}"


# ---------------------------------------------------------------------------
# Tower
# ---------------------------------------------------------------------------

class FieldTower:
    """F_q plus lazily built extensions F_{q^s}; immutable after construction
    apart from the memoized extension cache (lock-protected)."""

    def __init__(self, p: int, a: int = 1):
        self.base = BaseField(p, a)
        self._ext = {1: self.base}
        self._lock = threading.Lock()

    @property
    def p(self):
        return self.base.p

    @property
    def q(self):
        return self.base.q

    def extend(self, s: int):
        if s < 1:
            raise ValueError("extension degree must be >= 1")
        with self._lock:
            ext = self._ext.get(s)
            if ext is None:
                ext = ExtField(self.base, s)
                self._ext[s] = ext
        return ext

    def root_of_unity(self, n: int):
        """Deterministic primitive n-th root of unity.

        Returns (field, zeta) with zeta in F_{q^s}, s = ord_n(q): the lex-least
        primitive n-th root among the powers of the first one hit by raising
        lex-ordered field elements to the (q^s - 1)/n-th power.
        """
        if gcd(n, self.q) != 1:
            raise NotCoprime(f"gcd({n}, {self.q}) != 1")
        if n == 1:
            return self.base, self.base.one
        s = mult_order(n, self.q)
        F = self.extend(s)
        e0 = (F.order - 1) // n
        ells = prime_factors(n)
        z = None
        for x in F.elements_lex():
            cand = F.pow(x, e0)
            if _has_exact_order(F, cand, n, ells):
                z = cand
                break
        if z is None:
            raise InternalInconsistency(f"no element of order {n} in {F!r}")
        best = min(
            (F.pow(z, j) for j in range(1, n) if gcd(j, n) == 1),
            key=F.lex_key,
        )
        return F, best

    def __repr__(self):
        return f"FieldTower({self.base!r})"


def _has_exact_order(F, z, n, ells):
    if F.pow(z, n) != F.one:
        return False
    return all(F.pow(z, n // ell) != F.one for ell in ells)


@lru_cache(maxsize=None)
def make_field(p: int, a: int = 1) -> FieldTower:
    return FieldTower(p, a)


def primitive_root_of_unity(tower: FieldTower, n: int):
    return tower.root_of_unity(n)


def field_trace(field, x):
    """Trace of x down to the tower's base field (a base-field index)."""
    return field.trace(x)


# ---------------------------------------------------------------------------
# Factorization of monic univariate polynomials over the base field
# ---------------------------------------------------------------------------

def factor_polynomial(F: BaseField, f):
    """Factor a monic polynomial over F_q into (irreducible, multiplicity)
    pairs, sorted by (degree, coefficient-lex)."""
    f = poly_trim(list(f))
    if poly_deg(f) < 1:
        raise ValueError("degree must be >= 1")
    if f[-1] != F.one:
        raise ValueError("polynomial must be monic")
    factors: dict[tuple, int] = {}
    _factor_into(F, f, 1, factors)
    check = [F.one]
    for h, e in factors.items():
        for _ in range(e):
            check = poly_mul(F, check, list(h))
    if check != f:
        raise InternalInconsistency("factorization does not re-multiply")
    return sorted(
        ((h, e) for h, e in factors.items()),
        key=lambda it: (len(it[0]), tuple(F.lex_key(c) for c in it[0])),
    )


def _factor_into(F, f, mult, factors):
    if poly_deg(f) < 1:
        return
    d = poly_deriv(F, f)
    if not d:
        # f = g(x^p); p-th root of each coefficient is c^(q/p)
        root = [F.pow(c, F.q // F.p) for c in f[:: F.p]]
        _factor_into(F, root, mult * F.p, factors)
        return
    w = poly_divmod(F, f, poly_gcd(F, f, d))[0]  # distinct-factor part
    rem = list(f)
    for h in _factor_squarefree(F, w):
        e = 0
        while True:
            quot, r = poly_divmod(F, rem, list(h))
            if r:
                break
            rem, e = quot, e + 1
        factors[h] = factors.get(h, 0) + e * mult
    if poly_deg(rem) >= 1:
        # remaining multiplicities all divisible by p
        root = [F.pow(c, F.q // F.p) for c in rem[:: F.p]]
        _factor_into(F, root, mult * F.p, factors)


def _factor_squarefree(F, f):
    """Irreducible factors of a squarefree monic f (distinct-degree then
    equal-degree splitting)."""
    out = []
    f = poly_monic(F, f)
    x = [0, F.one]
    h = list(x)
    d = 0
    while poly_deg(f) > 0:
        d += 1
        if 2 * d > poly_deg(f):
            out.append(tuple(f))
            break
        h = poly_pow_mod(F, h, F.q, f)
        g = poly_gcd(F, poly_sub(F, h, x), f)
        if poly_deg(g) > 0:
            out.extend(tuple(irr) for irr in _split_equal_degree(F, g, d))
            f = poly_divmod(F, f, g)[0]
            h = poly_mod(F, h, f)
    return out


def _split_equal_degree(F, f, d):
    if poly_deg(f) == d:
        return [f]
    n = poly_deg(f)
    for coeffs in itertools.product(F.elements_lex(), repeat=n):
        T = poly_trim(list(coeffs))
        if poly_deg(T) < 1:
            continue
        if F.p == 2:
            acc, cur = list(T), list(T)
            for _ in range(F.a * d - 1):
                cur = poly_pow_mod(F, poly_mul(F, cur, cur), 1, f)
                acc = poly_add(F, acc, cur)
            g = poly_gcd(F, acc, f)
        else:
            e = (F.q ** d - 1) // 2
            g = poly_gcd(F, poly_sub(F, poly_pow_mod(F, T, e, f), [F.one]), f)
        if 0 < poly_deg(g) < n:
            rest = poly_divmod(F, f, g)[0]
            return _split_equal_degree(F, g, d) + _split_equal_degree(F, rest, d)
    raise InternalInconsistency("equal-degree splitting exhausted candidates")


def poly_to_str(F, f, var="x"):
    if not f:
        return "0"
    parts = []
    for i, c in enumerate(f):
        if c == 0:
            continue
        if i == 0:
            parts.append(_coeff_str(F, c))
        else:
            xi = var if i == 1 else f"{var}^{i}"
            parts.append(xi if c == F.one else f"{_coeff_str(F, c)}*{xi}")
    return " + ".join(parts)


def _coeff_str(F, c):
    if F.a == 1:
        return str(c)
    return "(" + ",".join(map(str, F.coeffs_of(c))) + ")"

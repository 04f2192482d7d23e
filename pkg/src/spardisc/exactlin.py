"""Exact linear algebra over the rationals for small systems.

Large interpolation systems go through the modular kernels instead; this
module is the no-floating-point path used for sampling, rank probes and
small nullspaces.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref_fractions(rows: list) -> tuple[list, list]:
    """In-place-free reduced row echelon form; returns (pivot_cols, rref_rows)."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, m[: len(pivots)]


def rank_rational(rows: list) -> int:
    pivots, _ = rref_fractions(rows)
    return len(pivots)


def primitive_int_vector(vec: list) -> list[int]:
    """Scale a rational vector to a primitive integer vector (gcd 1).

    The sign is kept as given (first nonzero entry keeps its sign).
    """
    fracs = [Fraction(x) for x in vec]
    den = lcm(*[f.denominator for f in fracs]) if fracs else 1
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def nullspace_rational(rows: list) -> list[list[int]]:
    """Basis of the right nullspace as primitive integer vectors.

    Canonical: one basis vector per free column, with value 1 there and the
    RREF back-substituted values at the pivot columns, then scaled primitive.
    """
    if not rows:
        raise ValueError("empty matrix")
    ncols = len(rows[0])
    pivots, rref = rref_fractions(rows)
    piv_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in piv_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][free]
        basis.append(primitive_int_vector(v))
    return basis


def solve_rational(rows: list, rhs: list):
    """One exact solution of A x = b, or None when inconsistent.

    Free variables are set to 0.
    """
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots, rref = rref_fractions(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = rref[i][ncols]
    return x


def rational_reconstruct(a: int, m: int):
    """Rational number n/d == a (mod m) with |n|, d <= sqrt(m/2), or None.

    Standard half-extended Euclidean reconstruction.
    """
    a %= m
    bound = 1
    while (bound + 1) * (bound + 1) <= m // 2:
        bound += 1
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r1 == 0 or abs(t1) > bound or gcd(r1, t1) != 1:
        return None
    if t1 < 0:
        return Fraction(-r1, -t1)
    return Fraction(r1, t1)

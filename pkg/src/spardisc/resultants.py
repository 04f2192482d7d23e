"""Resultants and discriminants of univariate and homogeneous forms.

Everything is exact over the polynomial ring: determinants go through
fraction-free Bareiss elimination, and low-degree discriminants are obtained
by evaluating a cached generic discriminant formula (itself computed once by
Sylvester + Bareiss) at the actual coefficients.  The classical sign
convention (-1)^(d(d-1)/2) Res(f, f')/lc(f) is used throughout, so the
quadratic case reads c1^2 - 4 c0 c2.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .exactpoly import DivisionFailure, PencilForm, SparsePoly, VarTable

__all__ = [
    "UniPoly",
    "ResultantDegenerate",
    "bareiss_det",
    "sylvester_resultant",
    "univariate_discriminant",
    "disc_by_formula",
    "generic_discriminant",
    "quartic_resolvent_discriminant",
    "macaulay_resultant",
    "homogeneous_discriminant",
]


class ResultantDegenerate(Exception):
    """All Macaulay monomial orderings produced an identically-zero minor."""


class UniPoly:
    """Univariate polynomial whose coefficients are SparsePoly values."""

    __slots__ = ("var", "coeffs", "table")

    def __init__(self, var: str, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            raise ValueError("zero polynomial has no UniPoly form")
        self.var = var
        self.coeffs = tuple(coeffs)
        self.table = coeffs[0].table

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> SparsePoly:
        return self.coeffs[-1]

    def derivative(self) -> "UniPoly":
        if self.degree == 0:
            raise ValueError("derivative of a constant is zero")
        return UniPoly(self.var, [self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    @classmethod
    def from_constants(cls, table: VarTable, var: str, values) -> "UniPoly":
        return cls(var, [SparsePoly.const(table, v) for v in values])


def bareiss_det(matrix) -> SparsePoly:
    """Determinant of a square SparsePoly matrix by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    table = matrix[0][0].table
    if n == 1:
        return matrix[0][0]
    m = [list(row) for row in matrix]
    sign = 1
    prev = SparsePoly.one(table)
    for k in range(n - 1):
        piv = None
        best = None
        for i in range(k, n):
            if not m[i][k].is_zero():
                sz = len(m[i][k])
                if best is None or sz < best:
                    best = sz
                    piv = i
                    if sz == 1:
                        break
        if piv is None:
            return SparsePoly.zero(table)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = m[i][j] * pivot - mik * m[k][j]
                if num.is_zero():
                    m[i][j] = num
                    continue
                q = num.exact_divide(prev)
                if isinstance(q, DivisionFailure):
                    raise ArithmeticError("Bareiss division failed; matrix entries inconsistent")
                m[i][j] = q
            m[i][k] = SparsePoly.zero(table)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_resultant(f: UniPoly, g: UniPoly) -> SparsePoly:
    """Determinant of the Sylvester matrix of f (degree m) and g (degree k).

    Rows list f shifted k times, then g shifted m times, coefficients in
    descending powers; Res(x - a, x - b) = a - b under this convention.
    """
    m, k = f.degree, g.degree
    if m < 1 or k < 1:
        raise ValueError("both degrees must be >= 1")
    if f.leading().is_zero() or g.leading().is_zero():
        raise ValueError("zero leading coefficient; trim the degree first")
    table = f.table
    zero = SparsePoly.zero(table)
    size = m + k
    rows = []
    fdesc = list(reversed(f.coeffs))
    gdesc = list(reversed(g.coeffs))
    for i in range(k):
        rows.append([zero] * i + fdesc + [zero] * (k - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gdesc + [zero] * (m - 1 - i))
    return bareiss_det(rows)


_GENERIC_DISC_CACHE: dict = {}


def generic_discriminant(delta: int) -> tuple[VarTable, SparsePoly]:
    """Discriminant of the generic degree-delta polynomial u_0 + ... + u_d t^d.

    Classical normalization: (-1)^(d(d-1)/2) Res(f, f') / u_d.  Cached.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    got = _GENERIC_DISC_CACHE.get(delta)
    if got is not None:
        return got
    table = VarTable([f"u{i}" for i in range(delta + 1)])
    f = UniPoly("t", [SparsePoly.variable(table, f"u{i}") for i in range(delta + 1)])
    if delta == 1:
        res = SparsePoly.one(table)
    else:
        res = sylvester_resultant(f, f.derivative())
        res = res.exact_divide(SparsePoly.variable(table, f"u{delta}"))
        if isinstance(res, DivisionFailure):
            raise ArithmeticError("Res(f, f') not divisible by the leading coefficient")
    if (delta * (delta - 1) // 2) % 2:
        res = -res
    _GENERIC_DISC_CACHE[delta] = (table, res)
    return table, res


def disc_by_formula(coeffs, delta: int) -> SparsePoly:
    """Evaluate the generic degree-delta discriminant at coefficient polys.

    `coeffs` has length delta+1; entries may be zero polynomials (degenerate
    specializations are evaluated correctly, no trimming).
    """
    coeffs = list(coeffs)
    if len(coeffs) != delta + 1:
        raise ValueError("need delta + 1 coefficients")
    table = coeffs[0].table
    _gt, gdisc = generic_discriminant(delta)
    pow_cache: dict = {}

    def power(i, e):
        got = pow_cache.get((i, e))
        if got is None:
            got = coeffs[i] ** e
            pow_cache[(i, e)] = got
        return got

    out = SparsePoly.zero(table)
    for exps, c in gdisc.terms_sorted():
        term = SparsePoly.const(table, c)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
                if term.is_zero():
                    break
        out = out + term
    return out


def univariate_discriminant(f: UniPoly) -> SparsePoly:
    """Classical discriminant of f: (-1)^(d(d-1)/2) Res(f, f')/lc(f).

    Degree 0 returns the constant 1 (the empty-resultant convention).  The
    exact classical value is returned, with no content stripped, so path
    identities hold with fixed constants.
    """
    if f.degree == 0:
        return SparsePoly.one(f.table)
    return disc_by_formula(list(f.coeffs), f.degree)


def quartic_resolvent_discriminant(deltas) -> SparsePoly:
    """(4p^3 - q^2)/27 from the quartic's cubic resolvent invariants.

    p = 12 D4 D0 - 3 D3 D1 + D2^2,
    q = 72 D4 D2 D0 + 9 D3 D2 D1 - 27 D4 D1^2 - 27 D0 D3^2 - 2 D2^3.
    The division by 27 is always exact (asserted); the result equals the
    classical quartic discriminant of D0 + D1 t + D2 t^2 + D3 t^3 + D4 t^4.
    """
    d0, d1, d2, d3, d4 = deltas
    if d4.is_zero():
        raise ValueError("Delta_4 must not be identically zero")
    p = 12 * d4 * d0 - 3 * d3 * d1 + d2 * d2
    q = 72 * d4 * d2 * d0 + 9 * d3 * d2 * d1 - 27 * d4 * d1 * d1 - 27 * d0 * d3 * d3 - 2 * d2 * d2 * d2
    s = 4 * p * p * p - q * q
    table = d0.table
    if s.is_zero():
        return s
    out = {}
    for key, c in s._t.items():
        if c % 27:
            raise AssertionError("4p^3 - q^2 not divisible by 27; transcription bug")
        out[key] = c // 27
    return SparsePoly(table, out)


def _monomials_of_degree(nvars: int, d: int) -> list:
    """Exponent tuples of total degree d, graded-lex descending."""
    out = []
    for comb in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in comb:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def macaulay_resultant(forms, e: int, nlam: int, table: VarTable) -> SparsePoly:
    """Homogeneous resultant Res_{e,...,e} of nlam forms in nlam variables.

    `forms` are dicts mapping lambda-exponent tuples (sum e) to SparsePoly
    coefficients over `table`.  Computed as the Macaulay-matrix determinant
    divided by the extraneous minor, both by Bareiss elimination.  A
    degenerate (identically zero) minor is retried across the nlam standard
    variable rotations; ResultantDegenerate is raised if all fail.
    """
    if len(forms) != nlam:
        raise ValueError("need exactly nlam forms")
    if e < 1:
        raise ValueError("form degree must be >= 1")
    for fm in forms:
        if not fm:
            return SparsePoly.zero(table)
    zero = SparsePoly.zero(table)
    D = nlam * (e - 1) + 1
    cols = _monomials_of_degree(nlam, D)
    col_index = {m: i for i, m in enumerate(cols)}
    last_error = None
    for rot in range(nlam):
        order = [(j + rot) % nlam for j in range(nlam)]
        reduced_owner = []
        for alpha in cols:
            owner = None
            count = 0
            for j in order:
                if alpha[j] >= e:
                    count += 1
                    if owner is None:
                        owner = j
            reduced_owner.append((owner, count))
        rows = []
        extraneous_idx = []
        for ridx, alpha in enumerate(cols):
            owner, count = reduced_owner[ridx]
            if owner is None:
                raise AssertionError("Macaulay row assignment failed")
            beta = list(alpha)
            beta[owner] -= e
            row = [zero] * len(cols)
            for fexps, fpoly in forms[owner].items():
                gamma = tuple(b + fe for b, fe in zip(beta, fexps))
                row[col_index[gamma]] = fpoly
            rows.append(row)
            if count >= 2:
                extraneous_idx.append(ridx)
        det_m = bareiss_det(rows)
        if not extraneous_idx:
            return det_m
        minor = [[rows[i][col_index[cols[j]]] for j in extraneous_idx] for i in extraneous_idx]
        det_minor = bareiss_det(minor)
        if det_minor.is_zero():
            last_error = f"extraneous minor identically zero (rotation {rot})"
            continue
        if det_m.is_zero():
            return det_m
        q = det_m.exact_divide(det_minor)
        if isinstance(q, DivisionFailure):
            last_error = f"Macaulay quotient failed (rotation {rot})"
            continue
        return q
    raise ResultantDegenerate(last_error or "no usable Macaulay ordering")


def homogeneous_discriminant(H: PencilForm) -> SparsePoly:
    """Discriminant of a homogeneous form of degree delta in r+1 variables.

    r = 0: the single coefficient.  r = 1: classical binary discriminant via
    the generic formula (degenerate specializations evaluate correctly).
    r >= 2: Macaulay resultant of the partial derivatives, degree delta - 1.
    """
    table = H.table_c
    if not H.coeffs:
        return SparsePoly.zero(table)
    if H.delta < 1:
        raise ValueError("form degree must be >= 1")
    if H.r == 0:
        return H.coefficient((H.delta,))
    if H.r == 1:
        return disc_by_formula(H.binary_coefficients(), H.delta)
    partials = [H.partial_lambda(i) for i in range(H.r + 1)]
    return macaulay_resultant(partials, H.delta - 1, H.r + 1, table)

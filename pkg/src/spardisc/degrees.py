"""Closed-form degree arithmetic for mixed and iterated discriminants.

Covers the dilated-simplex formula with its generating-function cross-check,
the iterated-discriminant degree (r+1) * delta * (delta-1)^r, the
Segre-Veronese partition formulas, the equality scan, and the planar
(smooth polygon) formulas with the two-polygon search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb, factorial

from .exactpoly import SparsePoly
from .lattice import (
    Polygon,
    enumerate_no_interior_polygons,
    interior_points,
    is_smooth,
    lattice_perimeter,
    normalized_area,
)

__all__ = [
    "SVParams",
    "DegreeReport",
    "deg_md_simplex",
    "series_coefficient",
    "deg_id",
    "enumerate_partitions",
    "deg_md_segre_veronese",
    "delta_segre_veronese",
    "conjecture_scan",
    "theorem56_check",
    "prop42_check",
    "plane_delta",
    "plane_deg_md",
    "theorem63_search",
]


@dataclass(frozen=True)
class SVParams:
    """Pencil order r and the simplex-product shape d_1*Delta_{k_1} x ..."""

    r: int
    d: tuple
    k: tuple

    def __post_init__(self):
        if len(self.d) != len(self.k) or not self.d:
            raise ValueError("d and k must be equal-length non-empty tuples")
        if self.r < 0 or any(x < 1 for x in self.d) or any(x < 1 for x in self.k):
            raise ValueError("r >= 0 and d_i, k_i >= 1 required")

    @property
    def ell(self) -> int:
        return len(self.d)


@dataclass(frozen=True)
class DegreeReport:
    """Computed degrees with the formula path used and the equality verdict."""

    params: object
    deg_md: int
    delta: int
    deg_id: int
    defective: bool
    equal: bool | None
    provenance: tuple = ()
    note: str = ""

    def to_json(self) -> dict:
        return {
            "params": repr(self.params),
            "deg_MD": self.deg_md,
            "delta": self.delta,
            "deg_ID": self.deg_id,
            "defective": self.defective,
            "equal": self.equal,
            "provenance": list(self.provenance),
            "note": self.note,
        }


def deg_md_simplex(n: int, d: int, r: int) -> int:
    """deg MD for r+1 generic degree-d forms on Delta_n: (n+1) C(n,r) d^r (d-1)^(n-r).

    Zero when r > n.
    """
    if d < 1 or r < 0 or n < 0:
        raise ValueError("need d >= 1, r >= 0, n >= 0")
    if r > n:
        return 0
    return (n + 1) * comb(n, r) * d**r * (d - 1) ** (n - r)


def series_coefficient(n: int, d: int, r: int) -> int:
    """Coefficient of x^r y^n in 1/(1-(d-1)y-dxy)^2, by truncated series.

    Independent oracle for deg_md_simplex: expands sum (m+1) q^m with
    q = (d-1) y + d x y, exactly, truncating above x^r y^n.
    """
    if n < 0 or r < 0:
        raise ValueError("n, r must be nonnegative")
    # series as dict (i, j) -> coefficient of x^i y^j, truncated
    q = {}
    if d - 1:
        q[(0, 1)] = d - 1
    q[(1, 1)] = d

    def mul_trunc(a, b):
        out = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                i, j = i1 + i2, j1 + j2
                if i > r or j > n:
                    continue
                out[(i, j)] = out.get((i, j), 0) + c1 * c2
        return {k: v for k, v in out.items() if v}

    total = {(0, 0): 1}
    qpow = {(0, 0): 1}
    for m in range(1, n + 1):
        qpow = mul_trunc(qpow, q)
        for key, c in qpow.items():
            total[key] = total.get(key, 0) + (m + 1) * c
    return total.get((r, n), 0)


def deg_id(delta: int, r: int) -> int:
    """deg ID = (r+1) * delta * (delta-1)^r; zero when delta <= 1 and r >= 1."""
    if delta < 0 or r < 0:
        raise ValueError("delta, r must be nonnegative")
    return (r + 1) * delta * (delta - 1) ** r


def _subsets_char(indices) -> list:
    """Non-empty subsets of `indices` as (subset tuple, characteristic vector)."""
    indices = list(indices)
    out = []
    for mask in range(1, 1 << len(indices)):
        sub = tuple(indices[i] for i in range(len(indices)) if mask >> i & 1)
        out.append(sub)
    out.sort(key=lambda s: (len(s), s))
    return out


def enumerate_partitions(kappa, subset_family):
    """All multiplicity maps (m_Omega) with sum m_Omega * char(Omega) = kappa.

    `subset_family` is a list of subsets (tuples of coordinate indices into
    kappa).  Yields dicts subset -> positive multiplicity, duplicate-free, by
    lexicographic backtracking.
    """
    kappa = list(kappa)
    if any(x < 0 for x in kappa):
        raise ValueError("kappa must be componentwise nonnegative")
    family = list(subset_family)
    n = len(family)

    def rec(i, remaining, chosen):
        if not any(remaining):
            yield dict(chosen)
            return
        if i >= n:
            return
        # feasibility: remaining support must be coverable by later subsets
        support = {j for j, v in enumerate(remaining) if v}
        coverable = set()
        for s in family[i:]:
            coverable.update(s)
        if not support <= coverable:
            return
        sub = family[i]
        mmax = min(remaining[j] for j in sub)
        for m in range(mmax, -1, -1):
            nxt = list(remaining)
            ok = True
            for j in sub:
                nxt[j] -= m
                if nxt[j] < 0:
                    ok = False
                    break
            if not ok:
                continue
            if m:
                chosen.append((sub, m))
            yield from rec(i + 1, nxt, chosen)
            if m:
                chosen.pop()

    yield from rec(0, kappa, [])


def _is_symbolic(x) -> bool:
    return isinstance(x, SparsePoly)


def _partition_sum(kappa, family, weight_of_subset):
    """sum over partitions of (1 + sum m)! * prod w(Omega)^m / m! (exact).

    `weight_of_subset(sub)` returns d_Omega - 1, an int or a SparsePoly.
    The multinomial part is always an exact integer (asserted).
    """
    total = None
    for part in enumerate_partitions(kappa, family):
        msum = sum(part.values())
        denom = 1
        for m in part.values():
            denom *= factorial(m)
        num = factorial(1 + msum)
        if num % denom:
            raise AssertionError("multinomial part not integral")
        term = num // denom
        symbolic = False
        for sub, m in part.items():
            w = weight_of_subset(sub)
            if _is_symbolic(w):
                symbolic = True
                term = w**m * term if not _is_symbolic(term) else term * w**m
            else:
                term = term * (w**m) if not _is_symbolic(term) else term * (w**m)
        if not symbolic and not _is_symbolic(term):
            if term < 0:
                raise AssertionError("negative partition summand")
            if term == 0:
                continue
        total = term if total is None else total + term
    if total is None:
        return 0
    return total


def deg_md_segre_veronese(params: SVParams, symbolic_d=None):
    """Degree of the mixed discriminant for P^r(1) x P^k1(d1) x ... (exact).

    With `symbolic_d` (list of SparsePoly), evaluates the partition formula
    symbolically in the d_i.
    """
    ell = params.ell
    d = list(symbolic_d) if symbolic_d is not None else list(params.d)
    kappa = (params.r,) + tuple(params.k)
    family = _subsets_char(range(ell + 1))

    def weight(sub):
        acc = None
        for j in sub:
            val = 1 if j == 0 else d[j - 1]
            acc = val if acc is None else acc + val
        return acc - 1

    return _partition_sum(kappa, family, weight)


def delta_segre_veronese(d, k, symbolic_d=None):
    """deg D_A for the Segre-Veronese configuration d_1 Delta_{k_1} x ... (exact)."""
    d = list(d)
    k = list(k)
    if len(d) != len(k) or not d:
        raise ValueError("d and k must be equal-length non-empty lists")
    dd = list(symbolic_d) if symbolic_d is not None else d
    ell = len(d)
    family = _subsets_char(range(ell))  # subsets of the factors {1..ell}, 0-indexed

    def weight(sub):
        acc = None
        for j in sub:
            acc = dd[j] if acc is None else acc + dd[j]
        return acc - 1

    return _partition_sum(tuple(k), family, weight)


def _sv_defective(params: SVParams, delta: int, dmd: int) -> tuple[bool, str]:
    """Defectivity guard for the scan (recorded decision; see module notes).

    The pencil factor requires r <= dim(X_A) = sum(k); vanishing degree
    formulas (delta <= 1 or deg MD = 0) mark dual-defective parameters.
    """
    if params.r > sum(params.k):
        return True, "pencil factor defective: r > dim(X_A)"
    if delta <= 1:
        return True, "delta <= 1: base configuration dual-defective"
    if dmd == 0:
        return True, "deg MD = 0: mixed system defective"
    return False, ""


def conjecture_scan(r_max: int, ell_max: int, d_max: int, k_max: int) -> list:
    """Enumerate SVParams within bounds and report every degree equality.

    Parameters flagged by the defectivity guard are excluded from equality
    verdicts (reported with defective=True).  Factor order is quotiented out.
    """
    if min(r_max, ell_max, d_max, k_max) < 1:
        raise ValueError("bounds must be >= 1")
    reports = []
    pairs = [(d, k) for d in range(1, d_max + 1) for k in range(1, k_max + 1)]
    for r in range(1, r_max + 1):
        for ell in range(1, ell_max + 1):
            for chosen in combinations_with_replacement(pairs, ell):
                params = SVParams(
                    r=r, d=tuple(p[0] for p in chosen), k=tuple(p[1] for p in chosen)
                )
                delta = delta_segre_veronese(params.d, params.k)
                dmd = deg_md_segre_veronese(params)
                did = deg_id(delta, r)
                defective, note = _sv_defective(params, delta, dmd)
                reports.append(
                    DegreeReport(
                        params=params,
                        deg_md=dmd,
                        delta=delta,
                        deg_id=did,
                        defective=defective,
                        equal=None if defective else (dmd == did),
                        provenance=("partition-formula", "(r+1)*delta*(delta-1)^r"),
                        note=note,
                    )
                )
    return reports


def theorem56_check(ell_max: int, d_max: int, k_max: int) -> list:
    """r = 1 grid with all d_i >= 2: equality only at ell = 1, d = (2).

    Returns the violating reports (expected empty).
    """
    violations = []
    pairs = [(d, k) for d in range(2, d_max + 1) for k in range(1, k_max + 1)]
    for ell in range(1, ell_max + 1):
        for chosen in combinations_with_replacement(pairs, ell):
            d = tuple(p[0] for p in chosen)
            k = tuple(p[1] for p in chosen)
            if 1 > sum(k):
                continue
            delta = delta_segre_veronese(d, k)
            dmd = deg_md_segre_veronese(SVParams(1, d, k))
            did = deg_id(delta, 1)
            expected_equal = ell == 1 and d == (2,)
            if (dmd == did) != expected_equal:
                violations.append(
                    DegreeReport(
                        params=SVParams(1, d, k),
                        deg_md=dmd,
                        delta=delta,
                        deg_id=did,
                        defective=False,
                        equal=dmd == did,
                        note="violates the d_i >= 2 equality classification",
                    )
                )
    return violations


def prop42_check(d_min: int = 2, d_max: int = 5, n_max: int = 4) -> list:
    """Grid check: equality iff (d, r) = (2, 1); for d > 2 the ratio beats (r+1)!.

    Returns violating reports (expected empty).
    """
    violations = []
    for d in range(d_min, d_max + 1):
        for n in range(1, n_max + 1):
            delta = (n + 1) * (d - 1) ** n
            for r in range(1, n + 1):
                dmd = deg_md_simplex(n, d, r)
                did = deg_id(delta, r)
                ok = (did == dmd) if (d == 2 and r == 1) else (did > dmd)
                if d > 2 and not did > factorial(r + 1) * dmd:
                    ok = False
                if not ok:
                    violations.append(
                        DegreeReport(
                            params=SVParams(r, (d,), (n,)),
                            deg_md=dmd,
                            delta=delta,
                            deg_id=did,
                            defective=False,
                            equal=did == dmd,
                            note="violates the simplex equality classification",
                        )
                    )
    return violations


# ----------------------------------------------------------------------
# plane curves
# ----------------------------------------------------------------------


def plane_delta(poly: Polygon) -> int:
    """deg D_A = 3v - 2p + V for the lattice points of a smooth polygon."""
    if poly.degenerate:
        raise ValueError("degenerate polygon")
    if not is_smooth(poly):
        raise ValueError("plane formulas require a smooth polygon")
    v = normalized_area(poly)
    p = lattice_perimeter(poly)
    V = poly.vertex_count()
    i = interior_points(poly)
    val = 3 * v - 2 * p + V
    if val != v + 4 * (i - 1) + V:
        raise AssertionError("Pick rewrite of delta disagrees")
    return val


def plane_deg_md(poly: Polygon) -> int:
    """deg MD(A, A) = 6v - 2p = 4(v + i - 1) for smooth planar configurations."""
    if poly.degenerate:
        raise ValueError("degenerate polygon")
    if not is_smooth(poly):
        raise ValueError("plane formulas require a smooth polygon")
    v = normalized_area(poly)
    p = lattice_perimeter(poly)
    i = interior_points(poly)
    val = 6 * v - 2 * p
    if val != 4 * (v + i - 1):
        raise AssertionError("Pick rewrite of deg MD disagrees")
    return val


def theorem63_search(a_max: int) -> list:
    """Smooth, non-degenerate no-interior-point polygons satisfying
    2(v-1) = (v+V-4)(v+V-5); the classification yields exactly the triangle
    2*Delta_2 and the unit square."""
    if a_max < 2:
        raise ValueError("a_max must be >= 2")
    hits = []
    for poly in enumerate_no_interior_polygons(a_max):
        if poly.degenerate or not is_smooth(poly):
            continue
        v = normalized_area(poly)
        V = poly.vertex_count()
        if 2 * (v - 1) == (v + V - 4) * (v + V - 5):
            hits.append(poly)
    return hits

"""The A-discriminant engine.

Closed-form registry, singular-section sampling on the dual variety, exact
interpolation (small systems over the rationals, large systems through the
modular kernels with CRT + rational reconstruction + exact re-verification),
the Katz corank probe, and the Cayley non-defectivity predicate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm

import numpy as np

from . import degrees as degrees_mod
from ._kernels import MAX_PRIME, ModRref
from .exactlin import nullspace_rational, rank_rational, rational_reconstruct
from .exactpoly import PencilForm, SparsePoly, VarTable, collect_as_pencil
from .lattice import CayleyConfig, LatticeConfig, Polygon, convex_hull, is_smooth, simplex_points
from .resultants import UniPoly, macaulay_resultant, univariate_discriminant

__all__ = [
    "DiscriminantArtifact",
    "DualSample",
    "NoMethodAvailable",
    "InterpolationInconclusive",
    "HypothesisViolation",
    "singular_section_sample",
    "interpolate_discriminant",
    "a_discriminant",
    "katz_corank_probe",
    "cayley_nondefective",
]


class NoMethodAvailable(Exception):
    """No closed form applies and no degree hint can be produced."""


class InterpolationInconclusive(Exception):
    """Nullspace dimension never reached 1 within the sample budget."""

    def __init__(self, dim: int, message: str = ""):
        self.dim = dim
        super().__init__(message or f"nullspace dimension stalled at {dim}")


class HypothesisViolation(Exception):
    """An operation was called outside its stated hypotheses."""


@dataclass(frozen=True)
class DiscriminantArtifact:
    """A discriminant polynomial plus its normalization metadata."""

    config: LatticeConfig
    poly: SparsePoly
    method: str  # closed-form | resultant-of-partials | interpolated | cayley
    predicted_degree: int | None = None
    prefactor: Fraction = Fraction(1)
    sign_note: str = ""
    defective: bool = False
    detail: str = ""

    def __post_init__(self):
        if self.defective:
            if not (self.poly.is_constant() and self.poly.constant_value() == 1):
                raise ValueError("defective artifact must carry the unit polynomial")
        elif self.predicted_degree is not None:
            if self.poly.total_degree() != self.predicted_degree:
                raise ValueError(
                    f"degree mismatch: predicted {self.predicted_degree}, "
                    f"observed {self.poly.total_degree()}"
                )

    @property
    def degree(self) -> int:
        return self.poly.total_degree()

    def to_json(self) -> dict:
        from .exactpoly import rational_str

        return {
            "config": self.config.to_json(),
            "method": self.method,
            "detail": self.detail,
            "degree": self.degree,
            "predicted_degree": self.predicted_degree,
            "prefactor": rational_str(self.prefactor),
            "sign_convention": self.sign_note,
            "defective": self.defective,
            "poly": self.poly.to_json(),
        }


@dataclass(frozen=True)
class DualSample:
    """A witness point u in (Q*)^n and coefficients c of a section singular at u."""

    u: tuple
    coeffs: tuple


_WITNESS_POOL = [x for x in range(-19, 20) if x % 2 != 0]


def _draw_witness(dim: int, rng: random.Random) -> tuple:
    return tuple(rng.choice(_WITNESS_POOL) for _ in range(dim))


def _monomial_value(point, u):
    """u^a for an integer lattice point a (negative exponents allowed)."""
    val = Fraction(1)
    for ui, ai in zip(u, point):
        if ai >= 0:
            val *= Fraction(ui) ** ai
        else:
            val /= Fraction(ui) ** (-ai)
    return val


def _singular_system(A: LatticeConfig, u) -> list:
    """(n+1) x |A| matrix: monomials at u, then x_i-scaled partials at u."""
    monos = [_monomial_value(p, u) for p in A.points]
    rows = [monos]
    for i in range(A.dim):
        rows.append([p[i] * m for p, m in zip(A.points, monos)])
    return rows


def singular_section_sample(A: LatticeConfig, u, rng: random.Random) -> DualSample:
    """A random integer coefficient vector whose section is singular at u.

    Exact: p(u) = 0 and all partial derivatives vanish at u, verified before
    returning.
    """
    u = tuple(u)
    if any(x == 0 for x in u):
        raise ValueError("witness point must have nonzero coordinates")
    rows = _singular_system(A, u)
    basis = nullspace_rational(rows)
    if not basis:
        raise ValueError("nullspace empty (configuration too small)")
    for _ in range(64):
        combo = [rng.randint(-9, 9) for _ in basis]
        c = [sum(k * b[j] for k, b in zip(combo, basis)) for j in range(len(A))]
        if any(c):
            break
    else:
        raise RuntimeError("failed to draw a nonzero singular section")
    monos = [_monomial_value(p, u) for p in A.points]
    if sum(ci * m for ci, m in zip(c, monos)) != 0:
        raise AssertionError("sample does not vanish at the witness")
    for i in range(A.dim):
        if sum(ci * p[i] * m for ci, p, m in zip(c, A.points, monos)) != 0:
            raise AssertionError("sample is not singular at the witness")
    return DualSample(u=u, coeffs=tuple(c))


def _sample_stream(A: LatticeConfig, rng: random.Random):
    while True:
        u = _draw_witness(A.dim, rng)
        try:
            yield singular_section_sample(A, u, rng)
        except (ValueError, RuntimeError):
            continue


# ----------------------------------------------------------------------
# monomial bases for interpolation
# ----------------------------------------------------------------------


def _exps_of_degree(positions, nvars, d):
    """Exponent tuples over `nvars` slots supported on `positions`, total d."""
    out = []
    for comb in combinations_with_replacement(positions, d):
        e = [0] * nvars
        for i in comb:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


class _Basis:
    """Monomial basis, optionally a product over variable blocks."""

    def __init__(self, nvars: int, degree: int, blocks=None):
        self.nvars = nvars
        if blocks is None:
            self.block_positions = [list(range(nvars))]
            self.block_degrees = [degree]
        else:
            self.block_positions = [list(pos) for pos, _d in blocks]
            self.block_degrees = [d for _pos, d in blocks]
        self.block_exps = [
            _exps_of_degree(pos, nvars, d)
            for pos, d in zip(self.block_positions, self.block_degrees)
        ]
        self.exponents = self.block_exps[0]
        for nxt in self.block_exps[1:]:
            self.exponents = [
                tuple(a + b for a, b in zip(e1, e2)) for e1 in self.exponents for e2 in nxt
            ]

    def __len__(self):
        return len(self.exponents)

    def _block_values(self, sample, mod=None):
        vals = []
        for pos, exps in zip(self.block_positions, self.block_exps):
            maxdeg = max((sum(e) for e in exps), default=0)
            powers = {}
            for i in pos:
                acc = [1]
                for _ in range(maxdeg):
                    nxt = acc[-1] * sample[i]
                    acc.append(nxt % mod if mod else nxt)
                powers[i] = acc
            bv = []
            for e in exps:
                v = 1
                for i in pos:
                    if e[i]:
                        v *= powers[i][e[i]]
                        if mod:
                            v %= mod
                bv.append(v)
            vals.append(bv)
        return vals

    def row_mod(self, sample, p: int) -> np.ndarray:
        vals = self._block_values([s % p for s in sample], mod=p)
        row = np.array(vals[0], dtype=np.int64)
        for nxt in vals[1:]:
            row = (np.outer(row, np.array(nxt, dtype=np.int64)) % p).reshape(-1)
        return row

    def row_exact(self, sample) -> list:
        vals = self._block_values(sample)
        row = vals[0]
        for nxt in vals[1:]:
            row = [a * b for a in row for b in nxt]
        return row


def _first_primes(n: int) -> list[int]:
    """The first n primes below the kernel's exact-arithmetic bound."""

    def is_prime(x):
        if x < 2:
            return False
        d = 2
        while d * d <= x:
            if x % d == 0:
                return False
            d += 1
        return True

    out = []
    x = min(MAX_PRIME, 524288) - 1
    while len(out) < n:
        if is_prime(x):
            out.append(x)
        x -= 1
    return out


_PRIMES = _first_primes(8)

_SMALL_SYSTEM_MAX = 400


def _normalize_primitive(table: VarTable, coeffs: dict) -> SparsePoly:
    poly = SparsePoly(table, {k: c for k, c in coeffs.items() if c})
    if poly.is_zero():
        raise ArithmeticError("interpolated polynomial is zero")
    _, prim = poly.content_and_primitive()
    return prim


def interpolate_discriminant(
    A: LatticeConfig,
    degree: int,
    multidegree_bound=None,
    sample_budget: int | None = None,
    rng: random.Random | None = None,
) -> DiscriminantArtifact:
    """Implicitize the dual variety: the unique degree-`degree` form (within
    the optional per-block multidegree bound) vanishing on singular-section
    samples.

    Sampling continues until the nullspace stabilizes at dimension 1, then
    25% oversampling confirms it.  Small systems run exactly over Q; large
    systems run modulo word-size primes with rational reconstruction, and the
    reconstructed polynomial is re-verified exactly on fresh samples.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    rng = rng or random.Random(0)
    nv = len(A)
    table = VarTable(A.var_names())
    basis = _Basis(nv, degree, blocks=multidegree_bound)
    ncols = len(basis)
    if sample_budget is None:
        sample_budget = 2 * ncols + 256
    stream = _sample_stream(A, rng)

    if ncols <= _SMALL_SYSTEM_MAX:
        vector, samples = _interpolate_exact(basis, stream, ncols, sample_budget)
    else:
        vector, samples = _interpolate_modular(basis, stream, ncols, sample_budget)

    coeffs = {table.pack(e): c for e, c in zip(basis.exponents, vector) if c}
    prim = _normalize_primitive(table, coeffs)
    if prim.leading_coeff() < 0:
        prim = -prim
    # exact out-of-sample verification: 50 fresh dual samples must be roots
    for _ in range(50):
        s = next(stream)
        if prim.evaluate(list(s.coeffs)) != 0:
            raise ArithmeticError("interpolated discriminant fails exact verification")
    return DiscriminantArtifact(
        config=A,
        poly=prim,
        method="interpolated",
        predicted_degree=degree,
        sign_note="primitive, positive graded-lex leading coefficient",
        detail=f"{ncols} basis monomials, {len(samples)} samples",
    )


def _interpolate_exact(basis, stream, ncols, budget):
    rows = []
    samples = []
    target = ncols + 8
    while True:
        while len(rows) < target:
            if len(rows) >= budget:
                raise InterpolationInconclusive(-1, "sample budget exhausted")
            s = next(stream)
            samples.append(s)
            rows.append(basis.row_exact(list(s.coeffs)))
        null = nullspace_rational(rows)
        if len(null) == 0:
            raise ArithmeticError("nullspace dimension 0: requested degree too small")
        if len(null) == 1:
            extra = (len(rows) + 3) // 4
            for _ in range(extra):
                s = next(stream)
                samples.append(s)
                rows.append(basis.row_exact(list(s.coeffs)))
            null2 = nullspace_rational(rows)
            if len(null2) == 1:
                return null2[0], samples
            if len(null2) == 0:
                raise ArithmeticError("nullspace dimension 0: requested degree too small")
            target = len(rows) + ncols // 4 + 8
            continue
        target = len(rows) + len(null) + 8
        if target > budget and len(rows) >= budget:
            raise InterpolationInconclusive(len(null))


def _interpolate_modular(basis, stream, ncols, budget):
    """Corank-1 nullvector via mod-p elimination, CRT and rational lift."""
    p0 = _PRIMES[0]
    rr = ModRref(ncols, p0)
    samples = []
    batch = []

    def flush():
        nonlocal batch
        if batch:
            rr.add_rows(np.array(batch, dtype=np.int64))
            batch = []

    stall_checks = 0
    while rr.rank < ncols - 1:
        if len(samples) >= budget:
            flush()
            raise InterpolationInconclusive(ncols - rr.rank)
        s = next(stream)
        samples.append(s)
        batch.append(basis.row_mod(list(s.coeffs), p0))
        if len(batch) >= 256:
            flush()
            stall_checks += 1
    flush()
    if rr.rank >= ncols:
        raise ArithmeticError("nullspace dimension 0: requested degree too small")
    # 25% oversampling: the corank must remain 1
    for _ in range((len(samples) + 3) // 4):
        s = next(stream)
        samples.append(s)
        batch.append(basis.row_mod(list(s.coeffs), p0))
    flush()
    if rr.rank >= ncols:
        raise ArithmeticError("nullspace dimension 0: requested degree too small")
    free = rr.free_cols()[0]
    residues = [rr.nullvector(free)]
    used_primes = [p0]
    while True:
        vec = _lift_vector(residues, used_primes)
        if vec is not None and _verify_on_samples(basis, vec, samples):
            return vec, samples
        if len(used_primes) >= len(_PRIMES):
            raise ArithmeticError("rational reconstruction failed for all primes")
        p = _PRIMES[len(used_primes)]
        rrp = ModRref(ncols, p)
        for lo in range(0, len(samples), 256):
            rows = [basis.row_mod(list(s.coeffs), p) for s in samples[lo : lo + 256]]
            rrp.add_rows(np.array(rows, dtype=np.int64))
        if rrp.rank != ncols - 1 or rrp.free_cols()[0] != free:
            raise ArithmeticError("inconsistent rank across primes")
        residues.append(rrp.nullvector(free))
        used_primes.append(p)


def _lift_vector(residues, primes):
    """CRT-combine per-coordinate residues, then lift to a primitive integer vector."""
    m = primes[0]
    comb = list(residues[0])
    for res, p in zip(residues[1:], primes[1:]):
        minv = pow(m % p, p - 2, p)
        comb = [a + m * (((b - a) * minv) % p) for a, b in zip(comb, res)]
        m *= p
    fracs = []
    for a in comb:
        f = rational_reconstruct(a % m, m)
        if f is None:
            return None
        fracs.append(f)
    den = lcm(*[f.denominator for f in fracs])
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _verify_on_samples(basis, vec, samples) -> bool:
    check = samples[:: max(1, len(samples) // 24)][:24]
    for s in check:
        row = basis.row_exact(list(s.coeffs))
        if sum(v * r for v, r in zip(vec, row)) != 0:
            return False
    return True


# ----------------------------------------------------------------------
# closed-form registry and dispatch
# ----------------------------------------------------------------------


def _shifted_points(A: LatticeConfig):
    mins = [min(p[i] for p in A.points) for i in range(A.dim)]
    return sorted(tuple(x - m for x, m in zip(p, mins)) for p in A.points)


def _match_univariate_range(A: LatticeConfig):
    if A.dim != 1:
        return None
    pts = _shifted_points(A)
    d = len(pts) - 1
    if pts == [(i,) for i in range(d + 1)]:
        return d
    return None


def _match_unit_square(A: LatticeConfig) -> bool:
    return A.dim == 2 and _shifted_points(A) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def _match_f1(A: LatticeConfig) -> bool:
    return A.dim == 2 and _shifted_points(A) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]


def _match_simplex_dilate(A: LatticeConfig):
    """(d, n) when A is the full lattice-point set of d * Delta_n, d >= 1."""
    n = A.dim
    pts = _shifted_points(A)
    d = max(sum(p) for p in pts)
    if d >= 1 and pts == sorted(simplex_points(d, n)):
        return d, n
    return None


def _match_segre_square(A: LatticeConfig):
    """m when A is the point set of Delta_m x Delta_m (vertex pairs)."""
    if A.dim % 2:
        return None
    m = A.dim // 2
    if m < 1:
        return None
    verts = [tuple([0] * m)] + [
        tuple(1 if j == i else 0 for j in range(m)) for i in range(m)
    ]
    expected = sorted(p + q for p in verts for q in verts)
    if _shifted_points(A) == expected:
        return m
    return None


def _planar_smooth_delta(A: LatticeConfig):
    """deg(D_A) = 3v - 2p + V when A is all lattice points of a smooth polygon."""
    if A.dim != 2:
        return None
    hull = convex_hull(A.points)
    if len(hull) < 3:
        return None
    poly = Polygon(hull)
    if poly.degenerate or not is_smooth(poly):
        return None
    if sorted(poly.lattice_points()) != sorted(A.points):
        return None
    return degrees_mod.plane_delta(poly)


def _univariate_closed(A: LatticeConfig, d: int) -> DiscriminantArtifact:
    table = VarTable(A.var_names())
    f = UniPoly("x", [SparsePoly.variable(table, f"c{j}") for j in range(d + 1)])
    poly = univariate_discriminant(f)
    return DiscriminantArtifact(
        config=A,
        poly=poly,
        method="closed-form",
        predicted_degree=2 * (d - 1) if d >= 1 else 0,
        sign_note="classical univariate discriminant, (-1)^(d(d-1)/2) Res(f,f')/lc",
        detail=f"univariate degree {d}",
    )


def _unit_square_closed(A: LatticeConfig) -> DiscriminantArtifact:
    table = VarTable(A.var_names())
    pts = list(A.points)
    mins = [min(p[i] for p in pts) for i in range(2)]
    idx = {tuple(x - m for x, m in zip(p, mins)): j for j, p in enumerate(pts)}
    c = lambda p: SparsePoly.variable(table, f"c{idx[p]}")
    poly = c((0, 0)) * c((1, 1)) - c((1, 0)) * c((0, 1))
    return DiscriminantArtifact(
        config=A,
        poly=poly,
        method="closed-form",
        predicted_degree=2,
        sign_note="2x2 determinant",
        detail="unit square",
    )


def _f1_closed(A: LatticeConfig) -> DiscriminantArtifact:
    table = VarTable(A.var_names())
    pts = list(A.points)
    mins = [min(p[i] for p in pts) for i in range(2)]
    idx = {tuple(x - m for x, m in zip(p, mins)): j for j, p in enumerate(pts)}
    v = lambda p: SparsePoly.variable(table, f"c{idx[p]}")
    f = UniPoly("x", [v((0, 0)), v((1, 0)), v((2, 0))])
    g = UniPoly("x", [v((0, 1)), v((1, 1))])
    from .resultants import sylvester_resultant

    poly = sylvester_resultant(f, g)
    return DiscriminantArtifact(
        config=A,
        poly=poly,
        method="closed-form",
        predicted_degree=3,
        sign_note="Sylvester resultant of the two y-slices",
        detail="first Hirzebruch surface support",
    )


def _simplex_partials(A: LatticeConfig, d: int, n: int) -> DiscriminantArtifact:
    """Discriminant of d*Delta_n as the resultant of the n+1 homogenized partials."""
    table = VarTable(A.var_names())
    mins = [min(p[i] for p in A.points) for i in range(n)]
    shifted = [tuple(x - m for x, m in zip(p, mins)) for p in A.points]
    forms = []
    for k in range(n + 1):
        fm: dict = {}
        for j, a in enumerate(shifted):
            alpha = (d - sum(a),) + a  # homogenize
            if alpha[k] == 0:
                continue
            beta = tuple(alpha[i] - (1 if i == k else 0) for i in range(n + 1))
            var = SparsePoly.variable(table, f"c{j}") * alpha[k]
            prev = fm.get(beta)
            fm[beta] = var if prev is None else prev + var
        forms.append(fm)
    raw = macaulay_resultant(forms, d - 1, n + 1, table) if d >= 2 else SparsePoly.zero(table)
    if raw.is_zero():
        return _defective_artifact(A, "resultant of partials vanished")
    content, prim = raw.content_and_primitive()
    return DiscriminantArtifact(
        config=A,
        poly=prim,
        method="resultant-of-partials",
        predicted_degree=(n + 1) * (d - 1) ** n,
        prefactor=Fraction(content),
        sign_note="primitive, positive graded-lex leading coefficient",
        detail=f"{d}*Delta_{n} via Macaulay resultant of partials",
    )


def _segre_square_closed(A: LatticeConfig, m: int) -> DiscriminantArtifact:
    table = VarTable(A.var_names())
    mins = [min(p[i] for p in A.points) for i in range(A.dim)]
    idx = {tuple(x - mm for x, mm in zip(p, mins)): j for j, p in enumerate(A.points)}
    verts = [tuple([0] * m)] + [tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]
    rows = []
    for p in verts:
        rows.append([SparsePoly.variable(table, f"c{idx[p + q]}") for q in verts])
    from .resultants import bareiss_det

    poly = bareiss_det(rows)
    return DiscriminantArtifact(
        config=A,
        poly=poly,
        method="closed-form",
        predicted_degree=m + 1,
        sign_note="determinant of the coefficient matrix",
        detail=f"Delta_{m} x Delta_{m} determinant",
    )


def _defective_artifact(A: LatticeConfig, reason: str) -> DiscriminantArtifact:
    table = VarTable(A.var_names())
    return DiscriminantArtifact(
        config=A,
        poly=SparsePoly.one(table),
        method="closed-form",
        defective=True,
        sign_note="defective: unit polynomial by convention",
        detail=reason,
    )


def a_discriminant(
    A: LatticeConfig,
    method: str = "auto",
    degree_hint: int | None = None,
    multidegree_bound=None,
    rng: random.Random | None = None,
) -> DiscriminantArtifact:
    """Dispatch: closed-form registry, resultant of partials, or interpolation.

    Defective configurations return the unit polynomial with the defective
    flag instead of failing.
    """
    rng = rng or random.Random(0)
    if method not in ("auto", "closed", "interpolate", "partials"):
        raise ValueError(f"unknown method {method!r}")

    if method in ("auto", "closed"):
        if len(A) <= A.affine_dim() + 1:
            return _defective_artifact(A, "too few points: no singular sections")
        d = _match_univariate_range(A)
        if d is not None:
            return _univariate_closed(A, d)
        if _match_unit_square(A):
            return _unit_square_closed(A)
        if _match_f1(A):
            return _f1_closed(A)
        m = _match_segre_square(A)
        if m is not None:
            return _segre_square_closed(A, m)
        sim = _match_simplex_dilate(A)
        if sim is not None and sim[0] >= 2 and sim[1] >= 2:
            return _simplex_partials(A, sim[0], sim[1])
        if method == "closed":
            raise NoMethodAvailable("no closed form in the registry for this configuration")

    if method == "partials":
        sim = _match_simplex_dilate(A)
        if sim is None or sim[0] < 2:
            raise NoMethodAvailable("resultant-of-partials requires the d*Delta_n family, d >= 2")
        return _simplex_partials(A, sim[0], sim[1])

    # interpolation: find a degree
    delta = degree_hint
    if delta is None:
        delta = _planar_smooth_delta(A)
    if delta is None:
        sim = _match_simplex_dilate(A)
        if sim is not None:
            d, n = sim
            delta = (n + 1) * (d - 1) ** n
    if delta is not None:
        if delta < 1:
            return _defective_artifact(A, "predicted degree < 1")
        return interpolate_discriminant(A, delta, multidegree_bound=multidegree_bound, rng=rng)
    # degree discovery: try small degrees until the nullspace pins down
    for delta in range(1, 13):
        try:
            return interpolate_discriminant(A, delta, multidegree_bound=multidegree_bound, rng=rng)
        except ArithmeticError:
            continue
        except InterpolationInconclusive:
            continue
    raise NoMethodAvailable("no degree hint and degree discovery failed")


# ----------------------------------------------------------------------
# Katz corank probe and the Cayley defectivity predicate
# ----------------------------------------------------------------------


def _hessian_rank(A: LatticeConfig, coeffs, u) -> int:
    n = A.dim
    H = [[Fraction(0)] * n for _ in range(n)]
    for c, a in zip(coeffs, A.points):
        if not c:
            continue
        mono = _monomial_value(a, u)
        for k in range(n):
            for l in range(k, n):
                if k == l:
                    factor = a[k] * (a[k] - 1)
                    if factor:
                        H[k][k] += c * factor * mono / (Fraction(u[k]) ** 2)
                else:
                    factor = a[k] * a[l]
                    if factor:
                        v = c * factor * mono / (Fraction(u[k]) * Fraction(u[l]))
                        H[k][l] += v
                        H[l][k] += v
    return rank_rational(H)


def katz_corank_probe(A: LatticeConfig, trials: int, rng: random.Random | None = None) -> int:
    """Monte-Carlo upper bound on min corank of the Hessian over singular
    sections at a general point; corank 0 certifies non-defectivity up to
    sampling.

    When no nonzero singular section exists (configurations as small as a
    simplex), the only section singular at u is the zero polynomial, whose
    Hessian has corank n; that value is returned.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = rng or random.Random(0)
    n = A.dim
    best = n
    for _ in range(trials):
        u = _draw_witness(n, rng)
        try:
            s = singular_section_sample(A, u, rng)
        except ValueError:
            continue  # zero-section only: corank n for this trial
        corank = n - _hessian_rank(A, s.coeffs, u)
        if corank < best:
            best = corank
            if best == 0:
                break
    return best


def cayley_nondefective(r: int, dim_XA: int, def_A: int = 0):
    """Non-defectivity of the Cayley configuration of r+1 copies of A.

    defect = max(r + dim, 2r, dim) - (r + dim); non-defective iff defect == 0,
    i.e. iff r <= dim(X_A).  Requires def(A) = 0 (the stated hypothesis).
    """
    if r < 0 or dim_XA < 0 or def_A < 0:
        raise ValueError("inputs must be nonnegative")
    if def_A > 0:
        raise HypothesisViolation("predicate requires a non-defective base configuration")
    defect = max(r + dim_XA, 2 * r, dim_XA) - (r + dim_XA)
    return defect == 0, defect

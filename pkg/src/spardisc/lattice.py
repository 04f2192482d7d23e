"""Lattice configurations, polygon combinatorics, and the Cayley construction.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactlin import rank_rational

__all__ = [
    "LatticeConfig",
    "Polygon",
    "CayleyConfig",
    "cayley",
    "normalized_area",
    "lattice_perimeter",
    "interior_points",
    "is_smooth",
    "enumerate_no_interior_polygons",
    "simplex_product_points",
    "simplex_points",
    "convex_hull",
    "polygon_normal_form",
]


def _point_key(p):
    return (sum(p), p)


class LatticeConfig:
    """Finite list of distinct integer points in Z^dim, canonically ordered.

    The canonical order is graded-lexicographic on coordinates; each point's
    position names its coefficient variable c_j.
    """

    __slots__ = ("dim", "points")

    def __init__(self, dim: int, points):
        if dim < 1:
            raise ValueError("dim must be a positive integer")
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise ValueError("configuration must be non-empty")
        for p in pts:
            if len(p) != dim:
                raise ValueError("all points must have length dim")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        self.dim = dim
        self.points = tuple(sorted(pts, key=_point_key))

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return (
            isinstance(other, LatticeConfig)
            and self.dim == other.dim
            and self.points == other.points
        )

    def __hash__(self):
        return hash((self.dim, self.points))

    def __repr__(self):
        return f"LatticeConfig(dim={self.dim}, points={list(self.points)})"

    def var_names(self) -> list[str]:
        return [f"c{j}" for j in range(len(self.points))]

    def translated_to_origin(self) -> "LatticeConfig":
        base = self.points[0]
        return LatticeConfig(self.dim, [tuple(x - b for x, b in zip(p, base)) for p in self.points])

    def affine_dim(self) -> int:
        """Dimension of the affine span (equals dim(X_A) for the toric variety)."""
        base = self.points[0]
        rows = [[x - b for x, b in zip(p, base)] for p in self.points[1:]]
        if not rows:
            return 0
        return rank_rational(rows)

    def to_json(self) -> dict:
        return {"dim": self.dim, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, obj: dict) -> "LatticeConfig":
        return cls(int(obj["dim"]), obj["points"])


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list:
    """Strict convex hull, counterclockwise, no collinear vertices kept."""
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


class Polygon:
    """Strictly convex lattice polygon with counterclockwise vertices.

    Area-0 and normalized-area-1 (primitive triangle) inputs construct but
    carry the `degenerate` flag; the plane-curve theory excludes them.
    """

    __slots__ = ("vertices", "degenerate")

    def __init__(self, vertices):
        verts = [(int(v[0]), int(v[1])) for v in vertices]
        if len(set(verts)) != len(verts):
            raise ValueError("vertices must be distinct")
        area2 = sum(
            verts[i][0] * verts[(i + 1) % len(verts)][1]
            - verts[(i + 1) % len(verts)][0] * verts[i][1]
            for i in range(len(verts))
        )
        if area2 < 0:
            raise ValueError("vertices must be counterclockwise (shoelace sum positive)")
        if area2 > 0:
            n = len(verts)
            for i in range(n):
                if _cross(verts[i - 1], verts[i], verts[(i + 1) % n]) <= 0:
                    raise ValueError("polygon must be strictly convex, no collinear vertices")
        self.vertices = tuple(verts)
        self.degenerate = area2 == 0 or (area2 == 1 and len(verts) == 3)

    @classmethod
    def from_point_set(cls, points) -> "Polygon":
        return cls(convex_hull(points))

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polygon({list(self.vertices)})"

    def vertex_count(self) -> int:
        return len(self.vertices)

    def lattice_points(self) -> list:
        """All lattice points of the polygon (boundary and interior)."""
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        out = []
        n = len(self.vertices)
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                p = (x, y)
                if all(_cross(self.vertices[i], self.vertices[(i + 1) % n], p) >= 0 for i in range(n)):
                    out.append(p)
        return out

    def to_config(self) -> LatticeConfig:
        return LatticeConfig(2, self.lattice_points())

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, obj: dict) -> "Polygon":
        return cls(obj["vertices"])


def normalized_area(poly: Polygon) -> int:
    """Twice the Euclidean area (shoelace sum), exactly."""
    v = poly.vertices
    n = len(v)
    return sum(v[i][0] * v[(i + 1) % n][1] - v[(i + 1) % n][0] * v[i][1] for i in range(n))


def lattice_perimeter(poly: Polygon) -> int:
    """Number of lattice points on the boundary: sum of gcds of edge vectors."""
    v = poly.vertices
    n = len(v)
    total = 0
    for i in range(n):
        dx = v[(i + 1) % n][0] - v[i][0]
        dy = v[(i + 1) % n][1] - v[i][1]
        total += gcd(abs(dx), abs(dy))
    return total


def interior_points(poly: Polygon) -> int:
    """Count of strict-interior lattice points, by direct enumeration.

    Cross-checked against Pick's relation before returning.
    """
    v = poly.vertices
    n = len(v)
    xs = [p[0] for p in v]
    ys = [p[1] for p in v]
    count = 0
    for x in range(min(xs) + 1, max(xs)):
        for y in range(min(ys) + 1, max(ys)):
            p = (x, y)
            if all(_cross(v[i], v[(i + 1) % n], p) > 0 for i in range(n)):
                count += 1
    va = normalized_area(poly)
    pa = lattice_perimeter(poly)
    if 2 * count != va - pa + 2:
        raise AssertionError("Pick's relation violated; polygon invalid")
    return count


def _primitive(vec):
    g = gcd(abs(vec[0]), abs(vec[1]))
    return (vec[0] // g, vec[1] // g)


def is_smooth(poly: Polygon) -> bool:
    """True iff every vertex cone is generated by a lattice basis."""
    v = poly.vertices
    n = len(v)
    if n < 3 or poly.degenerate and normalized_area(poly) == 0:
        return False
    for i in range(n):
        u = _primitive((v[(i + 1) % n][0] - v[i][0], v[(i + 1) % n][1] - v[i][1]))
        w = _primitive((v[i - 1][0] - v[i][0], v[i - 1][1] - v[i][1]))
        if abs(u[0] * w[1] - u[1] * w[0]) != 1:
            return False
    return True


def trapezoid(a: int, b: int) -> Polygon:
    """conv((0,0),(a,0),(b,1),(0,1)); for b == 0 the triangle conv((0,0),(a,0),(0,1))."""
    if not (a >= b >= 0 and a >= 1):
        raise ValueError("need a >= b >= 0 and a >= 1")
    if b == 0:
        return Polygon([(0, 0), (a, 0), (0, 1)])
    return Polygon([(0, 0), (a, 0), (b, 1), (0, 1)])


def standard_triangle_2d2() -> Polygon:
    return Polygon([(0, 0), (2, 0), (0, 2)])


def enumerate_no_interior_polygons(a_max: int) -> list:
    """2*Delta_2 plus the trapezoid normal-form family with a <= a_max.

    Every output has zero interior lattice points; the family is the
    classification normal form, so no further deduplication is needed.
    """
    if a_max < 1:
        raise ValueError("a_max must be >= 1")
    out = [standard_triangle_2d2()]
    for a in range(1, a_max + 1):
        for b in range(0, a + 1):
            out.append(trapezoid(a, b))
    return out


def simplex_points(d: int, n: int) -> list:
    """Lattice points of d * Delta_n in Z^n."""
    if n == 0:
        return [()]
    out = []

    def rec(prefix, remaining, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for x in range(remaining + 1):
            rec(prefix + [x], remaining - x, left - 1)

    rec([], d, n)
    return out


def simplex_product_points(d, k) -> LatticeConfig:
    """Lattice points of d_1*Delta_{k_1} x ... x d_l*Delta_{k_l}."""
    d = list(d)
    k = list(k)
    if len(d) != len(k) or not d:
        raise ValueError("d and k must be equal-length non-empty lists")
    factor_sets = [simplex_points(di, ki) for di, ki in zip(d, k)]
    points = [()]
    for fs in factor_sets:
        points = [p + q for p in points for q in fs]
    return LatticeConfig(sum(k), points)


@dataclass(frozen=True)
class CayleyConfig:
    """Cayley configuration C(A_0..A_r) in Z^(n+r), with per-point bookkeeping.

    The first r coordinates carry the lift e_i (e_0 = 0).  `blocks[j]` gives
    (block index, index within A_i's canonical order) for canonical point j.
    """

    config: LatticeConfig
    r: int
    n: int
    blocks: tuple  # tuple of (block, source index) per canonical point

    def __len__(self):
        return len(self.config)

    def block_index_sets(self) -> list:
        """Variable positions per block, in the Cayley canonical order."""
        out = [[] for _ in range(self.r + 1)]
        for pos, (blk, _src) in enumerate(self.blocks):
            out[blk].append(pos)
        return out


def cayley(configs) -> CayleyConfig:
    """Union of the lifted configurations e_i x A_i."""
    configs = list(configs)
    if not configs:
        raise ValueError("need at least one configuration")
    n = configs[0].dim
    for c in configs:
        if c.dim != n:
            raise ValueError("mixed ambient dimensions in Cayley construction")
    r = len(configs) - 1
    lifted = {}
    for i, c in enumerate(configs):
        prefix = tuple(1 if t == i - 1 else 0 for t in range(r))
        for src, p in enumerate(c.points):
            q = prefix + p
            if q in lifted:
                raise ValueError("Cayley lift produced duplicate points")
            lifted[q] = (i, src)
    cfg = LatticeConfig(n + r, list(lifted.keys()))
    blocks = tuple(lifted[p] for p in cfg.points)
    return CayleyConfig(config=cfg, r=r, n=n, blocks=blocks)


# ----------------------------------------------------------------------
# unimodular normal form
# ----------------------------------------------------------------------


def _transform(verts, mat):
    (a, b), (c, d) = mat
    return [(a * x + b * y, c * x + d * y) for x, y in verts]


def _translate_min(verts):
    mx = min(v[0] for v in verts)
    my = min(v[1] for v in verts)
    return [(x - mx, y - my) for x, y in verts]


def _canonical_cycle(verts):
    """Vertex tuple of the ccw hull, rotated to start at the lex-min vertex."""
    hull = convex_hull(verts)
    k = hull.index(min(hull))
    return tuple(hull[k:] + hull[:k])


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return (g, y, x - (a // b) * y)


def polygon_normal_form(poly: Polygon) -> Polygon:
    """Canonical representative of the unimodular-equivalence class.

    Lattice-width-first: bring a width-minimizing direction to the y-axis,
    then take the lexicographically smallest vertex tuple over the remaining
    shears and flips.  Intended for the small polygons of the enumerations.
    """
    verts = list(poly.vertices)
    spread = max(
        max(abs(v[0]) for v in verts) - min(v[0] for v in verts),
        max(abs(v[1]) for v in verts) - min(v[1] for v in verts),
    )
    bound = max(6, spread + 2)
    dirs = []
    for wx in range(-bound, bound + 1):
        for wy in range(-bound, bound + 1):
            if (wx, wy) != (0, 0) and gcd(abs(wx), abs(wy)) == 1:
                dirs.append((wx, wy))
    widths = {}
    for w in dirs:
        vals = [w[0] * x + w[1] * y for x, y in verts]
        widths[w] = max(vals) - min(vals)
    wmin = min(widths.values())
    best = None
    for w, wd in widths.items():
        if wd != wmin:
            continue
        g, aa, bb = _ext_gcd(w[1], -w[0])
        # rows (aa, bb) and (wx, wy) form a determinant-1 matrix
        base = _translate_min(_transform(verts, ((aa, bb), (w[0], w[1]))))
        xmax = max(abs(x) for x, _ in base) + max(abs(y) for _, y in base)
        K = 2 * xmax + 2
        for fx in (1, -1):
            for fy in (1, -1):
                flipped = _translate_min([(fx * x, fy * y) for x, y in base])
                for k in range(-K, K + 1):
                    cand = _canonical_cycle(
                        _translate_min([(x + k * y, y) for x, y in flipped])
                    )
                    if best is None or cand < best:
                        best = cand
    return Polygon(best)

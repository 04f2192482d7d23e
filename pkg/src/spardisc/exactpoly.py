"""Exact sparse multivariate polynomial arithmetic over arbitrary-precision integers.

This is the substrate for every symbolic computation in the package:
discriminants, resultants and pencil forms are all `SparsePoly` values.

Representation
--------------
A polynomial is a dict mapping a packed exponent key to a nonzero integer
coefficient.  The key packs (total_degree, e_0, ..., e_{n-1}) big-endian,
one byte per entry, so

* integer comparison of keys == graded-lex comparison of monomials,
* integer addition of keys == monomial multiplication (no per-variable loop).

Per-variable degrees must stay below 256; multiplication checks the combined
total degree, which bounds every per-variable exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ._kernels import poly_mul_acc

__all__ = [
    "VarTable",
    "SparsePoly",
    "PencilForm",
    "DivisionFailure",
    "collect_as_pencil",
]

_MAX_DEGREE = 255


class VarTable:
    """Ordered list of distinct variable names; fixes the term order."""

    __slots__ = ("names", "index", "width")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.width = len(names) + 1  # bytes: total degree + one per variable

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({list(self.names)!r})"

    def pack(self, exps) -> int:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        total = sum(exps)
        if total > _MAX_DEGREE or any(e < 0 or e > _MAX_DEGREE for e in exps):
            raise OverflowError("exponent out of supported range [0, 255]")
        return int.from_bytes(bytes((total, *exps)), "big")

    def unpack(self, key: int) -> tuple:
        return tuple(key.to_bytes(self.width, "big")[1:])


class DivisionFailure:
    """Returned (not raised) by exact_divide when division leaves a remainder."""

    __slots__ = ("reason", "at_monomial")

    def __init__(self, reason: str, at_monomial=None):
        self.reason = reason
        self.at_monomial = at_monomial

    def __repr__(self):
        return f"DivisionFailure({self.reason!r})"

    def __bool__(self):
        return False


class SparsePoly:
    """Immutable sparse polynomial with integer coefficients.

    All operations return new values; instances are safe to share.
    """

    __slots__ = ("table", "_t", "_hash")

    def __init__(self, table: VarTable, terms: dict):
        # terms: packed key -> nonzero int coefficient (takes ownership)
        self.table = table
        self._t = terms
        self._hash = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, table: VarTable) -> "SparsePoly":
        return cls(table, {})

    @classmethod
    def const(cls, table: VarTable, c: int) -> "SparsePoly":
        c = int(c)
        return cls(table, {0: c} if c else {})

    @classmethod
    def one(cls, table: VarTable) -> "SparsePoly":
        return cls.const(table, 1)

    @classmethod
    def variable(cls, table: VarTable, name: str) -> "SparsePoly":
        exps = [0] * table.nvars
        exps[table.index[name]] = 1
        return cls(table, {table.pack(exps): 1})

    @classmethod
    def monomial(cls, table: VarTable, exps, coeff: int) -> "SparsePoly":
        coeff = int(coeff)
        return cls(table, {table.pack(exps): coeff} if coeff else {})

    @classmethod
    def from_terms(cls, table: VarTable, terms) -> "SparsePoly":
        t = {}
        for exps, coeff in terms:
            key = table.pack(exps)
            c = t.get(key, 0) + int(coeff)
            if c:
                t[key] = c
            else:
                t.pop(key, None)
        return cls(table, t)

    # ------------------------------------------------------------------
    # basic queries
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> int:
        if not self._t:
            return 0
        if self.is_constant():
            return self._t[0]
        raise ValueError("polynomial is not constant")

    def __len__(self):
        return len(self._t)

    def total_degree(self) -> int:
        if not self._t:
            return -1  # degree of the zero polynomial, by convention
        return max(self._t) >> (8 * self.table.nvars)

    def leading_key(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        return max(self._t)

    def leading_coeff(self) -> int:
        return self._t[self.leading_key()]

    def coeff_of(self, exps) -> int:
        return self._t.get(self.table.pack(exps), 0)

    def terms_sorted(self):
        """Yield (exponent tuple, coefficient) in graded-lex descending order."""
        unpack = self.table.unpack
        for key in sorted(self._t, reverse=True):
            yield unpack(key), self._t[key]

    def degree_in(self, name: str) -> int:
        i = self.table.index[name]
        shift = 8 * (self.table.nvars - 1 - i)
        d = 0
        for key in self._t:
            d = max(d, (key >> shift) & 0xFF)
        return d

    def multidegree(self, blocks) -> tuple:
        """Max per-block degree over terms; blocks must partition the table."""
        idx = self.table.index
        block_of = {}
        for b, names in enumerate(blocks):
            for n in names:
                if idx[n] in block_of:
                    raise ValueError("blocks overlap")
                block_of[idx[n]] = b
        if len(block_of) != self.table.nvars:
            raise ValueError("blocks must cover the variable table")
        nvars = self.table.nvars
        out = [0] * len(blocks)
        for key in self._t:
            raw = key.to_bytes(self.table.width, "big")
            acc = [0] * len(blocks)
            for i in range(nvars):
                acc[block_of[i]] += raw[1 + i]
            for b in range(len(blocks)):
                if acc[b] > out[b]:
                    out[b] = acc[b]
        return tuple(out)

    def is_homogeneous(self) -> bool:
        degs = {key >> (8 * self.table.nvars) for key in self._t}
        return len(degs) <= 1

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def _check_table(self, other: "SparsePoly"):
        if self.table != other.table:
            raise ValueError("variable table mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(self.table, other)
        self._check_table(other)
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t = dict(a)
        for key, c in b.items():
            s = t.get(key, 0) + c
            if s:
                t[key] = s
            else:
                del t[key]
        return SparsePoly(self.table, t)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.table, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SparsePoly.zero(self.table)
            return SparsePoly(self.table, {k: c * other for k, c in self._t.items()})
        self._check_table(other)
        if not self._t or not other._t:
            return SparsePoly.zero(self.table)
        if self.total_degree() + other.total_degree() > _MAX_DEGREE:
            raise OverflowError("product degree exceeds supported range")
        out: dict = {}
        if len(self._t) >= len(other._t):
            poly_mul_acc(out, self._t, other._t)
        else:
            poly_mul_acc(out, other._t, self._t)
        return SparsePoly(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.one(self.table)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, int):
                return self.is_constant() and (self.constant_value() == other)
            return NotImplemented
        return self.table == other.table and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, tuple(sorted(self._t.items()))))
        return self._hash

    # ------------------------------------------------------------------
    # calculus / substitution
    # ------------------------------------------------------------------
    def partial(self, name: str) -> "SparsePoly":
        """Formal partial derivative with respect to `name`."""
        if name not in self.table.index:
            raise KeyError(f"unknown variable {name!r}")
        i = self.table.index[name]
        shift = 8 * (self.table.nvars - 1 - i)
        dec = (1 << shift) + (1 << (8 * self.table.nvars))  # e_i and total both drop
        t = {}
        for key, c in self._t.items():
            e = (key >> shift) & 0xFF
            if e:
                t[key - dec] = c * e
        return SparsePoly(self.table, t)

    def substitute(self, assignment: dict, target: VarTable | None = None) -> "SparsePoly":
        """Substitute variables by polynomials over a common target table.

        Variables not in `assignment` must exist (same name) in the target
        table and map to themselves.
        """
        if target is None:
            some = next(iter(assignment.values()), None)
            target = some.table if isinstance(some, SparsePoly) else self.table
        subs = []
        for name in self.table.names:
            if name in assignment:
                v = assignment[name]
                if isinstance(v, int):
                    v = SparsePoly.const(target, v)
                if v.table != target:
                    raise ValueError("assignment targets live in inconsistent tables")
                subs.append(v)
            elif name in target.index:
                subs.append(SparsePoly.variable(target, name))
            else:
                raise ValueError(f"no assignment for variable {name!r}")
        pow_cache: dict = {}

        def power(i: int, e: int) -> SparsePoly:
            got = pow_cache.get((i, e))
            if got is None:
                got = subs[i] ** e
                pow_cache[(i, e)] = got
            return got

        out = SparsePoly.zero(target)
        width = self.table.width
        for key, c in self._t.items():
            raw = key.to_bytes(width, "big")
            term = SparsePoly.const(target, c)
            for i in range(self.table.nvars):
                e = raw[1 + i]
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def evaluate(self, values):
        """Evaluate at a point given as dict name->value or sequence in table order.

        Values may be ints or Fractions; the result type follows them.
        """
        if isinstance(values, dict):
            vals = [values[n] for n in self.table.names]
        else:
            vals = list(values)
            if len(vals) != self.table.nvars:
                raise ValueError("value vector length mismatch")
        pow_cache: dict = {}

        def power(i, e):
            got = pow_cache.get((i, e))
            if got is None:
                got = vals[i] ** e
                pow_cache[(i, e)] = got
            return got

        acc = 0
        width = self.table.width
        for key, c in self._t.items():
            raw = key.to_bytes(width, "big")
            term = c
            for i in range(self.table.nvars):
                e = raw[1 + i]
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    # ------------------------------------------------------------------
    # normalisation and division
    # ------------------------------------------------------------------
    def content_and_primitive(self) -> tuple[int, "SparsePoly"]:
        """(content, primitive part); sign chosen so the graded-lex leading
        coefficient of the primitive part is positive.  Errors on zero input."""
        if not self._t:
            raise ValueError("zero polynomial has no content decomposition")
        g = 0
        for c in self._t.values():
            g = gcd(g, c)
        if self.leading_coeff() < 0:
            g = -g
        if g == 1:
            return 1, self
        return g, SparsePoly(self.table, {k: c // g for k, c in self._t.items()})

    def primitive(self) -> "SparsePoly":
        return self.content_and_primitive()[1]

    def exact_divide(self, den: "SparsePoly"):
        """Return q with self == q*den exactly, else a DivisionFailure value.

        Multivariate division with respect to graded-lex leading terms; the
        remainder must come out zero.
        """
        self._check_table(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return SparsePoly.zero(self.table)
        lt_g = den.leading_key()
        cg = den._t[lt_g]
        gitems = list(den._t.items())
        nvars = self.table.nvars
        width = self.table.width
        g_raw = lt_g.to_bytes(width, "big")
        f = dict(self._t)
        q: dict = {}
        import heapq

        heap = [-k for k in f]
        heapq.heapify(heap)
        while f:
            while heap:
                k = -heap[0]
                if k in f:
                    break
                heapq.heappop(heap)
            lt_f = k
            cf = f[lt_f]
            if cf % cg != 0:
                return DivisionFailure("leading coefficient not divisible", self.table.unpack(lt_f))
            f_raw = lt_f.to_bytes(width, "big")
            for i in range(1, nvars + 1):
                if f_raw[i] < g_raw[i]:
                    return DivisionFailure("leading monomial not divisible", self.table.unpack(lt_f))
            qk = lt_f - lt_g
            qc = cf // cg
            q[qk] = q.get(qk, 0) + qc
            for k2, c2 in gitems:
                kk = qk + k2
                s = f.get(kk, 0) - qc * c2
                if s:
                    f[kk] = s
                    heapq.heappush(heap, -kk)
                else:
                    f.pop(kk, None)
        return SparsePoly(self.table, q)

    # ------------------------------------------------------------------
    # retabling
    # ------------------------------------------------------------------
    def remap(self, target: VarTable, name_map: dict | None = None) -> "SparsePoly":
        """Re-express over `target`; names map via `name_map` (default identity).

        Variables with nonzero exponent must all be mapped; dropped variables
        may only appear with exponent 0.
        """
        name_map = name_map or {}
        src_names = self.table.names
        pos = []
        for n in src_names:
            m = name_map.get(n, n)
            pos.append(target.index.get(m, -1))
        t = {}
        width = self.table.width
        for key, c in self._t.items():
            raw = key.to_bytes(width, "big")
            exps = [0] * target.nvars
            for i in range(self.table.nvars):
                e = raw[1 + i]
                if e:
                    if pos[i] < 0:
                        raise ValueError(f"variable {src_names[i]!r} not present in target table")
                    exps[pos[i]] += e
            nk = target.pack(exps)
            s = t.get(nk, 0) + c
            if s:
                t[nk] = s
            else:
                t.pop(nk, None)
        return SparsePoly(target, t)

    # ------------------------------------------------------------------
    # rendering / serialization
    # ------------------------------------------------------------------
    def render(self) -> str:
        """Deterministic text: graded-lex descending, `^` powers, explicit `*`."""
        if not self._t:
            return "0"
        names = self.table.names
        parts = []
        for exps, coeff in self.terms_sorted():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        out = [body if sign == "+" else "-" + body]
        for sign, body in parts[1:]:
            out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"SparsePoly({self.render()})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.table.names),
            "terms": [
                {"coeff": str(coeff), "exp": list(exps)}
                for exps, coeff in self.terms_sorted()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SparsePoly":
        table = VarTable(obj["vars"])
        return cls.from_terms(
            table, ((tuple(t["exp"]), int(t["coeff"])) for t in obj["terms"])
        )


def poly_gcd_content(polys) -> int:
    """gcd of all coefficients across several polynomials (0 if all zero)."""
    g = 0
    for p in polys:
        for c in p._t.values():
            g = gcd(g, c)
    return g


@dataclass(frozen=True)
class PencilForm:
    """A homogeneous form of degree `delta` in r+1 pencil variables whose
    coefficients are SparsePoly values over the coefficient table."""

    r: int
    delta: int
    table_c: VarTable
    coeffs: dict  # tuple lambda-exponent (len r+1, sum delta) -> SparsePoly

    def coefficient(self, lam_exps) -> SparsePoly:
        return self.coeffs.get(tuple(lam_exps), SparsePoly.zero(self.table_c))

    def is_numeric(self) -> bool:
        return all(p.is_constant() for p in self.coeffs.values())

    def binary_coefficients(self) -> list:
        """For r == 1: list [c_0..c_delta] with H = sum c_i l0^(d-i) l1^i."""
        if self.r != 1:
            raise ValueError("binary_coefficients requires r == 1")
        out = []
        for i in range(self.delta + 1):
            out.append(self.coefficient((self.delta - i, i)))
        return out

    def partial_lambda(self, i: int) -> dict:
        """Formal d/d lambda_i as a map lambda-exponent -> SparsePoly (degree delta-1)."""
        out: dict = {}
        for exps, poly in self.coeffs.items():
            e = exps[i]
            if e:
                ne = list(exps)
                ne[i] -= 1
                ne = tuple(ne)
                prev = out.get(ne)
                scaled = poly * e
                out[ne] = scaled if prev is None else prev + scaled
        return {k: v for k, v in out.items() if not v.is_zero()}


def collect_as_pencil(poly: SparsePoly, lambda_names) -> PencilForm:
    """Split off the pencil variables; requires homogeneity in the lambda block."""
    lambda_names = list(lambda_names)
    lam_idx = [poly.table.index[n] for n in lambda_names]
    lam_set = set(lam_idx)
    c_names = [n for n in poly.table.names if n not in set(lambda_names)]
    table_c = VarTable(c_names)
    c_pos = [poly.table.index[n] for n in c_names]
    groups: dict = {}
    width = poly.table.width
    delta = None
    for key, coeff in poly._t.items():
        raw = key.to_bytes(width, "big")
        lexps = tuple(raw[1 + i] for i in lam_idx)
        d = sum(lexps)
        if delta is None:
            delta = d
        elif d != delta:
            raise ValueError("polynomial is not homogeneous in the pencil variables")
        cexps = tuple(raw[1 + i] for i in c_pos)
        groups.setdefault(lexps, []).append((cexps, coeff))
    if delta is None:
        raise ValueError("zero polynomial cannot be collected as a pencil")
    coeffs = {
        lexps: SparsePoly.from_terms(table_c, terms) for lexps, terms in groups.items()
    }
    coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}
    return PencilForm(r=len(lambda_names) - 1, delta=delta, table_c=table_c, coeffs=coeffs)


def rational_str(x) -> str:
    """Rationals serialize as 'p/q' strings (exact)."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def parse_rational(s) -> Fraction:
    return Fraction(str(s))

"""Pure-Python / numpy implementations of the hot kernels.

Two kernels live here, mirrored by the compiled extension `_speed`:

* `poly_mul_acc` — sparse polynomial multiply-accumulate on packed-key dicts.
* `ModRref`      — incremental reduced row echelon form of an integer matrix
  modulo a word-size prime, used by discriminant interpolation.

The ModRref implementation is vectorized: batch reduction against the stored
pivot rows is a float64 matrix product.  With p < 2**19.5 and inner dimension
chunked below 2**52 / p**2, every partial sum stays under 2**53, so the
float64 arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import numpy as np

MAX_PRIME = 700_000  # keeps chunked float64 matmul exact with safety margin


def poly_mul_acc(out: dict, a: dict, b: dict) -> None:
    """out += a * b for packed-exponent-key integer-coefficient dicts."""
    bitems = list(b.items())
    get = out.get
    for ka, va in a.items():
        for kb, vb in bitems:
            k = ka + kb
            cur = get(k)
            if cur is None:
                out[k] = va * vb
            else:
                s = cur + va * vb
                if s:
                    out[k] = s
                else:
                    del out[k]


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) % p for int64 matrices with entries in [0, p)."""
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    chunk = max(1, (1 << 52) // (p * p))
    af = a.astype(np.float64)
    bf = b.astype(np.float64)
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for lo in range(0, a.shape[1], chunk):
        hi = min(lo + chunk, a.shape[1])
        part = af[:, lo:hi] @ bf[lo:hi]
        acc = (acc + part.astype(np.int64)) % p
    return acc


class ModRref:
    """Reduced row echelon form mod p, built incrementally from row batches."""

    def __init__(self, ncols: int, p: int):
        if p >= MAX_PRIME:
            raise ValueError(f"prime too large for the exact float64 path: {p}")
        self.ncols = ncols
        self.p = p
        self._rows = np.zeros((0, ncols), dtype=np.int64)
        self._pivcols: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivcols)

    @property
    def pivot_cols(self) -> list[int]:
        return list(self._pivcols)

    def free_cols(self) -> list[int]:
        piv = set(self._pivcols)
        return [j for j in range(self.ncols) if j not in piv]

    def add_rows(self, rows) -> None:
        p = self.p
        B = np.asarray(rows, dtype=np.int64) % p
        if B.ndim == 1:
            B = B.reshape(1, -1)
        if B.shape[1] != self.ncols:
            raise ValueError("row width mismatch")
        # reduce against existing pivots (RREF invariant: one dgemm suffices)
        if self._pivcols:
            coeff = B[:, self._pivcols]
            B = (B - _matmul_mod(coeff, self._rows, p)) % p
        # eliminate within the batch
        new_rows = []
        new_pivs = []
        nrows = B.shape[0]
        used = 0
        for col in range(self.ncols):
            if used >= nrows:
                break
            nz = np.nonzero(B[used:, col])[0]
            if nz.size == 0:
                continue
            i = used + nz[0]
            if i != used:
                B[[used, i]] = B[[i, used]]
            inv = pow(int(B[used, col]), p - 2, p)
            B[used] = (B[used] * inv) % p
            rest = B[used + 1 :, col].copy()
            mask = rest != 0
            if mask.any():
                B[used + 1 :][mask] = (
                    B[used + 1 :][mask] - np.outer(rest[mask], B[used])
                ) % p
            new_pivs.append(col)
            new_rows.append(used)
            used += 1
        if not new_pivs:
            return
        Bn = B[:used]
        # back-clear above-pivot entries inside the batch
        for k in range(used - 1, 0, -1):
            col = new_pivs[k]
            vals = Bn[:k, col].copy()
            mask = vals != 0
            if mask.any():
                Bn[:k][mask] = (Bn[:k][mask] - np.outer(vals[mask], Bn[k])) % p
        # clear the new pivot columns from the previously stored rows
        if self._pivcols:
            coeff = self._rows[:, new_pivs]
            if np.any(coeff):
                self._rows = (self._rows - _matmul_mod(coeff % p, Bn, p)) % p
        allrows = np.vstack([self._rows, Bn])
        allpivs = self._pivcols + new_pivs
        order = np.argsort(allpivs, kind="stable")
        self._rows = allrows[order]
        self._pivcols = [allpivs[i] for i in order]

    def nullvector(self, free_col: int) -> list[int]:
        """Kernel vector with value 1 at `free_col`, canonical w.r.t. the RREF."""
        if free_col in self._pivcols:
            raise ValueError("column is a pivot column")
        p = self.p
        v = [0] * self.ncols
        v[free_col] = 1
        col = self._rows[:, free_col]
        for i, pc in enumerate(self._pivcols):
            if col[i]:
                v[pc] = (p - int(col[i])) % p
        return v

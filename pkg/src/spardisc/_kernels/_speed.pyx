# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot kernels in `_fallback`.

Same observable behaviour (identical RREF, identical nullvectors); only the
inner loops differ.  Selected automatically at import by `spardisc._kernels`.
"""

import numpy as np


def poly_mul_acc(dict out, dict a, dict b):
    """out += a * b for packed-exponent-key integer-coefficient dicts."""
    cdef list bitems = list(b.items())
    cdef Py_ssize_t i, nb = len(bitems)
    cdef tuple item
    cdef object ka, va, kb, vb, k, cur, prod, s
    for ka, va in a.items():
        for i in range(nb):
            item = <tuple> bitems[i]
            kb = item[0]
            vb = item[1]
            k = ka + kb
            prod = va * vb
            cur = out.get(k)
            if cur is None:
                out[k] = prod
            else:
                s = cur + prod
                if s:
                    out[k] = s
                else:
                    del out[k]


cdef class ModRref:
    """Reduced row echelon form mod p, built incrementally row by row.

    Row entries may accumulate up to ncols * p**2 before reduction, which
    stays far below 2**63 for p < 2**19.5 and ncols below ~30000.
    """
    cdef long long p
    cdef Py_ssize_t ncols
    cdef long long[:, ::1] rows
    cdef long long[::1] rowof      # col -> stored row index, or -1
    cdef list _pivcols
    cdef Py_ssize_t nstored

    MAX_PRIME = 700000

    def __init__(self, ncols, p):
        if p >= 700000:
            raise ValueError(f"prime too large for the delayed-reduction path: {p}")
        self.p = p
        self.ncols = ncols
        self.rows = np.zeros((ncols, ncols), dtype=np.int64)
        self.rowof = np.full(ncols, -1, dtype=np.int64)
        self._pivcols = []
        self.nstored = 0

    @property
    def rank(self):
        return self.nstored

    @property
    def pivot_cols(self):
        return sorted(self._pivcols)

    def free_cols(self):
        piv = set(self._pivcols)
        return [j for j in range(self.ncols) if j not in piv]

    cdef int _absorb(self, long long[::1] row) except -2:
        cdef Py_ssize_t j, k, i, s
        cdef long long v, f, inv, p = self.p
        cdef long long[:, ::1] rows = self.rows
        for j in range(self.ncols):
            v = row[j] % p
            if v < 0:
                v += p
            if v == 0:
                row[j] = 0
                continue
            i = self.rowof[j]
            if i >= 0:
                row[j] = 0
                for k in range(j + 1, self.ncols):
                    row[k] = row[k] - v * rows[i, k]
            else:
                inv = pow(v, p - 2, p)
                i = self.nstored
                rows[i, j] = 1
                for k in range(j + 1, self.ncols):
                    f = row[k] % p
                    if f < 0:
                        f += p
                    rows[i, k] = (f * inv) % p
                # keep the stored form fully reduced (clear column j above)
                for s in range(self.nstored):
                    f = rows[s, j]
                    if f:
                        rows[s, j] = 0
                        for k in range(j + 1, self.ncols):
                            rows[s, k] = (rows[s, k] - f * rows[i, k]) % p
                            if rows[s, k] < 0:
                                rows[s, k] += p
                self.rowof[j] = i
                self.nstored += 1
                self._pivcols.append(j)
                return <int> j
        return -1

    def add_rows(self, rows_in):
        B = np.asarray(rows_in, dtype=np.int64)
        if B.ndim == 1:
            B = B.reshape(1, -1)
        if B.shape[1] != self.ncols:
            raise ValueError("row width mismatch")
        cdef long long[:, ::1] Bv = np.ascontiguousarray(B % self.p)
        cdef Py_ssize_t r
        for r in range(Bv.shape[0]):
            self._absorb(Bv[r])

    def nullvector(self, free_col):
        if self.rowof[free_col] >= 0:
            raise ValueError("column is a pivot column")
        p = self.p
        v = [0] * self.ncols
        v[free_col] = 1
        cdef Py_ssize_t i
        for pc in self._pivcols:
            i = self.rowof[pc]
            c = self.rows[i, free_col]
            if c:
                v[pc] = (p - c) % p
        return v

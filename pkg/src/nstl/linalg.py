"""Dense exact linear algebra over any field-like element type.

Works for RationalFn, Fraction, or anything supporting +, -, *, / and
truthiness-as-nonzero. Matrices are lists of lists (rows). A companion
set of mod-p routines on numpy int64 arrays backs the large certification
and spanning-closure jobs.
"""

from __future__ import annotations

import numpy as np


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if k else 0
    out = []
    for i in range(n):
        row_a = A[i]
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                a = row_a[t]
                if not a:
                    continue
                term = a * B[t][j]
                acc = term if acc is None else acc + term
            if acc is None:
                acc = row_a[0] - row_a[0] if k else 0
            row.append(acc)
        out.append(row)
    return out


def mat_vec(A, v):
    return [row[0] for row in mat_mul(A, [[x] for x in v])]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[c * a for a in row] for row in A]


def mat_transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def identity(n, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def rref(M):
    """Reduced row echelon form. Returns (rows, pivot column list)."""
    if not M:
        return [], []
    rows = [list(r) for r in M]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M):
    return len(rref(M)[0])


def nullspace(M, one, zero):
    """Basis of the right nullspace of M, as column vectors (lists)."""
    if not M:
        return []
    ncols = len(M[0])
    rows, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = zero - rows[i][fc]
        basis.append(v)
    return basis


def solve(A, b):
    """One solution of A x = b, or None if inconsistent."""
    if not A:
        return None
    ncols = len(A[0])
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = A[0][0] - A[0][0]
    x = [zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][ncols]
    return x


def inverse(A, one, zero):
    n = len(A)
    aug = [list(row) + list(identity(n, one, zero)[i]) for i, row in enumerate(A)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]


class SpanBasis:
    """Incrementally maintained echelon basis of a span of vectors."""

    def __init__(self):
        self.rows = []  # echelon rows, normalized to leading 1
        self.pivots = []  # pivot column per row, increasing insertion order

    def add(self, v):
        """Reduce v against the basis; absorb if independent. Returns
        True iff the span grew."""
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                for j in range(len(v)):
                    if row[j]:
                        v[j] = v[j] - f * row[j]
        p = next((j for j, x in enumerate(v) if x), None)
        if p is None:
            return False
        pv = v[p]
        v = [x / pv for x in v]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def __len__(self):
        return len(self.rows)


# ----------------------------------------------------------------------
# mod-p routines (numpy int64; p must satisfy n * p^2 < 2^63)


def rref_mod_p(M: np.ndarray, p: int):
    """In-place-free row reduction mod p. Returns (reduced, pivots)."""
    A = np.mod(M.astype(np.int64), p)
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        for i in range(nrows):
            if i != r and A[i, c]:
                A[i] = (A[i] - int(A[i, c]) * A[r]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A[:r], pivots


def rank_mod_p(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    return len(rref_mod_p(M, p)[1])


def nullity_mod_p(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    return M.shape[1] - rank_mod_p(M, p)


class SpanBasisModP:
    """Echelon span tracker over F_p on numpy vectors."""

    def __init__(self, dim: int, p: int):
        self.p = p
        self.rows = np.zeros((0, dim), dtype=np.int64)
        self.pivots = []

    def add(self, v: np.ndarray) -> bool:
        p = self.p
        v = np.mod(v.astype(np.int64), p)
        for row, piv in zip(self.rows, self.pivots):
            if v[piv]:
                v = (v - int(v[piv]) * row) % p
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = (v * pow(int(v[piv]), p - 2, p)) % p
        self.rows = np.vstack([self.rows, v])
        self.pivots.append(piv)
        return True

    def __len__(self):
        return self.rows.shape[0]

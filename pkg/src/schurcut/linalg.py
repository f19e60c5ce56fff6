"""Exact linear algebra over GF(p), the rationals and the integers.

Everything here is deterministic: pivots are always the first nonzero entry
scanning rows top to bottom, so repeated runs produce identical output.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def _check_prime(p: int):
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"modulus must be prime, got {p}")


def as_mod_array(rows, p: int) -> np.ndarray:
    """Copy input into a 2-d int64 array of canonical residues."""
    A = np.array(rows, dtype=np.int64)
    if A.ndim != 2:
        A = A.reshape((A.shape[0], -1)) if A.size else A.reshape((0, 0))
    return A % p


def rref_mod_p(rows, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p); returns (matrix, pivot columns)."""
    _check_prime(p)
    A = as_mod_array(rows, p)
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, col]), -1, p)) % p
        coeffs = A[:, col].copy()
        coeffs[r] = 0
        A -= np.outer(coeffs, A[r])
        A %= p
        pivots.append(col)
        r += 1
    return A, pivots


def rank_mod_p(rows, p: int) -> int:
    return len(rref_mod_p(rows, p)[1])


def rank_rational(rows) -> int:
    """Exact rank over the rationals via fraction elimination."""
    A = [[Fraction(int(x)) for x in row] for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pivot_row = A[rank]
        for i in range(rank + 1, m):
            if A[i][col]:
                f = A[i][col] / pivot_row[col]
                A[i] = [a - f * b for a, b in zip(A[i], pivot_row)]
        rank += 1
        if rank == m:
            break
    return rank


def bareiss_det(rows) -> int:
    """Fraction-free determinant of an integer matrix (exact divisions only)."""
    A = [[int(x) for x in row] for row in rows]
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        row_k = A[k]
        for i in range(k + 1, n):
            row_i = A[i]
            factor = row_i[k]
            if factor == 0 and pivot == prev:
                continue
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def invert_integer_matrix(rows) -> tuple[list[list[int]], int]:
    """Exact inverse of an integer matrix with determinant +-1.

    Returns (inverse, det).  Raises when the matrix is singular or the
    inverse is not integral (i.e. the determinant is not a unit).
    """
    n = len(rows)
    A = [
        [Fraction(int(x)) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        pivot = A[col][col]
        det *= pivot
        A[col] = [x / pivot for x in A[col]]
        for i in range(n):
            if i != col and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    if det.denominator != 1 or abs(det.numerator) != 1:
        raise ValueError(f"matrix is not unimodular: det = {det}")
    inv = []
    for row in A:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ValueError("inverse is not integral")
        inv.append([int(x) for x in tail])
    return inv, int(det)


class GFpSolver:
    """Repeated solves B x = t over GF(p) for a fixed full-column-rank B."""

    def __init__(self, columns, p: int):
        _check_prime(p)
        B = as_mod_array(columns, p).T  # input: list of column vectors
        self.p = p
        self.ncols = B.shape[1]
        aug = np.hstack([B, np.eye(B.shape[0], dtype=np.int64)])
        R, pivots = rref_mod_p(aug, p)
        if pivots[: self.ncols] != list(range(self.ncols)):
            raise ValueError("basis columns are linearly dependent mod p")
        self.transform = R[:, self.ncols :]

    def solve(self, t) -> np.ndarray:
        y = (self.transform @ (np.asarray(t, dtype=np.int64) % self.p)) % self.p
        if np.any(y[self.ncols :]):
            raise ValueError("target vector is outside the span of the basis")
        return y[: self.ncols]


class SpanGFp:
    """A growing subspace of GF(p)^n kept in reduced row echelon form."""

    def __init__(self, ncols: int, p: int):
        _check_prime(p)
        self.p = p
        self.ncols = ncols
        self.rows: list[np.ndarray] = []
        self.pivot_of_row: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> np.ndarray:
        """Residue of vec modulo the span (pivot coordinates eliminated)."""
        v = np.asarray(vec, dtype=np.int64) % self.p
        for row, piv in zip(self.rows, self.pivot_of_row):
            if v[piv]:
                v = (v - v[piv] * row) % self.p
        return v

    def add(self, vec) -> bool:
        """Insert a vector; returns True when the dimension grew."""
        v = self.reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = (v * pow(int(v[piv]), -1, self.p)) % self.p
        for row in self.rows:
            if row[piv]:
                row -= row[piv] * v
                row %= self.p
        self.rows.append(v)
        self.pivot_of_row.append(piv)
        return True

    def pivots(self) -> list[int]:
        return sorted(self.pivot_of_row)

    def contains(self, vec) -> bool:
        return not np.any(self.reduce(vec))

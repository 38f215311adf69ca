"""Dense exact linear algebra over a prime field.

Matrices are numpy int64 arrays with every entry reduced into [0, p).  Vectors
are columns: a map from an s-dimensional space to an r-dimensional space is an
(r, s) matrix.  All arithmetic is integer arithmetic followed by reduction mod
p; no floating point is used.  Intermediate products never exceed p**2 * chunk
with chunk chosen to fit int64, so results are exact for any p < 2**30.

Pivoting is deterministic: columns are scanned left to right and the first row
with a nonzero entry becomes the pivot row.
"""

from __future__ import annotations

import numpy as np

# Largest inner-product block whose accumulated products fit in int64.
_INT64_BUDGET = 2**62


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product (a @ b) mod p, chunked so int64 never overflows."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    inner = a.shape[1]
    if inner == 0:
        return zeros(a.shape[0], b.shape[1])
    if p * p * inner < _INT64_BUDGET:
        return (a @ b) % p
    chunk = max(1, _INT64_BUDGET // (p * p))
    acc = zeros(a.shape[0], b.shape[1])
    for s in range(0, inner, chunk):
        acc = (acc + a[:, s : s + chunk] @ b[s : s + chunk, :]) % p
    return acc


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    r = np.array(a, dtype=np.int64) % p
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        lead = row + int(nz[0])
        if lead != row:
            r[[row, lead]] = r[[lead, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = (r[row] * inv) % p
        others = r[:, col].copy()
        others[row] = 0
        # entries are < p, so the outer product stays below p**2 < 2**62
        r -= np.outer(others, r[row])
        r %= p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return len(rref(a, p)[1])


def kernel(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the null space {v : a @ v = 0}."""
    nrows, ncols = a.shape
    if ncols == 0:
        return zeros(0, 0)
    if nrows == 0:
        return identity(ncols)
    r, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = zeros(ncols, len(free))
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-int(r[i, fc])) % p
    return basis


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """Columns of `a` at the pivot positions: a deterministic basis of the image."""
    if a.shape[0] == 0 or a.shape[1] == 0:
        return zeros(a.shape[0], 0)
    _, pivots = rref(a, p)
    return a[:, pivots].copy()


def solve(a: np.ndarray, b: np.ndarray, p: int):
    """One solution x of a @ x = b (columns of b solved jointly), or None."""
    if b.ndim == 1:
        b = b.reshape(-1, 1)
        squeeze = True
    else:
        squeeze = False
    aug = np.hstack([a % p, b % p])
    r, pivots = rref(aug, p)
    ncols = a.shape[1]
    if any(pc >= ncols for pc in pivots):
        return None
    x = zeros(ncols, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = r[i, ncols:]
    return x[:, 0] if squeeze else x


def in_span(basis: np.ndarray, v: np.ndarray, p: int) -> bool:
    """Is the column vector v in the column span of `basis`?"""
    return solve(basis, v, p) is not None


def quotient_representatives(sub: np.ndarray, vecs: np.ndarray, p: int) -> np.ndarray:
    """Columns of `vecs` forming a basis of span(sub + vecs) / span(sub).

    Deterministic: columns of `vecs` are admitted left to right whenever they
    enlarge the span.
    """
    picked: list[int] = []
    current = sub
    base_rank = rank(sub, p)
    for j in range(vecs.shape[1]):
        cand = np.hstack([current, vecs[:, j : j + 1]])
        if rank(cand, p) > base_rank:
            current = cand
            base_rank += 1
            picked.append(j)
    return vecs[:, picked].copy()

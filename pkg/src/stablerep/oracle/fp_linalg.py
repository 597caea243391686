"""Dense linear algebra over the prime field F_p on numpy integer arrays.

Entries are kept reduced in ``[0, p)``. Products go through float64 BLAS;
for the sizes used here every partial sum stays far below ``2**53``, so the
results are exact. ``matmul`` checks that bound and falls back to Python integers.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConsistencyError, DomainError

_FLOAT_EXACT = 2**52


def reduce(a: np.ndarray, p: int) -> np.ndarray:
    return np.mod(np.asarray(a, dtype=np.int64), p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` for reduced operands."""
    inner = a.shape[-1]
    if inner and inner * (p - 1) ** 2 >= _FLOAT_EXACT:
        return np.mod(a.astype(object) @ b.astype(object), p).astype(np.int64)
    prod = a.astype(np.float64) @ b.astype(np.float64)
    # Operands are nonnegative, so fmod agrees with mod and is cheaper.
    return np.fmod(prod, p).astype(np.int64)


_PANEL = 32


def echelon(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` and its pivot columns.

    Zero rows are dropped, so the first output has ``rank`` rows. The reduced
    form is unique, which keeps the result independent of pivoting choices.
    Columns are processed in panels: pivots are located inside a narrow panel
    and the rest of the matrix is updated with one product per panel.
    """
    m = reduce(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c0 in range(0, cols, _PANEL):
        if r == rows:
            break
        c1 = min(c0 + _PANEL, cols)
        local, source = _panel_pivots(m[r:, c0:c1], p)
        if not local:
            continue
        k = len(local)
        # Move the rows that carry the panel pivots to the top of the active block.
        order = np.arange(r, rows)
        chosen = r + np.asarray(source)
        rest = np.setdiff1d(order, chosen, assume_unique=True)
        m[r:] = m[np.concatenate([chosen, rest])]
        cols_j = c0 + np.asarray(local)
        top = matmul(_small_inverse(m[r : r + k, cols_j], p), m[r : r + k, c0:], p)
        m[r : r + k, c0:] = top
        others = np.concatenate([np.arange(0, r), np.arange(r + k, rows)])
        if others.size:
            coeff = m[np.ix_(others, cols_j)]
            if coeff.any():
                m[others, c0:] = (m[others, c0:] - matmul(coeff, top, p)) % p
        pivots.extend(int(c) for c in cols_j)
        r += k
    if m[r:].any():
        raise ConsistencyError("echelon elimination left a nonzero row below the pivots")
    return m[:r], pivots


def _panel_pivots(panel: np.ndarray, p: int) -> tuple[list[int], list[int]]:
    """Greedy pivot columns of a narrow panel and the original rows that supply them."""
    w = panel.copy()
    rows, cols = w.shape
    perm = np.arange(rows)
    local: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = w[r:, c]
        k = int(np.argmax(col != 0))
        if col[k] == 0:
            continue
        k += r
        if k != r:
            w[[r, k]] = w[[k, r]]
            perm[[r, k]] = perm[[k, r]]
        inv = pow(int(w[r, c]), -1, p)
        w[r, c:] = (w[r, c:] * inv) % p
        below = w[r + 1 :, c]
        if below.any():
            w[r + 1 :, c:] = (w[r + 1 :, c:] - np.outer(below, w[r, c:])) % p
        local.append(c)
        r += 1
    return local, [int(i) for i in perm[:r]]


def _small_inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    m = np.concatenate([reduce(a, p), np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        k = c + int(np.argmax(m[c:, c] != 0))
        if m[k, c] == 0:
            raise DomainError("matrix is singular mod p")
        if k != c:
            m[[c, k]] = m[[k, c]]
        m[c] = (m[c] * pow(int(m[c, c]), -1, p)) % p
        factors = m[:, c].copy()
        factors[c] = 0
        m = (m - np.outer(factors, m[c])) % p
    return m[:, n:]


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    # Eliminate along the shorter side.
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(echelon(a, p)[1])


def row_basis(a: np.ndarray, p: int, seed: int = 0) -> np.ndarray:
    """Reduced echelon basis of the row space of ``a``.

    Tall inputs are first compressed by a random combination of rows; the
    candidate basis is accepted only after every row of ``a`` is shown to
    lie in its span, and the full elimination runs otherwise. The answer is
    therefore always exact; only the running time is randomised.
    """
    rows, cols = a.shape
    if rows == 0:
        return np.zeros((0, cols), dtype=np.int64)
    if rows <= 2 * cols + 16:
        return echelon(a, p)[0]
    rng = np.random.default_rng(seed)
    mix = rng.integers(0, p, size=(cols + 8, rows), dtype=np.int64)
    basis, pivots = echelon(matmul(mix, reduce(a, p), p), p)
    a = reduce(a, p)
    residual = (a - matmul(a[:, pivots], basis, p)) % p
    if residual.any():
        return echelon(a, p)[0]
    return basis


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise DomainError(f"cannot invert a non-square {a.shape} matrix")
    return _small_inverse(a, p)


def matpow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(a.shape[0], dtype=np.int64)
    base = reduce(a, p)
    while e:
        if e & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        e >>= 1
    return result


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of F_p."""
    for c in range(2, p):
        if all(pow(c, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)):
            return c
    if p == 2:
        return 1
    raise ConsistencyError(f"no primitive root found mod {p}")


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out

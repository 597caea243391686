"""Explicit modules for the normaliser N = <g, h> of a Sylow p-subgroup of SL2(F_p).

Vectors are rows and group elements act on the right, ``v -> v A``.
Every module built here has a basis of ``h``-eigenvectors, so ``h`` is stored
as a vector of weights: ``h`` scales the basis vector ``k`` by ``c^weights[k]``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import comb, prod

import numpy as np

from ..errors import ConsistencyError, DomainError
from ..partitions import Partition
from . import fp_linalg as fl

DEFAULT_MAX_DIM = 200_000
EXACT_CHECK_LIMIT = 400
FREIVALDS_TRIALS = 16


def max_dim() -> int:
    """Dimension guard for tensor-power constructions, overridable by ``STABLEREP_MAX_DIM``."""
    return int(os.environ.get("STABLEREP_MAX_DIM", DEFAULT_MAX_DIM))


@dataclass(frozen=True, eq=False)
class FpModule:
    """A representation of ``N``: the matrix of ``g`` and the ``h``-weights of the basis."""

    p: int
    g: np.ndarray
    weights: np.ndarray
    c: int = field(default=0)

    def __post_init__(self) -> None:
        g = fl.reduce(self.g, self.p)
        w = np.mod(np.asarray(self.weights, dtype=np.int64), self.p - 1)
        if g.shape != (len(w), len(w)):
            raise DomainError(f"g has shape {g.shape} but there are {len(w)} weights")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "c", self.c or fl.primitive_root(self.p))

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def h(self) -> np.ndarray:
        """Diagonal matrix of ``h``: entry ``c^w`` for each basis weight ``w``."""
        return np.diag([pow(self.c, int(w), self.p) for w in self.weights]).astype(np.int64)

    def check_relations(self, seed: int = 0) -> None:
        """Verify ``h g h^-1 = g^{c^2}`` and ``(g - 1)^p = 0``.

        Exact matrix identities up to ``EXACT_CHECK_LIMIT``; above that, a
        randomised check on ``FREIVALDS_TRIALS`` vectors at once.
        """
        p, n = self.p, self.dim
        if n == 0:
            return
        scale = np.array([pow(self.c, int(w), p) for w in self.weights], dtype=np.int64)
        inv_scale = np.array([pow(int(s), -1, p) for s in scale], dtype=np.int64)
        conj = (scale[:, None] * self.g % p) * inv_scale[None, :] % p
        nil = fl.reduce(self.g - np.eye(n, dtype=np.int64), p)
        e = self.c * self.c
        if n <= EXACT_CHECK_LIMIT:
            ok = np.array_equal(conj, fl.matpow(self.g, e, p))
            ok = ok and not fl.matpow(nil, p, p).any()
        else:
            rng = np.random.default_rng(seed)
            r = rng.integers(0, p, size=(n, FREIVALDS_TRIALS), dtype=np.int64)
            lhs = fl.matmul(conj, r, p)
            rhs = r
            for _ in range(e):
                rhs = fl.matmul(self.g, rhs, p)
            ok = np.array_equal(lhs, rhs)
            t = r
            for _ in range(p):
                t = fl.matmul(nil, t, p)
            ok = ok and not t.any()
        if not ok:
            raise ConsistencyError("module violates h g h^-1 = g^(c^2) or (g-1)^p = 0")


def natural_module(p: int) -> FpModule:
    """``E``: basis ``x, y`` of weights ``-1, 1``; ``g`` sends ``y`` to ``x + y``."""
    return FpModule(p, np.array([[1, 0], [1, 1]]), np.array([-1, 1]))


def _monomials(d: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations_with_replacement(range(d), k))


@lru_cache(maxsize=None)
def _mult_table(d: int, k: int) -> tuple[np.ndarray, dict]:
    """Index of ``m * x_b`` in degree ``k`` for each degree ``k-1`` monomial ``m`` and variable ``b``."""
    low = _monomials(d, k - 1)
    high = {m: i for i, m in enumerate(_monomials(d, k))}
    table = np.array([[high[tuple(sorted(m + (b,)))] for b in range(d)] for m in low], dtype=np.int64)
    return table, high


def sym_matrix(a: np.ndarray, k: int, p: int) -> np.ndarray:
    """Matrix of ``Sym^k`` of the linear map with matrix ``a`` (row-vector convention)."""
    d = a.shape[0]
    if k == 0:
        return np.ones((1, 1), dtype=np.int64)
    if k == 1:
        return fl.reduce(a, p)
    lower = sym_matrix(a, k - 1, p)
    table, high = _mult_table(d, k)
    low_index = {m: i for i, m in enumerate(_monomials(d, k - 1))}
    n_high = len(high)
    out = np.zeros((n_high, n_high), dtype=np.int64)
    for m, i in high.items():
        prefix, last = m[:-1], m[-1]
        u = lower[low_index[prefix]]
        v = a[last]
        nz = np.flatnonzero(u)
        vals = (u[nz][:, None] * v[None, :]).ravel()
        idx = table[nz].ravel()
        out[i] = np.mod(np.bincount(idx, weights=vals, minlength=n_high), p).astype(np.int64)
    return out


def sym_weights(weights: np.ndarray, k: int) -> np.ndarray:
    d = len(weights)
    return np.array([sum(int(weights[i]) for i in m) for m in _monomials(d, k)], dtype=np.int64)


def sym_power(v: FpModule, k: int) -> FpModule:
    return FpModule(v.p, sym_matrix(v.g, k, v.p), sym_weights(v.weights, k), v.c)


def build_sym(l: int, p: int) -> FpModule:
    """``Sym^l E`` on the monomials ``x^l, x^{l-1} y, ..., y^l``."""
    if not 0 <= l <= p - 1:
        raise DomainError(f"l={l} outside [0, {p - 1}]")
    return sym_power(natural_module(p), l)


def one_dim(p: int, i: int) -> FpModule:
    """``S_i``: ``g`` trivial, ``h`` acting by ``c^i``."""
    return FpModule(p, np.ones((1, 1)), np.array([i]))


def tensor(v: FpModule, w: FpModule) -> FpModule:
    _same_prime(v, w)
    g = np.kron(v.g, w.g) % v.p
    weights = (v.weights[:, None] + w.weights[None, :]).ravel()
    return FpModule(v.p, g, weights, v.c)


def direct_sum(v: FpModule, w: FpModule) -> FpModule:
    _same_prime(v, w)
    g = np.zeros((v.dim + w.dim,) * 2, dtype=np.int64)
    g[: v.dim, : v.dim] = v.g
    g[v.dim :, v.dim :] = w.g
    return FpModule(v.p, g, np.concatenate([v.weights, w.weights]), v.c)


def dual(v: FpModule) -> FpModule:
    """Contragredient module: ``g`` acts by the inverse transpose, weights negate."""
    return FpModule(v.p, fl.inverse(v.g, v.p).T.copy(), -v.weights, v.c)


def uniserial(i: int, j: int, p: int) -> FpModule:
    """``U_{i,j}`` realised as ``Sym^j E (x) S_{i-j}``."""
    if not 0 <= j <= p - 1:
        raise DomainError(f"j={j} outside [0, {p - 1}]")
    return tensor(build_sym(j, p), one_dim(p, i - j))


def _same_prime(v: FpModule, w: FpModule) -> None:
    if v.p != w.p or v.c != w.c:
        raise DomainError("modules over different primes or generators")


def semistandard_fillings(nu: Partition, d: int) -> list[tuple[tuple[int, ...], ...]]:
    """Fillings with entries ``0..d-1``, rows weakly and columns strictly increasing."""
    return _fillings(nu, d, weak_rows=True)


def column_strict_fillings(nu: Partition, d: int) -> list[tuple[tuple[int, ...], ...]]:
    """All fillings with strictly increasing columns and no condition on rows."""
    return _fillings(nu, d, weak_rows=False)


def _fillings(nu: Partition, d: int, weak_rows: bool) -> list[tuple[tuple[int, ...], ...]]:
    boxes = list(nu.boxes())
    out: list[tuple[tuple[int, ...], ...]] = []
    cell: dict[tuple[int, int], int] = {}

    def rec(k: int) -> None:
        if k == len(boxes):
            out.append(tuple(tuple(cell[(i, j)] for j in range(1, nu[i - 1] + 1)) for i in range(1, nu.length() + 1)))
            return
        i, j = boxes[k]
        lo = 0
        if j > 1 and weak_rows:
            lo = cell[(i, j - 1)]
        if i > 1:
            lo = max(lo, cell[(i - 1, j)] + 1)
        for x in range(lo, d):
            cell[(i, j)] = x
            rec(k + 1)

    rec(0)
    return out


def _row_images(filling: tuple[tuple[int, ...], ...], nu: Partition) -> dict[tuple[tuple[int, ...], ...], int]:
    """Image of the column wedge of ``filling`` in the product of row symmetric powers.

    Each column is antisymmetrised independently; the entries of each row are
    then multiplied as a commutative monomial.
    """
    conj = nu.conjugate()
    columns = [[filling[i][j] for i in range(conj[j])] for j in range(nu.first())]
    acc: dict[tuple[tuple[int, ...], ...], int] = {}
    for perms in product(*(_signed_permutations(len(col)) for col in columns)):
        sign = 1
        rows: list[list[int]] = [[] for _ in range(nu.length())]
        for col, (perm, s) in zip(columns, perms):
            sign *= s
            for i, src in enumerate(perm):
                rows[i].append(col[src])
        key = tuple(tuple(sorted(r)) for r in rows)
        acc[key] = acc.get(key, 0) + sign
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


@dataclass
class SchurEmbedding:
    """The image of the column-wedge to row-symmetric map, as a submodule of the ambient."""

    module: FpModule
    basis: np.ndarray
    ambient_shape: tuple[int, ...]


def schur_apply(nu: Partition, v: FpModule, fillings=None) -> FpModule:
    return schur_embedding(nu, v, fillings).module


def schur_embedding(nu: Partition, v: FpModule, fillings=None) -> SchurEmbedding:
    """``nabla^nu V`` as the image of ``(x)_cols Lambda^{nu'_c} V -> (x)_rows Sym^{nu_r} V``.

    This map is the Young symmetriser of the row-reading tableau factored
    through exterior and symmetric powers. Its image has a basis indexed by
    semistandard tableaux; the rank is asserted. The ``g``-action on the
    image is solved on pivot coordinates weight by weight and then checked
    on every coordinate.
    """
    p, d = v.p, v.dim
    n = nu.size()
    if n >= p:
        raise DomainError(f"|{nu}| = {n} >= p = {p}: the symmetriser is not invertible mod p")
    if d**n > max_dim():
        raise DomainError(f"dim V^(x){n} = {d**n} exceeds the limit {max_dim()} (STABLEREP_MAX_DIM)")
    if n == 0:
        return SchurEmbedding(FpModule(p, np.ones((1, 1)), np.zeros(1), v.c), np.ones((1, 1), dtype=np.int64), ())
    if nu.length() > d:
        empty = FpModule(p, np.zeros((0, 0)), np.zeros(0), v.c)
        return SchurEmbedding(empty, np.zeros((0, 0), dtype=np.int64), ())

    row_monos = [_monomials(d, r) for r in nu.parts]
    row_index = [{m: i for i, m in enumerate(ms)} for ms in row_monos]
    shape = tuple(len(ms) for ms in row_monos)
    amb_dim = prod(shape)
    strides = [prod(shape[k + 1 :]) for k in range(len(shape))]

    # Ambient weights: sum over rows of the monomial weights.
    amb_w = np.zeros(amb_dim, dtype=np.int64)
    for k, r in enumerate(nu.parts):
        w_r = sym_weights(v.weights, r)
        amb_w = amb_w + np.tile(np.repeat(w_r, strides[k]), prod(shape[:k]))
    amb_w %= p - 1

    tabs = fillings if fillings is not None else semistandard_fillings(nu, d)
    gens = np.zeros((len(tabs), amb_dim), dtype=np.int64)
    gen_w = np.zeros(len(tabs), dtype=np.int64)
    for t, filling in enumerate(tabs):
        gen_w[t] = sum(int(v.weights[x]) for row in filling for x in row) % (p - 1)
        for key, coeff in _row_images(filling, nu).items():
            idx = sum(row_index[k][mono] * strides[k] for k, mono in enumerate(key))
            gens[t, idx] = (gens[t, idx] + coeff) % p

    # Keep a basis of the span, grouped by weight.
    order = np.argsort(gen_w, kind="stable")
    gens, gen_w = gens[order], gen_w[order]
    blocks = []
    for s in np.unique(gen_w):
        rows = np.flatnonzero(gen_w == s)
        cols = np.flatnonzero(amb_w == s)
        if np.any(gens[np.ix_(rows, np.setdiff1d(np.arange(amb_dim), cols))]):
            raise ConsistencyError(f"generator of weight {s} leaves its weight space")
        red, piv = fl.echelon(gens[np.ix_(rows, cols)], p)
        blocks.append((int(s), cols, red, piv))
    basis_rows, weights, pivot_cols, spans = [], [], [], []
    for s, cols, red, piv in blocks:
        b = np.zeros((red.shape[0], amb_dim), dtype=np.int64)
        b[:, cols] = red
        basis_rows.append(b)
        weights.extend([s] * red.shape[0])
        pivot_cols.append(cols[piv])
        spans.append(cols)
    basis = np.concatenate(basis_rows, axis=0) if basis_rows else np.zeros((0, amb_dim), dtype=np.int64)
    if fillings is None:
        expected = len(tabs)
        if basis.shape[0] != expected:
            raise ConsistencyError(f"image of the symmetriser has rank {basis.shape[0]}, expected {expected}")

    # Act with g on every basis vector through the row symmetric powers.
    images = basis.reshape((basis.shape[0],) + shape)
    for k, r in enumerate(nu.parts):
        mat = sym_matrix(v.g, r, p).astype(np.float64)
        images = np.mod(np.moveaxis(np.tensordot(images.astype(np.float64), mat, axes=([k + 1], [0])), -1, k + 1), p)
    images = images.reshape(basis.shape[0], amb_dim).astype(np.int64)

    # The basis is in reduced echelon form, so X @ basis = images is read off
    # the pivot columns; every other column is then checked.
    dim = basis.shape[0]
    x = np.zeros((dim, dim), dtype=np.int64)
    start = 0
    for (s, cols, red, piv), pc in zip(blocks, pivot_cols):
        size = red.shape[0]
        x[:, start : start + size] = images[:, pc]
        start += size
    start = 0
    for (s, cols, red, piv), span in zip(blocks, spans):
        size = red.shape[0]
        if not np.array_equal(fl.matmul(x[:, start : start + size], red, p), images[:, span]):
            raise ConsistencyError("the image of the symmetriser is not g-stable")
        start += size
    covered = np.concatenate(spans) if spans else np.zeros(0, dtype=np.int64)
    rest = np.setdiff1d(np.arange(amb_dim), covered)
    if rest.size and np.any(images[:, rest]):
        raise ConsistencyError("the image of the symmetriser is not g-stable")
    module = FpModule(p, x, np.array(weights, dtype=np.int64), v.c)
    module.check_relations()
    return SchurEmbedding(module, basis, shape)


def expected_schur_dim(nu: Partition, d: int) -> int:
    """Number of semistandard tableaux, by the hook content formula at ``q = 1``."""
    from ..partitions import hooks, shifted_contents

    num = prod(shifted_contents(nu, d).elements())
    den = prod(hooks(nu).elements())
    return num // den if nu.length() <= d else 0


def sym_dim(d: int, k: int) -> int:
    return comb(d + k - 1, k)

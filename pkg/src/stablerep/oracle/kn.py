"""Decomposition of N-modules into uniserials and transport to the stable ring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from ..errors import ConsistencyError, DomainError
from ..stable_ring import StableElement
from . import fp_linalg as fl
from .modules import FpModule, build_sym, direct_sum, one_dim, tensor


@dataclass(frozen=True)
class KNDecomposition:
    """Multiplicities of the uniserial summands ``U_{i,j}``, ``i`` mod ``p-1``, ``0 <= j <= p-1``."""

    p: int
    counts: Mapping[tuple[int, int], int]

    def dimension(self) -> int:
        return sum((j + 1) * m for (_, j), m in self.counts.items())

    def non_projective(self) -> dict[tuple[int, int], int]:
        return {k: m for k, m in self.counts.items() if k[1] < self.p - 1}

    def projective(self) -> dict[tuple[int, int], int]:
        return {k: m for k, m in self.counts.items() if k[1] == self.p - 1}

    def to_json(self) -> dict:
        def listing(d: Mapping[tuple[int, int], int]) -> list[dict]:
            return [{"i": i, "j": j, "mult": m} for (i, j), m in sorted(d.items(), key=lambda kv: (kv[0][1], kv[0][0]))]

        return {"summands": listing(self.non_projective()), "projective_part": listing(self.projective())}


def _weight_blocks(v: FpModule) -> dict[int, np.ndarray]:
    return {s: np.flatnonzero(v.weights == s) for s in range(v.p - 1)}


def image_weight_dims(v: FpModule) -> list[list[int]]:
    """``D[t][s] = dim(im (g-1)^t  meet  V_s)`` for ``t = 0..p``.

    The image of ``(g-1)^t`` is ``h``-stable, so it is the direct sum of its
    intersections with the weight spaces. A basis of each intersection is
    pushed through ``g - 1`` one weight block at a time.
    """
    p = v.p
    nil = fl.reduce(v.g - np.eye(v.dim, dtype=np.int64), p)
    blocks = _weight_blocks(v)
    rows_of = {s: nil[idx] for s, idx in blocks.items()}
    current = {s: np.eye(len(idx), dtype=np.int64) for s, idx in blocks.items()}
    dims = [[current[s].shape[0] for s in range(p - 1)]]
    for _ in range(p):
        # Push every weight block through g - 1 at once, then split the
        # images by target weight.
        pushed = [fl.matmul(current[s], rows_of[s], p) for s in blocks if current[s].shape[0]]
        full = np.concatenate(pushed) if pushed else np.zeros((0, v.dim), dtype=np.int64)
        current = {s: fl.row_basis(full[:, idx], p) for s, idx in blocks.items()}
        dims.append([current[s].shape[0] for s in range(p - 1)])
    if any(dims[p]):
        raise ConsistencyError("(g-1)^p is not zero on this module")
    return dims


def decompose_kN(v: FpModule) -> KNDecomposition:
    """Multiplicities of ``U_{i,j}`` from the weight profile of the images of ``(g-1)^t``.

    A Jordan chain ``u_0 -> u_1 -> ... -> u_j`` of ``U_{i,j}`` has ``u_k`` of
    weight ``i - 2k``. With ``Delta_t(s) = D_t(s) - D_{t+1}(s)`` counting
    chains of length ``> t`` whose ``t``-th vector has weight ``s``, the number
    of ``U_{i,t}`` is ``Delta_t(i-2t) - Delta_{t+1}(i-2t-2)``.
    """
    p = v.p
    q = p - 1
    dims = image_weight_dims(v)
    delta = [[dims[t][s] - dims[t + 1][s] for s in range(q)] for t in range(p)] + [[0] * q]
    counts: dict[tuple[int, int], int] = {}
    for t in range(p):
        for i in range(q):
            n = delta[t][(i - 2 * t) % q] - delta[t + 1][(i - 2 * t - 2) % q]
            if n < 0:
                raise ConsistencyError(f"negative multiplicity for U_({i},{t})")
            if n:
                counts[(i, t)] = n
    result = KNDecomposition(p, counts)
    if result.dimension() != v.dim:
        raise ConsistencyError(f"summands have total dimension {result.dimension()}, module has {v.dim}")
    return result


def omega_label(i: int, j: int, p: int) -> tuple[int, int]:
    """Heller translate: ``Omega U_{i,j} = U_{i-2j-2, p-j-2}`` for ``j <= p-2``."""
    if not 0 <= j <= p - 2:
        raise DomainError(f"U_({i},{j}) is projective or out of range")
    return (i - 2 * j - 2) % (p - 1), p - j - 2


def green_label(i: int, j: int, p: int) -> tuple[int, int]:
    """The ``(l, m)`` with ``Omega^m U_{l,l} = U_{i,j}``."""
    if not 0 <= j <= p - 2:
        raise DomainError(f"U_({i},{j}) is projective or out of range")
    q = p - 1
    if (j - i) % 2 == 0:
        # Even Heller powers keep j and lower i by 2 each time.
        l = j
        m = (l - i) % q
    else:
        # Odd powers: Omega^{2t+1} U_{l,l} = U_{-l-2t-2, p-l-2}.
        l = p - 2 - j
        m = (-l - i - 1) % q
    if _omega_power(l, m, p) != (i % q, j):
        raise ConsistencyError(f"no Heller translate of a U_(l,l) equals U_({i},{j})")
    return l, m


def _omega_power(l: int, m: int, p: int) -> tuple[int, int]:
    label = (l, l)
    for _ in range(m):
        label = omega_label(label[0], label[1], p)
    return label


def green_transport(d: KNDecomposition) -> StableElement:
    """Drop projective summands and name each remaining ``U_{i,j}`` as ``Omega^m Sym^l E``."""
    acc: dict[tuple[int, int], int] = {}
    for (i, j), n in d.non_projective().items():
        key = green_label(i, j, d.p)
        acc[key] = acc.get(key, 0) + n
    return StableElement(d.p, acc)


def omega_decomposition(d: KNDecomposition) -> KNDecomposition:
    """Apply ``Omega`` summand by summand; projective summands vanish."""
    acc: dict[tuple[int, int], int] = {}
    for (i, j), n in d.non_projective().items():
        key = omega_label(i, j, d.p)
        acc[key] = acc.get(key, 0) + n
    return KNDecomposition(d.p, acc)


def basis_module(l: int, m: int, p: int) -> FpModule:
    """An N-module whose non-projective part is the Green correspondent of ``Omega^m Sym^l E``."""
    i, j = _omega_power(l, m % (p - 1), p)
    return tensor(build_sym(j, p), one_dim(p, i - j))


def module_of(x: StableElement) -> FpModule:
    """Direct sum realising an effective stable element at the N-level."""
    p = x.p
    if any(c < 0 for c in x.terms.values()):
        raise DomainError(f"{x} is not effective")
    out = None
    for (l, m), c in x.terms.items():
        for _ in range(c):
            piece = basis_module(l, m, p)
            out = piece if out is None else direct_sum(out, piece)
    if out is None:
        return FpModule(p, np.zeros((0, 0)), np.zeros(0))
    return out

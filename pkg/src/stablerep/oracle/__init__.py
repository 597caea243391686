"""Matrix-level ground truth over F_p, independent of the cyclotomic route."""

from __future__ import annotations

from ..partitions import Partition
from ..stable_ring import StableElement
from .kn import KNDecomposition, decompose_kN, green_transport
from .modules import FpModule, build_sym, schur_apply


def oracle_kn(nu: Partition, l: int, p: int) -> KNDecomposition:
    """Uniserial decomposition of ``nabla^nu Sym^l E`` restricted to N."""
    return decompose_kN(schur_apply(nu, build_sym(l, p)))


def oracle_plethysm(nu: Partition, l: int, p: int) -> StableElement:
    """``nabla^nu Sym^l E`` modulo projectives, computed from explicit matrices."""
    return green_transport(oracle_kn(nu, l, p))


__all__ = [
    "FpModule",
    "KNDecomposition",
    "build_sym",
    "decompose_kN",
    "green_transport",
    "oracle_kn",
    "oracle_plethysm",
    "schur_apply",
]

"""Schur functors on the stable ring and the classification of their values.

The computational route is: evaluate ``s_nu`` at ``zeta^-l, ..., zeta^l``,
then invert Theta on the parity-pure part. The closed-form predicates
(projectivity, stable irreducibility, the fold-multiset criterion) are
implemented separately so they can be checked against that route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import check_odd_prime
from .errors import ConsistencyError, DomainError
from .littlewood_richardson import lr_expansion
from .partitions import (
    IntMultiset,
    Partition,
    fold,
    hooks,
    is_p_small,
    is_pl_small,
    p_small_partitions,
    remove_first_column,
    remove_first_row,
    shifted_contents,
)
from .schur import schur_at_roots
from .stable_ring import StableElement, cg_multiply, heller, theta_invert_parity

PROJECTIVE = "projective"
NEITHER = "neither"

# Families of stably-irreducible pairs, in the order they are tested.
ELEMENTARY_ROWS = "elementary-rows"
ELEMENTARY_COLUMNS = "elementary-columns"
AUGMENTED_ROWS = "augmented-rows"
AUGMENTED_COLUMNS = "augmented-columns"
HOOK = "hook"
RECTANGULAR = "rectangular"
FULL_CASES = (ELEMENTARY_ROWS, ELEMENTARY_COLUMNS, AUGMENTED_ROWS, AUGMENTED_COLUMNS, HOOK, RECTANGULAR)

# Families for (p,l)-small partitions.
ELEMENTARY = "elementary"
ROW = "row"
COLUMN = "column"
SMALL_CASES = (ELEMENTARY, ROW, COLUMN, RECTANGULAR)


def _check_input(nu: Partition, l: int, p: int) -> None:
    check_odd_prime(p)
    if not 0 <= l <= p - 2:
        raise DomainError(f"l={l} outside [0, {p - 2}]")
    if not is_p_small(nu, p):
        raise DomainError(f"{nu} is not {p}-small (size {nu.size()} >= {p})")


@dataclass(frozen=True)
class PlethysmResult:
    """``nabla^nu`` applied to ``Omega^twist_m(Sym^l E)``, modulo projectives."""

    p: int
    nu: Partition
    l: int
    twist_m: int
    decomposition: StableElement
    theorem_case: str

    @property
    def projective(self) -> bool:
        return self.decomposition.is_zero()

    @property
    def stably_irreducible(self) -> bool:
        term = self.decomposition.single_term()
        return term is not None and term[2] == 1 and term[1] == 0

    @property
    def witness(self) -> tuple[int, int] | None:
        """The surviving basis element ``(l, m)`` when stably-irreducible."""
        if not self.stably_irreducible:
            return None
        l, m, _ = self.decomposition.single_term()
        return l, m

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "nu": self.nu.to_json(),
            "l": self.l,
            "twist_m": self.twist_m,
            "decomposition": self.decomposition.to_json(),
            "projective": self.projective,
            "stably_irreducible": self.stably_irreducible,
            "theorem_case": self.theorem_case,
        }


@lru_cache(maxsize=None)
def plethysm_element(nu: Partition, l: int, p: int) -> StableElement:
    """Class of ``nabla^nu Sym^l E`` in the stable ring, via Theta inversion."""
    _check_input(nu, l, p)
    x = schur_at_roots(nu, l, p)
    # All summands share the parity of l*|nu|.
    result = theta_invert_parity(x, (l * nu.size()) % 2)
    if not result.is_effective():
        raise ConsistencyError(f"negative multiplicity in nabla^{nu} Sym^{l} E: {result!r}")
    return result


def heller_interchange(nu: Partition, w: StableElement) -> StableElement:
    """``nabla^nu(Omega^i Sym^l E) = Omega^{i|nu|}(nabla^lam Sym^l E)`` with ``lam = nu`` or ``nu'``.

    ``w`` must be a single basis element ``(l, i)`` with multiplicity one.
    """
    term = w.single_term()
    if term is None or term[2] != 1:
        raise DomainError(f"expected a basis element, got {w}")
    l, i, _ = term
    lam = nu if i % 2 == 0 else nu.conjugate()
    return heller(plethysm_element(lam, l, w.p), i * nu.size())


def decompose_plethysm(nu: Partition, l: int, p: int, twist_m: int = 0) -> PlethysmResult:
    """Decompose ``nabla^nu(Omega^twist_m Sym^l E)`` modulo projectives."""
    _check_input(nu, l, p)
    twist_m %= p - 1
    decomposition = heller_interchange(nu, StableElement.basis(p, l, twist_m))
    return PlethysmResult(p, nu, l, twist_m, decomposition, classify(nu, l, p, twist_m))


def is_projective_theorem(nu: Partition, l: int, p: int) -> bool:
    """Closed form: projective iff ``nu_1 >= p-l`` or ``len(nu) >= l+2``."""
    _check_input(nu, l, p)
    return nu.first() >= p - l or nu.length() >= l + 2


def _rows_then(nu: Partition, width: int, tail: tuple[int, ...]) -> bool:
    """Is ``nu`` equal to ``(width^b) + tail`` for some ``b >= 0``?"""
    parts = nu.parts
    k = len(parts) - len(tail)
    if k < 0 or parts[k:] != tail:
        return False
    return all(x == width for x in parts[:k])


def _padded(nu: Partition, n: int) -> tuple[int, ...] | None:
    if nu.length() > n:
        return None
    return nu.parts + (0,) * (n - nu.length())


def full_case(nu: Partition, l: int, p: int) -> str | None:
    """First family containing ``(nu, l)`` among the six stably-irreducible families."""
    w = p - l - 1
    # (i) ((p-l-1)^b, 1) or ((p-l-1)^b)
    if _rows_then(nu, w, ()) or _rows_then(nu, w, (1,)):
        return ELEMENTARY_ROWS
    # (ii) (a+1, a^l) or (a^{l+1})
    v = _padded(nu, l + 1)
    if v is not None:
        a = v[-1]
        if all(x == a for x in v[1:]) and v[0] in (a, a + 1):
            return ELEMENTARY_COLUMNS
    # (iii) ((p-l-1)^b, p-l-2), or l = 1 and nu inside the 2 x (p-2) box
    tail = (w - 1,) if w - 1 > 0 else ()
    if _rows_then(nu, w, tail) or (l == 1 and nu.length() <= 2 and nu.first() <= p - 2):
        return AUGMENTED_ROWS
    # (iv) ((a+1)^l, a), or l = p-3 and nu inside the (p-2) x 2 box
    if v is not None:
        a = v[-1]
        if all(x == a + 1 for x in v[:-1]):
            return AUGMENTED_COLUMNS
    if l == p - 3 and nu.length() <= p - 2 and nu.first() <= 2:
        return AUGMENTED_COLUMNS
    # (v) hook (p-l-1, 1^l)
    if nu.parts == (w,) + (1,) * l:
        return HOOK
    # (vi) two sporadic rectangles at p = 7
    if p == 7 and ((nu.parts == (2, 2, 2) and l == 3) or (nu.parts == (3, 3) and l == 2)):
        return RECTANGULAR
    return None


@lru_cache(maxsize=None)
def is_stably_irreducible_theorem(nu: Partition, l: int, p: int) -> str:
    """Verdict from the closed-form classification: a family label, ``projective`` or ``neither``."""
    _check_input(nu, l, p)
    case = full_case(nu, l, p)
    if case is not None:
        return case
    return PROJECTIVE if is_projective_theorem(nu, l, p) else NEITHER


def classify(nu: Partition, l: int, p: int, twist_m: int = 0) -> str:
    """Verdict for ``nabla^nu(Omega^i Sym^l E)``: projectivity and stable irreducibility
    reduce to the pair ``(lam, l)``; the latter also needs ``(p-1) | i|nu|``."""
    lam = nu if twist_m % 2 == 0 else nu.conjugate()
    verdict = is_stably_irreducible_theorem(lam, l, p)
    if verdict in (PROJECTIVE, NEITHER):
        return verdict
    if (twist_m * nu.size()) % (p - 1) != 0:
        return NEITHER
    return verdict


def _check_pl_small(nu: Partition, l: int, p: int) -> None:
    _check_input(nu, l, p)
    if not is_pl_small(nu, p, l):
        raise DomainError(f"{nu} is not ({p},{l})-small")


def is_stably_irreducible_pl_small(nu: Partition, l: int, p: int) -> str:
    """Four-case classification for ``(p,l)``-small partitions."""
    _check_pl_small(nu, l, p)
    if nu.size() <= 1:
        return ELEMENTARY
    if nu.parts == (p - l - 2,) or l == 1:
        return ROW
    if nu.parts == (1,) * l or l == p - 3:
        return COLUMN
    if p == 7 and ((nu.parts == (2, 2, 2) and l == 3) or (nu.parts == (3, 3) and l == 2)):
        return RECTANGULAR
    return NEITHER


def folded_multisets(nu: Partition, l: int, p: int) -> tuple[IntMultiset, IntMultiset]:
    """``(H^F, C_{l+1}^F)``: folded hook lengths and folded shifted contents."""
    return fold(hooks(nu), p), fold(shifted_contents(nu, l + 1), p)


def multiset_criterion(nu: Partition, l: int, p: int) -> int | None:
    """The ``i`` with ``C^F = (H^F + {i}) - {1}``, or ``None`` when no such ``i`` exists."""
    _check_pl_small(nu, l, p)
    h_fold, c_fold = folded_multisets(nu, l, p)
    rest = c_fold.add(1).difference(h_fold)
    if rest is None or rest.size() != 1:
        return None
    return rest.min()


def reduce_column(nu: Partition, l: int, p: int) -> Partition:
    """Remove the first column of a partition with exactly ``l+1`` rows."""
    _check_input(nu, l, p)
    if nu.length() != l + 1:
        raise DomainError(f"column reduction needs {l + 1} rows, {nu} has {nu.length()}")
    return remove_first_column(nu)


def reduce_row(nu: Partition, l: int, p: int) -> tuple[Partition, bool]:
    """Remove a first row of length ``p-l-1``.

    The flag is true when ``nabla^nu Sym^l E = Sym^{p-2} E (x) nabla^mu Sym^l E``
    rather than ``nabla^mu Sym^l E``; this happens exactly when the removed
    row has odd length, i.e. when ``l`` is odd.
    """
    _check_input(nu, l, p)
    if nu.first() != p - l - 1:
        raise DomainError(f"row reduction needs first part {p - l - 1}, {nu} has {nu.first()}")
    return remove_first_row(nu), (p - l - 1) % 2 == 1


def module_dimension_mod_p(l: int, m: int, p: int) -> int:
    """``dim Omega^m(Sym^l E)`` modulo ``p``: each Heller step negates it."""
    return ((-1) ** m * (l + 1)) % p


def endotrivial_basis(p: int) -> list[StableElement]:
    """The basis elements ``Omega^m k`` and ``Omega^m Sym^{p-2} E``."""
    return [StableElement.basis(p, l, m) for l in (0, p - 2) for m in range(p - 1)]


def _endotrivial_check(v: StableElement) -> tuple[int, int]:
    term = v.single_term()
    if term is None or term[2] != 1 or term[0] not in (0, v.p - 2):
        raise DomainError(f"{v} is not an endotrivial basis element")
    return term[0], term[1]


def endotrivial_power(v: StableElement, n: int) -> StableElement:
    """``V^{(x) n}`` for an endotrivial basis element ``V`` and ``0 <= n < p``."""
    _endotrivial_check(v)
    if not 0 <= n < v.p:
        raise DomainError(f"n={n} outside [0, {v.p - 1}]")
    result = StableElement.one(v.p)
    for _ in range(n):
        result = cg_multiply(result, v)
    return result


def endotrivial_schur(nu: Partition, v: StableElement) -> StableElement:
    """``nabla^nu V`` for endotrivial ``V``: ``V^{(x) n}`` when ``nu`` is the row (``dim V = 1``
    mod ``p``) or the column (``dim V = -1``), and zero otherwise."""
    l, m = _endotrivial_check(v)
    p = v.p
    n = nu.size()
    if n >= p:
        raise DomainError(f"{nu} is not {p}-small")
    d = module_dimension_mod_p(l, m, p)
    survivor = Partition((n,)) if d == 1 else Partition((1,) * n)
    if nu != survivor:
        return StableElement.zero(p)
    return endotrivial_power(v, n)


def schur_of(nu: Partition, x: StableElement) -> StableElement:
    """``nabla^nu`` of an effective element, split into basis elements by the sum rule."""
    p = x.p
    if nu.size() >= p:
        raise DomainError(f"{nu} is not {p}-small")
    if any(c < 0 for c in x.terms.values()):
        raise DomainError(f"{x} is not effective")
    if x.is_zero():
        return StableElement.one(p) if nu.size() == 0 else StableElement.zero(p)
    (l, m), c = next(iter(x.terms.items()))
    head = StableElement.basis(p, l, m)
    if c == 1 and len(x.terms) == 1:
        return heller_interchange(nu, head)
    return expand_sum(nu, head, x - head)


def expand_sum(nu: Partition, a: StableElement, b: StableElement) -> StableElement:
    """``nabla^nu(A + B) = sum c^nu_{lam,mu} nabla^lam A (x) nabla^mu B``."""
    total = StableElement.zero(a.p)
    for lam, mu, c in lr_expansion(nu):
        left = schur_of(lam, a)
        if left.is_zero():
            continue
        right = schur_of(mu, b)
        if right.is_zero():
            continue
        total = total + cg_multiply(left, right).scale(c)
    return total


def p_small_pairs(p: int) -> list[tuple[Partition, int]]:
    """All ``(nu, l)`` with ``nu`` p-small and ``0 <= l <= p-2``, ordered by ``(|nu|, nu, l)``."""
    return [(nu, l) for nu in p_small_partitions(p) for l in range(p - 1)]

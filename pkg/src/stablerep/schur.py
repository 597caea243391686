"""Schur polynomials evaluated at principal specialisations, by two independent routes.

``shcf_laurent`` uses the hook content formula and exact division.
``ssyt_laurent`` counts semistandard tableaux by peeling off horizontal strips.
The two must agree; the test suite checks this exhaustively.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .cyclotomic import CycInt, PowerSum, check_odd_prime
from .errors import DomainError
from .laurent import LaurentPoly
from .partitions import Partition, hooks, is_p_small, shifted_contents, ssyt_count_by_weight


def _check_l(l: int, p: int) -> None:
    if not 0 <= l <= p - 2:
        raise DomainError(f"l={l} outside [0, {p - 2}]")


def shcf_laurent(nu: Partition, l: int, p: int) -> LaurentPoly:
    """``s_nu(q^-l, q^{-l+2}, ..., q^l)`` from the hook content formula.

    The numerator is the product of ``q^c - q^-c`` over shifted contents
    ``c`` in ``C_{l+1}``; each hook factor ``q^h - q^-h`` is divided out in
    turn, and a nonzero remainder raises ``ConsistencyError``.
    """
    _check_l(l, p)
    if nu.length() > l + 1:
        return LaurentPoly()
    value = LaurentPoly.constant(1)
    for c in shifted_contents(nu, l + 1).elements():
        value = value * LaurentPoly.binomial(c)
    for h in hooks(nu).elements():
        value = value.exact_div(LaurentPoly.binomial(h))
    return value


def schur_at_roots(nu: Partition, l: int, p: int) -> CycInt:
    """Image of ``nabla^nu Sym^l E`` under Theta, i.e. ``s_nu`` at ``zeta^-l, ..., zeta^l``."""
    check_odd_prime(p)
    if not is_p_small(nu, p):
        raise DomainError(f"{nu} is not {p}-small")
    return CycInt.from_laurent(shcf_laurent(nu, l, p), p)


def _horizontal_strips(lam: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """All ``mu`` with ``lam / mu`` a horizontal strip, paired with ``|lam| - |mu|``.

    ``mu_i`` ranges over ``[lam_{i+1}, lam_i]``.
    """
    out: list[tuple[tuple[int, ...], int]] = []
    n = len(lam)

    def rec(i: int, acc: list[int], removed: int) -> None:
        if i == n:
            mu = tuple(x for x in acc if x)
            out.append((mu, removed))
            return
        lower = lam[i + 1] if i + 1 < n else 0
        for x in range(lower, lam[i] + 1):
            acc.append(x)
            rec(i + 1, acc, removed + lam[i] - x)
            acc.pop()

    rec(0, [], 0)
    return out


@lru_cache(maxsize=None)
def _ssyt_poly(lam: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Coefficients in ``u`` of ``s_lam(u, u^2, ..., u^k)``.

    Entries equal to ``k`` occupy a horizontal strip; removing it leaves a
    tableau with entries ``< k``.
    """
    if not lam:
        return (1,)
    if len(lam) > k:
        return ()
    acc: list[int] = []
    for mu, removed in _horizontal_strips(lam):
        sub = _ssyt_poly(mu, k - 1)
        if not sub:
            continue
        shift = k * removed
        if len(acc) < shift + len(sub):
            acc.extend([0] * (shift + len(sub) - len(acc)))
        for e, c in enumerate(sub):
            acc[shift + e] += c
    return tuple(acc)


def ssyt_laurent(nu: Partition, m: int) -> LaurentPoly:
    """``sum_T x^T`` over tableaux of shape ``nu`` with entries ``1..m``, at ``x_i = q^{2i-m-1}``."""
    if m < 0:
        raise DomainError(f"negative number of variables {m}")
    coeffs = _ssyt_poly(nu.parts, m)
    offset = -(m + 1) * nu.size()
    return LaurentPoly({2 * e + offset: c for e, c in enumerate(coeffs) if c})


def ssyt_census_laurent(nu: Partition, m: int) -> LaurentPoly:
    """Same value as ``ssyt_laurent`` from the raw depth-first tableau census."""
    terms: dict[int, int] = {}
    for weight, count in ssyt_count_by_weight(nu, m).items():
        e = sum(w * (2 * i - m + 1) for i, w in enumerate(weight))
        terms[e] = terms.get(e, 0) + count
    return LaurentPoly(terms)


def lambda_op(f: PowerSum, i: int) -> CycInt:
    """``lambda^i(f)``: the elementary symmetric polynomial ``e_i`` of the powers in ``f``."""
    if not isinstance(f, PowerSum):
        raise DomainError("lambda-operations need a power-multiset presentation")
    p = f.p
    if not i < p:
        raise DomainError(f"lambda^{i} is only defined for i < p={p}")
    if i < 0:
        return CycInt.zero(p)
    # coefficients of prod (1 + t zeta^e), truncated at t^i
    poly = [CycInt.one(p)] + [CycInt.zero(p)] * i
    for e in f.as_list():
        z = CycInt.zeta_power(p, e)
        for k in range(i, 0, -1):
            poly[k] = poly[k] + poly[k - 1] * z
    return poly[i]


def _det(matrix: list[list[CycInt]], p: int) -> CycInt:
    """Determinant by Laplace expansion along rows, memoised on the set of used columns."""
    n = len(matrix)
    if n == 0:
        return CycInt.one(p)
    # dp[mask]: signed sum over placements of the first popcount(mask) rows into columns mask
    dp: dict[int, CycInt] = {0: CycInt.one(p)}
    for row in range(n):
        nxt: dict[int, CycInt] = {}
        for mask, val in dp.items():
            if val.is_zero():
                continue
            for col in range(n):
                if mask >> col & 1 or matrix[row][col].is_zero():
                    continue
                # sign from the number of used columns to the right of col
                sign = -1 if bin(mask >> (col + 1)).count("1") % 2 else 1
                term = val * matrix[row][col] * sign
                key = mask | 1 << col
                nxt[key] = nxt[key] + term if key in nxt else term
        dp = nxt
    return dp.get((1 << n) - 1, CycInt.zero(p))


def giambelli_op(nu: Partition, f: PowerSum) -> CycInt:
    """``{nu} f = det(lambda^{nu'_i + j - i}(f))``, indices ``1 <= i, j <= nu_1``."""
    if not isinstance(f, PowerSum):
        raise DomainError("the {nu}-operation needs a power-multiset presentation")
    p = f.p
    if nu.first() + nu.length() - 1 >= p:
        raise DomainError(f"{nu} needs lambda^k with k >= p={p}")
    conj = nu.conjugate()
    n = nu.first()
    lam = {k: lambda_op(f, k) for k in range(0, nu.first() + nu.length())}
    zero = CycInt.zero(p)
    matrix = [[lam.get(conj[i] + j - i, zero) if conj[i] + j - i >= 0 else zero for j in range(n)] for i in range(n)]
    return _det(matrix, p)


def elementary_laurent(exponents: list[int], i: int) -> LaurentPoly:
    """``e_i`` of the monomials ``q^e``, before any specialisation."""
    if i < 0 or i > len(exponents):
        return LaurentPoly()
    total: dict[int, int] = {}
    for combo in combinations(exponents, i):
        s = sum(combo)
        total[s] = total.get(s, 0) + 1
    return LaurentPoly(total)

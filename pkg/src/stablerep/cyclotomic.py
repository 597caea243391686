"""Exact arithmetic in Z[zeta_p] and its real subring Z[zeta_p + zeta_p^-1]."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DomainError
from .laurent import LaurentPoly


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise DomainError(f"p={p} is not an odd prime")


class CycInt:
    """Element of Z[zeta_p] in canonical form.

    Coefficients ``c_0..c_{p-2}`` of ``zeta^0..zeta^{p-2}``; the coefficient of
    ``zeta^{p-1}`` is eliminated with ``1 + zeta + ... + zeta^{p-1} = 0``.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]) -> None:
        full = [0] * p
        for j, c in enumerate(coeffs):
            full[j % p] += int(c)
        top = full[p - 1]
        self.p = p
        self.coeffs = tuple(c - top for c in full[: p - 1])

    @classmethod
    def zero(cls, p: int) -> CycInt:
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> CycInt:
        return cls(p, (1,))

    @classmethod
    def integer(cls, p: int, n: int) -> CycInt:
        return cls(p, (n,))

    @classmethod
    def zeta_power(cls, p: int, e: int, coeff: int = 1) -> CycInt:
        full = [0] * p
        full[e % p] = coeff
        return cls(p, full)

    @classmethod
    def from_exponents(cls, p: int, terms: Mapping[int, int]) -> CycInt:
        """``sum c * zeta^e`` for an exponent -> coefficient map (any integer exponents)."""
        full = [0] * p
        for e, c in terms.items():
            full[e % p] += c
        return cls(p, full)

    @classmethod
    def from_laurent(cls, f: LaurentPoly, p: int) -> CycInt:
        """Specialise ``q -> zeta_p``."""
        return cls.from_exponents(p, f.terms)

    def full_vector(self) -> list[int]:
        """Length-``p`` coefficient vector with a zero top entry."""
        return list(self.coeffs) + [0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            return CycInt.integer(self.p, other)
        if other.p != self.p:
            raise DomainError(f"mismatched primes {self.p} and {other.p}")
        return other

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        if isinstance(other, CycInt):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __add__(self, other: CycInt | int) -> CycInt:
        other = self._coerce(other)
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other: CycInt | int) -> CycInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> CycInt:
        return CycInt.integer(self.p, other) - self

    def __mul__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.p, [a * other for a in self.coeffs])
        other = self._coerce(other)
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        full[(i + j) % p] += a * b
        return CycInt(p, full)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycInt:
        result = CycInt.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> CycInt:
        """Image under ``zeta -> zeta^-1``."""
        return CycInt.from_exponents(self.p, {-j: c for j, c in enumerate(self.coeffs)})

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __repr__(self) -> str:
        return f"CycInt(p={self.p}, coeffs={list(self.coeffs)})"

    def __str__(self) -> str:
        return self.symmetric_str()

    def symmetric_str(self) -> str:
        """Render with exponents in ``(-p/2, p/2)``, e.g. ``z^-2+1+z^2``."""
        if self.is_zero():
            return "0"
        half = self.p // 2
        parts = []
        terms = {}
        for j, c in enumerate(self.full_vector()):
            e = j if j <= half else j - self.p
            terms[e] = c
        # Shift by a multiple of the all-ones relation to minimise support.
        vals = sorted(terms.values())
        shift = vals[len(vals) // 2]
        for e in sorted(terms, reverse=True):
            c = terms[e] - shift
            if not c:
                continue
            mono = "1" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" if e == 0 else f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+") + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> CycInt:
        return cls(int(data["p"]), data["coeffs"])


def g_unit(p: int, j: int) -> CycInt:
    """``zeta^{-j+1} + zeta^{-j+3} + ... + zeta^{j-1}``, extended p-periodically in ``j``."""
    j %= p
    return CycInt.from_exponents(p, {e: 1 for e in range(-j + 1, j, 2)})


def theta_of_sym(p: int, l: int) -> CycInt:
    """Image of the class of ``Sym^l E``: ``zeta^-l + zeta^{-l+2} + ... + zeta^l``."""
    return g_unit(p, l + 1)


@dataclass(frozen=True)
class RealCycCoords:
    """Coordinates on the basis ``Theta(U_0), Theta(U_2), ..., Theta(U_{p-3})``."""

    p: int
    coords: tuple[int, ...]

    def to_cycint(self) -> CycInt:
        return from_coords(self)


def from_coords(v: RealCycCoords) -> CycInt:
    total = CycInt.zero(v.p)
    for i, c in enumerate(v.coords):
        if c:
            total = total + theta_of_sym(v.p, 2 * i) * c
    return total


def real_coords(x: CycInt) -> RealCycCoords:
    """Solve ``x = sum_i c_i Theta(U_{2i})`` exactly.

    The canonical vector of a real element is palindromic (``a_j = a_{p-j}``)
    with ``a_1 = a_{p-1} = 0``. Writing ``b_k = zeta^{2k} + zeta^{-2k}`` we have
    ``Theta(U_{2i}) = 1 + b_1 + ... + b_i``; the system is upper triangular in
    the ``b``-basis and is solved by back substitution.
    """
    p = x.p
    a = x.full_vector()
    residual = [a[j] - a[(p - j) % p] for j in range(p)]
    if any(residual):
        raise DomainError(f"{x!r} is not in the real subring; conjugation residual {residual}")
    half = (p - 1) // 2
    # d_k: coefficient of b_k (k >= 1) or of 1 (k = 0).
    d = [a[0]] + [a[(2 * k) % p] for k in range(1, half)] + [0]
    coords = tuple(d[i] - d[i + 1] for i in range(half))
    return RealCycCoords(p, coords)


class PowerSum:
    """A sum of powers of ``zeta_p`` kept as an explicit exponent multiset.

    The lambda-operations are defined on such presentations, not on bare
    ring elements, because a ring element has many presentations.
    """

    __slots__ = ("p", "exponents")

    def __init__(self, p: int, exponents: Mapping[int, int] | Iterable[int]) -> None:
        counts: dict[int, int] = {}
        if isinstance(exponents, CycInt):
            raise DomainError("a CycInt carries no power-multiset presentation")
        items = exponents.items() if isinstance(exponents, Mapping) else ((e, 1) for e in exponents)
        for e, m in items:
            if int(m) < 0 or int(m) != m:
                raise DomainError(f"multiplicity {m} of zeta^{e} is not a non-negative integer")
            counts[int(e) % p] = counts.get(int(e) % p, 0) + int(m)
        self.p = p
        self.exponents = {e: m for e, m in sorted(counts.items()) if m}

    def value(self) -> CycInt:
        return CycInt.from_exponents(self.p, self.exponents)

    def as_list(self) -> list[int]:
        return [e for e, m in self.exponents.items() for _ in range(m)]

    def __repr__(self) -> str:
        return f"PowerSum(p={self.p}, {self.exponents})"

"""Exact Laurent polynomials over the integers in one variable ``q``."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ConsistencyError


class LaurentPoly:
    """Immutable Laurent polynomial, stored as exponent -> nonzero coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> None:
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def binomial(cls, h: int) -> LaurentPoly:
        """``q^h - q^-h``."""
        return cls({h: 1, -h: -1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return next(iter(self._terms))

    def max_exp(self) -> int:
        return next(reversed(self._terms))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            out.append(("-" if c < 0 else "+") + body)
        s = "".join(out)
        return s[1:] if s.startswith("+") else s

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative power")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``q -> q^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divmod(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division by a divisor whose leading coefficient is +-1.

        The remainder has all exponents strictly below
        ``min_exp(self) + (max_exp(divisor) - min_exp(divisor))`` after
        normalising both to ordinary polynomials.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        lead = divisor._terms[divisor.max_exp()]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        d_lo, d_hi = divisor.min_exp(), divisor.max_exp()
        d_terms = [(e - d_hi, c) for e, c in divisor._terms.items()]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        floor = self.min_exp() + (d_hi - d_lo)
        e = self.max_exp()
        while e >= floor:
            c = rem.pop(e, 0)
            if c:
                qc = c * lead  # lead is +-1, so lead == 1/lead
                q_exp = e - d_hi
                quot[q_exp] = qc
                for de, dc in d_terms:
                    if de == 0:
                        continue
                    rem[e + de] = rem.get(e + de, 0) - qc * dc
            e -= 1
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ConsistencyError(f"inexact division of {self} by {divisor}: remainder {rem}")
        return quot

    def evaluate(self, x: int) -> int | float:
        return sum(c * x**e for e, c in self._terms.items())

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> LaurentPoly:
        return cls((e, c) for e, c in data)

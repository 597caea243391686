"""The representation ring of SL2(F_p) modulo projectives.

A basis element ``(l, m)`` stands for ``Omega^m(Sym^l E)`` with
``0 <= l <= p-2`` and ``m`` a residue mod ``p-1``. Projective modules are zero
here, so they never appear.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .cyclotomic import CycInt, check_odd_prime, real_coords, theta_of_sym
from .errors import DomainError

Basis = tuple[int, int]


class StableElement:
    """Integer combination of basis symbols ``(l, m)``; heights ``m`` are kept in ``0..p-2``."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[Basis, int] | Iterable[tuple[Basis, int]] = ()) -> None:
        acc: dict[Basis, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (l, m), c in items:
            if not 0 <= l <= p - 2:
                raise DomainError(f"l={l} outside [0, {p - 2}]")
            key = (int(l), int(m) % (p - 1))
            acc[key] = acc.get(key, 0) + int(c)
        self.p = p
        self.terms = {k: v for k, v in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0])) if v}

    @classmethod
    def basis(cls, p: int, l: int, m: int = 0) -> StableElement:
        return cls(p, {(l, m): 1})

    @classmethod
    def zero(cls, p: int) -> StableElement:
        return cls(p)

    @classmethod
    def one(cls, p: int) -> StableElement:
        return cls.basis(p, 0, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def single_term(self) -> tuple[int, int, int] | None:
        """``(l, m, mult)`` if exactly one basis element occurs."""
        if len(self.terms) != 1:
            return None
        (((l, m), c),) = self.terms.items()
        return l, m, c

    def __iter__(self) -> Iterator[tuple[Basis, int]]:
        return iter(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StableElement):
            return self.p == other.p and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, tuple(self.terms.items())))

    def _check(self, other: StableElement) -> None:
        if other.p != self.p:
            raise DomainError(f"mismatched primes {self.p} and {other.p}")

    def __add__(self, other: StableElement) -> StableElement:
        self._check(other)
        return StableElement(self.p, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> StableElement:
        return StableElement(self.p, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: StableElement) -> StableElement:
        return self + (-other)

    def scale(self, n: int) -> StableElement:
        return StableElement(self.p, {k: v * n for k, v in self.terms.items()})

    def __mul__(self, other: StableElement | int) -> StableElement:
        if isinstance(other, int):
            return self.scale(other)
        return cg_multiply(self, other)

    def __rmul__(self, other: int) -> StableElement:
        return self.scale(other)

    def __pow__(self, n: int) -> StableElement:
        result = StableElement.one(self.p)
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"StableElement(p={self.p}, {self.terms})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (l, m), c in self.terms.items():
            label = module_label(l, m)
            parts.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"p": self.p, "terms": [{"l": l, "m": m, "mult": c} for (l, m), c in self.terms.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> StableElement:
        return cls(int(data["p"]), {(t["l"], t["m"]): t["mult"] for t in data["terms"]})


def module_label(l: int, m: int) -> str:
    """Human-readable name such as ``k``, ``Omega E`` or ``Omega^3(Sym^5 E)``."""
    base = "k" if l == 0 else ("E" if l == 1 else f"Sym^{l} E")
    if m == 0:
        return base
    omega = "Ω" if m == 1 else f"Ω^{m}"
    return f"{omega} {base}" if l <= 1 else f"{omega}({base})"


_LABEL = re.compile(r"^(?:Ω(?:\^(\d+))?\s*)?\(?(k|E|Sym\^(\d+) E)\)?$")


def parse_module_label(text: str) -> Basis:
    """Inverse of ``module_label``."""
    match = _LABEL.match(text.strip())
    if match is None:
        raise DomainError(f"cannot parse module label {text!r}")
    power, base, degree = match.groups()
    if text.strip().startswith("Ω"):
        m = int(power) if power is not None else 1
    else:
        m = 0
    l = 0 if base == "k" else (1 if base == "E" else int(degree))
    if module_label(l, m) != text.strip():
        raise DomainError(f"{text!r} is not in canonical label form")
    return l, m


def cg_levels(p: int, i: int, j: int) -> list[int]:
    """Non-projective summands of ``Sym^i E (x) Sym^j E``, as symmetric-power degrees."""
    if i > j:
        i, j = j, i
    top = min(i + j, 2 * p - 4 - i - j)
    return list(range(j - i, top + 1, 2))


def cg_multiply(a: StableElement, b: StableElement) -> StableElement:
    a._check(b)
    p = a.p
    acc: dict[Basis, int] = {}
    for (l1, m1), c1 in a.terms.items():
        for (l2, m2), c2 in b.terms.items():
            m = (m1 + m2) % (p - 1)
            for l in cg_levels(p, l1, l2):
                acc[(l, m)] = acc.get((l, m), 0) + c1 * c2
    return StableElement(p, acc)


def heller(a: StableElement, n: int) -> StableElement:
    """Apply ``Omega^n``; heights shift by ``n`` modulo ``p-1``."""
    return StableElement(a.p, {(l, m + n): c for (l, m), c in a.terms.items()})


def theta(a: StableElement) -> CycInt:
    """Ring map from the height-0 slice to ``Z[zeta + zeta^-1]``, ``U_l -> zeta^-l + ... + zeta^l``."""
    total = CycInt.zero(a.p)
    for (l, m), c in a.terms.items():
        if m != 0:
            raise DomainError(f"theta is defined on height 0 only; got term {module_label(l, m)}")
        total = total + theta_of_sym(a.p, l) * c
    return total


def theta_invert_parity(x: CycInt, parity: int) -> StableElement:
    """The unique height-0 element supported on ``l = parity (mod 2)`` whose theta is ``x``.

    Odd degrees use ``Theta(U_{2i}) = -Theta(U_{p-2-2i})``.
    """
    p = x.p
    coords = real_coords(x).coords
    if parity % 2 == 0:
        return StableElement(p, {(2 * i, 0): c for i, c in enumerate(coords)})
    return StableElement(p, {(p - 2 - 2 * i, 0): -c for i, c in enumerate(coords)})


class PresentationPoly:
    """Element of ``Z[zeta + zeta^-1][X, Y] / (X^{p-1} - 1, Y^2 - 1)``.

    Stored as ``(a, b) -> coefficient`` with ``a`` mod ``p-1`` and ``b`` mod 2.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Mapping[tuple[int, int], CycInt] = ()) -> None:
        acc: dict[tuple[int, int], CycInt] = {}
        for (a, b), x in dict(coeffs).items():
            key = (a % (p - 1), b % 2)
            acc[key] = acc[key] + x if key in acc else x
        self.p = p
        self.coeffs = {k: v for k, v in sorted(acc.items()) if not v.is_zero()}

    @classmethod
    def one(cls, p: int) -> PresentationPoly:
        return cls(p, {(0, 0): CycInt.one(p)})

    @classmethod
    def x(cls, p: int) -> PresentationPoly:
        return cls(p, {(1, 0): CycInt.one(p)})

    @classmethod
    def y(cls, p: int) -> PresentationPoly:
        return cls(p, {(0, 1): CycInt.one(p)})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PresentationPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, tuple(self.coeffs.items())))

    def __add__(self, other: PresentationPoly) -> PresentationPoly:
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = merged[k] + v if k in merged else v
        return PresentationPoly(self.p, merged)

    def __mul__(self, other: PresentationPoly) -> PresentationPoly:
        acc: dict[tuple[int, int], CycInt] = {}
        for (a1, b1), x1 in self.coeffs.items():
            for (a2, b2), x2 in other.coeffs.items():
                key = ((a1 + a2) % (self.p - 1), (b1 + b2) % 2)
                prod = x1 * x2
                acc[key] = acc[key] + prod if key in acc else prod
        return PresentationPoly(self.p, acc)

    def __pow__(self, n: int) -> PresentationPoly:
        result = PresentationPoly.one(self.p)
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"PresentationPoly(p={self.p}, {self.coeffs})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), x in self.coeffs.items():
            mono = "".join(s for s in ((f"X^{a}" if a > 1 else "X" if a == 1 else ""), ("Y" if b else "")) if s)
            coeff = f"({x})"
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts)


def psi_to_presentation(a: StableElement) -> PresentationPoly:
    """``(l, m) -> X^m Theta(U_l)`` for even ``l`` and ``X^m Y Theta(U_{p-2-l})`` for odd ``l``."""
    p = a.p
    acc: dict[tuple[int, int], CycInt] = {}
    for (l, m), c in a.terms.items():
        b = l % 2
        even_l = l if b == 0 else p - 2 - l
        x = theta_of_sym(p, even_l) * c
        acc[(m, b)] = acc[(m, b)] + x if (m, b) in acc else x
    return PresentationPoly(p, acc)


def psi_from_presentation(f: PresentationPoly) -> StableElement:
    p = f.p
    acc: dict[Basis, int] = {}
    for (a, b), x in f.coeffs.items():
        for i, c in enumerate(real_coords(x).coords):
            l = 2 * i if b == 0 else p - 2 - 2 * i
            acc[(l, a)] = acc.get((l, a), 0) + c
    return StableElement(p, acc)


def dual(a: StableElement) -> StableElement:
    """Contragredient: ``Omega^m(Sym^l E)^* = Omega^{-m}(Sym^l E)``."""
    return StableElement(a.p, {(l, -m): c for (l, m), c in a.terms.items()})


def is_endotrivial(a: StableElement) -> bool:
    return cg_multiply(a, dual(a)) == StableElement.one(a.p)


@dataclass(frozen=True)
class HeightPositionTables:
    """Two ``(p-1) x (p-1)/2`` grids of basis labels indexed by height and position."""

    p: int
    first: tuple[tuple[Basis, ...], ...]
    second: tuple[tuple[Basis, ...], ...]

    def render(self) -> str:
        """Plain-text layout with height ``p-2`` at the top and ``0`` at the bottom."""
        columns = (self.p - 1) // 2
        cells = [[module_label(l, m) for (l, m) in row] for row in self.first + self.second]
        width = max(len(s) for row in cells for s in row)
        width = max(width, len(str(columns - 1)))
        lines = []
        for name, table in (("first table", self.first), ("second table", self.second)):
            lines.append(name)
            lines.append("h\\c | " + " | ".join(str(c).ljust(width) for c in range(columns)))
            for h in range(self.p - 2, -1, -1):
                row = [module_label(l, m).ljust(width) for (l, m) in table[h]]
                lines.append(f"{h:>3} | " + " | ".join(row))
            lines.append("")
        return "\n".join(lines).rstrip() + "\n"

    def to_json(self) -> dict:
        def grid(table: tuple[tuple[Basis, ...], ...]) -> list:
            return [[{"l": l, "m": m} for (l, m) in row] for row in table]

        return {"p": self.p, "first": grid(self.first), "second": grid(self.second)}


def parse_tables(text: str) -> HeightPositionTables:
    """Read back the output of ``HeightPositionTables.render``.

    Each table starts with a line naming it, then a header ``h\\c | 0 | 1 ...``,
    then one line per height from ``p-2`` down to ``0`` of the form
    ``h | label | label ...``.
    """
    tables: dict[str, dict[int, tuple[Basis, ...]]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line in ("first table", "second table"):
            current = tables.setdefault(line, {})
            continue
        if current is None or line.startswith("h\\c"):
            continue
        head, *cells = [c.strip() for c in line.split("|")]
        current[int(head)] = tuple(parse_module_label(c) for c in cells)
    if set(tables) != {"first table", "second table"}:
        raise DomainError("expected a first and a second table")
    heights = len(tables["first table"])
    p = heights + 1
    check_odd_prime(p)

    def grid(rows: dict[int, tuple[Basis, ...]]) -> tuple[tuple[Basis, ...], ...]:
        if sorted(rows) != list(range(heights)):
            raise DomainError("table heights are not 0..p-2")
        return tuple(rows[h] for h in range(heights))

    return HeightPositionTables(p, grid(tables["first table"]), grid(tables["second table"]))


def height_position_tables(p: int) -> HeightPositionTables:
    """Row ``h``, column ``c``: ``(2c, h)`` in the first table, ``(p-2c-2, h)`` in the second."""
    check_odd_prime(p)
    columns = range((p - 1) // 2)
    first = tuple(tuple((2 * c, h) for c in columns) for h in range(p - 1))
    second = tuple(tuple((p - 2 * c - 2, h) for c in columns) for h in range(p - 1))
    return HeightPositionTables(p, first, second)


def random_element(p: int, rng: random.Random, terms: int = 4, bound: int = 5) -> StableElement:
    """A random element with a few terms, for property checks."""
    acc = {}
    for _ in range(rng.randint(0, terms)):
        acc[(rng.randrange(p - 1), rng.randrange(p - 1))] = rng.randint(-bound, bound)
    return StableElement(p, acc)

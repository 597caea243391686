"""Partitions, Young-diagram statistics and integer multisets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``. The empty partition is allowed.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 0 for x in parts):
            raise DomainError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"4,3,1"``; the empty string and ``"0"`` give the empty partition."""
        text = text.strip().strip("[]()")
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",") if x.strip()))
        except ValueError as exc:
            raise DomainError(f"cannot parse partition {text!r}") from exc

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(map(str, self.parts)) + ")"

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes ``(i, j)`` of the Young diagram, 1-indexed, row by row."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j

    def to_json(self) -> list[int]:
        return list(self.parts)


class IntMultiset(Mapping[int, int]):
    """Finite multiset of integers, stored as a sorted element -> multiplicity map.

    Equality is structural, so two multisets compare equal exactly when they
    have the same elements with the same multiplicities.
    """

    __slots__ = ("_counts",)

    def __init__(self, items: Iterable[int] | Mapping[int, int] = ()) -> None:
        if isinstance(items, Mapping):
            counts = {int(k): int(v) for k, v in items.items() if v}
        else:
            counts = dict(Counter(int(x) for x in items))
        if any(v < 0 for v in counts.values()):
            raise DomainError("negative multiplicity")
        self._counts = dict(sorted(counts.items()))

    def __getitem__(self, x: int) -> int:
        return self._counts[x]

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMultiset):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements())) + "}"

    def multiplicity(self, x: int) -> int:
        return self._counts.get(x, 0)

    def size(self) -> int:
        return sum(self._counts.values())

    def elements(self) -> list[int]:
        """All elements with repetition, in increasing order."""
        return [x for x, m in self._counts.items() for _ in range(m)]

    def add(self, x: int, times: int = 1) -> IntMultiset:
        counts = dict(self._counts)
        counts[x] = counts.get(x, 0) + times
        return IntMultiset(counts)

    def remove(self, x: int) -> IntMultiset:
        """Remove one copy of ``x``; raises if ``x`` is absent."""
        if self._counts.get(x, 0) == 0:
            raise DomainError(f"{x} not in multiset {self!r}")
        return self.add(x, -1)

    def remove_all(self, x: int) -> IntMultiset:
        return IntMultiset({k: v for k, v in self._counts.items() if k != x})

    def union(self, other: IntMultiset) -> IntMultiset:
        counts = Counter(self._counts)
        counts.update(other._counts)
        return IntMultiset(counts)

    def difference(self, other: IntMultiset) -> IntMultiset | None:
        """``self - other`` if ``other`` is a sub-multiset, else ``None``."""
        counts = dict(self._counts)
        for k, v in other._counts.items():
            if counts.get(k, 0) < v:
                return None
            counts[k] -= v
        return IntMultiset(counts)

    def min(self) -> int:
        return next(iter(self._counts))

    def max(self) -> int:
        return next(reversed(self._counts))


def hooks(nu: Partition) -> IntMultiset:
    """Multiset of hook lengths ``nu_i + nu'_j - i - j + 1`` over all boxes."""
    conj = nu.conjugate()
    return IntMultiset(nu[i - 1] + conj[j - 1] - i - j + 1 for i, j in nu.boxes())


def contents(nu: Partition) -> IntMultiset:
    return shifted_contents(nu, 0)


def shifted_contents(nu: Partition, s: int) -> IntMultiset:
    """Multiset ``{j - i + s}`` over the boxes ``(i, j)`` of ``nu``."""
    return IntMultiset(j - i + s for i, j in nu.boxes())


def fold(multiset: IntMultiset, p: int) -> IntMultiset:
    """Replace every element ``i >= (p+1)/2`` by ``p - i``.

    All elements must lie in ``[1, p-1]``.
    """
    folded: Counter[int] = Counter()
    for x, m in multiset.items():
        if not 1 <= x <= p - 1:
            raise DomainError(f"cannot fold {x}: outside [1, {p - 1}]")
        folded[min(x, p - x)] += m
    return IntMultiset(folded)


def is_p_small(nu: Partition, p: int) -> bool:
    return nu.size() < p


def is_pl_small(nu: Partition, p: int, l: int) -> bool:
    if not 0 <= l <= p - 2:
        raise DomainError(f"l={l} outside [0, {p - 2}]")
    return is_p_small(nu, p) and nu.first() <= p - l - 2 and nu.length() <= l


def remove_first_column(nu: Partition) -> Partition:
    if not nu.parts:
        raise DomainError("empty partition has no first column")
    return Partition(tuple(x - 1 for x in nu.parts))


def remove_first_row(nu: Partition) -> Partition:
    if not nu.parts:
        raise DomainError("empty partition has no first row")
    return Partition(nu.parts[1:])


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def p_small_partitions(p: int) -> list[Partition]:
    """All partitions of size less than ``p``, ordered by size."""
    return [nu for n in range(p) for nu in partitions_of(n)]


def ssyt_count_by_weight(nu: Partition, m: int) -> Counter[tuple[int, ...]]:
    """Census of semistandard tableaux of shape ``nu`` with entries in ``1..m``.

    Returns a counter keyed by the weight vector ``(#1s, ..., #ms)``. Plain
    depth-first filling, row by row; intended for small shapes only.
    """
    boxes = list(nu.boxes())
    filling: dict[tuple[int, int], int] = {}
    census: Counter[tuple[int, ...]] = Counter()
    if nu.length() > m:
        return census

    def rec(k: int) -> None:
        if k == len(boxes):
            weight = [0] * m
            for v in filling.values():
                weight[v - 1] += 1
            census[tuple(weight)] += 1
            return
        i, j = boxes[k]
        lo = 1
        if j > 1:
            lo = filling[(i, j - 1)]
        if i > 1:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, m + 1):
            filling[(i, j)] = v
            rec(k + 1)
        filling.pop((i, j), None)

    rec(0)
    return census

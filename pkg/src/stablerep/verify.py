"""Exhaustive agreement scans between closed-form predicates and computed decompositions.

Each scan walks a deterministic list of points and reports every point where
two independent routes disagree. The command line and the test-suite share
these functions, so a passing ``stablerep verify`` is the same check as the
corresponding tests.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cyclotomic import check_odd_prime
from .errors import DomainError
from .oracle import oracle_plethysm
from .partitions import Partition, is_pl_small, p_small_partitions
from .plethysm import (
    FULL_CASES,
    NEITHER,
    PROJECTIVE,
    SMALL_CASES,
    classify,
    decompose_plethysm,
    heller_interchange,
    is_projective_theorem,
    is_stably_irreducible_pl_small,
    is_stably_irreducible_theorem,
    multiset_criterion,
    plethysm_element,
)
from .stable_ring import StableElement, psi_from_presentation, psi_to_presentation, random_element

# Scan names, in the order they are reported.
SCANS = (
    "projective",
    "classification",
    "twisted-projective",
    "twisted-classification",
    "multiset",
    "pl-small",
    "ring",
    "oracle",
)

# Numeric aliases accepted on the command line for the scans above.
ALIASES = {
    "1.2": "projective",
    "1.3": "classification",
    "1.4": "twisted-projective",
    "1.5": "twisted-classification",
    "5.9": "multiset",
    "5.11": "pl-small",
}

DEFAULT_ORACLE_BUDGET = 20000
DEFAULT_RING_SAMPLES = 1000
# Above this prime the oracle scan is limited by |nu| instead of by the budget.
ORACLE_BUDGET_MAX_P = 7
ORACLE_LARGE_P_MAX_SIZE = 4


@dataclass
class ScanReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked - len(self.failures)}/{self.checked} agree"

    def to_json(self) -> dict:
        return {"scan": self.name, "checked": self.checked, "failures": list(self.failures), "passed": self.passed}


def resolve_scans(names: Iterable[str]) -> list[str]:
    """Map user-facing names and numeric aliases to scan names, keeping report order."""
    wanted = set()
    for raw in names:
        key = raw.strip()
        if not key:
            continue
        key = ALIASES.get(key, key)
        if key not in SCANS:
            raise DomainError(f"unknown scan {raw!r}; choose from {', '.join(SCANS)} or {', '.join(ALIASES)}")
        wanted.add(key)
    return [s for s in SCANS if s in wanted]


def _point_key(point: tuple) -> tuple:
    p, nu, l = point[:3]
    return (p, nu.size(), nu.parts, l) + tuple(point[3:])


def _pairs(p: int) -> list[tuple[int, Partition, int]]:
    return [(p, nu, l) for nu in p_small_partitions(p) for l in range(p - 1)]


def _siirr(x: StableElement) -> bool:
    term = x.single_term()
    return term is not None and term[2] == 1 and term[1] == 0


def check_projective(point: tuple) -> str | None:
    p, nu, l = point
    predicted = is_projective_theorem(nu, l, p)
    x = plethysm_element(nu, l, p)
    if predicted != x.is_zero():
        return f"p={p} nu={nu} l={l}: closed form says projective={predicted}, Theta route gives {x}"
    return None


def check_classification(point: tuple) -> str | None:
    p, nu, l = point
    verdict = is_stably_irreducible_theorem(nu, l, p)
    x = plethysm_element(nu, l, p)
    if (verdict == PROJECTIVE) != x.is_zero() or (verdict in FULL_CASES) != _siirr(x):
        return f"p={p} nu={nu} l={l}: closed form says {verdict}, Theta route gives {x}"
    return None


def _twisted_points(p: int) -> list[tuple]:
    return [(p, nu, l, i) for (_, nu, l) in _pairs(p) for i in range(p - 1)]


def check_twisted_projective(point: tuple) -> str | None:
    p, nu, l, i = point
    lam = nu if i % 2 == 0 else nu.conjugate()
    predicted = is_projective_theorem(lam, l, p)
    computed = heller_interchange(nu, StableElement.basis(p, l, i))
    if predicted != computed.is_zero():
        return f"p={p} nu={nu} l={l} i={i}: closed form says projective={predicted}, computed {computed}"
    return None


def check_twisted_classification(point: tuple) -> str | None:
    p, nu, l, i = point
    verdict = classify(nu, l, p, i)
    computed = heller_interchange(nu, StableElement.basis(p, l, i))
    if (verdict == PROJECTIVE) != computed.is_zero() or (verdict in FULL_CASES) != _siirr(computed):
        return f"p={p} nu={nu} l={l} i={i}: closed form says {verdict}, computed {computed}"
    return None


def _pl_small_points(p: int) -> list[tuple]:
    return [pt for pt in _pairs(p) if is_pl_small(pt[1], p, pt[2])]


def check_multiset(point: tuple) -> str | None:
    p, nu, l = point
    i = multiset_criterion(nu, l, p)
    x = plethysm_element(nu, l, p)
    if (i is not None) != _siirr(x):
        return f"p={p} nu={nu} l={l}: multiset criterion gives {i}, Theta route gives {x}"
    if i is not None:
        # The survivor is Sym^{j-1} E with j folded to i.
        j = x.single_term()[0] + 1
        if min(j, p - j) != i:
            return f"p={p} nu={nu} l={l}: multiset criterion gives {i}, survivor is {x}"
    return None


def check_pl_small(point: tuple) -> str | None:
    p, nu, l = point
    verdict = is_stably_irreducible_pl_small(nu, l, p)
    x = plethysm_element(nu, l, p)
    if (verdict in SMALL_CASES) != _siirr(x):
        return f"p={p} nu={nu} l={l}: four-case list says {verdict}, Theta route gives {x}"
    if verdict == NEITHER and multiset_criterion(nu, l, p) is not None:
        return f"p={p} nu={nu} l={l}: four-case list says neither, multiset criterion disagrees"
    return None


def oracle_points(p: int, budget: int = DEFAULT_ORACLE_BUDGET) -> list[tuple]:
    """``(p, nu, l)`` covered by the matrix-level comparison.

    For ``p`` up to 7 the points are those with ``(l+1)^|nu| <= budget``; for
    larger primes every ``l`` is taken with ``|nu| <= 4``.
    """
    if p <= ORACLE_BUDGET_MAX_P:
        return [pt for pt in _pairs(p) if (pt[2] + 1) ** pt[1].size() <= budget]
    return [pt for pt in _pairs(p) if pt[1].size() <= ORACLE_LARGE_P_MAX_SIZE]


def check_oracle(point: tuple) -> str | None:
    p, nu, l = point
    matrix = oracle_plethysm(nu, l, p)
    theta = decompose_plethysm(nu, l, p).decomposition
    if matrix != theta:
        return f"p={p} nu={nu} l={l}: matrix route gives {matrix}, Theta route gives {theta}"
    return None


def check_ring(point: tuple) -> str | None:
    """Round trip and multiplicativity of the presentation map on one random pair."""
    p, seed, k = point
    rng = random.Random(f"{seed}:{p}:{k}")
    a, b = random_element(p, rng), random_element(p, rng)
    if psi_from_presentation(psi_to_presentation(a)) != a:
        return f"p={p} sample={k}: presentation round trip fails on {a}"
    if psi_to_presentation(a * b) != psi_to_presentation(a) * psi_to_presentation(b):
        return f"p={p} sample={k}: presentation map is not multiplicative on {a} and {b}"
    return None


CHECKS: dict[str, tuple[Callable[[int], list[tuple]], Callable[[tuple], str | None]]] = {
    "projective": (_pairs, check_projective),
    "classification": (_pairs, check_classification),
    "twisted-projective": (_twisted_points, check_twisted_projective),
    "twisted-classification": (_twisted_points, check_twisted_classification),
    "multiset": (_pl_small_points, check_multiset),
    "pl-small": (_pl_small_points, check_pl_small),
}


def scan_points(
    name: str, primes: Iterable[int], oracle_budget: int = DEFAULT_ORACLE_BUDGET, seed: int = 0
) -> list[tuple]:
    points: list[tuple] = []
    for p in primes:
        check_odd_prime(p)
        if name == "ring":
            points.extend((p, seed, k) for k in range(DEFAULT_RING_SAMPLES))
        elif name == "oracle":
            points.extend(oracle_points(p, oracle_budget))
        else:
            points.extend(CHECKS[name][0](p))
    return points if name == "ring" else sorted(points, key=_point_key)


def run_scan(
    name: str,
    primes: Iterable[int],
    oracle_budget: int = DEFAULT_ORACLE_BUDGET,
    jobs: int = 1,
    seed: int = 0,
) -> ScanReport:
    """Run one scan. With ``jobs > 1`` points are spread over worker processes;
    results come back in point order, so the report does not depend on ``jobs``."""
    special = {"oracle": check_oracle, "ring": check_ring}
    check = special[name] if name in special else CHECKS[name][1]
    points = scan_points(name, primes, oracle_budget, seed)
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(check, points, chunksize=max(1, len(points) // (4 * jobs))))
    else:
        outcomes = [check(pt) for pt in points]
    return ScanReport(name, len(points), [msg for msg in outcomes if msg is not None])

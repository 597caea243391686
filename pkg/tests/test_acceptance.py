"""The seven acceptance criteria, each at its stated tolerance (exact equality).

Every criterion prints one PASS/FAIL line with its runtime; the lines are
also repeated in the pytest terminal summary. Memo caches are cleared before
each criterion so the timings do not lean on earlier tests.
"""

import random
import time

from stablerep import plethysm as pl
from stablerep import schur
from stablerep.cyclotomic import CycInt, PowerSum, g_unit
from stablerep.oracle.kn import omega_label
from stablerep.partitions import IntMultiset, Partition, contents, hooks, p_small_partitions, shifted_contents
from stablerep.stable_ring import (
    StableElement,
    cg_multiply,
    height_position_tables,
    module_label,
    theta,
)
from stablerep.verify import run_scan

PRIMES = (3, 5, 7, 11, 13)
RESULTS: list[str] = []


def _clear_caches():
    pl.plethysm_element.cache_clear()
    pl.is_stably_irreducible_theorem.cache_clear()
    schur._ssyt_poly.cache_clear()


def _criterion(number, title, budget, body):
    """Run ``body`` (which returns a list of failure strings) and report one line."""
    _clear_caches()
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    within = budget is None or elapsed < budget
    status = "PASS" if not failures and within else "FAIL"
    limit = "no fixed limit" if budget is None else f"limit {budget:g}s"
    line = f"criterion {number} {status}: {title} ({elapsed:.1f}s, {limit})"
    RESULTS.append(line)
    print(line)
    for failure in failures[:20]:
        print(f"  {failure}")
    assert not failures, failures[:20]
    assert within, f"took {elapsed:.1f}s, limit {budget}s"


def _scan_failures(names, primes, **kw):
    out = []
    for name in names:
        report = run_scan(name, primes, **kw)
        if report.checked == 0:
            out.append(f"{name}: no points checked")
        out.extend(report.failures)
    return out


# 1. Worked examples


def _worked_examples():
    failures = []
    nu = Partition((4, 3, 1))
    if hooks(nu) != IntMultiset([1, 1, 1, 2, 3, 4, 4, 6]):
        failures.append(f"hooks of (4,3,1): {hooks(nu)}")
    if contents(nu) != IntMultiset([-2, -1, 0, 0, 1, 1, 2, 3]):
        failures.append(f"contents of (4,3,1): {contents(nu)}")
    if shifted_contents(nu, 3) != IntMultiset([1, 2, 3, 3, 4, 4, 5, 6]):
        failures.append(f"contents of (4,3,1) shifted by 3: {shifted_contents(nu, 3)}")

    for p in (7, 11, 13):
        f = PowerSum(p, {2: 2, 0: 1, -2: 2})
        lam3 = CycInt.from_exponents(p, {4: 1, 2: 2, 0: 4, -2: 2, -4: 1})
        if schur.lambda_op(f, 3) != lam3:
            failures.append(f"p={p}: lambda^3 f = {schur.lambda_op(f, 3)}")
        s21 = CycInt.from_exponents(p, {6: 2, 4: 4, 2: 10, 0: 8, -2: 10, -4: 4, -6: 2})
        if schur.giambelli_op(Partition((2, 1)), f) != s21:
            failures.append(f"p={p}: {{(2,1)}} f = {schur.giambelli_op(Partition((2, 1)), f)}")

    for p in PRIMES:
        top = StableElement.basis(p, p - 2)
        if cg_multiply(top, top) != StableElement.one(p):
            failures.append(f"p={p}: U_(p-2)^2 = {cg_multiply(top, top)}")

    product = cg_multiply(StableElement.basis(7, 2, 2), StableElement.basis(7, 3, 1))
    if str(product) != "Ω^3 E + Ω^3(Sym^3 E) + Ω^3(Sym^5 E)":
        failures.append(f"Omega^2(Sym^2 E) (x) Omega(Sym^3 E) = {product}")

    t = height_position_tables(7)
    first = [[module_label(*cell) for cell in t.first[h]] for h in range(5, -1, -1)]
    second = [[module_label(*cell) for cell in t.second[h]] for h in range(5, -1, -1)]
    want_first = [
        ["Ω^5 k", "Ω^5(Sym^2 E)", "Ω^5(Sym^4 E)"],
        ["Ω^4 k", "Ω^4(Sym^2 E)", "Ω^4(Sym^4 E)"],
        ["Ω^3 k", "Ω^3(Sym^2 E)", "Ω^3(Sym^4 E)"],
        ["Ω^2 k", "Ω^2(Sym^2 E)", "Ω^2(Sym^4 E)"],
        ["Ω k", "Ω(Sym^2 E)", "Ω(Sym^4 E)"],
        ["k", "Sym^2 E", "Sym^4 E"],
    ]
    want_second = [
        ["Ω^5(Sym^5 E)", "Ω^5(Sym^3 E)", "Ω^5 E"],
        ["Ω^4(Sym^5 E)", "Ω^4(Sym^3 E)", "Ω^4 E"],
        ["Ω^3(Sym^5 E)", "Ω^3(Sym^3 E)", "Ω^3 E"],
        ["Ω^2(Sym^5 E)", "Ω^2(Sym^3 E)", "Ω^2 E"],
        ["Ω(Sym^5 E)", "Ω(Sym^3 E)", "Ω E"],
        ["Sym^5 E", "Sym^3 E", "E"],
    ]
    if first != want_first or second != want_second:
        failures.append(f"table layout:\n{t.render()}")
    return failures


def test_criterion_1_worked_examples():
    _criterion(1, "worked examples bit-exact", 1.0, _worked_examples)


# 2. Projective classification


def test_criterion_2_projective_classification():
    title = "projective predicate = Theta projectivity, p <= 13"
    _criterion(2, title, 60.0, lambda: _scan_failures(["projective"], PRIMES))


# 3. Stably-irreducible classification, three ways


def _classification():
    failures = _scan_failures(["classification", "multiset", "pl-small"], PRIMES)
    for nu, l in (((2, 2, 2), 3), ((3, 3), 2)):
        r = pl.decompose_plethysm(Partition(nu), l, 7)
        if not r.stably_irreducible or r.theorem_case != pl.RECTANGULAR:
            failures.append(f"p=7 nu={nu} l={l}: {r.decomposition}, case {r.theorem_case}")
        if pl.is_stably_irreducible_pl_small(Partition(nu), l, 7) != pl.RECTANGULAR:
            failures.append(f"p=7 nu={nu} l={l}: four-case list misses the rectangle")
        if pl.multiset_criterion(Partition(nu), l, 7) is None:
            failures.append(f"p=7 nu={nu} l={l}: multiset criterion misses the rectangle")
    return failures


def test_criterion_3_stably_irreducible_three_way():
    _criterion(3, "case list = multiset criterion = Theta, p <= 13", 120.0, _classification)


# 4. Twisted inputs


def test_criterion_4_twisted_classification():
    _criterion(
        4,
        "twisted predicates = Heller interchange, p <= 7",
        120.0,
        lambda: _scan_failures(["twisted-projective", "twisted-classification"], (3, 5, 7)),
    )


# 5. Matrix oracle


def test_criterion_5_oracle_equivalence():
    _criterion(
        5,
        "matrix oracle = Theta route (p <= 7 budget 20000; p = 11, 13 with |nu| <= 4)",
        None,
        lambda: _scan_failures(["oracle"], PRIMES, oracle_budget=20000),
    )


# 6. Two routes to s_nu at q-powers


def _shcf_double_path():
    failures = []
    for p in PRIMES:
        for nu in p_small_partitions(p):
            for l in range(p - 1):
                # shcf_laurent raises on an inexact hook division.
                if schur.shcf_laurent(nu, l, p) != schur.ssyt_laurent(nu, l + 1):
                    failures.append(f"p={p} nu={nu} l={l}")
    # The named case against the raw depth-first census as well.
    nu = Partition((4, 3, 1))
    if schur.shcf_laurent(nu, 2, 5) != schur.ssyt_census_laurent(nu, 3):
        failures.append("(4,3,1), l=2 against the tableau census")
    return failures


def test_criterion_6_shcf_double_path():
    _criterion(6, "hook-content quotient = tableau sum, exact division, p <= 13", 60.0, _shcf_double_path)


# 7. Structural ring checks


def _structure():
    failures = _scan_failures(["ring"], PRIMES, seed=0)
    rng = random.Random(7)
    for p in PRIMES:
        for _ in range(200):
            a = StableElement(p, {(rng.randrange(p - 1), 0): rng.randint(-9, 9) for _ in range(3)})
            b = StableElement(p, {(rng.randrange(p - 1), 0): rng.randint(-9, 9) for _ in range(3)})
            if theta(a * b) != theta(a) * theta(b) or theta(a + b) != theta(a) + theta(b):
                failures.append(f"p={p}: theta not a homomorphism on {a}, {b}")
        for j in range(1, p):
            if g_unit(p, j) != -g_unit(p, p - j):
                failures.append(f"p={p}: g_{j} != -g_{p - j}")
        for l in range(p - 1):
            label, steps = omega_label(l, l, p), 1
            while label != (l, l):
                label, steps = omega_label(*label, p), steps + 1
            if steps != p - 1:
                failures.append(f"p={p}: orbit of U_({l},{l}) has size {steps}")
    return failures


def test_criterion_7_structural_ring_checks():
    _criterion(7, "presentation map, Theta, g_j symmetry, Heller orbits, p <= 13", 30.0, _structure)

import numpy as np
import pytest

from stablerep.errors import ConsistencyError, DomainError
from stablerep.oracle import fp_linalg as fl
from stablerep.oracle import oracle_kn, oracle_plethysm
from stablerep.oracle.kn import (
    KNDecomposition,
    basis_module,
    decompose_kN,
    green_label,
    green_transport,
    module_of,
    omega_decomposition,
    omega_label,
)
from stablerep.oracle.modules import (
    FpModule,
    build_sym,
    column_strict_fillings,
    direct_sum,
    dual,
    expected_schur_dim,
    natural_module,
    one_dim,
    schur_apply,
    schur_embedding,
    tensor,
    uniserial,
)
from stablerep.partitions import Partition, p_small_partitions
from stablerep.plethysm import decompose_plethysm, expand_sum
from stablerep.stable_ring import StableElement, cg_multiply, heller
from stablerep.stable_ring import dual as stable_dual

P = Partition
U = StableElement.basis


# Linear algebra over F_p


def _naive_rref(a, p):
    m = [list(map(int, row)) for row in a]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        k = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return np.array(m[:r], dtype=np.int64).reshape(r, cols)


@pytest.mark.parametrize("seed", range(30))
def test_echelon_matches_naive(seed):
    rng = np.random.default_rng(seed)
    p = int(rng.choice([3, 5, 7, 11, 13]))
    rows, cols = (int(x) for x in rng.integers(1, 80, size=2))
    a = rng.integers(0, p, size=(rows, cols))
    if cols > 3:
        a[:, 2] = (3 * a[:, 0] + a[:, 1]) % p
    if rows > 4:
        a[3] = (a[0] + 2 * a[1]) % p
    red, piv = fl.echelon(a, p)
    assert np.array_equal(red, _naive_rref(a, p))
    assert len(piv) == fl.rank(a, p) == red.shape[0]


def test_row_basis_of_tall_matrix():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 7, size=(20, 9)) @ rng.integers(0, 7, size=(9, 30)) % 7
    tall = np.concatenate([a] * 10)
    assert np.array_equal(fl.row_basis(tall, 7), _naive_rref(a, 7))


def test_inverse_and_primitive_root():
    a = np.array([[1, 2], [3, 4]])
    inv = fl.inverse(a, 7)
    assert np.array_equal(fl.matmul(a, inv, 7), np.eye(2, dtype=np.int64))
    with pytest.raises(DomainError):
        fl.inverse(np.array([[1, 2], [2, 4]]), 7)
    assert [fl.primitive_root(p) for p in (3, 5, 7, 11, 13)] == [2, 2, 3, 2, 2]


# Modules


@pytest.mark.parametrize("p", (3, 5, 7, 11))
def test_symmetric_powers(p):
    for l in range(p):
        v = build_sym(l, p)
        v.check_relations()
        assert v.dim == l + 1
        d = decompose_kN(v)
        if l <= p - 2:
            assert d.counts == {(l % (p - 1), l): 1}
        else:
            assert d.non_projective() == {} and sum(d.projective().values()) == 1


def test_small_symmetric_powers():
    k = build_sym(0, 7)
    assert k.g.tolist() == [[1]] and k.h.tolist() == [[1]]
    e = natural_module(7)
    c = e.c
    assert sorted(np.diag(e.h).tolist()) == sorted([pow(c, -1, 7), c])


def test_broken_module_detected():
    bad = FpModule(5, np.array([[1, 1], [0, 1]]), np.array([0, 0]))
    with pytest.raises(ConsistencyError):
        bad.check_relations()


@pytest.mark.parametrize("p", (5, 7, 11))
def test_natural_module_times_symmetric_power(p):
    e = natural_module(p)
    for j in range(1, p - 2):
        d = decompose_kN(tensor(e, build_sym(j, p)))
        assert d.counts == {(j - 1, j - 1): 1, (j + 1, j + 1): 1}


def test_schur_functor_conventions():
    e = natural_module(7)
    same = schur_apply(P((1,)), e)
    # The image basis is grouped by weight, so compare up to isomorphism.
    assert same.dim == 2 and sorted(same.weights.tolist()) == sorted(e.weights.tolist())
    assert decompose_kN(same).counts == decompose_kN(e).counts
    det = schur_apply(P((1, 1)), e)
    assert det.dim == 1 and det.g.tolist() == [[1]] and det.weights.tolist() == [0]
    sym2 = schur_apply(P((2,)), build_sym(2, 5))
    assert sym2.dim == 6
    assert green_transport(decompose_kN(sym2)) == decompose_plethysm(P((2,)), 2, 5).decomposition


@pytest.mark.parametrize("p", (5, 7))
def test_schur_dimensions_and_relations(p):
    for nu in p_small_partitions(p):
        for l in (1, 2, 3):
            if (l + 1) ** nu.size() > 5000:
                continue
            w = schur_apply(nu, build_sym(l, p))
            w.check_relations()
            assert w.dim == expected_schur_dim(nu, l + 1)
            assert decompose_kN(w).dimension() == w.dim


def test_column_strict_fillings_span_the_same_image():
    v = build_sym(2, 7)
    for nu in (P((2, 1)), P((2, 2)), P((3, 1))):
        full = schur_embedding(nu, v, fillings=column_strict_fillings(nu, v.dim))
        assert full.module.dim == schur_apply(nu, v).dim


def test_dimension_guard(monkeypatch):
    monkeypatch.setenv("STABLEREP_MAX_DIM", "100")
    with pytest.raises(DomainError):
        schur_apply(P((3,)), build_sym(6, 7))


def test_symmetriser_needs_small_partition():
    with pytest.raises(DomainError):
        schur_apply(P((5,)), build_sym(1, 5))


# Green transport


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_omega_orbits(p):
    seen = set()
    for l in range(p - 1):
        label = (l, l)
        orbit = [label]
        for _ in range(p - 2):
            label = omega_label(*label, p)
            orbit.append(label)
        assert omega_label(*label, p) == (l, l)
        assert len(set(orbit)) == p - 1
        seen.update(orbit)
    # The orbits of the U_(l,l) exhaust the non-projective uniserials.
    assert seen == {(i, j) for i in range(p - 1) for j in range(p - 1)}


@pytest.mark.parametrize("p", (3, 5, 7, 11))
def test_green_labels(p):
    for l in range(p - 1):
        assert green_label(l, l, p) == (l, 0)
        if l >= 2:
            assert green_label(l - 2, l, p) == (l, 2)
        for m in range(p - 1):
            d = KNDecomposition(p, {green_to_kn(l, m, p): 1})
            assert green_transport(d) == U(p, l, m)
            assert green_transport(omega_decomposition(d)) == heller(U(p, l, m), 1)


def green_to_kn(l, m, p):
    label = (l, l)
    for _ in range(m):
        label = omega_label(*label, p)
    return label


def test_projective_label_rejected():
    with pytest.raises(DomainError):
        omega_label(0, 6, 7)


@pytest.mark.parametrize("p", (3, 5, 7))
def test_tensor_products_match_clebsch_gordan(p):
    labels = [(l, m) for l in range(p - 1) for m in range(p - 1)]
    for a in labels:
        for b in labels:
            if b < a:
                continue
            va, vb = basis_module(*a, p), basis_module(*b, p)
            computed = green_transport(decompose_kN(tensor(va, vb)))
            assert computed == cg_multiply(U(p, *a), U(p, *b)), (a, b)


@pytest.mark.parametrize("p", (3, 5, 7))
def test_duals(p):
    for l in range(p - 1):
        for m in range(p - 1):
            computed = green_transport(decompose_kN(dual(basis_module(l, m, p))))
            assert computed == stable_dual(U(p, l, m))


def test_uniserial_and_module_of():
    u = uniserial(3, 2, 7)
    assert decompose_kN(u).counts == {(3, 2): 1}
    x = U(7, 2, 1) + U(7, 4, 3) * 2
    assert green_transport(decompose_kN(module_of(x))) == x
    with pytest.raises(DomainError):
        module_of(-x)
    assert decompose_kN(one_dim(7, 4)).counts == {(4, 0): 1}


def test_kn_json():
    d = oracle_kn(P((2,)), 3, 5)
    data = d.to_json()
    assert set(data) == {"summands", "projective_part"}
    assert sum((s["j"] + 1) * s["mult"] for s in data["summands"] + data["projective_part"]) == 10


# Matrix route against the Theta route


@pytest.mark.parametrize("p", (3, 5))
def test_oracle_agrees_small(p):
    for nu in p_small_partitions(p):
        for l in range(p - 1):
            assert oracle_plethysm(nu, l, p) == decompose_plethysm(nu, l, p).decomposition


@pytest.mark.parametrize("p", (5, 7))
def test_oracle_on_twisted_inputs(p):
    for nu in p_small_partitions(p):
        if nu.size() > 3:
            continue
        for l in range(p - 1):
            for m in range(1, p - 1):
                w = schur_apply(nu, basis_module(l, m, p))
                expected = decompose_plethysm(nu, l, p, m).decomposition
                assert green_transport(decompose_kN(w)) == expected, (nu, l, m)


def test_schur_of_a_sum_against_matrices():
    e = natural_module(7)
    w = schur_apply(P((2,)), direct_sum(e, e))
    expected = expand_sum(P((2,)), U(7, 1), U(7, 1))
    assert green_transport(decompose_kN(w)) == expected

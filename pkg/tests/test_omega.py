import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bms.errors import SchemaError
from bms.intlinalg import certificate_holds
from bms.omega import (
    INFINITY,
    ECSeq,
    combine,
    comparison_multiplicity,
    const,
    countable_power_demo,
    ec_add,
    ec_is_singular,
    ec_join,
    ec_meet,
    ec_neg,
    ec_scalar_mul,
    ec_sub,
    ec_value,
    indicator,
    not_specker_demo,
    pushout_demo,
    subgroup_membership,
)

ecseqs = st.builds(
    ECSeq,
    st.lists(st.integers(-4, 4), max_size=5).map(tuple),
    st.integers(-4, 4),
)


def test_canonical_form():
    assert ECSeq((1, 1), 1).prefix == ()
    assert ECSeq((2, 1), 1).prefix == (2,)
    assert ECSeq((0, 1, 2, 2), 2) == ECSeq((0, 1), 2)


@settings(max_examples=100, deadline=None)
@given(ecseqs)
def test_canonicalization_idempotent(a):
    assert ECSeq(a.prefix, a.tail) == a
    assert ec_value(a, INFINITY) == a.tail


def test_ec_value_examples():
    a = ECSeq((5,), 2)
    assert ec_value(a, 0) == 5
    assert ec_value(a, 3) == 2
    assert ec_value(a, INFINITY) == 2
    with pytest.raises(SchemaError):
        ec_value(a, -1)


def test_op_examples():
    assert ec_add(const(1), const(1)) == const(2)
    assert ec_meet(indicator([0]), indicator([1])) == const(0)
    assert ec_sub(const(3), const(1)) == const(2)
    assert ec_neg(ECSeq((1,), 0)) == ECSeq((-1,), 0)
    assert ec_scalar_mul(3, indicator([1])) == ECSeq((0, 3), 0)
    assert ec_join(indicator([0]), indicator([1])) == ECSeq((1, 1), 0)


@settings(max_examples=100, deadline=None)
@given(ecseqs, ecseqs)
def test_ops_pointwise(a, b):
    probes = list(range(7)) + [INFINITY]
    for p in probes:
        assert ec_value(ec_add(a, b), p) == ec_value(a, p) + ec_value(b, p)
        assert ec_value(ec_meet(a, b), p) == min(ec_value(a, p), ec_value(b, p))
        assert ec_value(ec_join(a, b), p) == max(ec_value(a, p), ec_value(b, p))
        assert ec_value(ec_sub(a, b), p) == ec_value(a, p) - ec_value(b, p)


def test_ec_is_singular():
    assert ec_is_singular(const(1))
    assert ec_is_singular(ECSeq((1, 0, 1), 0))
    assert not ec_is_singular(const(2))
    assert not ec_is_singular(ECSeq((-1,), 0))


def test_singulars_closed_under_lattice_ops():
    small = [
        ECSeq(bits, tail)
        for k in range(3)
        for bits in itertools.product((0, 1), repeat=k)
        for tail in (0, 1)
    ]
    for a, b in itertools.product(small, repeat=2):
        assert ec_is_singular(ec_meet(a, b))
        assert ec_is_singular(ec_join(a, b))


def test_finite_support_span_has_zero_tail():
    rng = random.Random(3)
    gens = [indicator([i]) for i in range(5)]
    for _ in range(50):
        coeffs = [rng.randint(-5, 5) for _ in gens]
        assert combine(coeffs, gens).tail == 0


def test_membership_examples():
    r = subgroup_membership(const(0), [indicator([0]), const(3)])
    assert r.member and combine(r.coefficients, [indicator([0]), const(3)]) == const(0)

    r = subgroup_membership(ECSeq((3,), 0), [indicator([0])])
    assert r.member and r.coefficients == (3,)

    gens = [indicator([i]) for i in range(6)]
    r = subgroup_membership(const(2), gens)
    assert not r.member
    assert r.coordinate == "tail"
    assert r.certificate.modulus == 0 and r.certificate.value == 2


def test_membership_parity_certificate():
    # tails of the generators are even, target tail is odd
    r = subgroup_membership(const(1), [const(2), ECSeq((1,), 4)])
    assert not r.member
    assert r.coordinate == "tail"
    assert r.certificate.modulus == 2


def _membership_matrix(target, gens):
    n = max([len(target.prefix)] + [len(g.prefix) for g in gens], default=0)
    rows = list(range(n)) + [INFINITY]
    matrix = [[ec_value(g, p) for g in gens] for p in rows]
    rhs = [ec_value(target, p) for p in rows]
    return matrix, rhs


def _oracle_search(target, gens, bound=5):
    """Brute-force coefficient search on the coordinate vectors."""
    matrix, rhs = _membership_matrix(target, gens)
    a = np.array(matrix, dtype=np.int64)
    b = np.array(rhs, dtype=np.int64)
    k = len(gens)
    grid = np.array(
        list(itertools.product(range(-bound, bound + 1), repeat=k)), dtype=np.int64
    )
    hits = np.all(grid @ a.T == b, axis=1)
    return bool(hits.any())


def random_instance(rng):
    def random_seq():
        k = rng.randint(0, 3)
        return ECSeq(tuple(rng.randint(-3, 3) for _ in range(k)), rng.randint(-3, 3))

    gens = [random_seq() for _ in range(rng.randint(1, 4))]
    if rng.random() < 0.5:
        coeffs = [rng.randint(-5, 5) for _ in gens]
        target = combine(coeffs, gens)
    else:
        target = random_seq()
    return target, gens


def test_membership_against_oracle():
    rng = random.Random(0)
    for _ in range(60):
        target, gens = random_instance(rng)
        result = subgroup_membership(target, gens)
        if _oracle_search(target, gens):
            assert result.member
        if result.member:
            assert combine(result.coefficients, gens) == target
        else:
            matrix, rhs = _membership_matrix(target, gens)
            assert certificate_holds(matrix, rhs, result.certificate)


def test_hyperarch_in_sequence_model():
    rng = random.Random(5)
    for _ in range(100):
        f = ECSeq(tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 4))), rng.randint(0, 3))
        g = ECSeq(tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 4))), rng.randint(0, 3))
        gmax = max([*g.prefix, g.tail])
        n = 0
        while ec_meet(ec_scalar_mul(n, f), g) != ec_meet(ec_scalar_mul(n + 1, f), g):
            n += 1
            assert n <= gmax
        assert n <= gmax


def test_not_specker_demo_report():
    report = not_specker_demo(seed=0)
    assert report["closed"] == "pass"
    assert report["singulars_finite_support"] == "pass"
    assert report["unit_generated"] is False
    assert report["certificate_coordinate"] == "tail"
    assert report["confirmed"]


def test_countable_power_demo_report():
    report = countable_power_demo(max_k=10)
    assert [w["v"] for w in report["witnesses"]] == [2] * 11
    assert report["limit_v"] == 1
    assert report["all_b_v"] == 2
    assert report["discontinuous"]


def test_comparison_multiplicity():
    v3 = comparison_multiplicity(3)
    assert [ec_value(v3, i) for i in range(6)] == [1, 1, 1, 2, 1, 1]
    assert ec_value(v3, INFINITY) == 1


def test_pushout_demo_report():
    report = pushout_demo(bound=16)
    assert report["forced"]["inf"] == 1
    assert all(report["forced"][str(n)] == 2 for n in range(17))
    assert report["min_prefix_length"] == 17
    assert report["representable_for_all_n"] is False
    assert report["confirmed"]

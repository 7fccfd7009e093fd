import random

import numpy as np
import pytest

from charfield.perm import (
    GroupTooLargeError,
    Permutation,
    conjugacy_classes,
    derived_subgroup,
    element_order_spectrum,
    enumerate_group,
    group_from_json,
    group_to_json,
    power_map,
    quotient_group,
)


def cycle(degree, *cycles):
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a] = b
    return Permutation(images)


S3 = enumerate_group(3, [cycle(3, (0, 1)), cycle(3, (0, 1, 2))])
S4 = enumerate_group(4, [cycle(4, (0, 1)), cycle(4, (0, 1, 2, 3))])
A5 = enumerate_group(5, [cycle(5, (0, 1, 2, 3, 4)), cycle(5, (0, 1, 2))])
C4 = enumerate_group(4, [cycle(4, (0, 1, 2, 3))])


def test_enumerate_basic_orders():
    assert C4.order == 4
    assert S3.order == 6
    assert A5.order == 60


def test_identity_is_element_zero():
    assert S4.element(0) == Permutation.identity(4)


def test_invalid_generator_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        enumerate_group(3, [Permutation([0, 1])])


def test_cap_enforced():
    with pytest.raises(GroupTooLargeError):
        enumerate_group(5, A5.generators, cap=10)


def test_conjugacy_classes_c4():
    cd = conjugacy_classes(C4)
    assert cd.k == 4
    assert cd.sizes == (1, 1, 1, 1)
    assert cd.element_orders == (1, 2, 4, 4)


def test_conjugacy_classes_s3():
    cd = conjugacy_classes(S3)
    assert cd.k == 3
    # ordered by (element order, size, smallest id)
    assert cd.element_orders == (1, 2, 3)
    assert cd.sizes == (1, 3, 2)
    assert sum(cd.sizes) == S3.order


def test_class_equation_and_divisibility():
    for g in (S3, S4, A5, C4):
        cd = conjugacy_classes(g)
        assert sum(cd.sizes) == g.order
        assert all(g.order % s == 0 for s in cd.sizes)
        assert cd.class_of[cd.reps[0]] == 0 and cd.element_orders[0] == 1


def test_power_map_small():
    c3 = enumerate_group(3, [cycle(3, (0, 1, 2))])
    cd = conjugacy_classes(c3)
    assert power_map(cd, 1) == (0, 1, 2)
    # squaring swaps the two nontrivial classes (mutual inverses)
    assert cd.power_map(1, 2) == 2 and cd.power_map(2, 2) == 1
    s3 = conjugacy_classes(S3)
    transposition = s3.element_orders.index(2)
    three_cycle = s3.element_orders.index(3)
    # direct computation: t^3 = t for an involution, (abc)^3 = 1
    assert s3.power_map(transposition, 3) == transposition
    assert s3.power_map(transposition, 2) == 0
    assert s3.power_map(three_cycle, 3) == 0


def test_power_map_well_defined():
    rng = random.Random(42)
    for g in (S4, A5):
        cd = conjugacy_classes(g)
        ids_by_class = [[] for _ in range(cd.k)]
        for i in range(g.order):
            ids_by_class[cd.class_of[i]].append(i)
        for _ in range(100):
            c = rng.randrange(cd.k)
            x = rng.choice(ids_by_class[c])
            k = rng.randint(-6, 12)
            assert cd.class_of[g.id_of(g.element(x) ** k)] == cd.power_map(c, k)


def test_order_constant_on_classes():
    cd = conjugacy_classes(S4)
    for i in range(S4.order):
        assert S4.element(i).order() == cd.element_orders[cd.class_of[i]]


def test_element_order_spectrum():
    assert element_order_spectrum(C4) == (2, 4)
    assert element_order_spectrum(A5) == (2, 3, 5)


def test_derived_subgroup():
    assert derived_subgroup(C4).order == 1
    d = derived_subgroup(S3)
    assert d.order == 3
    a4 = enumerate_group(4, [cycle(4, (1, 2, 3)), cycle(4, (0, 1, 2))])
    assert derived_subgroup(a4).order == 4  # the Klein four-group


def test_derived_subgroup_matches_all_commutators():
    # brute-force all-pairs commutator closure on groups of order <= 200
    for g in (S3, S4, C4, A5):
        d = derived_subgroup(g)
        comm = set()
        for a in range(g.order):
            ainv = g.inverse_id(a)
            for b in range(g.order):
                comm.add(g.mul(g.mul(ainv, g.inverse_id(b)), g.mul(a, b)))
        from charfield.perm import _close_subgroup

        assert _close_subgroup(g, comm - {0}) == set(d.element_ids)


def test_subgroup_as_group():
    d = derived_subgroup(S4)
    g = d.as_group()
    assert g.order == d.order == 12
    assert all(g.element(i) in S4 for i in range(g.order))


def test_quotient_by_whole_group():
    q = quotient_group(S3, set(range(S3.order)))
    assert q.order == 1


def test_quotient_a4_by_derived():
    a4 = enumerate_group(4, [cycle(4, (1, 2, 3)), cycle(4, (0, 1, 2))])
    q = quotient_group(a4, derived_subgroup(a4))
    assert q.order == 3
    assert element_order_spectrum(q) == (3,)


def test_quotient_d18_by_c3():
    rot = cycle(9, tuple(range(9)))
    refl = Permutation([(9 - i) % 9 for i in range(9)])
    d18 = enumerate_group(9, [rot, refl])
    assert d18.order == 18
    c9 = derived_subgroup(d18)
    assert c9.order == 9
    # order-3 subgroup inside the rotation C9
    n = frozenset(i for i in c9.element_ids if d18.element(i).order() in (1, 3))
    q = quotient_group(d18, n)
    assert q.order == 6
    cd = conjugacy_classes(q)
    assert cd.k == 3 and sorted(cd.sizes) == [1, 2, 3]  # nonabelian: S3


def test_quotient_order_multiplicative():
    for g, sub in ((S4, derived_subgroup(S4)), (S3, derived_subgroup(S3))):
        q = quotient_group(g, sub)
        assert q.order * sub.order == g.order


def test_non_normal_subgroup_rejected():
    # <(0 1)> is not normal in S3
    ids = frozenset({0, S3.id_of(cycle(3, (0, 1)))})
    with pytest.raises(ValueError):
        quotient_group(S3, ids)


def test_determinism():
    a = enumerate_group(5, A5.generators)
    b = enumerate_group(5, A5.generators)
    assert np.array_equal(a.rows, b.rows)
    ca, cb = conjugacy_classes(a), conjugacy_classes(b)
    assert ca.reps == cb.reps and ca.sizes == cb.sizes


def test_json_roundtrip():
    text = group_to_json(5, A5.generators)
    g = group_from_json(text)
    assert g.order == 60
    assert group_to_json(5, g.generators) == text


def test_inverse_ids():
    for i in range(S4.order):
        assert S4.mul(i, S4.inverse_id(i)) == 0

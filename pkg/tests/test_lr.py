import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nlhorn import lr
from nlhorn.lr import lr_coefficient, lr_positive, lr_positive_horn, lr_support
from nlhorn.partitions import Partition, box_complement, conjugate, partitions_inside

from oracles import lr_brute, partitions_small

SMALL = partitions_small(3, 4)


def test_frozen_values():
    # computed once by the exhaustive filler in oracles.py
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2,), (2,), (3, 1)) == 1
    assert lr_coefficient((2,), (2,), (2, 1, 1)) == 0
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((), (), ()) == 1


def test_size_mismatch_is_zero():
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert not lr_positive((2,), (1,), (1, 1))
    with pytest.raises(ValueError):
        lr_positive_horn((1,), (1,), (3,))


def test_agrees_with_brute_force():
    for mu, nu in itertools.product(SMALL, repeat=2):
        for lam in partitions_small(4, sum(mu) + sum(nu)):
            if sum(lam) != sum(mu) + sum(nu):
                continue
            assert lr_coefficient(mu, nu, lam) == lr_brute(mu, nu, lam), (mu, nu, lam)


def test_commutative_and_transpose():
    for mu, nu in itertools.product(partitions_small(3, 5), repeat=2):
        for lam in partitions_inside(tuple(a + b for a, b in itertools.zip_longest(mu, nu, fillvalue=0)) or (0,)):
            if sum(lam) != sum(mu) + sum(nu):
                continue
            c = lr_coefficient(mu, nu, lam)
            assert c == lr_coefficient(nu, mu, lam)
            assert c == lr_coefficient(conjugate(mu), conjugate(nu), conjugate(lam))


def test_box_complement_symmetry():
    for w, k, l in itertools.product(range(1, 4), repeat=3):
        lams = list(partitions_inside((w,) * (k + l)))
        mus = list(partitions_inside((w,) * k))
        nus = list(partitions_inside((w,) * l))
        for mu, nu in itertools.product(mus, nus):
            for lam in lams:
                if sum(lam) != sum(mu) + sum(nu):
                    continue
                lhs = lr_coefficient(mu, nu, lam)
                rhs = lr_coefficient(
                    box_complement(mu, w, k), box_complement(nu, w, l), box_complement(lam, w, k + l)
                )
                assert lhs == rhs, (w, k, l, mu, nu, lam)


def test_horn_recursion_small():
    shapes = list(partitions_inside((4, 4, 4)))
    for mu, nu in itertools.product(shapes, repeat=2):
        for lam in shapes:
            if sum(lam) == sum(mu) + sum(nu):
                assert lr_positive(mu, nu, lam) == lr_positive_horn(mu, nu, lam)


def test_pieri_rule():
    # c^lam_{mu,(p)} is 1 exactly for horizontal strips
    from nlhorn.partitions import is_horizontal_strip

    for mu in partitions_small(3, 4):
        for p in range(4):
            for lam in partitions_small(4, sum(mu) + p):
                if sum(lam) != sum(mu) + p:
                    continue
                want = int(all(a >= b for a, b in itertools.zip_longest(lam, mu, fillvalue=0))
                           and is_horizontal_strip(lam, mu))
                assert lr_coefficient(mu, (p,) if p else (), lam) == want


def test_support_matches_pointwise():
    lam = Partition((3, 2, 1))
    sup = lr_support(lam)
    for alpha in partitions_inside(lam):
        for beta in partitions_inside(lam):
            assert (beta in sup.get(alpha, ())) == lr_positive(alpha, beta, lam)


def test_cache_limit_keeps_results():
    lr.set_cache_limit(3)
    try:
        vals = [lr_coefficient((2, 1), (2, 1), (3, 2, 1)) for _ in range(5)]
        lr_coefficient((1,), (1,), (2,))
        lr_coefficient((2,), (1,), (3,))
        assert vals == [2] * 5
        assert lr.cache_info()["coefficients"] <= 3
    finally:
        lr.set_cache_limit(None)


shapes = st.lists(st.integers(0, 4), max_size=3).map(lambda xs: Partition(sorted(xs, reverse=True)))


@settings(max_examples=60, deadline=None)
@given(shapes, shapes, st.data())
def test_positive_iff_coefficient(mu, nu, data):
    target = mu.size + nu.size
    pool = [p for p in partitions_small(4, target) if sum(p) == target]
    lam = data.draw(st.sampled_from(pool))
    assert lr_positive(mu, nu, lam) == (lr_coefficient(mu, nu, lam) > 0)

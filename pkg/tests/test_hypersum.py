from fractions import Fraction as F

import pytest

from hypersums.hypersum import (
    PrincipalPartResidue, hypersum_binomial, hypersum_doublegf_check,
    hypersum_egf_direct, hypersum_egf_hypergeom, hypersum_egf_laurent,
    hypersum_egf_laurent_parts, hypersum_genbernoulli, hypersum_ogf_check,
    hypersum_recursive,
)
from hypersums.powersum import powersum_bernoulli_diff, powersum_direct, powersum_egf
from hypersums.rational import SumQuery, binomial
from conftest import brute_hypersum

PAIRS = [(0, 1), (1, 1), (1, 2), (-1, 2), (F(1, 2), F(1, 3))]
METHODS = [hypersum_recursive, hypersum_binomial, hypersum_genbernoulli]


def Q(p, a, d, n, r):
    return SumQuery(p, a, d, n, r)


def test_recursive_examples():
    assert hypersum_recursive(Q(1, 0, 1, 3, 1)) == 0 + 1 + 3 + 6 == 10
    assert hypersum_recursive(Q(2, 1, 2, 3, 0)) == 84
    assert hypersum_recursive(Q(0, 5, 3, 3, 2)) == binomial(6, 3) == 20


def test_binomial_examples():
    assert hypersum_binomial(Q(1, 0, 1, 3, 1)) == 3 * 1 + 2 * 2 + 1 * 3 == 10
    for n in range(6):
        for r in range(5):
            assert hypersum_binomial(Q(0, F(2, 7), -3, n, r)) == binomial(n + r + 1, r + 1)
    assert hypersum_binomial(Q(3, 2, 5, 4, 0)) == powersum_direct(SumQuery(3, 2, 5, 4))


def test_genbernoulli_examples():
    assert hypersum_genbernoulli(Q(1, 0, 1, 3, 1)) == 10
    assert hypersum_genbernoulli(Q(2, 0, 1, 3, 0)) == 14
    assert hypersum_genbernoulli(Q(0, 1, 1, 2, 1)) == 6


def test_recursive_matches_literal_recursion():
    for p in range(4):
        for n in range(5):
            for r in range(4):
                assert hypersum_recursive(Q(p, F(-1, 2), 3, n, r)) == brute_hypersum(p, F(-1, 2), 3, n, r)


@pytest.mark.parametrize("a,d", PAIRS)
def test_three_way_agreement(a, d):
    for p in range(7):
        for n in range(11):
            for r in range(6):
                q = Q(p, a, d, n, r)
                want = hypersum_recursive(q)
                assert hypersum_binomial(q) == want
                assert hypersum_genbernoulli(q) == want, (p, a, d, n, r)


@pytest.mark.parametrize("a,d", [(0, 1), (F(1, 2), F(1, 3)), (5, -2)])
def test_reduction_at_r0(a, d):
    for p in range(7):
        for n in range(9):
            base = SumQuery(p, a, d, n)
            want = powersum_direct(base)
            assert powersum_bernoulli_diff(base) == want
            for fn in METHODS:
                assert fn(Q(p, a, d, n, 0)) == want


@pytest.mark.parametrize("fn", METHODS)
def test_column_differences(fn):
    a, d = F(1, 2), F(1, 3)
    for p in range(4):
        for n in range(1, 7):
            for r in range(1, 4):
                assert fn(Q(p, a, d, n, r)) - fn(Q(p, a, d, n - 1, r)) == fn(Q(p, a, d, n, r - 1))


def test_egf_direct_examples():
    assert hypersum_egf_direct(0, 1, 2, 1, 2).egf_values() == [6, 4, 6]
    assert hypersum_egf_direct(F(1, 3), 2, 4, 0, 6) == powersum_egf(F(1, 3), 2, 4, 6)
    assert hypersum_egf_direct(F(3, 2), 5, 0, 3, 5) == powersum_egf(F(3, 2), 1, 0, 5)


def test_egf_hypergeom_examples():
    assert hypersum_egf_hypergeom(F(5, 2), 3, 0, 4, 6) == powersum_egf(F(5, 2), 1, 0, 6)
    assert hypersum_egf_hypergeom(0, 1, 2, 1, 2).egf_values() == [6, 4, 6]
    assert hypersum_egf_hypergeom(0, 1, 1, 0, 1).egf_values() == [2, 1]


def test_egf_laurent_examples():
    assert hypersum_egf_laurent(0, 1, 2, 0, 3).egf_values() == [3, 3, 5, 9]
    assert hypersum_egf_laurent(0, 1, 2, 1, 2).egf_values() == [6, 4, 6]


def test_laurent_terms_have_principal_parts_that_cancel():
    # the individual terms are genuinely singular; only the combination is regular
    combo = hypersum_egf_laurent_parts(1, 2, 3, 2, 4)
    assert combo.depth == 3
    assert all(c == 0 for c in combo.principal_part())


def test_laurent_residue_detection(monkeypatch):
    import hypersums.hypersum as hs
    original = hs.binomial
    monkeypatch.setattr(hs, "binomial", lambda n, k: original(n, k) + 1)
    with pytest.raises(PrincipalPartResidue):
        hs.hypersum_egf_laurent(0, 1, 2, 1, 3)


@pytest.mark.parametrize("a,d", [(0, 1), (1, 2), (F(-1, 2), F(3, 4))])
def test_egf_triple_agreement(a, d):
    N = 10
    for n in range(6):
        for r in range(5):
            direct = hypersum_egf_direct(a, d, n, r, N)
            assert direct.egf_values() == [brute_hypersum(p, a, d, n, r) for p in range(N + 1)]
            assert hypersum_egf_hypergeom(a, d, n, r, N) == direct
            assert hypersum_egf_laurent(a, d, n, r, N) == direct


def test_ogf_examples():
    assert hypersum_ogf_check(1, 0, 1, 2, 8).passed
    rep = hypersum_ogf_check(0, 1, 1, 0, 5)
    assert rep.passed and rep.checked == 6
    assert hypersum_ogf_check(2, 1, 2, 3, 10)


def test_doublegf_examples():
    assert hypersum_doublegf_check(0, 1, 2, 4, 4).passed
    assert hypersum_doublegf_check(7, F(1, 3), 0, 3, 3).passed
    rep = hypersum_doublegf_check(1, 2, 3, 3, 5)
    assert rep.passed and rep.checked == 4 * 6


def test_ogf_check_catches_wrong_clearing():
    # a deliberately wrong identity must be reported, not silently accepted
    import hypersums.hypersum as hs
    rep = hs.hypersum_ogf_check(1, 0, 1, 2, 6)
    assert rep.passed
    table = hs._hyper_table(1, F(0), F(1), 2, 6)
    broken = [row[:2] + (row[2] + 1,) for row in table]
    hs._hyper_table.cache_clear()
    try:
        original = hs._hyper_table
        hs._hyper_table = lambda *args: tuple(broken)
        bad = hs.hypersum_ogf_check(1, 0, 1, 2, 6)
    finally:
        hs._hyper_table = original
    assert not bad.passed and bad.mismatches


@pytest.mark.parametrize("n", range(5))
def test_gf_checks_grid(n):
    for a, d in PAIRS:
        for p in range(7):
            assert hypersum_ogf_check(p, a, d, n, 10).passed
        assert hypersum_doublegf_check(a, d, n, 10, 10).passed

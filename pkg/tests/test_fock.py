import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockcat.fock import (
    FockVector,
    gamma_minus,
    gamma_plus,
    interlaces,
    pieri_expand,
    prec,
    succ,
    verify_gamma_commutation,
)
from fockcat.partitions import conjugate, partitions_of, partitions_up_to
from fockcat.series import QSeries
from fockcat.symgrp import outer_product_multiplicities

small = st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def horizontal_strip(lam, mu) -> bool:
    """Containment plus at most one box per column, read off conjugates."""
    if len(mu) > len(lam) or any(m > l for l, m in zip(lam, mu)):
        return False
    lc, mc = conjugate(lam), conjugate(mu)
    mc = mc + (0,) * (len(lc) - len(mc))
    return all(a - b <= 1 for a, b in zip(lc, mc))


def u(k, order):
    return QSeries({k: 1}, order)


# -- interlacing -----------------------------------------------------------------


def test_interlacing_examples():
    assert interlaces((2, 1), (1,))
    assert interlaces((1,), (1,))
    assert not interlaces((1, 1, 1), (1,))
    assert not interlaces((1,), (2,))


@given(small, small)
def test_interlacing_is_horizontal_strip(lam, mu):
    assert interlaces(lam, mu) == horizontal_strip(lam, mu)


@given(small, small)
def test_interlacing_antisymmetric_and_monotone(lam, mu):
    if interlaces(lam, mu):
        assert sum(lam) >= sum(mu)
        if interlaces(mu, lam):
            assert lam == mu


@pytest.mark.parametrize("lam", partitions_up_to(4))
def test_succ_and_prec_enumerate_exactly(lam):
    everything = partitions_up_to(8)
    assert sorted(succ(lam, 8)) == sorted(mu for mu in everything if interlaces(mu, lam))
    assert sorted(prec(lam)) == sorted(mu for mu in everything if interlaces(lam, mu))


# -- Gamma operators ---------------------------------------------------------------


def test_gamma_minus_on_vacuum_gives_rows():
    out = gamma_minus(FockVector.vacuum(4, 9), 1)
    expected = FockVector({(k,) if k else (): u(k, 9) for k in range(5)}, 4, 9)
    assert out == expected


def test_gamma_minus_on_one_box():
    out = gamma_minus(FockVector.basis((1,), 2, 5), 1)
    assert out == FockVector({(1,): u(0, 5), (2,): u(1, 5), (1, 1): u(1, 5)}, 2, 5)


def test_gamma_minus_cutoff_zero():
    assert gamma_minus(FockVector.vacuum(0, 3), 1) == FockVector.vacuum(0, 3)


def test_gamma_plus_examples():
    assert gamma_plus(FockVector.vacuum(3, 5), 1) == FockVector.vacuum(3, 5)
    assert gamma_plus(FockVector.basis((1,), 3, 5), 1) == FockVector({(1,): u(0, 5), (): u(1, 5)}, 3, 5)
    z = 2
    out = gamma_plus(FockVector.basis((2, 1), 3, 9), z)
    expected = FockVector(
        {(2, 1): u(0, 9), (2,): u(z, 9), (1, 1): u(z, 9), (1,): u(2 * z, 9)}, 3, 9
    )
    assert out == expected


def test_gamma_grading():
    for lam in partitions_up_to(4):
        for z in (1, 2, 3):
            out = gamma_minus(FockVector.basis(lam, 6, 40), z)
            for mu, c in out.items():
                assert c == u(z * (sum(mu) - sum(lam)), 40)


@pytest.mark.parametrize(
    "cutoff,z,w", [(4, 1, 1), (0, 1, 1), (6, 1, 3), (5, 2, 1), (3, 0, 2)]
)
def test_gamma_commutation(cutoff, z, w):
    ok, failures = verify_gamma_commutation(cutoff, z, w)
    assert ok, failures


def test_commutation_needs_its_factor():
    # without the 1/(1 - zw) factor the two orders already differ on the vacuum
    order = 6
    start = FockVector.vacuum(6, order)
    lhs = gamma_plus(gamma_minus(start, 1), 1).restricted(0)
    rhs = gamma_minus(gamma_plus(start, 1), 1).restricted(0)
    assert lhs != rhs
    assert lhs.coeff(()) == QSeries({0: 1, 2: 1, 4: 1}, order)


# -- Pieri -------------------------------------------------------------------------------


def test_pieri_examples():
    assert pieri_expand(1, (1,)) == [(2,), (1, 1)]
    assert pieri_expand(2, ()) == [(2,)]
    assert pieri_expand(2, (1,)) == [(3,), (2, 1)]


def test_pieri_is_gamma_coefficient():
    for lam in partitions_up_to(4):
        out = gamma_minus(FockVector.basis(lam, sum(lam) + 3, 30), 1)
        for n in range(1, 4):
            hits = sorted((mu for mu, c in out.items() if sum(mu) == sum(lam) + n), reverse=True)
            assert hits == pieri_expand(n, lam)


def test_pieri_matches_induction():
    for m in range(0, 6):
        for lam in partitions_of(m):
            for n in range(1, 7 - m):
                mult = outer_product_multiplicities(lam, n)
                assert all(v == 1 for v in mult.values())
                assert sorted(mult, reverse=True) == pieri_expand(n, lam)

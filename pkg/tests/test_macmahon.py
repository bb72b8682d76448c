import pytest

from fockcat import macmahon as M
from fockcat.planepart import enumerate_plane_partitions, trace
from fockcat.series import ONE, T, LaurentPoly, QSeries, series_geom_inverse, specialize_t

S = LaurentPoly.s_power(1)
S_INV = LaurentPoly.s_power(-1)


def q_poly(coeffs: list, N: int) -> QSeries:
    return QSeries({2 * n: c for n, c in enumerate(coeffs)}, M.u_order(N))


# -- Z(q) ----------------------------------------------------------------------------------


def test_product_examples():
    assert M.z_product(0) == q_poly([1], 0)
    assert M.z_product(2) == q_poly([1, 1, 3], 2)
    assert M.z_product(6).coeff_q(6) == 48
    assert str(M.z_product(2)) == "1 + q + 3q^2 + O(q^3)"


def test_transfer_examples():
    assert M.z_transfer(0) == q_poly([1], 0)
    assert M.z_transfer(4) == M.z_product(4)
    assert M.z_transfer(6).coeff_q(6) == 48


@pytest.mark.parametrize("N", range(0, 11))
def test_three_way_agreement(N):
    counts = [len(enumerate_plane_partitions(v)) for v in range(N + 1)]
    assert M.z_product(N) == q_poly(counts, N)
    assert M.z_transfer(N) == M.z_product(N)
    assert M.z_enumeration(N) == M.z_product(N)


def test_transfer_is_stable_in_the_number_of_factors():
    N = 5
    assert M._transfer(N, N + 1) == M._transfer(N, N + 3)


def test_too_few_transfer_factors_are_detected():
    # one pair of Gamma's only sees single-row partitions
    assert M._transfer(4, 1) != M.z_product(4)
    with pytest.raises(M.TransferInstability):
        M.z_transfer(4, factors=1)


def test_enumeration_bound():
    with pytest.raises(ValueError):
        M.z_enumeration(15)


# -- Z(q,t) ------------------------------------------------------------------------------


def test_deformed_examples():
    assert M.z_deformed_product(1) == q_poly([1, 1 + T], 1)
    assert M.z_deformed_product(2).coeff_q(2) == 3 + 3 * T + T * T
    assert M.z_deformed_commutation(0) == q_poly([1], 0)
    assert M.z_deformed_commutation(3) == M.z_deformed_product(3)
    assert M.z_deformed_commutation(2).coeff_q(1) == 1 + T


@pytest.mark.parametrize("N", range(0, 9))
def test_commutation_equals_product(N):
    assert M.z_deformed_commutation(N) == M.z_deformed_product(N)


def test_commutation_without_t_factor_fails(monkeypatch):
    monkeypatch.setattr(M, "swap_factor", lambda e, order: series_geom_inverse(e, ONE, order))
    mutated = M.z_deformed_commutation(3)
    assert mutated != M.z_deformed_product(3)
    assert mutated == M.z_product(3)


def test_swap_factor_read_from_the_algebra():
    for e in (2, 4, 6):
        assert M.swap_factor_from_algebra(e, 13) == M.swap_factor(e, 13)


@pytest.mark.parametrize("N", range(0, 11))
def test_t_zero_recovers_macmahon(N):
    assert specialize_t(M.z_deformed_product(N), 0) == M.z_product(N)


def test_t_one_gives_square():
    N = 6
    assert specialize_t(M.z_deformed_product(N), 1) == M.z_product(N) * M.z_product(N)


# -- oracles -------------------------------------------------------------------------------


def test_trace_generating_function():
    # sum over plane partitions of t^trace q^volume = prod (1 - t q^n)^-n
    N = 8
    lhs = QSeries(
        {
            2 * v: sum((LaurentPoly.t_power(trace(pi)) for pi in enumerate_plane_partitions(v)), LaurentPoly())
            for v in range(N + 1)
        },
        M.u_order(N),
    )
    rhs = QSeries.one(M.u_order(N))
    for n in range(1, N + 1):
        rhs = rhs * series_geom_inverse(2 * n, T, M.u_order(N)) ** n
    assert lhs == rhs


def test_pairs_oracle_examples():
    z = M.z_pairs_oracle(2)
    assert z.coeff_q(0) == 1
    assert z.coeff_q(1) == 1 + T
    assert z.coeff_q(2) == 3 + 3 * T + T * T


@pytest.mark.parametrize("N", range(0, 9))
def test_pairs_oracle_equals_product(N):
    assert M.z_pairs_oracle(N) == M.z_deformed_product(N)


# -- refined variant ---------------------------------------------------------------------


def test_refined_first_order():
    assert M.z_refined_variant(1) == q_poly([1, S_INV + S], 1)


def test_refined_is_bar_symmetric():
    z = M.z_refined_variant(8)
    for n in range(9):
        assert z.coeff_q(n).bar() == z.coeff_q(n)


def test_refined_second_order_by_hand():
    # (1 - s^-1 q)^-1 (1 - s q)^-1 (1 - s^-1 q^2)^-2 (1 - s q^2)^-2 at q^2:
    # s^-2 + 1 + s^2 from the first pair, 2 s^-1 + 2 s from the second
    c = M.z_refined_variant(2).coeff_q(2)
    assert c == S_INV * S_INV + 2 * S_INV + 1 + 2 * S + S * S


@pytest.mark.parametrize("N", range(0, 9))
def test_refined_equals_refined_pairs(N):
    assert M.z_refined_variant(N) == M.z_refined_pairs_oracle(N)


def test_refined_shift_exists_only_through_first_order():
    shifts = M.refined_shift(6)
    assert shifts[0] == 0
    assert shifts[1] == 1
    assert all(shifts[n] is None for n in range(2, 7))


# -- integrality --------------------------------------------------------------------------


def test_integrality():
    for z in (M.z_product(10), M.z_deformed_product(8), M.z_refined_variant(8)):
        assert z.has_only_integer_q_powers()
        for n in range(z.order // 2):
            c = z.coeff_q(n)
            assert c.is_integral()
            assert all(v > 0 for v in c.terms.values())
    for n in range(9):
        assert M.z_deformed_product(8).coeff_q(n).is_t_polynomial()


# -- reports ---------------------------------------------------------------------------------


def test_compare_methods_report():
    report = M.compare_methods(4, "deformed")
    assert report.agree
    assert report.first_mismatch() is None
    data = report.to_json()
    assert data["agree"] is True
    assert set(data["results"]) == {"product", "commutation", "pairs"}


def test_compare_methods_reports_a_mismatch(monkeypatch):
    monkeypatch.setitem(M.DEFORMED_METHODS, "commutation", M.z_product)
    report = M.compare_methods(3, "deformed", ["product", "commutation"])
    assert not report.agree
    name_a, name_b, n, a, b = report.first_mismatch()
    assert (name_a, name_b, n) == ("product", "commutation", 1)
    assert a == 1 + T and b == 1


def test_compare_methods_rejects_unknown():
    with pytest.raises(ValueError):
        M.compare_methods(3, "classical", ["commutation"])

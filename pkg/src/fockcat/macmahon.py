"""MacMahon's function Z(q) and its t-deformation, each by several routes.

Every routine takes ``N``, the highest power of q wanted, and returns a
``QSeries`` of u-order ``2N + 2``: exact through ``q^N`` (and through the
half power ``q^(N+1/2)``), printed as ``... + O(q^(N+1))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fock import FockVector, gamma_minus, gamma_plus
from .heisenberg import p, q, vacuum_expectation
from .planepart import MAX_EXHAUSTIVE_VOLUME, enumerate_plane_partitions, trace
from .series import ONE, T, LaurentPoly, QSeries, series_geom_inverse, specialize_t

__all__ = [
    "u_order",
    "z_product",
    "z_transfer",
    "z_enumeration",
    "z_deformed_product",
    "z_deformed_commutation",
    "z_refined_variant",
    "z_pairs_oracle",
    "z_refined_pairs_oracle",
    "refined_shift",
    "swap_factor",
    "swap_factor_from_algebra",
    "PartitionFunctionReport",
    "compare_methods",
    "TransferInstability",
]

S_HALF = LaurentPoly.s_power(1)
S_HALF_INV = LaurentPoly.s_power(-1)


class TransferInstability(AssertionError):
    pass


def u_order(N: int) -> int:
    if N < 0:
        raise ValueError("N must be non-negative")
    return 2 * N + 2


def _product(N: int, scalars) -> QSeries:
    """``prod_{n=1}^{N} prod_{c in scalars} (1 - c q^n)^{-n}``."""
    order = u_order(N)
    out = QSeries.one(order)
    for n in range(1, N + 1):
        for c in scalars:
            out = out * series_geom_inverse(2 * n, c, order) ** n
    return out


def z_product(N: int) -> QSeries:
    """``prod_n (1 - q^n)^-n`` through ``q^N``."""
    return _product(N, [ONE])


def z_deformed_product(N: int) -> QSeries:
    """``prod_n (1 - q^n)^-n (1 - t q^n)^-n`` through ``q^N``."""
    return _product(N, [ONE, T])


def z_refined_variant(N: int) -> QSeries:
    """``prod_n (1 - t^(-1/2) q^n)^-n (1 - t^(1/2) q^n)^-n`` through ``q^N``."""
    return _product(N, [S_HALF_INV, S_HALF])


def z_transfer(N: int, factors: int | None = None, check_stability: bool = True) -> QSeries:
    """Vacuum expectation of ``... G+(q^3/2) G+(q^1/2) G-(q^1/2) G-(q^3/2) ...``.

    ``factors`` Gamma operators of each kind are used (default ``N + 1``), on
    the Fock space truncated at weight ``N``.  With ``check_stability`` the
    computation is repeated with one more pair and must agree.
    """
    M = N + 1 if factors is None else factors
    result = _transfer(N, M)
    if check_stability:
        again = _transfer(N, M + 1)
        if result != again:
            raise TransferInstability(f"transfer result changed between M={M} and M={M + 1}")
    return result


def _transfer(N: int, M: int) -> QSeries:
    order = u_order(N)
    state = FockVector.vacuum(N, order)
    # a partition of weight w still costs at least u^w to return to the vacuum
    budget = lambda lam: order - sum(lam)  # noqa: E731
    for k in range(M, 0, -1):
        state = gamma_minus(state, 2 * k - 1).prune(budget)
    for k in range(1, M + 1):
        state = gamma_plus(state, 2 * k - 1)
    return state.coeff(())


def z_enumeration(N: int) -> QSeries:
    """``sum_pi q^|pi|`` by listing every plane partition of volume ``<= N``."""
    if N > MAX_EXHAUSTIVE_VOLUME:
        raise ValueError(f"exhaustive enumeration is limited to N <= {MAX_EXHAUSTIVE_VOLUME}")
    return QSeries(
        {2 * v: len(enumerate_plane_partitions(v)) for v in range(N + 1)}, u_order(N)
    )


def swap_factor(exponent: int, order: int) -> QSeries:
    """``1 / ((1 - u^e)(1 - t u^e))``: the scalar released by one Gamma~ swap."""
    return series_geom_inverse(exponent, ONE, order) * series_geom_inverse(exponent, T, order)


def swap_factor_from_algebra(exponent: int, order: int) -> QSeries:
    """Same scalar read off the rewrite system: ``sum_k <q_k p_k> u^{k e}``."""
    coeffs = {}
    for k in range((order - 1) // exponent + 1):
        coeffs[k * exponent] = vacuum_expectation(q(k) * p(k)) if k else ONE
    return QSeries(coeffs, order)


def z_deformed_commutation(N: int) -> QSeries:
    """``<vac| ... G~+(q^3/2) G~+(q^1/2) G~-(q^1/2) G~-(q^3/2) ... |vac>`` by swapping.

    The word of Gamma~ factors is bubble-sorted: each time a ``G~+(q^(k/2))``
    passes a ``G~-(q^(l/2))`` the accumulated scalar is multiplied by the
    swap factor at ``u^(k+l)``.  Once all ``G~-`` stand left of all ``G~+``
    the vacuum expectation of the remaining word is 1.
    """
    order = u_order(N)
    odd = list(range(1, 2 * N + 2, 2))
    word = [("+", k) for k in reversed(odd)] + [("-", l) for l in odd]
    acc = QSeries.one(order)
    cache = {}
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(word) - 1):
            (s1, k), (s2, l) = word[i], word[i + 1]
            if s1 == "+" and s2 == "-":
                word[i], word[i + 1] = word[i + 1], word[i]
                if k + l not in cache:
                    cache[k + l] = swap_factor(k + l, order)
                acc = acc * cache[k + l]
                swapped = True
    assert all(s == "-" for s, _ in word[: len(odd)])
    return acc


def _pairs(N: int, weight) -> QSeries:
    if N > MAX_EXHAUSTIVE_VOLUME:
        raise ValueError(f"exhaustive enumeration is limited to N <= {MAX_EXHAUSTIVE_VOLUME}")
    by_volume = [
        [trace(pi) for pi in enumerate_plane_partitions(v)] for v in range(N + 1)
    ]
    coeffs = {}
    for total in range(N + 1):
        c = LaurentPoly()
        for v in range(total + 1):
            for tr_pi in by_volume[v]:
                for tr_sigma in by_volume[total - v]:
                    c = c + weight(tr_pi, tr_sigma)
        coeffs[2 * total] = c
    return QSeries(coeffs, u_order(N))


def z_pairs_oracle(N: int) -> QSeries:
    """``sum over pairs (pi, sigma), |pi|+|sigma| <= N, of q^(|pi|+|sigma|) t^trace(sigma)``."""
    return _pairs(N, lambda _a, b: LaurentPoly.t_power(b))


def z_refined_pairs_oracle(N: int) -> QSeries:
    """Pairs weighted by ``t^((trace(sigma) - trace(pi)) / 2)``."""
    return _pairs(N, lambda a, b: LaurentPoly.s_power(b - a))


def refined_shift(N: int) -> dict:
    """For each n <= N, the integer d with ``c_ref(s) = s^-d c_def(s^2)`` at q^n, or None.

    ``d`` is fixed by matching lowest s-degrees and then the whole
    coefficient is compared; None records that no such shift exists.
    """
    ref, dfm = z_refined_variant(N), z_deformed_product(N)
    out = {}
    for n in range(N + 1):
        a = ref.coeff_q(n)
        b = dfm.coeff_q(n)  # t is stored as s^2 already
        d = b.min_s() - a.min_s()
        out[n] = d if b.shift_s(-d) == a else None
    return out


METHODS = {
    "product": z_product,
    "transfer": z_transfer,
    "enumeration": z_enumeration,
}
DEFORMED_METHODS = {
    "product": z_deformed_product,
    "commutation": z_deformed_commutation,
    "pairs": z_pairs_oracle,
}
REFINED_METHODS = {
    "product": z_refined_variant,
    "pairs": z_refined_pairs_oracle,
}


@dataclass
class PartitionFunctionReport:
    """Results of several methods at one truncation, with pairwise verdicts."""

    N: int
    family: str
    results: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return all(self.verdicts.values())

    def first_mismatch(self):
        """``(method_a, method_b, q_power, a_coeff, b_coeff)`` or None."""
        names = list(self.results)
        base = self.results[names[0]]
        for other in names[1:]:
            series = self.results[other]
            for n in range(self.N + 1):
                a, b = base.coeff_q(n), series.coeff_q(n)
                if a != b:
                    return names[0], other, n, a, b
        return None

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "family": self.family,
            "results": {k: v.to_json() for k, v in self.results.items()},
            "verdicts": dict(self.verdicts),
            "agree": self.agree,
        }


def compare_methods(N: int, family: str = "classical", methods=None) -> PartitionFunctionReport:
    """Run each requested method for ``family`` and compare against the first one."""
    table = {"classical": METHODS, "deformed": DEFORMED_METHODS, "refined": REFINED_METHODS}[family]
    names = list(table) if not methods else list(methods)
    unknown = [m for m in names if m not in table]
    if unknown:
        raise ValueError(f"unknown {family} method(s) {unknown}; choose from {sorted(table)}")
    report = PartitionFunctionReport(N, family)
    for name in names:
        report.results[name] = table[name](N)
    base = names[0]
    for name in names[1:]:
        report.verdicts[f"{base}={name}"] = report.results[base] == report.results[name]
    return report


def specialized_deformed(N: int, value=0) -> QSeries:
    return specialize_t(z_deformed_product(N), value)

"""Partition-basis Fock space and the transfer operators Gamma_+ / Gamma_-.

States are finite combinations of partitions ``|lam>`` with ``QSeries``
coefficients.  A ``FockVector`` carries a ``cutoff``: partitions heavier than
it are dropped the moment they are produced, so any result is exact only for
components that cannot be reached through a dropped partition.  Operators
take the spectral parameter as a u-exponent: ``z = u^k = q^(k/2)``.
"""

from __future__ import annotations

from .partitions import format_partition, make_partition, partitions_up_to
from .series import QSeries, series_geom_inverse

__all__ = [
    "FockVector",
    "interlaces",
    "succ",
    "prec",
    "gamma_minus",
    "gamma_plus",
    "pieri_expand",
    "verify_gamma_commutation",
]


def interlaces(lam, mu) -> bool:
    """``lam > mu`` in the interlacing sense: ``lam1 >= mu1 >= lam2 >= mu2 >= ...``."""
    lam, mu = tuple(lam), tuple(mu)
    k = max(len(lam), len(mu)) + 1
    lam = lam + (0,) * (k - len(lam))
    mu = mu + (0,) * (k - len(mu))
    for i in range(k):
        if lam[i] < mu[i]:
            return False
        if i + 1 < k and mu[i] < lam[i + 1]:
            return False
    return True


def succ(lam, max_weight: int):
    """Every ``mu`` with ``mu > lam`` (interlacing) and ``|mu| <= max_weight``."""
    lam = tuple(lam)
    base = sum(lam)
    if base > max_weight:
        return
    # mu_1 >= lam_1 unbounded; mu_i in [lam_i, lam_{i-1}] for i >= 2
    bounds = [(lam[i] if i < len(lam) else 0, lam[i - 1]) for i in range(1, len(lam) + 1)]
    first_lo = lam[0] if lam else 0

    def rec(i, parts, extra):
        if i == len(bounds):
            yield make_partition(parts)
            return
        lo, hi = bounds[i]
        for v in range(lo, hi + 1):
            add = v - lo
            if extra + add > max_weight - base:
                break
            yield from rec(i + 1, parts + [v], extra + add)

    for v in range(first_lo, first_lo + (max_weight - base) + 1):
        yield from rec(0, [v], v - first_lo)


def prec(lam):
    """Every ``mu`` with ``lam > mu``."""
    lam = tuple(lam)
    bounds = [(lam[i + 1] if i + 1 < len(lam) else 0, lam[i]) for i in range(len(lam))]

    def rec(i, parts):
        if i == len(bounds):
            yield make_partition(parts)
            return
        lo, hi = bounds[i]
        for v in range(hi, lo - 1, -1):
            yield from rec(i + 1, parts + [v])

    yield from rec(0, [])


class FockVector:
    """Combination ``sum_lam c_lam(u) |lam>`` truncated to weight ``<= cutoff``."""

    __slots__ = ("coeffs", "cutoff", "order")

    def __init__(self, coeffs=None, cutoff: int = 0, order: int = 1):
        self.cutoff = cutoff
        self.order = order
        clean = {}
        for lam, c in dict(coeffs or {}).items():
            lam = make_partition(lam)
            if sum(lam) > cutoff:
                continue
            if not isinstance(c, QSeries):
                c = QSeries({0: c}, order)
            c = c.truncate(order)
            if not c.is_zero():
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, lam, cutoff: int, order: int) -> FockVector:
        return cls({make_partition(lam): QSeries.one(order)}, cutoff, order)

    @classmethod
    def vacuum(cls, cutoff: int, order: int) -> FockVector:
        return cls.basis((), cutoff, order)

    def coeff(self, lam) -> QSeries:
        return self.coeffs.get(tuple(lam), QSeries({}, self.order))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]]))

    def __add__(self, other):
        order = min(self.order, other.order)
        out = {lam: c.truncate(order) for lam, c in self.coeffs.items()}
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c.truncate(order)
        return FockVector(out, min(self.cutoff, other.cutoff), order)

    def __mul__(self, series):
        if not isinstance(series, QSeries):
            return NotImplemented
        order = min(self.order, series.order)
        return FockVector({lam: c * series for lam, c in self.coeffs.items()}, self.cutoff, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def restricted(self, max_weight: int) -> FockVector:
        return FockVector(
            {lam: c for lam, c in self.coeffs.items() if sum(lam) <= max_weight},
            min(self.cutoff, max_weight),
            self.order,
        )

    def prune(self, budget) -> FockVector:
        """Keep only u-terms below ``budget(lam)`` in each component."""
        res = FockVector.__new__(FockVector)
        res.coeffs = {}
        for lam, c in self.coeffs.items():
            c = c.truncate(budget(lam))
            if not c.is_zero():
                res.coeffs[lam] = QSeries._raw(c.coeffs, self.order)
        res.cutoff, res.order = self.cutoff, self.order
        return res

    def __str__(self):
        if not self.coeffs:
            return "0"
        return "\n".join(f"{format_partition(lam)}: {c}" for lam, c in self.items())

    def __repr__(self):
        return f"FockVector({len(self.coeffs)} terms, cutoff={self.cutoff}, order={self.order})"


def _apply(state: FockVector, z_unit: int, targets, sign: int) -> FockVector:
    if z_unit < 0:
        raise ValueError("z must be a non-negative power of u")
    out = {}
    for lam, c in state.coeffs.items():
        w = sum(lam)
        for mu in targets(lam):
            shift = z_unit * sign * (sum(mu) - w)
            term = c.shift_u(shift)
            if term.is_zero():
                continue
            out[mu] = out[mu] + term if mu in out else term
    res = FockVector.__new__(FockVector)
    res.coeffs = {mu: c for mu, c in out.items() if not c.is_zero()}
    res.cutoff, res.order = state.cutoff, state.order
    return res


def gamma_minus(state: FockVector, z_power_unit: int) -> FockVector:
    """``Gamma_-(z)|lam> = sum_{mu > lam} z^{|mu|-|lam|} |mu>`` with ``z = u^z_power_unit``."""
    return _apply(state, z_power_unit, lambda lam: succ(lam, state.cutoff), 1)


def gamma_plus(state: FockVector, z_power_unit: int) -> FockVector:
    """``Gamma_+(z)|lam> = sum_{mu < lam} z^{|lam|-|mu|} |mu>``."""
    return _apply(state, z_power_unit, prec, -1)


def pieri_expand(n: int, lam) -> list:
    """All ``mu > lam`` with ``|mu| = |lam| + n``, descending lexicographic."""
    lam = make_partition(lam)
    target = sum(lam) + n
    return sorted((mu for mu in succ(lam, target) if sum(mu) == target), reverse=True)


def verify_gamma_commutation(cutoff: int, z_unit: int, w_unit: int) -> tuple[bool, list]:
    """Check ``Gamma_+(z) Gamma_-(w) = (1 - zw)^-1 Gamma_-(w) Gamma_+(z)`` on ``|lam|<=cutoff``.

    Both sides are computed on a Fock space truncated at ``2*cutoff`` and
    compared on components of weight ``<= cutoff`` below u-order
    ``(z+w)*(cutoff+1)``; every partition dropped by the truncation
    contributes only at or above that order.  Returns ``(ok, failures)``.
    """
    if z_unit + w_unit < 1:
        raise ValueError("need z_unit + w_unit >= 1")
    inner = 2 * cutoff
    order = (z_unit + w_unit) * (cutoff + 1)
    factor = series_geom_inverse(z_unit + w_unit, 1, order)
    failures = []
    for lam in partitions_up_to(cutoff):
        start = FockVector.basis(lam, inner, order)
        lhs = gamma_plus(gamma_minus(start, w_unit), z_unit).restricted(cutoff)
        rhs = (gamma_minus(gamma_plus(start, z_unit), w_unit) * factor).restricted(cutoff)
        if lhs != rhs:
            failures.append(lam)
    return not failures, failures

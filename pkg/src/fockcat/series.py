"""Exact coefficient arithmetic.

``LaurentPoly`` is a Laurent polynomial in ``s = t^(1/2)``; a power ``t^k``
is stored under the s-exponent ``2k``.  ``QSeries`` is a power series in
``u = q^(1/2)`` with ``LaurentPoly`` coefficients, truncated at an explicit
u-order.  Nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = [
    "LaurentPoly",
    "QSeries",
    "PoleError",
    "IrrationalError",
    "quantum_int",
    "series_geom_inverse",
    "specialize_t",
    "T",
    "ONE",
    "ZERO",
]


class PoleError(ZeroDivisionError):
    pass


class IrrationalError(ValueError):
    pass


def _norm(c):
    """Return ``c`` as an int when it is integral, otherwise as a Fraction."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def _fmt_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_half(k: int) -> str:
    """Format ``k/2`` as ``"3"`` or ``"3/2"``."""
    return str(k // 2) if k % 2 == 0 else f"{k}/2"


class LaurentPoly:
    """Immutable Laurent polynomial in ``s = t^(1/2)`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if not isinstance(e, int):
                    raise TypeError("s-exponents must be integers")
                c = _norm(c)
                if c:
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> LaurentPoly:
        """Build from exponent -> int/Fraction without type checks."""
        self = object.__new__(cls)
        self._terms = {
            e: (c.numerator if type(c) is Fraction and c.denominator == 1 else c)
            for e, c in terms.items()
            if c
        }
        self._hash = None
        return self

    @classmethod
    def const(cls, c) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def t_power(cls, k, coeff=1) -> LaurentPoly:
        """``coeff * t^k`` for integer or half-integer ``k``."""
        k2 = Fraction(k) * 2
        if k2.denominator != 1:
            raise ValueError(f"t-exponent {k} is not a multiple of 1/2")
        return cls({int(k2): coeff})

    @classmethod
    def s_power(cls, e: int, coeff=1) -> LaurentPoly:
        return cls({e: coeff})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        return cls.const(x)

    # -- inspection ------------------------------------------------------
    @property
    def terms(self) -> dict:
        """Copy of the s-exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff_s(self, e: int):
        return self._terms.get(e, 0)

    def coeff_t(self, k):
        k2 = Fraction(k) * 2
        if k2.denominator != 1:
            return 0
        return self._terms.get(int(k2), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def constant_term(self):
        return self._terms.get(0, 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def is_t_polynomial(self) -> bool:
        """True when only even, non-negative s-exponents occur."""
        return all(e >= 0 and e % 2 == 0 for e in self._terms)

    def min_s(self):
        return min(self._terms) if self._terms else None

    def max_s(self):
        return max(self._terms) if self._terms else None

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int, Fraction)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) == 1 and 0 in a and a[0] == 1:
            return other
        if len(b) == 1 and 0 in b and b[0] == 1:
            return self
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of LaurentPoly by zero")
            return LaurentPoly({e: Fraction(c) / other for e, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: Fraction(c) ** k})
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift_s(self, d: int) -> LaurentPoly:
        """Multiply by ``s^d``."""
        return LaurentPoly({e + d: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """The involution ``t -> t^-1`` (``s -> s^-1``)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def subs_s(self, value) -> Fraction:
        """Evaluate at ``s = value`` (an exact rational)."""
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self._terms.items():
            if value == 0 and e < 0:
                raise PoleError(f"s^{e} has a pole at s = 0")
            total += c * value ** e
        return _norm(total)

    def subs_t(self, value):
        """Evaluate at ``t = value``; needs an exact square root for odd s-powers."""
        value = Fraction(value)
        if any(e % 2 for e in self._terms):
            root = _exact_sqrt(value)
            if root is None:
                raise IrrationalError(f"t^(1/2) at t = {value} is not rational")
            return self.subs_s(root)
        total = Fraction(0)
        for e, c in self._terms.items():
            if value == 0 and e < 0:
                raise PoleError(f"t^{e // 2} has a pole at t = 0")
            total += c * value ** (e // 2)
        return _norm(total)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- rendering -------------------------------------------------------
    def _monomials(self):
        for e, c in sorted(self._terms.items()):
            if e == 0:
                var = ""
            elif e == 2:
                var = "t"
            elif e % 2 == 0:
                var = f"t^{e // 2}"
            else:
                var = f"t^({e}/2)"
            yield c, var

    def _render(self, sep: str) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (c, var) in enumerate(self._monomials()):
            neg = c < 0
            a = -c if neg else c
            if not var:
                body = _fmt_rational(a)
            elif a == 1:
                body = var
            elif isinstance(a, int):
                body = f"{a}{var}"
            else:
                body = f"{_fmt_rational(a)}*{var}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{sep}-{sep}{body}" if neg else f"{sep}+{sep}{body}")
        return "".join(parts)

    def __str__(self):
        return self._render(" ")

    def compact(self) -> str:
        """Rendering without spaces, as used inside series coefficients."""
        return self._render("")

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict:
        """``{t-exponent: coefficient}`` with both sides as exact decimal strings."""
        return {_fmt_half(e): _fmt_rational(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls({int(Fraction(k) * 2): Fraction(v) for k, v in data.items()})


def _exact_sqrt(x: Fraction):
    if x < 0:
        return None
    from math import isqrt

    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.t_power(1)


def quantum_int(k: int) -> LaurentPoly:
    """``[k] = 1 + t + ... + t^(k-1)``; ``[0] = 0``."""
    if k < 0:
        raise ValueError(f"quantum integer needs k >= 0, got {k}")
    return LaurentPoly({2 * i: 1 for i in range(k)})


class QSeries:
    """Truncated series ``sum c_e u^e`` with ``u = q^(1/2)``, valid for ``e < order``."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs=None, order: int = 0):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        clean = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if e < 0:
                    raise ValueError("negative u-exponent")
                if e >= order:
                    continue
                c = LaurentPoly.coerce(c)
                if c:
                    clean[e] = c
        self._coeffs = clean

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls({0: ONE}, order)

    @classmethod
    def monomial(cls, e: int, coeff, order: int) -> QSeries:
        return cls({e: coeff}, order)

    @classmethod
    def _raw(cls, coeffs: dict, order: int) -> QSeries:
        out = cls.__new__(cls)
        out.order = order
        out._coeffs = coeffs
        return out

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def coeff_u(self, e: int) -> LaurentPoly:
        if e >= self.order:
            raise ValueError(f"u^{e} is beyond the truncation order {self.order}")
        return self._coeffs.get(e, ZERO)

    def coeff_q(self, n) -> LaurentPoly:
        e = Fraction(n) * 2
        if e.denominator != 1:
            raise ValueError(f"q-exponent {n} is not a multiple of 1/2")
        return self.coeff_u(int(e))

    def q_coefficients(self) -> list:
        """Coefficients of ``q^0, q^1, ...`` below the truncation order."""
        return [self._coeffs.get(2 * n, ZERO) for n in range((self.order + 1) // 2)]

    def is_zero(self) -> bool:
        return not self._coeffs

    def has_only_integer_q_powers(self) -> bool:
        return all(e % 2 == 0 for e in self._coeffs)

    def truncate(self, order: int) -> QSeries:
        order = min(order, self.order)
        return QSeries._raw({e: c for e, c in self._coeffs.items() if e < order}, order)

    def map_coeffs(self, fn) -> QSeries:
        return QSeries({e: fn(c) for e, c in self._coeffs.items()}, self.order)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = {e: c for e, c in self._coeffs.items() if e < order}
        for e, c in other._coeffs.items():
            if e < order:
                s = out.get(e)
                out[e] = c if s is None else s + c
        return QSeries._raw({e: c for e, c in out.items() if c}, order)

    def __neg__(self):
        return QSeries._raw({e: -c for e, c in self._coeffs.items()}, self.order)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = LaurentPoly.coerce(other)
            return QSeries({e: c * other for e, c in self._coeffs.items()}, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = {}
        for e1, c1 in self._coeffs.items():
            if e1 >= order:
                continue
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                if e < order:
                    s = out.get(e)
                    out[e] = c1 * c2 if s is None else s + c1 * c2
        return QSeries._raw({e: c for e, c in out.items() if c}, order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out, base = QSeries.one(self.order), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift_u(self, d: int, order: int | None = None) -> QSeries:
        """Multiply by ``u^d`` (``d >= 0``), keeping ``order`` unless given."""
        order = self.order if order is None else min(order, self.order)
        return QSeries._raw(
            {e + d: c for e, c in self._coeffs.items() if e + d < order}, order
        )

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def agrees_with(self, other: QSeries) -> bool:
        """Equality below the smaller of the two truncation orders."""
        order = min(self.order, other.order)
        return self.truncate(order)._coeffs == other.truncate(order)._coeffs

    __hash__ = None

    def __str__(self):
        parts = []
        for e, c in self.items():
            if e == 0:
                var = ""
            elif e == 2:
                var = "q"
            elif e % 2 == 0:
                var = f"q^{e // 2}"
            else:
                var = f"q^({e}/2)"
            if not var:
                body = c.compact()
                neg = False
            elif len(c._terms) == 1:
                (s, k), = c._terms.items()
                neg = k < 0
                mag = LaurentPoly({s: -k if neg else k})
                body = var if mag == ONE else f"{mag.compact()}{var}"
            else:
                neg = False
                body = f"({c.compact()}){var}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        if self.order == 2:
            big = "O(q)"
        elif self.order % 2 == 0:
            big = f"O(q^{self.order // 2})"
        else:
            big = f"O(q^({self.order}/2))"
        parts.append(f" + {big}" if parts else big)
        return "".join(parts)

    def __repr__(self):
        return f"QSeries({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "order": _fmt_half(self.order),
            "coeffs": {_fmt_half(e): c.to_json() for e, c in self.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> QSeries:
        order = int(Fraction(data["order"]) * 2)
        coeffs = {
            int(Fraction(k) * 2): LaurentPoly.from_json(v) for k, v in data["coeffs"].items()
        }
        return cls(coeffs, order)


def series_geom_inverse(exponent: int, scalar, order: int) -> QSeries:
    """Expansion of ``1 / (1 - scalar * u^exponent)`` below u-order ``order``."""
    if exponent <= 0:
        raise ValueError("exponent must be positive for a convergent expansion")
    if order < 1:
        raise ValueError("order must be at least 1")
    scalar = LaurentPoly.coerce(scalar)
    out, power = {}, ONE
    for j in range((order - 1) // exponent + 1):
        out[j * exponent] = power
        power = power * scalar
    return QSeries(out, order)


def specialize_t(series: QSeries, value) -> QSeries:
    """Evaluate every coefficient of ``series`` at ``t = value``."""
    return QSeries(
        {e: LaurentPoly.const(c.subs_t(value)) for e, c in series.items()}, series.order
    )

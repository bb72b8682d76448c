"""The deformed Heisenberg algebra on generators p_n, q_n over Z[t, t^-1].

Elements are ``HExpr`` objects: finite sums of words in the generators with
``LaurentPoly`` scalars.  ``normal_order`` rewrites any expression with

    q_n p_m  ->  sum_{k>=0} [k+1] p_{m-k} q_{n-k}
    p_a p_b  ->  p_b p_a        (a < b)
    q_a q_b  ->  q_b q_a        (a < b)

until every word reads ``p_{m1} ... p_{mr} q_{n1} ... q_{ns}`` with both index
runs weakly decreasing.  Index-0 letters are the unit and negative indices
are zero; both are resolved when a word is built.

The boson side works with ``AExpr``: polynomials in the commuting modes
``a_{-j}`` (or, with ``side=+1``, in the ``a_{+j}``) indexed by partitions.
"""

from __future__ import annotations

import heapq
import random
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from .partitions import make_partition, merge, partitions_of
from .series import ONE, ZERO, LaurentPoly, quantum_int

__all__ = [
    "Generator",
    "HExpr",
    "AExpr",
    "p",
    "q",
    "normal_order",
    "vacuum_expectation",
    "fock_q_action",
    "a_act",
    "pq_in_a",
    "verify_pq_relation",
    "relation_rhs",
    "degree",
    "qp_inversions",
    "rewrite_measure",
    "check_rewrite_measure",
]

P, Q = "p", "q"


class Generator(NamedTuple):
    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"

    @property
    def degree(self) -> int:
        return self.index if self.kind == P else -self.index


def make_word(letters):
    """Build a word, erasing unit letters; returns None if any index is negative."""
    out = []
    for g in letters:
        if not isinstance(g, Generator):
            g = Generator(*g)
        if g.kind not in (P, Q):
            raise ValueError(f"unknown generator kind {g.kind!r}")
        if g.index < 0:
            return None
        if g.index:
            out.append(g)
    return tuple(out)


def degree(word) -> int:
    return sum(g.degree for g in word)


def is_normal(word) -> bool:
    seen_q = False
    prev = None
    for g in word:
        if g.kind == Q:
            seen_q = True
        elif seen_q:
            return False
        if prev is not None and prev.kind == g.kind and prev.index < g.index:
            return False
        prev = g
    return True


def qp_inversions(word) -> int:
    """Number of pairs (q before p) in ``word``."""
    n_q = inv = 0
    for g in word:
        if g.kind == Q:
            n_q += 1
        else:
            inv += n_q
    return inv


def sort_inversions(word) -> int:
    """Pairs of same-kind letters standing in increasing index order."""
    return sum(
        1
        for i, a in enumerate(word)
        for b in word[i + 1 :]
        if a.kind == b.kind and a.index < b.index
    )


def rewrite_measure(word) -> tuple:
    """Well-founded measure that every rewrite step strictly lowers (lexicographically)."""
    return qp_inversions(word), sort_inversions(word)


def _word_key(word):
    return (-len(word), tuple((0 if g.kind == P else 1, -g.index) for g in word))


def _coeff_text(c: LaurentPoly, standalone: bool) -> tuple[bool, str]:
    """Sign and body for a coefficient in front of a word (or alone)."""
    if len(c.terms) == 1:
        (e, k), = c.terms.items()
        neg = k < 0
        mag = LaurentPoly({e: -k if neg else k})
        if mag == ONE and not standalone:
            return neg, ""
        return neg, mag.compact()
    return False, f"({c.compact()})"


class HExpr:
    """Formal sum of scalar-weighted words in p_n, q_n (not necessarily normal)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in dict(terms).items():
                w = make_word(w)
                if w is None:
                    continue
                c = LaurentPoly.coerce(c)
                if w in clean:
                    c = clean[w] + c
                if c:
                    clean[w] = c
                else:
                    clean.pop(w, None)
        self._terms = clean

    @classmethod
    def scalar(cls, c) -> HExpr:
        return cls({(): c})

    @classmethod
    def word(cls, *letters, coeff=1) -> HExpr:
        return cls({tuple(letters): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _word_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_normal(self) -> bool:
        return all(is_normal(w) for w in self._terms)

    def only_p(self) -> bool:
        return all(g.kind == P for w in self._terms for g in w)

    def degrees(self) -> set:
        return {degree(w) for w in self._terms}

    def scalar_part(self) -> LaurentPoly:
        return self._terms.get((), ZERO)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self._terms.values())

    def map_coeffs(self, fn) -> HExpr:
        return HExpr({w: fn(c) for w, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, HExpr):
            if isinstance(other, (int, Fraction, LaurentPoly)):
                other = HExpr.scalar(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out[w] + c if w in out else c
        return HExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return HExpr({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            c = LaurentPoly.coerce(other)
            return HExpr({w: v * c for w, v in self._terms.items()})
        if not isinstance(other, HExpr):
            return NotImplemented
        out = defaultdict(lambda: ZERO)
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                out[w1 + w2] = out[w1 + w2] + c1 * c2
        return HExpr(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = HExpr.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = HExpr.scalar(other)
        if not isinstance(other, HExpr):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for w, c in self.items():
            neg, ctext = _coeff_text(c, standalone=not w)
            body = "*".join(str(g) for g in w)
            if ctext and body:
                body = f"{ctext}*{body}"
            elif ctext:
                body = ctext
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"HExpr({str(self)!r})"


def p(n: int) -> HExpr:
    return HExpr.word(Generator(P, n))


def q(n: int) -> HExpr:
    return HExpr.word(Generator(Q, n))


# -- rewriting ---------------------------------------------------------------


def redexes(word) -> list:
    """Positions ``i`` where the pair ``word[i], word[i+1]`` can be rewritten."""
    out = []
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a.kind == Q and b.kind == P:
            out.append(i)
        elif a.kind == b.kind and a.index < b.index:
            out.append(i)
    return out


def rewrite_at(word, i) -> list:
    """One rewrite step at position ``i``; returns ``[(word, scalar), ...]``."""
    a, b = word[i], word[i + 1]
    head, tail = word[:i], word[i + 2 :]
    if a.kind == Q and b.kind == P:
        n, m = a.index, b.index
        out = []
        for k in range(min(n, m) + 1):
            mid = make_word([(P, m - k), (Q, n - k)])
            out.append((head + mid + tail, quantum_int(k + 1)))
        return out
    if a.kind == b.kind and a.index < b.index:
        return [(head + (b, a) + tail, ONE)]
    raise ValueError(f"no redex at position {i} of {word}")


def _sorted_desc(parts) -> tuple:
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def _q_past_p(qs: tuple, m: int) -> tuple:
    """``q_{qs} p_m`` as ``sum c p_{m'} q_{qs'}``: ``(((m', qs'), c), ...)``."""
    if not qs or m == 0:
        return (((m, qs), ONE),)
    last, rest = qs[-1], qs[:-1]
    acc = defaultdict(lambda: ZERO)
    for k in range(min(last, m) + 1):
        c = quantum_int(k + 1)
        tail = (last - k,) if last > k else ()
        for (m2, rest2), c2 in _q_past_p(rest, m - k):
            key = (m2, _sorted_desc(rest2 + tail))
            acc[key] = acc[key] + c * c2
    return tuple((k, c) for k, c in acc.items() if c)


def _normal_word(word) -> dict:
    """Normal form of one word, built by appending its letters one at a time."""
    state = {((), ()): ONE}
    for g in word:
        nxt = defaultdict(lambda: ZERO)
        for (ps, qs), c in state.items():
            if g.kind == Q:
                key = (ps, _sorted_desc(qs + (g.index,)))
                nxt[key] = nxt[key] + c
                continue
            for (m2, qs2), c2 in _q_past_p(qs, g.index):
                key = (_sorted_desc(ps + (m2,)) if m2 else ps, qs2)
                nxt[key] = nxt[key] + c * c2
        state = {k: v for k, v in nxt.items() if v}
    return state


def normal_order(expr: HExpr, rng: random.Random | None = None, strategy: str | None = None) -> HExpr:
    """Normal form of ``expr``.

    ``strategy`` is ``"product"`` (the default without ``rng``): each word is
    multiplied out letter by letter, moving every ``p_m`` left through the
    q's already collected.  ``"leftmost"`` applies single rewrite steps at the
    leftmost redex; ``"random"`` (the default when ``rng`` is given) picks
    the redex with ``rng``.  The stepwise strategies take pending words in
    decreasing ``rewrite_measure`` so each distinct word is rewritten once.
    """
    if strategy is None:
        strategy = "product" if rng is None else "random"
    if strategy == "product":
        acc = defaultdict(lambda: ZERO)
        for w, c in expr.terms.items():
            for (ps, qs), c2 in _normal_word(w).items():
                key = tuple(Generator(P, i) for i in ps) + tuple(Generator(Q, i) for i in qs)
                acc[key] = acc[key] + c * c2
        return HExpr(acc)
    if strategy == "leftmost":
        choose = lambda pos: pos[0]  # noqa: E731
        tiebreak = lambda: 0  # noqa: E731
    elif strategy == "random":
        if rng is None:
            raise ValueError("the random strategy needs an rng")
        choose, tiebreak = rng.choice, rng.random
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    pending = {}
    heap = []
    counter = 0

    def push(word, coeff):
        nonlocal counter
        if word in pending:
            pending[word] = pending[word] + coeff
            return
        pending[word] = coeff
        qp, srt = rewrite_measure(word)
        counter += 1
        heapq.heappush(heap, (-qp, -srt, tiebreak(), counter, word))

    for w, c in expr.terms.items():
        push(w, c)
    done = {}
    while heap:
        word = heapq.heappop(heap)[-1]
        coeff = pending.pop(word)
        if not coeff:
            continue
        pos = redexes(word)
        if not pos:
            done[word] = coeff
            continue
        for w2, c in rewrite_at(word, choose(pos)):
            push(w2, coeff * c)
    return HExpr(done)


def check_rewrite_measure(word, rng: random.Random) -> bool:
    """Rewrite ``word`` to normal form along random redexes, checking that each
    step lowers ``rewrite_measure`` and preserves degree."""
    stack, seen = [word], {word}
    while stack:
        w = stack.pop()
        pos = redexes(w)
        if not pos:
            continue
        m, d = rewrite_measure(w), degree(w)
        for child, _ in rewrite_at(w, rng.choice(pos)):
            if rewrite_measure(child) >= m or degree(child) != d:
                return False
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return True


def vacuum_expectation(expr: HExpr) -> LaurentPoly:
    """Scalar part of the normal form: the vacuum-to-vacuum matrix element."""
    return normal_order(expr).scalar_part()


def fock_q_action(n: int, state: HExpr) -> HExpr:
    """Action of ``q_n`` on a Fock state written as a combination of p-words."""
    if n <= 0:
        raise ValueError("q_n needs n >= 1")
    if not state.only_p():
        raise ValueError("Fock states may only contain p generators")
    result = normal_order(q(n) * state)
    return HExpr({w: c for w, c in result.terms.items() if all(g.kind == P for g in w)})


def relation_rhs(n: int, m: int) -> HExpr:
    """``sum_{k>=0} [k+1] p_{m-k} q_{n-k}`` assembled directly."""
    out = HExpr()
    for k in range(min(n, m) + 1):
        out = out + HExpr.word((P, m - k), (Q, n - k), coeff=quantum_int(k + 1))
    return out


# -- boson presentation ------------------------------------------------------


class AExpr:
    """Polynomial in commuting modes ``a_{side*j}`` keyed by partitions.

    ``side=-1`` holds creation modes ``a_{-j}``; ``side=+1`` holds the
    annihilation modes ``a_{+j}``.  The two are never mixed in one object.
    """

    __slots__ = ("side", "_terms")

    def __init__(self, terms=None, side: int = -1):
        if side not in (-1, 1):
            raise ValueError("side must be -1 or +1")
        self.side = side
        clean = {}
        if terms:
            for lam, c in dict(terms).items():
                lam = make_partition(lam)
                c = LaurentPoly.coerce(c)
                if lam in clean:
                    c = clean[lam] + c
                if c:
                    clean[lam] = c
                else:
                    clean.pop(lam, None)
        self._terms = clean

    @classmethod
    def mode(cls, j: int, coeff=1) -> AExpr:
        """The single mode ``a_j`` for ``j != 0``."""
        if j == 0:
            raise ValueError("a_0 is not a generator")
        return cls({(abs(j),): coeff}, side=-1 if j < 0 else 1)

    @classmethod
    def one(cls, side: int = -1) -> AExpr:
        return cls({(): 1}, side)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), [-x for x in kv[0]]))

    def coeff(self, lam) -> LaurentPoly:
        return self._terms.get(tuple(lam), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> LaurentPoly:
        return self._terms.get((), ZERO)

    def homogeneous(self, deg: int) -> AExpr:
        return AExpr({lam: c for lam, c in self._terms.items() if sum(lam) == deg}, self.side)

    def _check(self, other):
        if not isinstance(other, AExpr):
            return False
        if other.side != self.side and not (self.is_constant() or other.is_constant()):
            raise ValueError("cannot combine raising and lowering modes in one AExpr")
        return True

    def is_constant(self) -> bool:
        return all(not lam for lam in self._terms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = AExpr.one(self.side) * other
        if not self._check(other):
            return NotImplemented
        side = self.side if not self.is_constant() else other.side
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return AExpr(out, side)

    __radd__ = __add__

    def __neg__(self):
        return AExpr({lam: -c for lam, c in self._terms.items()}, self.side)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            c = LaurentPoly.coerce(other)
            return AExpr({lam: v * c for lam, v in self._terms.items()}, self.side)
        if not self._check(other):
            return NotImplemented
        side = self.side if not self.is_constant() else other.side
        out = defaultdict(lambda: ZERO)
        for l1, c1 in self._terms.items():
            for l2, c2 in other._terms.items():
                key = merge(l1, l2)
                out[key] = out[key] + c1 * c2
        return AExpr(out, side)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return AExpr({lam: c / other for lam, c in self._terms.items()}, self.side)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AExpr):
            return NotImplemented
        if self._terms != other._terms:
            return False
        return self.side == other.side or self.is_constant()

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"
        sign = "-" if self.side < 0 else ""
        pieces = []
        for lam, c in self.items():
            neg, ctext = _coeff_text(c, standalone=not lam)
            body = "*".join(f"a{sign}{j}" for j in lam)
            if ctext and body:
                body = f"{ctext}*{body}"
            elif ctext:
                body = ctext
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"AExpr({str(self)!r}, side={self.side})"


def _derive(n: int, lam: tuple) -> list:
    """Terms of the derivation ``a_n`` (n > 0) on the monomial ``a_{-lam}``."""
    hits = lam.count(n)
    if not hits:
        return []
    i = lam.index(n)
    rest = lam[:i] + lam[i + 1 :]
    return [(rest, (ONE + LaurentPoly.t_power(n)) * (n * hits))]


def a_act(n: int, expr: AExpr) -> AExpr:
    """Fock action of ``a_n`` on a polynomial in the creation modes."""
    if n == 0:
        raise ValueError("a_0 is not a generator")
    if expr.side != -1 and not expr.is_constant():
        raise ValueError("a_n acts on polynomials in the creation modes a_{-j}")
    if n < 0:
        return AExpr.mode(n) * expr
    out = defaultdict(lambda: ZERO)
    for lam, c in expr.terms.items():
        for rest, f in _derive(n, lam):
            out[rest] = out[rest] + c * f
    return AExpr(out, side=-1)


def pq_in_a(gen, order: int | None = None) -> AExpr:
    """Expand ``p_m`` (or ``q_m``) as a polynomial in the boson modes.

    The generating series ``exp(sum_j a_{-j} z^j / j)`` is expanded term by
    term up to degree ``order``; ``p_m`` is its degree-``m`` part.  For ``q_m``
    the same expansion runs over the modes ``a_{+j}``.
    """
    gen = gen if isinstance(gen, Generator) else Generator(*gen)
    m = gen.index
    order = m if order is None else order
    if order < m:
        raise ValueError("expansion order must reach the generator index")
    side = -1 if gen.kind == P else 1
    if m == 0:
        return AExpr.one(side)
    x = AExpr({(j,): Fraction(1, j) for j in range(1, order + 1)}, side)
    total = AExpr.one(side)
    power = AExpr.one(side)
    for r in range(1, order + 1):
        power = _truncate(power * x, order)
        total = total + power / factorial(r)
    return total.homogeneous(m)


def _truncate(expr: AExpr, order: int) -> AExpr:
    return AExpr({lam: c for lam, c in expr.terms.items() if sum(lam) <= order}, expr.side)


@lru_cache(maxsize=None)
def _commute(alpha: tuple, beta: tuple) -> tuple:
    """Normal-order ``a_{+alpha} a_{-beta}`` into ``sum c a_{-beta'} a_{+alpha'}``."""
    if not alpha:
        return (((beta, ()), ONE),)
    n, rest = alpha[-1], alpha[:-1]
    acc = defaultdict(lambda: ZERO)
    # a_rest a_n a_-beta = a_rest a_-beta a_n + a_rest [a_n, a_-beta]
    for (b2, a2), c in _commute(rest, beta):
        key = (b2, merge(a2, (n,)))
        acc[key] = acc[key] + c
    for reduced, f in _derive(n, beta):
        for (b2, a2), c in _commute(rest, reduced):
            acc[(b2, a2)] = acc[(b2, a2)] + c * f
    return tuple((k, c) for k, c in acc.items() if c)


def normal_product(plus: AExpr, minus: AExpr) -> dict:
    """``plus * minus`` normal-ordered: ``{(minus_part, plus_part): coeff}``."""
    acc = defaultdict(lambda: ZERO)
    for alpha, ca in plus.terms.items():
        for beta, cb in minus.terms.items():
            for key, c in _commute(alpha, beta):
                acc[key] = acc[key] + ca * cb * c
    return {k: c for k, c in acc.items() if c}


@lru_cache(maxsize=None)
def _mode_in_p(j: int) -> tuple:
    """``a_{-j}`` as a polynomial in commuting p's: ``((p_partition, coeff), ...)``.

    Uses ``j p_j = sum_{i=1}^{j} a_{-i} p_{j-i}``, the coefficient identity
    obtained by differentiating the exponential generating series.
    """
    acc = defaultdict(Fraction)
    acc[(j,)] += j
    for i in range(1, j):
        for lam, c in _mode_in_p(i):
            acc[merge(lam, (j - i,))] -= c
    return tuple((k, c) for k, c in acc.items() if c)


def _monomial_in_p(lam: tuple) -> dict:
    out = {(): Fraction(1)}
    for j in lam:
        nxt = defaultdict(Fraction)
        for l1, c1 in out.items():
            for l2, c2 in _mode_in_p(j):
                nxt[merge(l1, l2)] += c1 * c2
        out = {k: c for k, c in nxt.items() if c}
    return out


def _mixed_to_pq(mixed: dict) -> HExpr:
    acc = defaultdict(lambda: ZERO)
    for (beta, alpha), c in mixed.items():
        for pl, cp in _monomial_in_p(beta).items():
            for ql, cq in _monomial_in_p(alpha).items():
                w = tuple(Generator(P, i) for i in pl) + tuple(Generator(Q, i) for i in ql)
                acc[w] = acc[w] + c * (cp * cq)
    return HExpr(acc)


def verify_pq_relation(n: int, m: int) -> tuple[bool, HExpr]:
    """Check ``q_n p_m = sum [k+1] p_{m-k} q_{n-k}`` through the boson modes.

    Both generators are expanded in the modes, the raising modes are moved
    past the lowering ones with ``[a_j, a_{-j}] = j (1 + t^j)``, and the
    result is converted back to the p, q basis.  Returns ``(ok, difference)``.
    """
    lhs = _mixed_to_pq(normal_product(pq_in_a(Generator(Q, n)), pq_in_a(Generator(P, m))))
    diff = lhs - relation_rhs(n, m)
    return diff.is_zero(), diff


def fock_basis(deg: int) -> list:
    """Monomials ``a_{-lam}`` of degree ``deg``: the Fock-space basis in that degree."""
    return [AExpr({lam: 1}) for lam in partitions_of(deg)]

"""Symmetric groups: group algebra, Young symmetrizers, characters, ch map."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

from .heisenberg import AExpr, a_act
from .partitions import make_partition, partitions_of, z_lambda
from .series import ZERO, LaurentPoly

__all__ = [
    "Perm",
    "GroupAlgElem",
    "YoungTableau",
    "ClassFunction",
    "young_symmetrizer",
    "standard_tableaux",
    "irrep_dimension",
    "character",
    "character_table",
    "induce_product",
    "ch",
    "pairing_S",
    "pairing_closed_form",
    "outer_product_multiplicities",
    "regular_character",
    "class_sizes",
    "all_perms",
]


class Perm(tuple):
    """Permutation of ``1..n`` in one-line notation; ``(f*g)(i) = f(g(i))``."""

    def __new__(cls, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("permutations of different rank")
        return Perm(self[j - 1] for j in other)

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for i, j in enumerate(self, 1):
            inv[j - 1] = i
        return Perm(inv)

    def cycle_type(self) -> tuple:
        seen, lengths = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            k, j = 0, start
            while j not in seen:
                seen.add(j)
                j = self(j)
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return (-1) ** (self.n - len(self.cycle_type()))

    def __repr__(self):
        return f"Perm({tuple(self)})"


def all_perms(n: int):
    return [Perm(p) for p in permutations(range(1, n + 1))]


class GroupAlgElem:
    """Element of the rational group algebra of ``S_n``."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for g, c in dict(terms or {}).items():
            g = g if isinstance(g, Perm) else Perm(g)
            if g.n != n:
                raise ValueError("all permutations must have rank n")
            c = Fraction(c)
            if c:
                clean[g] = clean.get(g, 0) + c
        self._terms = {g: c for g, c in clean.items() if c}

    @classmethod
    def basis(cls, g: Perm) -> GroupAlgElem:
        return cls(g.n, {g: 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, 0) + c
        return GroupAlgElem(self.n, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgElem(self.n, {g: c * other for g, c in self._terms.items()})
        if not isinstance(other, GroupAlgElem):
            return NotImplemented
        out = defaultdict(Fraction)
        for g, a in self._terms.items():
            for h, b in other._terms.items():
                out[g * h] += a * b
        return GroupAlgElem(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupAlgElem):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{c}*{tuple(g)}" for g, c in sorted(self._terms.items()))
        return f"GroupAlgElem({self.n}, {body or '0'})"


class YoungTableau:
    """A filling of a Young diagram with ``1..n``, each entry used once."""

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows if len(r))
        self.shape = make_partition(len(r) for r in self.rows)
        n = sum(self.shape)
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, n + 1)):
            raise ValueError("tableau entries must be exactly 1..n")
        self.n = n

    @classmethod
    def row_reading(cls, shape) -> YoungTableau:
        rows, k = [], 1
        for length in shape:
            rows.append(range(k, k + length))
            k += length
        return cls(rows)

    def columns(self):
        return [
            tuple(r[j] for r in self.rows if len(r) > j)
            for j in range(len(self.rows[0]) if self.rows else 0)
        ]

    def is_standard(self) -> bool:
        rows_ok = all(list(r) == sorted(r) for r in self.rows)
        cols_ok = all(list(c) == sorted(c) for c in self.columns())
        return rows_ok and cols_ok

    def __repr__(self):
        return f"YoungTableau({[list(r) for r in self.rows]})"


def standard_tableaux(shape) -> list:
    """All standard Young tableaux of the given shape."""
    shape = make_partition(shape)
    n = sum(shape)
    out = []

    def place(k, filling):
        if k > n:
            out.append(YoungTableau(filling))
            return
        for i, length in enumerate(shape):
            row = filling[i]
            if len(row) < length and (i == 0 or len(filling[i - 1]) > len(row)):
                row.append(k)
                place(k + 1, filling)
                row.pop()

    place(1, [[] for _ in shape])
    return out


def _stabilizer(blocks, n: int) -> list:
    """Permutations of ``1..n`` mapping each block to itself."""
    perms = [list(range(1, n + 1))]
    for block in blocks:
        nxt = []
        for base in perms:
            for image in permutations(block):
                g = list(base)
                for src, dst in zip(block, image):
                    g[src - 1] = dst
                nxt.append(g)
        perms = nxt
    return [Perm(g) for g in perms]


def young_symmetrizer(tableau: YoungTableau) -> GroupAlgElem:
    """The idempotent ``a b / n_lam``: row symmetrizer times column antisymmetrizer."""
    n = tableau.n
    a = GroupAlgElem(n, {g: 1 for g in _stabilizer(tableau.rows, n)})
    b = GroupAlgElem(n, {g: g.sign() for g in _stabilizer(tableau.columns(), n)})
    n_lam = Fraction(factorial(n), irrep_dimension(tableau.shape))
    return (a * b) * (1 / n_lam)


def _hooks(lam) -> list:
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def irrep_dimension(lam) -> int:
    """Dimension of the irreducible ``V_lam`` by the hook-length formula."""
    lam = make_partition(lam)
    return factorial(sum(lam)) // prod(_hooks(lam))


def _beta_set(lam: tuple) -> tuple:
    k = len(lam)
    return tuple(lam[i] + (k - 1 - i) for i in range(k))


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    """Murnaghan-Nakayama: strip rim hooks of length ``mu[0]`` from ``lam``."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beads:
            continue
        # leg length = beads strictly between the old and new position
        leg = sum(1 for x in beta if b - r < x < b)
        new = sorted((beads - {b}) | {b - r}, reverse=True)
        k = len(new)
        smaller = make_partition(x - (k - 1 - i) for i, x in enumerate(new))
        total += (-1) ** leg * _mn(smaller, rest)
    return total


def character(lam, mu) -> int:
    """Value of the irreducible character ``chi^lam`` on the class ``mu``."""
    lam, mu = make_partition(lam), make_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|lambda| = {sum(lam)} differs from |mu| = {sum(mu)}")
    return _mn(lam, mu)


def character_table(n: int) -> tuple[list, list, list]:
    """``(rows, cols, table)`` with rows and cols in descending lexicographic order."""
    parts = list(partitions_of(n))
    return parts, parts, [[character(lam, mu) for mu in parts] for lam in parts]


class ClassFunction:
    """Class function on ``S_n`` with ``LaurentPoly`` values, keyed by cycle type."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values=None):
        self.n = n
        values = dict(values or {})
        out = {}
        for mu in partitions_of(n):
            out[mu] = LaurentPoly.coerce(values.pop(mu, 0))
        if values:
            raise ValueError(f"keys are not cycle types of S_{n}: {sorted(values)}")
        self.values = out

    @classmethod
    def irreducible(cls, lam) -> ClassFunction:
        lam = make_partition(lam)
        n = sum(lam)
        return cls(n, {mu: character(lam, mu) for mu in partitions_of(n)})

    @classmethod
    def trivial(cls, n: int) -> ClassFunction:
        return cls.irreducible((n,) if n else ())

    @classmethod
    def sign(cls, n: int) -> ClassFunction:
        return cls.irreducible((1,) * n)

    def __call__(self, mu) -> LaurentPoly:
        return self.values[tuple(mu)]

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError("class functions on different groups")
        return ClassFunction(self.n, {mu: self.values[mu] + other.values[mu] for mu in self.values})

    def __mul__(self, c):
        return ClassFunction(self.n, {mu: v * c for mu, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    __hash__ = None

    def inner(self, other) -> LaurentPoly:
        """``(1/n!) sum_g f(g) g'(g^-1)``, classwise; real characters assumed."""
        total = ZERO
        for mu in self.values:
            total = total + self.values[mu] * other.values[mu] * Fraction(1, z_lambda(mu))
        return total

    def decompose(self) -> dict:
        """Multiplicity of each irreducible, via the inner product."""
        out = {}
        for lam in partitions_of(self.n):
            m = self.inner(ClassFunction.irreducible(lam))
            if m:
                out[lam] = m
        return out

    def __repr__(self):
        vals = ", ".join(f"{mu}: {v}" for mu, v in self.values.items())
        return f"ClassFunction({self.n}, {{{vals}}})"


def _splits(mu: tuple, m: int):
    """Ways to write ``mu`` as a union ``alpha + beta`` with ``|alpha| = m``.

    Yields each distinct pair ``(alpha, beta)`` once.
    """
    seen = set()

    def rec(i, alpha, beta, wa):
        if i == len(mu):
            if wa == m:
                key = (tuple(alpha), tuple(beta))
                if key not in seen:
                    seen.add(key)
                    yield key
            return
        part = mu[i]
        if wa + part <= m:
            yield from rec(i + 1, alpha + [part], beta, wa + part)
        yield from rec(i + 1, alpha, beta + [part], wa)

    yield from rec(0, [], [], 0)


def induce_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Character of the representation induced from ``S_m x S_n`` to ``S_{m+n}``."""
    m, n = f.n, g.n
    out = {}
    for mu in partitions_of(m + n):
        total = ZERO
        for alpha, beta in _splits(mu, m):
            w = Fraction(z_lambda(mu), z_lambda(alpha) * z_lambda(beta))
            total = total + f.values[alpha] * g.values[beta] * w
        out[mu] = total
    return ClassFunction(m + n, out)


def ch(f: ClassFunction) -> AExpr:
    """Characteristic map: ``sum_mu z_mu^-1 S(f(mu)) a_{-mu}`` with ``S: t -> t^-1``."""
    return AExpr(
        {mu: f.values[mu].bar() * Fraction(1, z_lambda(mu)) for mu in partitions_of(f.n)},
        side=-1,
    )


def pairing_S(lam, mu) -> LaurentPoly:
    """Vacuum pairing of ``a_{-lam}`` with ``a_{-mu}``: apply ``a_{lam_i}`` and read the constant."""
    lam, mu = make_partition(lam), make_partition(mu)
    state = AExpr({mu: 1})
    for j in lam:
        state = a_act(j, state)
        if state.is_zero():
            return ZERO
    return state.constant_term()


def pairing_closed_form(lam, mu) -> LaurentPoly:
    lam, mu = make_partition(lam), make_partition(mu)
    if lam != mu:
        return ZERO
    out = LaurentPoly.const(z_lambda(lam))
    for j in lam:
        out = out * (1 + LaurentPoly.t_power(j))
    return out


def class_sizes(n: int) -> dict:
    return {mu: factorial(n) // z_lambda(mu) for mu in partitions_of(n)}


def regular_character(n: int) -> ClassFunction:
    ident = (1,) * n
    return ClassFunction(n, {mu: factorial(n) if mu == ident else 0 for mu in partitions_of(n)})


def outer_product_multiplicities(lam, n: int) -> dict:
    """Decomposition of ``Ind(chi^lam x triv_n)`` into irreducibles."""
    return induce_product(ClassFunction.irreducible(lam), ClassFunction.trivial(n)).decompose()


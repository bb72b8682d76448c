"""Invariant suites for every module, runnable from the CLI or from tests.

Each suite returns a list of ``Check`` records.  A failing check carries a
short counterexample string; nothing is retried or averaged away.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import heisenberg as H
from . import macmahon as M
from .fock import FockVector, gamma_minus, interlaces, pieri_expand, verify_gamma_commutation
from .partitions import partitions_of, partitions_up_to, z_lambda
from .planepart import (
    check_slice_chain,
    diagonal_slices,
    enumerate_plane_partitions,
    from_slices,
)
from .series import LaurentPoly, QSeries, series_geom_inverse, specialize_t
from .symgrp import (
    ClassFunction,
    ch,
    character,
    character_table,
    induce_product,
    irrep_dimension,
    pairing_closed_form,
    pairing_S,
    standard_tableaux,
    young_symmetrizer,
)

__all__ = ["Budget", "Check", "SUITES", "run_verify", "random_word"]


@dataclass
class Budget:
    max_index: int = 6
    n_words: int = 1000
    word_length: int = 8
    max_q: int = 10
    max_q_deformed: int = 8
    max_rank: int = 7
    seed: int = 0


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: str | None = None


def _first_failure(name, items, predicate, show=repr) -> Check:
    for item in items:
        if not predicate(item):
            return Check(name, False, show(item))
    return Check(name, True)


def random_word(rng: random.Random, max_index: int = 6, max_length: int = 8) -> H.HExpr:
    length = rng.randint(1, max_length)
    letters = [H.Generator(rng.choice("pq"), rng.randint(1, max_index)) for _ in range(length)]
    return H.HExpr.word(*letters)


def random_laurent(rng: random.Random, span: int = 4, rational: bool = True) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, 4)):
        c = rng.randint(-5, 5)
        if rational and rng.random() < 0.3:
            c = Fraction(c, rng.randint(1, 4))
        terms[rng.randint(-span, span)] = c
    return LaurentPoly(terms)


def random_series(rng: random.Random, order: int) -> QSeries:
    return QSeries({e: random_laurent(rng) for e in range(order) if rng.random() < 0.6}, order)


# -- suites -----------------------------------------------------------------


def suite_series(b: Budget) -> list:
    rng = random.Random(b.seed)
    checks = []
    triples = [tuple(random_laurent(rng) for _ in range(3)) for _ in range(200)]
    checks.append(
        _first_failure(
            "laurent ring axioms",
            triples,
            lambda x: (x[0] * x[1]) * x[2] == x[0] * (x[1] * x[2])
            and x[0] * (x[1] + x[2]) == x[0] * x[1] + x[0] * x[2]
            and x[0] * x[1] == x[1] * x[0]
            and x[0] + x[1] == x[1] + x[0],
        )
    )
    series = [
        tuple(random_series(rng, rng.randint(1, 8)) for _ in range(3)) for _ in range(100)
    ]
    checks.append(
        _first_failure(
            "series ring axioms",
            series,
            lambda x: (x[0] * x[1]) * x[2] == x[0] * (x[1] * x[2])
            and x[0] * (x[1] + x[2]) == x[0] * x[1] + x[0] * x[2]
            and x[0] * x[1] == x[1] * x[0],
        )
    )
    cases = [(rng.randint(1, 5), random_laurent(rng), rng.randint(1, 12)) for _ in range(100)]

    def geom_ok(case):
        e, c, order = case
        one_minus = QSeries({0: 1, e: -c}, order)
        return one_minus * series_geom_inverse(e, c, order) == QSeries.one(order)

    checks.append(_first_failure("geometric inverse", cases, geom_ok))
    polys = []
    for _ in range(100):
        a = random_series(rng, 6).map_coeffs(lambda c: LaurentPoly({abs(e) * 2: v for e, v in c.terms.items()}))
        bb = random_series(rng, 6).map_coeffs(lambda c: LaurentPoly({abs(e) * 2: v for e, v in c.terms.items()}))
        polys.append((a, bb, rng.choice([0, 1, 2, Fraction(1, 3), -1])))
    checks.append(
        _first_failure(
            "specialization is multiplicative",
            polys,
            lambda x: specialize_t(x[0] * x[1], x[2]) == specialize_t(x[0], x[2]) * specialize_t(x[1], x[2]),
        )
    )
    return checks


def suite_heisenberg(b: Budget) -> list:
    rng = random.Random(b.seed)
    rng_idx = range(1, b.max_index + 1)
    pairs = [(n, m) for n in rng_idx for m in rng_idx]
    checks = [
        _first_failure(
            "q p relation",
            pairs,
            lambda nm: H.normal_order(H.q(nm[0]) * H.p(nm[1])) == H.relation_rhs(*nm),
        ),
        _first_failure(
            "boson presentation consistency",
            pairs,
            lambda nm: H.verify_pq_relation(*nm)[0],
        ),
        _first_failure(
            "classical specialization",
            pairs,
            lambda nm: H.normal_order(H.q(nm[0]) * H.p(nm[1])).map_coeffs(
                lambda c: LaurentPoly.const(c.subs_t(0))
            )
            == sum(
                (H.p(nm[1] - k) * H.q(nm[0] - k) for k in range(min(nm) + 1)), H.HExpr()
            ),
        ),
        _first_failure(
            "commutativity closure",
            pairs,
            lambda nm: H.normal_order(H.p(nm[0]) * H.p(nm[1]) - H.p(nm[1]) * H.p(nm[0])).is_zero()
            and H.normal_order(H.q(nm[0]) * H.q(nm[1]) - H.q(nm[1]) * H.q(nm[0])).is_zero(),
        ),
    ]
    words = [random_word(rng, b.max_index, b.word_length) for _ in range(b.n_words)]
    strategies = [random.Random(b.seed * 100_003 + i) for i in range(len(words))]
    reference = [H.normal_order(w, strategy="leftmost") for w in words]

    def confluent(i):
        return H.normal_order(words[i], rng=strategies[i]) == reference[i]

    checks.append(
        _first_failure(
            "product algorithm matches leftmost rewriting",
            range(len(words)),
            lambda i: H.normal_order(words[i]) == reference[i],
            show=lambda i: str(words[i]),
        )
    )

    checks.append(
        _first_failure(
            f"confluence on {len(words)} random words",
            range(len(words)),
            confluent,
            show=lambda i: str(words[i]),
        )
    )

    def terminating(i):
        (word,) = words[i].terms
        return H.check_rewrite_measure(word, random.Random(i))

    checks.append(
        _first_failure(
            "termination measure decreases",
            range(len(words)),
            terminating,
            show=lambda i: str(words[i]),
        )
    )

    def graded(i):
        (word,) = words[i].terms
        return reference[i].degrees() <= {H.degree(word)}

    checks.append(
        _first_failure("grading preserved", range(len(words)), graded, show=lambda i: str(words[i]))
    )
    checks.append(
        _first_failure(
            "normal forms are integral",
            range(len(words)),
            lambda i: reference[i].is_integral() and reference[i].is_normal(),
            show=lambda i: str(words[i]),
        )
    )
    return checks


def suite_symgrp(b: Budget) -> list:
    checks = []
    tableaux = [
        T
        for n in range(1, min(b.max_rank, 5) + 1)
        for lam in partitions_of(n)
        for T in standard_tableaux(lam)
    ]

    def idem(T):
        e = young_symmetrizer(T)
        return e * e == e

    checks.append(_first_failure("Young symmetrizers are idempotent", tableaux, idem))

    def orthogonal(n):
        rows, cols, table = character_table(n)
        k = len(rows)
        for i in range(k):
            for j in range(k):
                col = sum(table[r][i] * table[r][j] for r in range(k))
                if col != (z_lambda(cols[i]) if i == j else 0):
                    return False
                row = sum(
                    Fraction(table[i][c] * table[j][c], z_lambda(cols[c])) for c in range(k)
                )
                if row != (1 if i == j else 0):
                    return False
        return True

    checks.append(
        _first_failure("character orthogonality", range(1, b.max_rank + 1), orthogonal)
    )
    checks.append(
        _first_failure(
            "hook length equals character degree",
            [lam for n in range(1, b.max_rank + 1) for lam in partitions_of(n)],
            lambda lam: irrep_dimension(lam) == character(lam, (1,) * sum(lam)),
        )
    )
    top = min(b.max_rank, 6)
    irreps = [lam for n in range(1, top) for lam in partitions_of(n)]
    pairs = [(a, c) for a in irreps for c in irreps if sum(a) + sum(c) <= top]

    def multiplicative(pair):
        f, g = (ClassFunction.irreducible(x) for x in pair)
        return ch(induce_product(f, g)) == ch(f) * ch(g)

    checks.append(_first_failure("ch is multiplicative", pairs, multiplicative))
    checks.append(
        _first_failure(
            "ch(trivial) equals exp expansion of p_n",
            range(1, top + 1),
            lambda n: ch(ClassFunction.trivial(n)) == H.pq_in_a(H.Generator("p", n)),
        )
    )
    lams = partitions_up_to(top)
    checks.append(
        _first_failure(
            "vacuum pairing closed form",
            [(a, c) for a in lams for c in lams],
            lambda x: pairing_S(*x) == pairing_closed_form(*x),
        )
    )
    return checks


def suite_fock(b: Budget) -> list:
    checks = [
        _first_failure(
            "Gamma commutation",
            [(4, 1, 1), (0, 1, 1), (6, 1, 3), (5, 3, 1), (4, 2, 2)],
            lambda c: verify_gamma_commutation(*c)[0],
        )
    ]
    top = min(b.max_rank, 6)
    cases = [(n, lam) for lam in partitions_up_to(top) for n in range(1, top - sum(lam) + 1)]

    def pieri_vs_gamma(case):
        n, lam = case
        out = gamma_minus(FockVector.basis(lam, sum(lam) + n, 2 * n + 1), 2)
        from_gamma = sorted(
            (mu for mu, c in out.coeffs.items() if sum(mu) == sum(lam) + n and c.coeff_u(2 * n) == 1),
            reverse=True,
        )
        return from_gamma == pieri_expand(n, lam)

    checks.append(_first_failure("Pieri equals Gamma_- coefficient", cases, pieri_vs_gamma))

    def pieri_vs_induction(case):
        n, lam = case
        if not lam:
            dec = ClassFunction.trivial(n).decompose()
        else:
            dec = induce_product(ClassFunction.irreducible(lam), ClassFunction.trivial(n)).decompose()
        return all(v == 1 for v in dec.values()) and sorted(dec, reverse=True) == pieri_expand(n, lam)

    checks.append(_first_failure("Pieri equals induction multiplicities", cases, pieri_vs_induction))
    lams = partitions_up_to(6)
    checks.append(
        _first_failure(
            "interlacing antisymmetric and weight-monotone",
            [(a, c) for a in lams for c in lams],
            lambda x: not (interlaces(*x) and interlaces(x[1], x[0]) and x[0] != x[1])
            and (not interlaces(*x) or sum(x[0]) >= sum(x[1])),
        )
    )
    return checks


def suite_planepart(b: Budget) -> list:
    top = min(b.max_q, 10)
    pps = [pi for v in range(top + 1) for pi in enumerate_plane_partitions(v)]
    return [
        _first_failure("slice chain holds", pps, check_slice_chain, show=str),
        _first_failure(
            "slice roundtrip", pps, lambda pi: from_slices(diagonal_slices(pi)) == pi, show=str
        ),
        _first_failure(
            "volume additivity",
            pps,
            lambda pi: pi.volume == sum(sum(lam) for lam in diagonal_slices(pi).values()),
            show=str,
        ),
        _first_failure(
            "counts match product",
            range(top + 1),
            lambda v: len(enumerate_plane_partitions(v)) == M.z_product(top).coeff_q(v),
        ),
    ]


def suite_macmahon(b: Budget) -> list:
    checks = []
    nq, nd = b.max_q, b.max_q_deformed

    def three_way(N):
        return M.z_product(N) == M.z_transfer(N) == M.z_enumeration(N)

    checks.append(_first_failure("Z(q) three-way agreement", range(nq + 1), three_way))
    checks.append(
        _first_failure(
            "Z(q,t) commutation equals product",
            range(nd + 1),
            lambda N: M.z_deformed_commutation(N) == M.z_deformed_product(N),
        )
    )
    checks.append(
        _first_failure(
            "Z(q,0) equals Z(q)",
            range(nq + 1),
            lambda N: specialize_t(M.z_deformed_product(N), 0) == M.z_product(N),
        )
    )

    def pairs(N):
        report = M.compare_methods(N, "deformed", ["product", "pairs"])
        return report.agree

    checks.append(_first_failure("pairs oracle equals Z(q,t)", range(nd + 1), pairs))
    checks.append(
        _first_failure(
            "refined product equals refined pairs",
            range(min(nd, 6) + 1),
            lambda N: M.z_refined_variant(N) == M.z_refined_pairs_oracle(N),
        )
    )

    def integral(N):
        for s in (M.z_product(N), M.z_deformed_product(N), M.z_transfer(N)):
            if not s.has_only_integer_q_powers():
                return False
            for c in s.coeffs.values():
                if not (c.is_integral() and c.is_t_polynomial() and all(v > 0 for v in c.terms.values())):
                    return False
        return True

    checks.append(_first_failure("integrality", range(nd + 1), integral))
    checks.append(
        _first_failure(
            "swap factor matches rewrite system",
            range(1, 4),
            lambda e: M.swap_factor(e, 2 * nd + 2) == M.swap_factor_from_algebra(e, 2 * nd + 2),
        )
    )
    return checks


SUITES = {
    "series": suite_series,
    "heisenberg": suite_heisenberg,
    "symgrp": suite_symgrp,
    "fock": suite_fock,
    "planepart": suite_planepart,
    "macmahon": suite_macmahon,
}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("FOCKCAT_THREADS", "1")))
    except ValueError:
        return 1


def run_verify(suite: str = "all", budget: Budget | None = None) -> dict:
    """Run one suite (or ``"all"``) and return a JSON-ready report."""
    budget = budget or Budget()
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise KeyError(f"unknown suite {suite!r}; available: {', '.join(['all', *SUITES])}")
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        results = list(pool.map(lambda n: SUITES[n](budget), names))
    suites = {
        name: [asdict(c) for c in checks] for name, checks in zip(names, results)
    }
    passed = all(c["passed"] for checks in suites.values() for c in checks)
    return {"budget": asdict(budget), "suites": suites, "passed": passed}

"""Acceptance criteria, one exact check each.

Every check prints a single ``PASS``/``FAIL`` line.  Run under pytest, or
directly with ``python3 tests/test_acceptance.py`` for the summary alone.
"""

import random
import sys
import time

import pytest

from fockcat import heisenberg as H
from fockcat import macmahon as M
from fockcat.fock import pieri_expand
from fockcat.heisenberg import Generator
from fockcat.partitions import partitions_of, z_lambda
from fockcat.planepart import (
    check_slice_chain,
    diagonal_slices,
    enumerate_plane_partitions,
    from_slices,
)
from fockcat.series import specialize_t
from fockcat.symgrp import (
    ClassFunction,
    ch,
    character,
    character_table,
    induce_product,
    irrep_dimension,
    outer_product_multiplicities,
    standard_tableaux,
    young_symmetrizer,
)
from fockcat.verify import random_word


def _first_q_mismatch(a, b, N):
    for n in range(N + 1):
        if a.coeff_q(n) != b.coeff_q(n):
            return f"q^{n}: {a.coeff_q(n)} vs {b.coeff_q(n)}"
    return None


def crit_macmahon_three_way():
    start = time.perf_counter()
    for N in range(0, 11):
        prod, trans = M.z_product(N), M.z_transfer(N)
        count = len(enumerate_plane_partitions(N))
        if prod.coeff_q(N) != count or trans.coeff_q(N) != count:
            return False, f"N={N}: product {prod.coeff_q(N)}, transfer {trans.coeff_q(N)}, count {count}"
    elapsed = time.perf_counter() - start
    return elapsed < 60, f"N=0..10 in {elapsed:.1f}s"


def crit_deformed_commutation():
    for N in range(0, 9):
        bad = _first_q_mismatch(M.z_deformed_commutation(N), M.z_deformed_product(N), N)
        if bad:
            return False, f"N={N}, {bad}"
    return True, "N=0..8"


def crit_t_zero():
    for N in range(0, 11):
        bad = _first_q_mismatch(specialize_t(M.z_deformed_product(N), 0), M.z_product(N), N)
        if bad:
            return False, f"N={N}, {bad}"
    return True, "N=0..10"


def crit_qp_relation():
    for n in range(1, 7):
        for m in range(1, 7):
            if H.normal_order(H.q(n) * H.p(m)) != H.relation_rhs(n, m):
                return False, f"normal_order(q{n}*p{m})"
            ok, diff = H.verify_pq_relation(n, m)
            if not ok:
                return False, f"boson check ({n},{m}) differs by {diff}"
    return True, "1 <= n,m <= 6, both presentations"


def crit_rewrite_health(n_words=1000, seed=0):
    rng = random.Random(seed)
    words = [random_word(rng, 6, 8) for _ in range(n_words)]
    for i, w in enumerate(words):
        (word,) = w.terms
        if not H.check_rewrite_measure(word, random.Random(seed + i)):
            return False, f"measure does not decrease on {w}"
        ref = H.normal_order(w, strategy="leftmost")
        if H.normal_order(w, rng=random.Random(seed * 7919 + i)) != ref:
            return False, f"random strategy differs on {w}"
    return True, f"{n_words} seeded words, index <= 6, length <= 8"


def crit_symmetric_group():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for tab in standard_tableaux(lam):
                e = young_symmetrizer(tab)
                if e * e != e:
                    return False, f"symmetrizer of {tab} is not idempotent"
    for n in range(1, 8):
        rows, cols, table = character_table(n)
        k = len(rows)
        for i in range(k):
            for j in range(k):
                s = sum(table[r][i] * table[r][j] for r in range(k))
                if s != (z_lambda(cols[i]) if i == j else 0):
                    return False, f"column orthogonality fails at n={n}, {cols[i]}, {cols[j]}"
        for lam in rows:
            if irrep_dimension(lam) != character(lam, (1,) * n):
                return False, f"hook length vs character at {lam}"
    return True, "idempotents n<=5, orthogonality n<=7, hook lengths"


def crit_ch_multiplicative():
    for total in range(2, 7):
        for m in range(1, total):
            for lam in partitions_of(m):
                for mu in partitions_of(total - m):
                    f, g = ClassFunction.irreducible(lam), ClassFunction.irreducible(mu)
                    if ch(induce_product(f, g)) != ch(f) * ch(g):
                        return False, f"ch fails on {lam} x {mu}"
    for n in range(1, 7):
        if ch(ClassFunction.trivial(n)) != H.pq_in_a(Generator("p", n)):
            return False, f"ch(triv_{n}) != p_{n}"
    return True, "total rank <= 6, ch(triv_n) = p_n for n <= 6"


def crit_slices():
    count = 0
    for v in range(0, 11):
        for pi in enumerate_plane_partitions(v):
            count += 1
            if not check_slice_chain(pi):
                return False, f"chain fails for {pi}"
            if from_slices(diagonal_slices(pi)) != pi:
                return False, f"roundtrip fails for {pi}"
    return True, f"{count} plane partitions of volume <= 10"


def crit_pieri():
    for m in range(0, 6):
        for lam in partitions_of(m):
            for n in range(1, 7 - m):
                mult = outer_product_multiplicities(lam, n)
                if sorted(mult, reverse=True) != pieri_expand(n, lam) or any(v != 1 for v in mult.values()):
                    return False, f"lambda={lam}, n={n}"
    return True, "|lambda| + n <= 6"


def crit_pairs_oracle():
    for N in range(0, 9):
        bad = _first_q_mismatch(M.z_pairs_oracle(N), M.z_deformed_product(N), N)
        if bad:
            return False, f"N={N}, {bad}"
    return True, "N=0..8"


CRITERIA = [
    ("1 MacMahon three-way agreement", crit_macmahon_three_way),
    ("2 deformed commutation = product", crit_deformed_commutation),
    ("3 Z(q,0) = Z(q)", crit_t_zero),
    ("4 normal ordering relation and boson check", crit_qp_relation),
    ("5 rewrite termination and strategy independence", crit_rewrite_health),
    ("6 symmetric group suite", crit_symmetric_group),
    ("7 ch multiplicative and ch(triv) = p_n", crit_ch_multiplicative),
    ("8 slice roundtrip and chain condition", crit_slices),
    ("9 Pieri vs induction", crit_pieri),
    ("10 pairs oracle = deformed product", crit_pairs_oracle),
]


def _report(name, fn):
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}"
    return ok, line


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, line = _report(name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_report(name, fn) for name, fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

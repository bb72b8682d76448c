"""
Characters of S_n and the characteristic map
============================================

Young symmetrizers, Murnaghan-Nakayama characters, induction from Young
subgroups, and the map ch that turns class functions into polynomials in
the creation modes.
"""

from fockcat.heisenberg import Generator, pq_in_a
from fockcat.symgrp import (
    ClassFunction,
    YoungTableau,
    ch,
    character_table,
    induce_product,
    pairing_S,
    young_symmetrizer,
)

spacer = "_" * 60

rows, cols, table = character_table(4)
print("character table of S_4 (columns:", ", ".join(map(str, cols)) + ")")
for lam, vals in zip(rows, table):
    print(f"  {str(lam):14s}", vals)

print(spacer)

e = young_symmetrizer(YoungTableau([[1, 2], [3]]))
print("e for [[1,2],[3]] is idempotent:", e * e == e)

print(spacer)

f = ClassFunction.irreducible((2, 1))
g = ClassFunction.trivial(1)
prod = induce_product(f, g)
print("Ind((2,1) x (1)) decomposes as", {lam: str(m) for lam, m in prod.decompose().items()})
print("ch of it equals ch(f) ch(g):", ch(prod) == ch(f) * ch(g))

print(spacer)

print("ch(triv_3) =", ch(ClassFunction.trivial(3)))
print("p3         =", pq_in_a(Generator("p", 3)))

print(spacer)

print("<a_-(1,1), a_-(1,1)> =", pairing_S((1, 1), (1, 1)))

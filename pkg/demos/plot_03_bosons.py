"""
The boson presentation
======================

With [a_n, a_m] = n (1 + t^n) delta_(n+m,0), the p's and q's are the
halves of a vertex operator:

    sum p_m z^m = exp(sum a_(-j) z^j / j)

Here we expand p_m in the modes and check the defining relation of p, q
by moving annihilation modes to the right.
"""

from fockcat.heisenberg import AExpr, Generator, a_act, pq_in_a, verify_pq_relation

spacer = "_" * 60

for m in range(1, 5):
    print(f"p{m} =", pq_in_a(Generator("p", m)))

print(spacer)

# a_1 acts on polynomials in the creation modes as a derivation
a = AExpr.mode
state = a(-1) * a(-1) * a(-2)
print("state           :", state)
print("a_1 . state     :", a_act(1, state))
print("a_2 . state     :", a_act(2, state))

print(spacer)

for n, m in [(1, 1), (2, 1), (3, 3), (4, 2)]:
    ok, _ = verify_pq_relation(n, m)
    print(f"q{n} p{m} relation through the modes: {'holds' if ok else 'FAILS'}")

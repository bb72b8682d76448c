"""
Normal ordering in the deformed Heisenberg algebra
==================================================

The generators p_n, q_n satisfy

    q_n p_m = sum_k [k+1] p_(m-k) q_(n-k)

and the p's (and the q's) commute among themselves.  Read left to right as
a rewrite rule this moves every q to the right of every p.
"""

import random

from fockcat import normal_order, p, parse_expression, q, vacuum_expectation

spacer = "_" * 60

print("q1 p1      ->", normal_order(q(1) * p(1)))
print("q2 p1      ->", normal_order(q(2) * p(1)))
print("q1 p1^3    ->", normal_order(q(1) * p(1) ** 3))

print(spacer)

# expressions can be typed as text; products keep their written order
e = parse_expression("q3*p2*q1*p2 - 2*p1*q1")
print("input      :", e)
print("normal form:", normal_order(e))

print(spacer)

# the answer does not depend on where rewrites are applied
for seed in range(3):
    print(f"random strategy, seed {seed}:", normal_order(e, rng=random.Random(seed)) == normal_order(e))

print(spacer)

# vacuum expectations keep only the scalar part
for n in range(1, 5):
    print(f"<q{n} p{n}> =", vacuum_expectation(q(n) * p(n)))

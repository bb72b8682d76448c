"""
MacMahon's function, several ways
=================================

Z(q) = prod (1 - q^n)^-n counts plane partitions.  It is also the vacuum
expectation of a product of transfer operators.  Its deformation

    Z(q,t) = prod (1 - q^n)^-n (1 - t q^n)^-n

comes from commuting the deformed operators past each other, and agrees
with counting pairs of plane partitions weighted by t^trace.
"""

from fockcat import macmahon as M
from fockcat.series import specialize_t

spacer = "_" * 60

N = 6
for name, fn in M.METHODS.items():
    print(f"{name:12s}", fn(N))

print(spacer)

for name, fn in M.DEFORMED_METHODS.items():
    print(f"{name:12s}", fn(4))

print(spacer)

print("Z(q,0) = Z(q):", specialize_t(M.z_deformed_product(8), 0) == M.z_product(8))

print(spacer)

# the refined variant is symmetric under t^(1/2) -> t^(-1/2)
print("refined:", M.z_refined_variant(2))
report = M.compare_methods(6, "refined")
print("refined product = weighted pairs:", report.agree)

"""
Transfer operators on partitions
================================

Gamma_-(z) adds a horizontal strip, Gamma_+(z) removes one, and each box
moved costs one power of z.  Spectral parameters are given in units of
q^(1/2).
"""

from fockcat.fock import FockVector, gamma_minus, gamma_plus, pieri_expand, verify_gamma_commutation

spacer = "_" * 60

state = FockVector.basis((1,), cutoff=3, order=7)
print("Gamma_-(q^(1/2)) |(1)> =")
print(gamma_minus(state, 1))

print(spacer)

print("Gamma_+(q) |(2,1)> =")
print(gamma_plus(FockVector.basis((2, 1), 3, 9), 2))

print(spacer)

print("strips of size 2 on (2,1):", pieri_expand(2, (2, 1)))

print(spacer)

# Gamma_+(z) Gamma_-(w) = Gamma_-(w) Gamma_+(z) / (1 - z w)
for cutoff, z, w in [(4, 1, 1), (5, 1, 3)]:
    ok, _ = verify_gamma_commutation(cutoff, z, w)
    print(f"commutation on weights <= {cutoff}, z=q^({z}/2), w=q^({w}/2):", ok)

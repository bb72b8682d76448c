"""
Exact series in q with coefficients in t^(1/2)
==============================================

Everything in fockcat is exact.  Coefficients are Laurent polynomials in
s = t^(1/2), and series in q are truncated at an explicit order.
"""

from fockcat.series import ONE, T, LaurentPoly, QSeries, quantum_int, series_geom_inverse, specialize_t

spacer = "_" * 60

# quantum integers [k] = 1 + t + ... + t^(k-1)
for k in range(5):
    print(f"[{k}] =", quantum_int(k))

print(spacer)

# series are stored in u = q^(1/2); order 7 means terms u^0..u^6 are kept
geo = series_geom_inverse(2, T, 7)
print("1/(1 - t q)      =", geo)
print("times (1 - t q)  =", QSeries({0: 1, 2: -T}, 7) * geo)

print(spacer)

# half powers of t and q are first-class
s = LaurentPoly.s_power(1)
print("(t^(1/2) + t^(-1/2))^2 =", (s + s.bar()) ** 2)
print("q^(1/2) factor        :", series_geom_inverse(1, ONE, 4))

print(spacer)

# specializing t
z = QSeries({0: 1, 2: 1 + T, 4: 3 + 3 * T + T * T}, 6)
print("series   :", z)
print("at t = 0 :", specialize_t(z, 0))
print("at t = 1 :", specialize_t(z, 1))

"""Exact cyclotomic arithmetic: conductors, Galois action, subfields.

Values are stored at their minimal conductor, so equality is canonical:
zeta_6 is recognized as living in Q_3, and sums of roots collapse to
rationals whenever they should.
"""

from fractions import Fraction

from charfield import (
    conjugate,
    count_subfields,
    degree_over_Q,
    galois,
    omega_degree,
    root_of_unity,
)

z3 = root_of_unity(3)
print("zeta_3 + zeta_3^2 =", z3 + galois(z3, 2))          # -1
print("zeta_5 * zeta_5^4 =", root_of_unity(5) * root_of_unity(5, 4))  # 1
print("conductor of zeta_6:", root_of_unity(6).conductor)  # 3, since Q_6 = Q_3

# The Galois action sigma_k sends zeta_n to zeta_n^k.
w = root_of_unity(5) + root_of_unity(5, 4)   # 2 cos(2 pi / 5)
print("\nw =", w, " sigma_2(w) =", galois(w, 2), " conj(w) =", conjugate(w))
print("[Q(w):Q] =", degree_over_Q(w))

# omega_degree(r) is the degree of zeta_r + zeta_r^(-1): rational exactly
# for r in {3, 4, 6}, quadratic for {5, 8, 10, 12}, cubic for {7, 9, 14, 18}.
print("\nr, degree of zeta_r + 1/zeta_r:")
print([(r, omega_degree(r)) for r in range(3, 21)])

# Subfield counting inside Q_n: number of quadratic / cubic subfields,
# straight from the structure of (Z/n)*.
for n, d in ((7, 2), (15, 2), (63, 3), (9, 3)):
    print(f"Q_{n} has {count_subfields(n, d).count} degree-{d} subfield(s)")

# Arithmetic is exact rational throughout.
v = Fraction(1, 2) * root_of_unity(8) + Fraction(1, 2) * root_of_unity(8, 7)
print("\n(zeta_8 + zeta_8^-1)/2 =", v, " squared =", v * v)  # 1/2

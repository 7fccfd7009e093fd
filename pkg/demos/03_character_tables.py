"""Exact character tables via the Dixon-Schneider modular method.

The table is computed over GF(p) for the smallest admissible prime and
lifted back to exact sums of roots of unity; the result is independent of
the prime, and six exact checks (orthogonality, degrees, Galois closure,
integrality) validate every table.
"""

from charfield import (
    abelian_character_table,
    build,
    conjugacy_classes,
    dixon_table,
    validate_table,
)
from charfield.chartab import admissible_prime
from charfield.cli import format_table

a5 = build("A5")
t = dixon_table(a5)
print(format_table(t, "A5", "pretty"))
# The two degree-3 rows carry (1 +- sqrt 5)/2 on the order-5 classes.

rep = validate_table(t)
print("validation:", "all six checks pass" if rep.all_ok else rep.failures)

# Prime independence: the exact table cannot depend on the working prime.
p2 = admissible_prime(a5.order, t.exponent, after=t.prime)
t2 = dixon_table(a5, prime=p2)
print(f"\nprimes {t.prime} and {p2} give identical tables:",
      t.values == t2.values)

# For abelian groups an independent dual-group construction must agree.
c12 = build("C12")
print("abelian duality agrees on C12:",
      dixon_table(c12).values == abelian_character_table(c12).values)

# The big corpus group: Sz(8), 29120 elements, 11 classes, exponent 1820.
sz = build("Sz(8)")
tsz = dixon_table(sz, conjugacy_classes(sz))
print(f"\nSz(8): prime {tsz.prime}, degrees {tsz.degrees}")
print("Sz(8) validation:", validate_table(tsz).all_ok)

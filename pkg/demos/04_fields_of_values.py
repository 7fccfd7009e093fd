"""Fields of values and the multiplicity invariant f(G).

f(G) is the largest number of irreducible characters sharing one field of
values.  Buckets are keyed by canonical field labels (minimal conductor +
Galois stabilizer), so the same field arising in different groups compares
equal.
"""

from charfield import (
    build,
    degree_bound_check,
    derived_subgroup,
    dixon_table,
    f_value,
    monotonicity_check,
)
from charfield.cli import format_fov

for spec in ("D10", "F21", "C6", "S4", "A5"):
    rep = f_value(dixon_table(build(spec)), spec)
    print(format_fov(rep, "pretty"))

# Structural checks the verifier leans on:
rep = f_value(dixon_table(build("F21")), "F21")
print("F21 degree bound check:", degree_bound_check(rep))

# f is monotone under quotients: f(G/N) <= f(G).
a4 = build("A4")
ok, f_g, f_q = monotonicity_check(a4, derived_subgroup(a4))
print(f"A4: f(G) = {f_g}, f(G/G') = {f_q}, monotone: {ok}")

c6 = build("C6")
n = frozenset(i for i in range(6) if c6.element(i).order() in (1, 3))
ok, f_g, f_q = monotonicity_check(c6, n)
print(f"C6: f(G) = {f_g}, f(G/C3) = {f_q}, monotone: {ok}")

import dataclasses
import random
from collections import Counter

import pytest

from charfield import modp
from charfield.chartab import (
    abelian_character_table,
    admissible_prime,
    class_multiplication_coefficients,
    dixon_table,
    exponent,
    validate_table,
)
from charfield.cyclo import Cyclo, root_of_unity
from charfield.perm import conjugacy_classes
from charfield.zoo import build


def table(spec, prime=None):
    g = build(spec)
    return dixon_table(g, prime=prime)


# -- modp helpers ------------------------------------------------------------


def test_charpoly_against_known_matrices():
    p = 101
    # companion matrix of x^3 + 2x + 5
    A = [[0, 0, -5 % p], [1, 0, -2 % p], [0, 1, 0]]
    assert modp.charpoly(A, p) == [5, 2, 0, 1]
    # triangular matrix: roots are the diagonal
    B = [[3, 7, 1], [0, 4, 2], [0, 0, 9]]
    assert sorted(modp.distinct_roots(modp.charpoly(B, p), p)) == [3, 4, 9]


def test_charpoly_similarity_invariant():
    rng = random.Random(11)
    p = 97
    for _ in range(20):
        n = rng.randint(2, 6)
        A = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        # conjugate by a random invertible matrix
        while True:
            S = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
            try:
                Sinv = modp.mat_inv(S, p)
                break
            except ValueError:
                continue
        B = modp.mat_mul(Sinv, modp.mat_mul(A, S, p), p)
        assert modp.charpoly(A, p) == modp.charpoly(B, p)


def test_distinct_roots_random_products():
    rng = random.Random(3)
    p = 10007
    for _ in range(15):
        roots = sorted(rng.sample(range(p), rng.randint(1, 6)))
        f = [1]
        for r in roots:
            f = modp.poly_mul(f, [-r % p, 1], p)
        assert modp.distinct_roots(f, p) == roots


def test_nullspace():
    p = 7
    A = [[1, 2, 3], [2, 4, 6]]
    basis = modp.nullspace(A, p)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) % p == 0 for row in A)


# -- exponent and class coefficients ----------------------------------------


def test_exponent():
    assert exponent(conjugacy_classes(build("C4"))) == 4
    assert exponent(conjugacy_classes(build("Sz(8)"))) == 1820
    assert exponent(conjugacy_classes(build("PSL(2,19)"))) == 1710


def test_class_coefficients_trivial_and_c2():
    triv = build("C1")
    a = class_multiplication_coefficients(triv, conjugacy_classes(triv))
    assert a[0][0][0] == 1
    c2 = build("C2")
    a = class_multiplication_coefficients(c2, conjugacy_classes(c2))
    assert a[1][1][0] == 1


def test_class_coefficients_s3_brute():
    s3 = build("S3")
    cd = conjugacy_classes(s3)
    a = class_multiplication_coefficients(s3, cd)
    assert a[1][1][0] == 3  # three transpositions square to the identity
    # brute force: count solutions x*y = z over the element table
    n = s3.order
    for k in range(cd.k):
        z = cd.reps[k]
        counts = Counter()
        for x in range(n):
            for y in range(n):
                if s3.mul(x, y) == z:
                    counts[(cd.class_of[x], cd.class_of[y])] += 1
        for i in range(cd.k):
            for j in range(cd.k):
                assert a[i][j][k] == counts.get((i, j), 0)


def test_class_coefficients_independent_of_z():
    g = build("S4")
    cd = conjugacy_classes(g)
    a = class_multiplication_coefficients(g, cd)
    rng = random.Random(8)
    ids_by_class = [[] for _ in range(cd.k)]
    for i in range(g.order):
        ids_by_class[cd.class_of[i]].append(i)
    choice = {k: rng.choice(ids_by_class[k]) for k in range(cd.k)}
    b = class_multiplication_coefficients(g, cd, z_choice=choice)
    assert (a == b).all()


# -- dixon tables ------------------------------------------------------------


def test_c2_rows():
    t = table("C2")
    assert t.degrees == (1, 1)
    assert set(t.values) == {
        (Cyclo.from_rational(1), Cyclo.from_rational(1)),
        (Cyclo.from_rational(1), Cyclo.from_rational(-1)),
    }


def test_c3_rows():
    t = table("C3")
    z = root_of_unity(3)
    z2 = root_of_unity(3, 2)
    one = Cyclo.from_rational(1)
    assert set(t.values) == {(one, one, one), (one, z, z2), (one, z2, z)}


def test_trivial_group():
    t = table("C1")
    assert t.degrees == (1,)
    assert validate_table(t).all_ok


def test_a5_table():
    t = table("A5")
    assert sorted(t.degrees) == [1, 3, 3, 4, 5]
    golden = {Cyclo.from_rational(1) + root_of_unity(5) + root_of_unity(5, 4),
              Cyclo.from_rational(1) + root_of_unity(5, 2) + root_of_unity(5, 3)}
    threes = [i for i, d in enumerate(t.degrees) if d == 3]
    order5 = [j for j in range(t.k) if t.classes.element_orders[j] == 5]
    assert len(order5) == 2
    for i in threes:
        assert {t.values[i][j] for j in order5} == golden
    assert validate_table(t).all_ok


def test_psl24_matches_a5_degrees():
    a = table("PSL(2,4)")
    b = table("A5")
    assert sorted(a.degrees) == sorted(b.degrees)
    assert sorted(a.classes.sizes) == sorted(b.classes.sizes)


def test_k_equals_class_count():
    for spec in ("C1", "C2", "C6", "D10", "S4", "A5", "F21"):
        t = table(spec)
        assert len(t.degrees) == t.classes.k == t.k


def test_degree_sum_small_corpus():
    for spec in ("C4", "D14", "F20", "F52", "A4", "S3"):
        t = table(spec)
        assert sum(d * d for d in t.degrees) == t.group.order


def test_prime_independence():
    for spec in ("S3", "C6", "D10", "A4"):
        t1 = table(spec)
        p2 = admissible_prime(t1.group.order, t1.exponent, after=t1.prime)
        t2 = table(spec, prime=p2)
        assert t1.prime != t2.prime
        assert t1.degrees == t2.degrees
        assert t1.values == t2.values


def test_admissible_prime_values():
    assert admissible_prime(60, 30) == 31
    assert admissible_prime(504, 126) == 127
    assert admissible_prime(24, 12) == 13


def test_abelian_duality_oracle():
    for spec in ("C2", "C4", "C6", "C8", "C9", "C2xC2", "C3xC3", "C2xC4", "C12", "C2xC2xC3"):
        g = build(spec)
        t = dixon_table(g)
        dual = abelian_character_table(g, t.classes)
        assert t.degrees == dual.degrees, spec
        assert t.values == dual.values, spec


def test_abelian_oracle_rejects_nonabelian():
    with pytest.raises(ValueError):
        abelian_character_table(build("S3"))


def test_validation_passes_on_small_corpus():
    for spec in ("C6", "S3", "D18", "F21", "A4", "S4", "D10"):
        rep = validate_table(table(spec))
        assert rep.all_ok, (spec, rep.failures)


def test_a4_galois_pairing():
    # sigma_2 swaps the two linear rows with values in Q(zeta_3)
    from charfield.cyclo import galois

    t = table("A4")
    cubic_rows = [row for row, d in zip(t.values, t.degrees)
                  if d == 1 and any(v.n == 3 for v in row)]
    assert len(cubic_rows) == 2
    a, b = cubic_rows
    assert tuple(galois(v, 2) for v in a) == b
    assert tuple(galois(v, 2) for v in b) == a


def test_mutation_breaks_row_orthogonality():
    t = table("S3")
    values = [list(row) for row in t.values]
    values[0][1] = values[0][1] + 1
    bad = dataclasses.replace(t, values=tuple(tuple(r) for r in values))
    rep = validate_table(bad)
    assert not rep.row_orthogonality
    assert not rep.all_ok


def test_table_json_shape():
    obj = table("C4").to_obj("C4")
    assert obj["order"] == 4 and obj["exponent"] == 4
    assert [c["order"] for c in obj["classes"]] == [1, 2, 4, 4]
    assert len(obj["irreducibles"]) == 4

"""Fields of values, their multiplicities, and the bound comparisons.

The field of values of a row is computed from its Galois stabilizer
{k coprime to the exponent : chi(g^k) = chi(g) for all g} via the class
power maps; the label is then pushed down to the smallest cyclotomic
conductor containing the field so that the same subfield arising in
different groups gets the same key.  f(G) is the largest number of rows
sharing one field label.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import euler_phi, floor_log2_log2, prime_exponent_sum, prime_factors, units
from .chartab import CharacterTable
from .cyclo import degree_over_Q


@dataclass(frozen=True, order=True)
class FieldLabel:
    """Canonical name of a subfield of a cyclotomic field.

    conductor: smallest m with the field inside Q_m; stabilizer: the sorted
    residues mod m fixing the field (the trivial group is written (1,));
    degree: phi(m) // len(stabilizer).
    """

    conductor: int
    stabilizer: tuple[int, ...]
    degree: int

    def is_rational(self) -> bool:
        return self.conductor == 1

    def __str__(self):
        if self.conductor == 1:
            return "Q"
        return f"Q({self.conductor}|{','.join(map(str, self.stabilizer))})"


RATIONAL_FIELD = FieldLabel(1, (1,), 1)


def _descend_label(n: int, stab: frozenset[int]) -> FieldLabel:
    while n > 1:
        for p in prime_factors(n):
            m = n // p
            kernel = [k for k in units(n) if k % max(m, 1) == 1 % max(m, 1)]
            if all(k in stab for k in kernel):
                stab = frozenset(k % m for k in stab) if m > 1 else frozenset({1})
                n = m
                break
        else:
            break
    if n == 1:
        return RATIONAL_FIELD
    degree = euler_phi(n) // len(stab)
    return FieldLabel(n, tuple(sorted(stab)), degree)


def field_of_values(table: CharacterTable, row: int) -> FieldLabel:
    """Canonical label of Q(chi) for one row of the table."""
    e = table.exponent
    values = table.values[row]
    classes = table.classes
    stab = []
    for k in units(e):
        if all(values[classes.power_map(j, k)] == values[j] for j in range(classes.k)):
            stab.append(k)
    label = _descend_label(e, frozenset(stab))
    # cross-check: the stabilizer-index degree equals the largest degree of
    # a single value
    value_degree = max(degree_over_Q(v) for v in values)
    if value_degree != label.degree:  # pragma: no cover - fails only on a bug
        raise ArithmeticError(
            f"field degree mismatch on row {row}: stabilizer gives {label.degree}, "
            f"values give {value_degree}")
    return label


@dataclass(frozen=True)
class BoundsData:
    """Exact comparisons of f and k against the classic class-number bounds."""

    order: int
    floor_log2_log2: int
    omega: int
    k_ge_log2log2: bool      # 2^(2^k) >= |G|
    f_ge_floor_log2log2: bool
    k_gt_log3: bool          # 3^k > |G|
    f_gt_log3: bool
    k_ge_omega: bool
    f_ge_omega: bool


def _bounds(order: int, k: int, f: int) -> BoundsData:
    fll = floor_log2_log2(order) if order >= 2 else 0
    return BoundsData(
        order=order,
        floor_log2_log2=fll,
        omega=prime_exponent_sum(order) if order > 1 else 0,
        k_ge_log2log2=2 ** (2**k) >= order,
        f_ge_floor_log2log2=f >= fll,
        k_gt_log3=3**k > order,
        f_gt_log3=3**f > order,
        k_ge_omega=k >= prime_exponent_sum(order) if order > 1 else True,
        f_ge_omega=f >= prime_exponent_sum(order) if order > 1 else True,
    )


@dataclass(frozen=True)
class FReport:
    """Field buckets and the multiplicity invariant for one group."""

    group: str
    order: int
    k: int
    f: int
    rational: int
    max_degree: int
    degrees: tuple[int, ...]  # character degree per row, table order
    buckets: tuple[tuple[FieldLabel, tuple[int, ...]], ...]  # label -> row indices
    bounds: BoundsData

    def bucket_sizes(self) -> dict[FieldLabel, int]:
        return {label: len(rows) for label, rows in self.buckets}

    def to_obj(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "k": self.k,
            "f": self.f,
            "rational": self.rational,
            "max_degree": self.max_degree,
            "buckets": [
                {
                    "conductor": label.conductor,
                    "stabilizer": list(label.stabilizer),
                    "degree": label.degree,
                    "rows": [{"degree": self.degrees[i]} for i in rows],
                }
                for label, rows in self.buckets
            ],
            "bounds": {
                "floor_log2_log2": self.bounds.floor_log2_log2,
                "log3": f"{math.log(self.order, 3):.6f}" if self.order > 1 else "0.000000",
                "omega": self.bounds.omega,
                "k_ge_log2log2": self.bounds.k_ge_log2log2,
                "f_ge_floor_log2log2": self.bounds.f_ge_floor_log2log2,
                "k_gt_log3": self.bounds.k_gt_log3,
                "f_gt_log3": self.bounds.f_gt_log3,
                "k_ge_omega": self.bounds.k_ge_omega,
                "f_ge_omega": self.bounds.f_ge_omega,
            },
        }


def f_value(table: CharacterTable, name: str = "") -> FReport:
    """Bucket every row by its field of values; f = largest bucket."""
    k = table.k
    buckets: dict[FieldLabel, list[int]] = {}
    for row in range(k):
        buckets.setdefault(field_of_values(table, row), []).append(row)
    assert sum(len(v) for v in buckets.values()) == k
    ordered = tuple(sorted(((lab, tuple(rows)) for lab, rows in buckets.items()),
                           key=lambda it: (it[0].degree, it[0].conductor, it[0].stabilizer)))
    f = max(len(rows) for _, rows in ordered)
    rational = len(dict(ordered).get(RATIONAL_FIELD, ()))
    max_degree = max(lab.degree for lab, _ in ordered)
    return FReport(
        group=name,
        order=table.group.order,
        k=k,
        f=f,
        rational=rational,
        max_degree=max_degree,
        degrees=table.degrees,
        buckets=ordered,
        bounds=_bounds(table.group.order, k, f),
    )


def rational_count(table: CharacterTable) -> int:
    """Rows whose values are all rational (field = Q)."""
    return sum(1 for row in table.values if all(v.n == 1 for v in row))


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    witnesses: tuple[str, ...]


def degree_bound_check(report: FReport) -> CheckResult:
    """max row-field degree <= f; and when f <= 3, every quadratic field
    carries at most two rows."""
    witnesses = []
    if report.max_degree > report.f:
        witnesses.append(
            f"max field degree {report.max_degree} exceeds f={report.f}")
    if report.f <= 3:
        for label, rows in report.buckets:
            if label.degree == 2 and len(rows) > 2:
                witnesses.append(
                    f"quadratic field {label} carries {len(rows)} rows with f<=3")
    return CheckResult(not witnesses, tuple(witnesses))


def monotonicity_check(group, normal) -> tuple[bool, int, int]:
    """f(G/N) <= f(G); returns (ok, f(G), f(G/N))."""
    from .chartab import dixon_table
    from .perm import quotient_group

    f_g = f_value(dixon_table(group)).f
    f_q = f_value(dixon_table(quotient_group(group, normal))).f
    return (f_q <= f_g, f_g, f_q)


def bounds_report(report: FReport) -> list[str]:
    """Human-readable comparison rows for one group."""
    b = report.bounds
    rows = [
        f"|G| = {b.order}, k = {report.k}, f = {report.f}",
        f"floor(log2 log2 |G|) = {b.floor_log2_log2}: "
        f"k >= log2 log2 |G| {'holds' if b.k_ge_log2log2 else 'FAILS'}; "
        f"f >= floor(log2 log2 |G|) {'holds' if b.f_ge_floor_log2log2 else 'FAILS'}",
        f"log3 |G| comparison: k > log3 |G| {'holds' if b.k_gt_log3 else 'FAILS'}; "
        f"f > log3 |G| {'holds' if b.f_gt_log3 else 'FAILS'}",
        f"omega(|G|) = {b.omega}: k >= omega {'holds' if b.k_ge_omega else 'FAILS'}; "
        f"f >= omega {'holds' if b.f_ge_omega else 'FAILS'}",
    ]
    return rows

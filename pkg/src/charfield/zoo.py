"""Named constructors for every group family the verifier needs, plus the
group-spec grammar.

Grammar (ASCII, case-sensitive, no whitespace):

    spec := atom ("x" atom)*
    atom := NAME NUM | NAME "(" NUM ("," NUM)* ")"
    NAME := C | D | F | A | S | PSL | SL | Sz | Frob

"F20", "F21", "F52" are sugar for the Frobenius groups Frob(5,4), Frob(7,3),
Frob(13,4) (the subscript is the group order); any other "F n" is rejected
as ambiguous.  "D n" follows the order convention: the dihedral group OF
ORDER n, n even, n >= 6.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .arith import factorize, is_prime, multiplicative_order
from .gf import field
from .perm import PermGroup, Permutation, enumerate_group


class SpecSyntaxError(ValueError):
    """Malformed spec text; .position is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SpecSemanticError(ValueError):
    """Well-formed spec naming a group this package cannot construct."""


# -- constructors -----------------------------------------------------------


def _cycle_perm(degree: int, *cycles) -> Permutation:
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a] = b
    return Permutation(images)


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise SpecSemanticError("cyclic group needs n >= 1")
    return enumerate_group(n, [_cycle_perm(n, tuple(range(n)))])


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order n (order convention), n even, n >= 6."""
    if n % 2 or n < 6:
        raise SpecSemanticError(
            f"D{n}: the subscript is the group order, so n must be even and >= 6")
    m = n // 2
    rot = _cycle_perm(m, tuple(range(m)))
    refl = Permutation([(m - i) % m for i in range(m)])
    return enumerate_group(m, [rot, refl])


def frobenius(p: int, k: int) -> PermGroup:
    """C_p : C_k acting on p points as x -> a*x + b, |a| = k in (Z/p)*."""
    if not is_prime(p) or p == 2:
        raise SpecSemanticError(f"Frob({p},{k}): p must be an odd prime")
    if k < 2 or (p - 1) % k:
        raise SpecSemanticError(f"Frob({p},{k}): k must divide p-1 and be >= 2")
    a = next(a for a in range(2, p) if multiplicative_order(a, p) == k)
    trans = Permutation([(x + 1) % p for x in range(p)])
    mult = Permutation([a * x % p for x in range(p)])
    return enumerate_group(p, [trans, mult])


def symmetric(n: int) -> PermGroup:
    if not 2 <= n <= 9:
        raise SpecSemanticError("S n is supported for 2 <= n <= 9")
    gens = [_cycle_perm(n, (0, 1))]
    if n > 2:
        gens.append(_cycle_perm(n, tuple(range(n))))
    return enumerate_group(n, gens)


def alternating(n: int) -> PermGroup:
    if not 2 <= n <= 9:
        raise SpecSemanticError("A n is supported for 2 <= n <= 9")
    if n == 2:
        return enumerate_group(2, [])
    if n == 3:
        return enumerate_group(3, [_cycle_perm(3, (0, 1, 2))])
    if n % 2:
        long = _cycle_perm(n, tuple(range(n)))
    else:
        long = _cycle_perm(n, tuple(range(1, n)))
    return enumerate_group(n, [long, _cycle_perm(n, (0, 1, 2))])


def _prime_power(q: int) -> tuple[int, int]:
    f = factorize(q)
    if len(f) != 1:
        raise SpecSemanticError(f"{q} is not a prime power")
    (p, m), = f.items()
    return p, m


def _proj_line_points(F):
    # (x : 1) for each field element in encoding order, then infinity (1 : 0)
    return [(F.from_int(i), F.one) for i in range(F.order)] + [(F.one, F.zero)]


def _sl2_generators(F):
    # upper unipotents over an additive basis plus the Weyl element generate SL2
    one, zero = F.one, F.zero
    gens = []
    for i in range(F.m):
        e = F.elem([0] * i + [1])
        gens.append(((one, e), (zero, one)))
    gens.append(((zero, one), (zero - one, zero)))
    return gens


def _mat2_apply(mat, vec):
    (a, b), (c, d) = mat
    u, v = vec
    return (a * u + b * v, c * u + d * v)


def psl2(q: int) -> PermGroup:
    """Image of SL(2,q) acting on the projective line (q + 1 points)."""
    if not 4 <= q <= 32:
        raise SpecSemanticError("PSL(2,q) is supported for 4 <= q <= 32")
    p, m = _prime_power(q)
    F = field(p, m)
    points = _proj_line_points(F)
    index = {pt: i for i, pt in enumerate(points)}

    def normalize(vec):
        u, v = vec
        if v:
            return (u * v.inv(), F.one)
        return (F.one, F.zero)

    perms = []
    for mat in _sl2_generators(F):
        perms.append(Permutation([index[normalize(_mat2_apply(mat, pt))] for pt in points]))
    return enumerate_group(len(points), perms)


def sl2(q: int) -> PermGroup:
    """SL(2,q) acting faithfully on the q^2 - 1 nonzero vectors."""
    if not 4 <= q <= 32:
        raise SpecSemanticError("SL(2,q) is supported for 4 <= q <= 32")
    p, m = _prime_power(q)
    F = field(p, m)
    points = [(F.from_int(i), F.from_int(j)) for i in range(F.order) for j in range(F.order)
              if i or j]
    index = {pt: i for i, pt in enumerate(points)}
    perms = []
    for mat in _sl2_generators(F):
        perms.append(Permutation([index[_mat2_apply(mat, pt)] for pt in points]))
    return enumerate_group(len(points), perms)


# -- the Suzuki group -------------------------------------------------------
#
# Sz(q), q = 2^(2t+1), is built from its 4x4 matrix generators over GF(q)
# with the twist s(x) = x^(2^(t+1)) (so s∘s is the squaring Frobenius):
#
#   u(a,b) = [1  a  s(a)a+b  f(a,b)]      f(a,b) = s(a)a^2 + ab + s(b)
#            [0  1  s(a)     b     ]
#            [0  0  1        a     ]
#            [0  0  0        1     ]
#
#   m(k)   = diag(s(k)k^2, s(k)k, k, 1),   w = the antidiagonal involution.
#
# These stabilize the ovoid O = {(1:0:0:0)} u {(f(a,b) : b : a : 1)}; the
# permutation representation is the action on the orbit of (1:0:0:0),
# which must have exactly q^2 + 1 points.


def _mat4_mul_vec(mat, vec):
    return tuple(sum((row[j] * vec[j] for j in range(1, 4)), row[0] * vec[0])
                 for row in mat)


def sz(q: int) -> PermGroup:
    if q != 8:
        # q = 2^(2t+1), t >= 1; only q = 8 is inside the element cap
        f = factorize(q) if q > 1 else {}
        if list(f) != [2] or f[2] < 3 or f[2] % 2 == 0:
            raise SpecSemanticError(f"Sz({q}): q must be 2^(2t+1) with t >= 1")
        raise SpecSemanticError(f"Sz({q}) exceeds the desk cap (only Sz(8) is built)")
    t = 1
    F = field(2, 3)
    one, zero = F.one, F.zero

    def s(x):
        return x.frobenius(t + 1)

    def f_form(a, b):
        return s(a) * a * a + a * b + s(b)

    def u(a, b):
        return ((one, a, s(a) * a + b, f_form(a, b)),
                (zero, one, s(a), b),
                (zero, zero, one, a),
                (zero, zero, zero, one))

    kappa = F.gen
    m_kappa = ((s(kappa) * kappa * kappa, zero, zero, zero),
               (zero, s(kappa) * kappa, zero, zero),
               (zero, zero, kappa, zero),
               (zero, zero, zero, one))
    w = ((zero, zero, zero, one),
         (zero, zero, one, zero),
         (zero, one, zero, zero),
         (one, zero, zero, zero))
    gens = [u(one, zero), u(zero, one), m_kappa, w]

    def normalize(vec):
        lead = next(x for x in vec if x)
        inv = lead.inv()
        return tuple(inv * x for x in vec)

    start = normalize((one, zero, zero, zero))
    points = [start]
    index = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for pt in frontier:
            for mat in gens:
                img = normalize(_mat4_mul_vec(mat, pt))
                if img not in index:
                    index[img] = len(points)
                    points.append(img)
                    nxt.append(img)
        frontier = nxt
    if len(points) != q * q + 1:
        raise ArithmeticError(
            f"Suzuki ovoid orbit has {len(points)} points, expected {q * q + 1}")
    perms = [Permutation([index[normalize(_mat4_mul_vec(mat, pt))] for pt in points])
             for mat in gens]
    return enumerate_group(len(points), perms)


def product(groups: list[PermGroup]) -> PermGroup:
    """Direct product acting on the disjoint union of the factors' points."""
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for gen in g.generators:
            images = list(range(degree))
            for i, j in enumerate(gen.images):
                images[offset + i] = offset + j
            gens.append(Permutation(images))
        offset += g.degree
    return enumerate_group(degree, gens)


# -- group specs and the parser ---------------------------------------------


_FROBENIUS_SUGAR = {20: (5, 4), 21: (7, 3), 52: (13, 4)}
_NAMES = ("Frob", "PSL", "SL", "Sz", "C", "D", "F", "A", "S")
_ARITY = {"C": 1, "D": 1, "F": 1, "A": 1, "S": 1, "Sz": 1, "PSL": 2, "SL": 2, "Frob": 2}


@dataclass(frozen=True)
class GroupSpec:
    """Parsed form of a group expression."""

    kind: str
    args: tuple[int, ...] = ()
    factors: tuple["GroupSpec", ...] = ()

    def __str__(self) -> str:
        if self.kind == "Product":
            return "x".join(str(f) for f in self.factors)
        if self.kind == "Frob":
            order = self.args[0] * self.args[1]
            if _FROBENIUS_SUGAR.get(order) == self.args:
                return f"F{order}"
            return f"Frob({self.args[0]},{self.args[1]})"
        if self.kind in ("PSL", "SL"):
            return f"{self.kind}({self.args[0]},{self.args[1]})"
        if self.kind == "Sz":
            return f"Sz({self.args[0]})"
        return f"{self.kind}{self.args[0]}"


def parse_spec(text: str) -> GroupSpec:
    """Parse the grammar above; syntax errors carry a position."""
    pos = 0

    def error(msg):
        raise SpecSyntaxError(msg, pos)

    def parse_num():
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            error("expected a number")
        return int(text[start:pos])

    def parse_atom():
        nonlocal pos
        for name in _NAMES:
            if text.startswith(name, pos):
                pos += len(name)
                break
        else:
            error("expected a group name (C, D, F, A, S, PSL, SL, Sz, Frob)")
        if pos < len(text) and text[pos] == "(":
            pos += 1
            args = [parse_num()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                args.append(parse_num())
            if pos >= len(text) or text[pos] != ")":
                error("expected ')'")
            pos += 1
        else:
            args = [parse_num()]
        return _atom_spec(name, tuple(args))

    atoms = [parse_atom()]
    while pos < len(text) and text[pos] == "x":
        pos += 1
        atoms.append(parse_atom())
    if pos != len(text):
        error("unexpected trailing input")
    if len(atoms) == 1:
        return atoms[0]
    return GroupSpec("Product", factors=tuple(atoms))


def _atom_spec(name: str, args: tuple[int, ...]) -> GroupSpec:
    if len(args) != _ARITY[name]:
        raise SpecSemanticError(f"{name} takes {_ARITY[name]} argument(s), got {len(args)}")
    if name == "F":
        pk = _FROBENIUS_SUGAR.get(args[0])
        if pk is None:
            raise SpecSemanticError(
                f"F{args[0]} is ambiguous; use the explicit form Frob(p,k)")
        return GroupSpec("Frob", pk)
    if name == "D" and (args[0] % 2 or args[0] < 6):
        raise SpecSemanticError(
            f"D{args[0]}: the subscript is the group order, so n must be even and >= 6")
    if name == "PSL" or name == "SL":
        if args[0] != 2:
            raise SpecSemanticError(f"only {name}(2,q) is supported")
        return GroupSpec(name, args)
    return GroupSpec(name, args)


_BUILDERS = {
    "C": cyclic,
    "D": dihedral,
    "A": alternating,
    "S": symmetric,
    "Sz": sz,
    "Frob": frobenius,
}


@functools.lru_cache(maxsize=None)
def _build_cached(canonical: str) -> PermGroup:
    spec = parse_spec(canonical)
    if spec.kind == "Product":
        return product([_build_cached(str(f)) for f in spec.factors])
    if spec.kind == "PSL":
        return psl2(spec.args[1])
    if spec.kind == "SL":
        return sl2(spec.args[1])
    return _BUILDERS[spec.kind](*spec.args)


def build(spec) -> PermGroup:
    """Construct the group named by a GroupSpec or spec string (cached)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    return _build_cached(str(spec))

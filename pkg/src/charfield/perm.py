"""Permutation groups by full element enumeration.

Groups are stored as a complete element table: one int32 row of images per
element, plus a bytes -> id lookup.  Element ids are breadth-first from the
identity with generators applied in the given order, so repeated
enumeration of the same generator list reproduces identical ids, class
numbering and downstream tables.

The element cap (default 10**6) keeps accidental monsters out; the largest
group this package targets has 29120 elements.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

DEFAULT_CAP = 10**6


class GroupTooLargeError(ValueError):
    pass


class Permutation:
    """A permutation of {0..degree-1}; images[i] is the image of point i."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not 0 <= x < n or seen[x]:
                raise ValueError("images do not define a bijection")
            seen[x] = True
        self.images = images

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # function composition: (self * other)(i) = self(other(i))
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        im = self.images
        return Permutation(im[j] for j in other.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, j in enumerate(self.images):
            out[j] = i
        return Permutation(out)

    def cycles(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for s in range(self.degree):
            if seen[s]:
                continue
            cyc, cur = [], s
            while not seen[cur]:
                seen[cur] = True
                cyc.append(cur)
                cur = self.images[cur]
            out.append(cyc)
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def __pow__(self, k: int) -> "Permutation":
        out = [0] * self.degree
        for cyc in self.cycles():
            L = len(cyc)
            for idx, pt in enumerate(cyc):
                out[pt] = cyc[(idx + k) % L]
        return Permutation(out)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return f"Permutation(identity, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation({body})"


class PermGroup:
    """Fully enumerated permutation group; build via enumerate_group()."""

    def __init__(self, degree: int, generators: list[Permutation], rows: np.ndarray,
                 index: dict[bytes, int]):
        self.degree = degree
        self.generators = tuple(generators)
        self.rows = rows          # order x degree int32, row 0 = identity
        self._index = index
        self.order = rows.shape[0]
        self._inv_rows: np.ndarray | None = None
        self._inv_ids: np.ndarray | None = None
        self._orders: list[int] | None = None

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def element(self, i: int) -> Permutation:
        p = Permutation.__new__(Permutation)
        p.images = tuple(int(x) for x in self.rows[i])
        return p

    def id_of_row(self, row) -> int:
        key = np.asarray(row, dtype=np.int32).tobytes()
        return self._index[key]

    def id_of(self, perm: Permutation) -> int:
        return self.id_of_row(perm.images)

    def __contains__(self, perm: Permutation) -> bool:
        key = np.asarray(perm.images, dtype=np.int32).tobytes()
        return key in self._index

    def mul(self, i: int, j: int) -> int:
        return self.id_of_row(self.rows[i][self.rows[j]])

    @property
    def inv_rows(self) -> np.ndarray:
        if self._inv_rows is None:
            self._inv_rows = np.argsort(self.rows, axis=1).astype(np.int32)
        return self._inv_rows

    @property
    def inv_ids(self) -> np.ndarray:
        if self._inv_ids is None:
            self._inv_ids = self.ids_of_rows(self.inv_rows)
        return self._inv_ids

    def inverse_id(self, i: int) -> int:
        return int(self.inv_ids[i])

    def ids_of_rows(self, mat: np.ndarray) -> np.ndarray:
        idx = self._index
        mat = np.ascontiguousarray(mat, dtype=np.int32)
        step = mat.shape[1] * 4
        buf = mat.tobytes()
        return np.fromiter(
            (idx[buf[o:o + step]] for o in range(0, len(buf), step)),
            dtype=np.int32, count=mat.shape[0])

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [self.element(i).order() for i in range(self.order)]
        return self._orders


def enumerate_group(degree: int, generators, cap: int = DEFAULT_CAP) -> PermGroup:
    """Breadth-first closure of the generators, identity first."""
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    for g in gens:
        if g.degree != degree:
            raise ValueError("generator degree mismatch")
    ident = np.arange(degree, dtype=np.int32)
    rows = [ident]
    index = {ident.tobytes(): 0}
    if gens:
        gmat = np.array([g.images for g in gens], dtype=np.int32)
        frontier = [0]
        while frontier:
            F = np.array([rows[i] for i in frontier], dtype=np.int32)
            # products[x, g] = row_x composed with generator g, x-major order
            prods = F[:, gmat].reshape(-1, degree)
            nxt = []
            for row in prods:
                key = row.tobytes()
                if key not in index:
                    if len(rows) >= cap:
                        raise GroupTooLargeError(
                            f"group too large: closure exceeded the cap of {cap} elements")
                    index[key] = len(rows)
                    nxt.append(len(rows))
                    rows.append(row.copy())
            frontier = nxt
    return PermGroup(degree, gens, np.array(rows, dtype=np.int32), index)


@dataclass(eq=False)
class ClassData:
    """Conjugacy class bookkeeping for an enumerated group."""

    group: PermGroup
    k: int
    reps: tuple[int, ...]            # smallest element id per class
    sizes: tuple[int, ...]
    class_of: np.ndarray             # element id -> class index
    element_orders: tuple[int, ...]  # order of the representative per class
    _power_cache: dict = field(default_factory=dict, repr=False)

    def power_map(self, i: int, k: int) -> int:
        """Class of rep_i ** k (well-defined on the class)."""
        o = self.element_orders[i]
        k %= o
        key = (i, k)
        got = self._power_cache.get(key)
        if got is None:
            rep = self.group.element(self.reps[i])
            got = int(self.class_of[self.group.id_of(rep**k)])
            self._power_cache[key] = got
        return got

    def inverse_class(self, i: int) -> int:
        return self.power_map(i, -1)


def conjugacy_classes(group: PermGroup) -> ClassData:
    """Partition of the element table into conjugation orbits.

    Classes are ordered by (element order, class size, smallest element id);
    the identity class is always first.
    """
    n = group.order
    conj_maps = []
    for g in group.generators:
        garr = np.array(g.images, dtype=np.int32)
        ginv = np.array(g.inverse().images, dtype=np.int32)
        conj_rows = ginv[group.rows[:, garr]]  # g^-1 x g for every x
        conj_maps.append(group.ids_of_rows(conj_rows))
    class_of = np.full(n, -1, dtype=np.int32)
    raw = []
    for seed in range(n):
        if class_of[seed] >= 0:
            continue
        cls = len(raw)
        class_of[seed] = cls
        stack = [seed]
        size = 1
        while stack:
            x = stack.pop()
            for cmap in conj_maps:
                y = int(cmap[x])
                if class_of[y] < 0:
                    class_of[y] = cls
                    size += 1
                    stack.append(y)
        raw.append((seed, size, group.element(seed).order()))
    order_key = sorted(range(len(raw)), key=lambda c: (raw[c][2], raw[c][1], raw[c][0]))
    relabel = np.empty(len(raw), dtype=np.int32)
    for new, old in enumerate(order_key):
        relabel[old] = new
    return ClassData(
        group=group,
        k=len(raw),
        reps=tuple(raw[c][0] for c in order_key),
        sizes=tuple(raw[c][1] for c in order_key),
        class_of=relabel[class_of],
        element_orders=tuple(raw[c][2] for c in order_key),
    )


def power_map(classes: ClassData, k: int) -> tuple[int, ...]:
    """The full map class -> class of rep**k."""
    return tuple(classes.power_map(i, k) for i in range(classes.k))


def element_order_spectrum(group: PermGroup) -> tuple[int, ...]:
    """Sorted orders of the non-identity elements."""
    return tuple(sorted(set(group.element_orders()) - {1}))


@dataclass(eq=False)
class Subgroup:
    """A subgroup given by its element ids inside an enumerated parent."""

    parent: PermGroup
    element_ids: frozenset[int]
    generator_ids: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.element_ids)

    def as_group(self) -> PermGroup:
        gens = [self.parent.element(i) for i in self.generator_ids]
        return enumerate_group(self.parent.degree, gens)


def _close_subgroup(group: PermGroup, gen_ids: set[int]) -> set[int]:
    elems = {0} | set(gen_ids)
    frontier = list(elems - {0})
    gens = sorted(gen_ids)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def derived_subgroup(group: PermGroup) -> Subgroup:
    """Normal closure of the commutators of the generator pairs."""
    gen_ids = [group.id_of(g) for g in group.generators]
    seeds = set()
    for a in gen_ids:
        for b in gen_ids:
            ainv, binv = group.inverse_id(a), group.inverse_id(b)
            seeds.add(group.mul(group.mul(ainv, binv), group.mul(a, b)))
    seeds.discard(0)
    elems = _close_subgroup(group, seeds)
    inv_gen_ids = [group.inverse_id(g) for g in gen_ids]
    while True:
        new = set()
        for x in elems:
            for g, ginv in zip(gen_ids, inv_gen_ids):
                y = group.mul(ginv, group.mul(x, g))
                if y not in elems:
                    new.add(y)
        if not new:
            break
        seeds |= new
        elems = _close_subgroup(group, seeds)
    return Subgroup(group, frozenset(elems), tuple(sorted(seeds)))


def _normalize_subgroup(group: PermGroup, normal) -> Subgroup:
    if isinstance(normal, Subgroup):
        if normal.parent is not group:
            raise ValueError("subgroup belongs to a different parent group")
        return normal
    if isinstance(normal, PermGroup):
        ids = frozenset(group.id_of(normal.element(i)) for i in range(normal.order))
        return Subgroup(group, ids, tuple(sorted(ids - {0})))
    ids = frozenset(int(i) for i in normal)
    return Subgroup(group, ids, tuple(sorted(ids - {0})))


def quotient_group(group: PermGroup, normal) -> PermGroup:
    """Action of the group on the right cosets of a normal subgroup.

    Cosets are indexed by their smallest contained element id.
    """
    sub = _normalize_subgroup(group, normal)
    ids = sub.element_ids
    if 0 not in ids:
        raise ValueError("subgroup must contain the identity")
    gen_ids = [group.id_of(g) for g in group.generators]
    for x in ids:
        for g in gen_ids:
            if group.mul(group.inverse_id(g), group.mul(x, g)) not in ids:
                raise ValueError("subgroup is not normal")
    n = group.order
    coset_of = [-1] * n
    reps = []
    sub_list = sorted(ids)
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        c = len(reps)
        reps.append(x)
        for h in sub_list:
            coset_of[group.mul(h, x)] = c
    gens = []
    for g in gen_ids:
        images = [coset_of[group.mul(r, g)] for r in reps]
        gens.append(Permutation(images))
    quo = enumerate_group(len(reps), gens)
    if quo.order * len(ids) != group.order:
        raise ArithmeticError("coset action has the wrong order")  # pragma: no cover
    return quo


# -- external interface: JSON group files ----------------------------------


def group_to_json(degree: int, generators) -> str:
    gens = [list(g.images if isinstance(g, Permutation) else g) for g in generators]
    return json.dumps({"degree": degree, "generators": gens}, separators=(",", ":"))


def group_from_json(text: str) -> PermGroup:
    obj = json.loads(text)
    return enumerate_group(obj["degree"], [Permutation(g) for g in obj["generators"]])

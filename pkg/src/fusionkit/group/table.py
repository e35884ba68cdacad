"""Fully materialized finite permutation groups.

A :class:`GroupTable` stores every element together with the complete
multiplication table, so that products, inverses and conjugates are O(1)
index lookups.  This is the only representation the rest of the package
uses; the groups involved are small enough (a few thousand elements at most)
that nothing symbolic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ..config import BOUNDS
from ..errors import NotASubgroup, OrderBoundExceeded
from .perm import Permutation, as_permutation, check_degrees

Perm = tuple[int, ...]


def _row_keys(rows: np.ndarray, base: Sequence[int], degree: int) -> np.ndarray:
    keys = np.zeros(rows.shape[0], dtype=np.int64)
    for b in base:
        keys = keys * degree + rows[:, b]
    return keys


def _choose_base(arr: np.ndarray, degree: int) -> list[int] | None:
    """Points whose images tell all elements apart, or None on int64 overflow."""
    base: list[int] = []
    n = arr.shape[0]
    for pt in range(degree):
        if degree ** (len(base) + 1) >= 2**62:
            return None
        base.append(pt)
        if len(np.unique(_row_keys(arr, base, degree))) == n:
            return base
    return base


def _build_mul(elements: list[Perm], degree: int) -> list[list[int]]:
    n = len(elements)
    if degree == 0:
        return [[0]]
    arr = np.asarray(elements, dtype=np.int64).reshape(n, degree)
    base = _choose_base(arr, degree)
    table = np.empty((n, n), dtype=np.int64)
    if base is None:
        lookup = {e: i for i, e in enumerate(elements)}
        for i in range(n):
            prod = arr[:, arr[i]]
            table[i] = [lookup[tuple(r)] for r in prod.tolist()]
        return table.tolist()
    keys = _row_keys(arr, base, degree)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    base_arr = np.asarray(base)
    for i in range(n):
        # row i, column j holds g_i * g_j: apply g_i first, then g_j
        prod = arr[:, arr[i][base_arr]]
        k = _row_keys(prod, range(len(base)), degree)
        table[i] = order[np.searchsorted(sorted_keys, k)]
    return table.tolist()


class GroupTable:
    """A finite permutation group with an explicit Cayley table.

    ``elements[0]`` is always the identity.  ``mul[a][b]`` is the index of
    ``elements[a] * elements[b]`` (apply ``a`` first).
    """

    def __init__(self, elements: Sequence[Perm], generator_indices: Sequence[int] = (), name: str = ""):
        self.elements: list[Perm] = [tuple(e) for e in elements]
        self.degree = len(self.elements[0]) if self.elements else 0
        if self.elements[0] != tuple(range(self.degree)):
            raise ValueError("elements[0] must be the identity")
        self.index: dict[Perm, int] = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        self.order = len(self.elements)
        self.identity_index = 0
        self.generator_indices = tuple(generator_indices)
        self.name = name
        self.mul = _build_mul(self.elements, self.degree)
        inv = [0] * self.order
        for a, row in enumerate(self.mul):
            inv[a] = row.index(0)
        self.inverse = inv

    @classmethod
    def from_elements(cls, elements: Iterable, name: str = "") -> "GroupTable":
        """Rebuild a table from an explicit element list (closure is verified)."""
        elems = [as_permutation(e).images for e in elements]
        known = set(elems)
        for a in elems:
            for b in elems:
                if tuple(b[i] for i in a) not in known:
                    raise NotASubgroup("element list is not closed under composition")
        table = cls(elems, range(1, len(elems)), name=name)
        table.generator_indices = table.minimal_generators(range(table.order))
        return table

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<GroupTable {label} order={self.order} degree={self.degree}>"

    def __len__(self) -> int:
        return self.order

    def perm(self, i: int) -> Permutation:
        return Permutation(self.elements[i])

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return self.mul[self.mul[self.inverse[g]][x]][g]

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        m, inv = self.mul, self.inverse
        return m[m[m[inv[x]][inv[y]]][x]][y]

    def power(self, x: int, k: int) -> int:
        r = 0
        for _ in range(k):
            r = self.mul[r][x]
        return r

    @cached_property
    def element_orders(self) -> list[int]:
        out = []
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = self.mul[y][x]
                k += 1
            out.append(k)
        return out

    def close(self, gens: Iterable[int], start: Iterable[int] = (0,)) -> frozenset[int]:
        """Subgroup generated by ``gens`` together with the elements of ``start``.

        ``start`` must already be closed when it is not just the identity; it
        seeds the breadth-first search.
        """
        gens = list(dict.fromkeys(gens))
        seen = set(start)
        seen.add(0)
        frontier = list(seen)
        mul = self.mul
        while frontier:
            nxt = []
            for x in frontier:
                row = mul[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def minimal_generators(self, members: Iterable[int]) -> tuple[int, ...]:
        """A short generating set, chosen greedily by decreasing element order."""
        target = frozenset(members)
        orders = self.element_orders
        cand = sorted(target, key=lambda x: (-orders[x], x))
        gens: list[int] = []
        cur = frozenset([0])
        for x in cand:
            if len(cur) == len(target):
                break
            if x not in cur:
                gens.append(x)
                cur = self.close(gens)
        return tuple(gens)

    def subgroup(self, gens: Iterable[int]) -> "Subgroup":
        gens = tuple(gens)
        members = self.close(gens)
        return Subgroup(self, tuple(sorted(members)), self.minimal_generators(members))

    def subgroup_from_members(self, members: Iterable[int], check: bool = True) -> "Subgroup":
        mset = frozenset(members)
        gens = self.minimal_generators(mset)
        if check and self.close(gens) != mset:
            raise NotASubgroup("member set is not closed")
        return Subgroup(self, tuple(sorted(mset)), gens)

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)), self.generator_indices)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,), ())

    @cached_property
    def lattice(self):
        from .lattice import enumerate_subgroups

        return enumerate_subgroups(self)

    def is_abelian(self) -> bool:
        gens = self.generator_indices
        return all(self.mul[a][b] == self.mul[b][a] for a in gens for b in gens)


@dataclass(frozen=True, eq=False)
class Subgroup:
    ambient: GroupTable
    members: tuple[int, ...]
    generator_indices: tuple[int, ...] = ()
    member_set: frozenset[int] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "member_set", frozenset(self.members))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.ambient is self.ambient
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.ambient!r}>"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __le__(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def __lt__(self, other: "Subgroup") -> bool:
        return self.member_set < other.member_set

    @property
    def order(self) -> int:
        return len(self.members)

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return self.ambient.subgroup_from_members(self.member_set & other.member_set, check=False)

    def join(self, other: "Subgroup") -> "Subgroup":
        return self.ambient.subgroup(self.generator_indices + other.generator_indices)


def closure(generators: Sequence, degree: int | None = None, max_order: int | None = None,
            name: str = "") -> GroupTable:
    """Group generated by permutations, elements listed breadth-first from the identity.

    Each element is extended by the generators in input order, so the element
    numbering is a deterministic function of the generator list.
    """
    bound = BOUNDS.max_order if max_order is None else max_order
    perms = [as_permutation(g) for g in generators]
    degree = check_degrees(perms, degree)
    gens = [p.images for p in perms]
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                if len(elements) > bound:
                    raise OrderBoundExceeded(f"group order exceeds bound {bound}")
    gen_idx = [index[g] for g in gens]
    return GroupTable(elements, gen_idx, name=name)


def as_group(H: Subgroup, name: str = "") -> tuple[GroupTable, list[int]]:
    """Materialize a subgroup as its own table; also return table index -> ambient index."""
    G = H.ambient
    table = closure([G.elements[g] for g in H.generator_indices], degree=G.degree,
                    max_order=max(H.order, 1), name=name)
    embedding = [G.index[e] for e in table.elements]
    return table, embedding

"""Subgroup lattice enumeration by cyclic extension.

Start from the cyclic subgroups and repeatedly adjoin one element to every
subgroup found so far, deduplicating by member set.  A subgroup is found iff
it is generated by some finite subset of the group, which for a finite group
means every subgroup is found.
"""

from __future__ import annotations

from functools import cached_property

from ..config import BOUNDS
from ..errors import OrderBoundExceeded
from .table import GroupTable, Subgroup


class SubgroupLattice:
    """All subgroups of a group, sorted by order then by member tuple.

    Besides the list itself this carries the bookkeeping the fusion layer leans
    on: index lookup by member set, element positions inside each subgroup,
    containment lists, conjugacy classes and normalizers/centralizers.
    """

    def __init__(self, group: GroupTable, subgroups: list[Subgroup]):
        self.group = group
        self.subgroups = subgroups
        self.sets = [H.member_set for H in subgroups]
        self.members = [H.members for H in subgroups]
        self.orders = [H.order for H in subgroups]
        self.index = {s: i for i, s in enumerate(self.sets)}
        self.pos = [{x: k for k, x in enumerate(m)} for m in self.members]
        self._normalizer: dict[int, int] = {}
        self._centralizer: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def find(self, members) -> int:
        return self.index[frozenset(members)]

    @property
    def top(self) -> int:
        return len(self.subgroups) - 1

    @cached_property
    def below(self) -> list[list[int]]:
        """below[i]: indices j with S_j <= S_i (including i itself)."""
        out = []
        for i, s in enumerate(self.sets):
            out.append([j for j in range(i + 1) if self.orders[i] % self.orders[j] == 0
                        and self.sets[j] <= s])
        return out

    @cached_property
    def maximal_below(self) -> list[list[int]]:
        """Covering relation of the lattice (Hasse diagram edges, downward)."""
        out = []
        for i in range(len(self)):
            lower = [j for j in self.below[i] if j != i]
            out.append([j for j in lower
                        if not any(j != k and self.sets[j] < self.sets[k] for k in lower)])
        return out

    @cached_property
    def cyclic(self) -> list[int]:
        """cyclic[x]: lattice index of <x>."""
        G = self.group
        return [self.index[G.close([x])] for x in range(G.order)]

    def conjugate(self, i: int, g: int) -> int:
        G = self.group
        return self.index[frozenset(G.conj(x, g) for x in self.members[i])]

    @cached_property
    def classes(self) -> list[list[int]]:
        """Conjugacy classes of subgroups, each sorted; classes sorted by first member."""
        gens = self.group.generator_indices
        seen: dict[int, int] = {}
        out: list[list[int]] = []
        for i in range(len(self)):
            if i in seen:
                continue
            orbit = [i]
            seen[i] = len(out)
            for j in orbit:
                for g in gens:
                    k = self.conjugate(j, g)
                    if k not in seen:
                        seen[k] = len(out)
                        orbit.append(k)
            out.append(sorted(orbit))
        return out

    @cached_property
    def class_of(self) -> list[int]:
        out = [0] * len(self)
        for c, members in enumerate(self.classes):
            for i in members:
                out[i] = c
        return out

    @cached_property
    def normal(self) -> list[bool]:
        return [len(self.classes[self.class_of[i]]) == 1 for i in range(len(self))]

    def normalizer(self, i: int) -> int:
        if i not in self._normalizer:
            G = self.group
            s, gens = self.sets[i], self.subgroups[i].generator_indices
            elems = [g for g in range(G.order) if all(G.conj(x, g) in s for x in gens)]
            self._normalizer[i] = self.index[frozenset(elems)]
        return self._normalizer[i]

    def centralizer(self, i: int) -> int:
        if i not in self._centralizer:
            G = self.group
            gens = self.subgroups[i].generator_indices
            mul = G.mul
            elems = [g for g in range(G.order) if all(mul[g][x] == mul[x][g] for x in gens)]
            self._centralizer[i] = self.index[frozenset(elems)]
        return self._centralizer[i]

    def product(self, i: int, j: int) -> int:
        """Index of S_i S_j; requires that the product set is a subgroup."""
        mul = self.group.mul
        return self.index[frozenset(mul[a][b] for a in self.members[i] for b in self.members[j])]

    def join(self, i: int, j: int) -> int:
        G = self.group
        gens = self.subgroups[i].generator_indices + self.subgroups[j].generator_indices
        return self.index[G.close(gens)]

    def meet(self, i: int, j: int) -> int:
        return self.index[self.sets[i] & self.sets[j]]

    def subgroups_of(self, i: int) -> list[int]:
        return self.below[i]


def enumerate_subgroups(G: GroupTable, max_order: int | None = None) -> SubgroupLattice:
    bound = BOUNDS.max_subgroup_order if max_order is None else max_order
    if G.order > bound:
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds subgroup enumeration bound {bound}")
    found: dict[frozenset[int], tuple[int, ...]] = {frozenset([0]): ()}
    queue: list[frozenset[int]] = []
    for x in range(1, G.order):
        s = G.close([x])
        if s not in found:
            found[s] = (x,)
            queue.append(s)
    mul = G.mul
    head = 0
    while head < len(queue):
        H = queue[head]
        head += 1
        gens = found[H]
        covered = set(H)
        for g in range(G.order):
            if g in covered:
                continue
            # <H, g> = <H, hg> for every h in H, so one element per right coset
            covered.update(mul[h][g] for h in H)
            K = G.close(gens + (g,), start=H)
            if K not in found:
                found[K] = gens + (g,)
                queue.append(K)
    subs = []
    for s, gens in found.items():
        subs.append(Subgroup(G, tuple(sorted(s)), G.minimal_generators(s)))
    subs.sort(key=lambda H: (H.order, H.members))
    return SubgroupLattice(G, subs)

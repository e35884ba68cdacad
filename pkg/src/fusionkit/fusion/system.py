"""Fusion systems stored as complete isomorphism tables.

Objects are lattice indices into ``group.lattice``, where ``group`` is the
table of the ambient p-group.  A system may live on any subgroup of that
group (its *support*); subsystems and local systems share the ambient table,
so comparing two systems is a comparison of index-keyed dictionaries.

For every object Q the table keeps all F-isomorphisms out of Q, each as the
tuple of images of ``lattice.members[Q]``.  Hom_F(Q, R) is the subset whose
image lies in R; every morphism is an isomorphism followed by an inclusion,
so nothing is lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from ..errors import NotASubgroup
from ..group.table import GroupTable, Subgroup, closure

Iso = tuple[int, ...]


@dataclass(frozen=True)
class Morphism:
    domain: int
    codomain: int
    images: Iso  # aligned with the sorted members of the domain

    def as_dict(self, F: "FusionSystem") -> dict[int, int]:
        return dict(zip(F.lattice.members[self.domain], self.images))


class FusionSystem:
    def __init__(self, group: GroupTable, p: int, isos: dict[int, Iterable[Iso]],
                 support: int | None = None, name: str = ""):
        self.group = group
        self.lattice = group.lattice
        self.p = p
        self.support = self.lattice.top if support is None else support
        self.objects: list[int] = list(self.lattice.below[self.support])
        self.isos: dict[int, frozenset[Iso]] = {i: frozenset(isos.get(i, ())) for i in self.objects}
        self.name = name
        # (G, embedding P-index -> G-index) when built by from_group
        self.origin: tuple[GroupTable, list[int]] | None = None

    def __repr__(self) -> str:
        return (f"<FusionSystem {self.name or '?'} p={self.p} |P|={self.order} "
                f"morphisms={self.morphism_count()}>")

    def __eq__(self, other) -> bool:
        return (isinstance(other, FusionSystem) and other.group is self.group
                and other.support == self.support and other.isos == self.isos)

    def __hash__(self) -> int:
        return hash((self.support, self.morphism_count()))

    def __le__(self, other: "FusionSystem") -> bool:
        """Sub-table relation: every object and iso of self is in other."""
        if other.group is not self.group:
            return False
        return all(i in other.isos and self.isos[i] <= other.isos[i] for i in self.objects)

    # -- indices and subgroups ------------------------------------------------
    @property
    def order(self) -> int:
        return self.lattice.orders[self.support]

    def idx(self, Q) -> int:
        if isinstance(Q, Subgroup):
            if Q.ambient is not self.group:
                raise NotASubgroup("subgroup of a different table")
            i = self.lattice.index[Q.member_set]
        else:
            i = int(Q)
        if i not in self.isos:
            raise NotASubgroup(f"subgroup {i} is not an object of this system")
        return i

    def subgroup(self, i: int) -> Subgroup:
        return self.lattice.subgroups[i]

    def n_p(self, i: int) -> int:
        """N_S(Q) for the support S."""
        L = self.lattice
        return L.meet(L.normalizer(i), self.support)

    def c_p(self, i: int) -> int:
        L = self.lattice
        return L.meet(L.centralizer(i), self.support)

    @cached_property
    def center(self) -> int:
        return self.c_p(self.support)

    # -- maps -----------------------------------------------------------------
    def image(self, phi: Iso) -> int:
        return self.lattice.index[frozenset(phi)]

    def restrict(self, i: int, phi: Iso, j: int) -> Iso:
        pos = self.lattice.pos[i]
        return tuple(phi[pos[x]] for x in self.lattice.members[j])

    def apply(self, i: int, phi: Iso, x: int) -> int:
        return phi[self.lattice.pos[i][x]]

    def compose(self, phi: Iso, psi: Iso) -> Iso:
        """psi after phi; psi must be defined on the image of phi."""
        k = self.image(phi)
        pos = self.lattice.pos[k]
        return tuple(psi[pos[y]] for y in phi)

    def invert(self, i: int, phi: Iso) -> tuple[int, Iso]:
        k = self.image(phi)
        back = dict(zip(phi, self.lattice.members[i]))
        return k, tuple(back[y] for y in self.lattice.members[k])

    def identity(self, i: int) -> Iso:
        return self.lattice.members[i]

    def conjugation(self, i: int, u: int) -> Iso:
        """c_u restricted to S_i, x -> u^-1 x u."""
        G = self.group
        return tuple(G.conj(x, u) for x in self.lattice.members[i])

    def inner(self, i: int, by: int | None = None) -> frozenset[Iso]:
        """Hom_T(S_i, T) as isomorphisms, for T = the support (or lattice index ``by``)."""
        by = self.support if by is None else by
        return frozenset(self.conjugation(i, u) for u in self.lattice.members[by])

    def inner_autos(self, i: int, by: int | None = None) -> frozenset[Iso]:
        """Aut_T(S_i): conjugations by elements of N_T(S_i)."""
        by = self.support if by is None else by
        L = self.lattice
        n = L.meet(L.normalizer(i), by)
        return frozenset(self.conjugation(i, u) for u in L.members[n])

    # -- table queries --------------------------------------------------------
    def hom(self, Q, R) -> list[Morphism]:
        q, r = self.idx(Q), self.idx(R)
        target = self.lattice.sets[r]
        return [Morphism(q, r, phi) for phi in sorted(self.isos[q]) if target.issuperset(phi)]

    def aut(self, Q) -> list[Iso]:
        q = self.idx(Q)
        mine = self.lattice.sets[q]
        return sorted(phi for phi in self.isos[q] if mine.issuperset(phi))

    def aut_table(self, Q) -> tuple[GroupTable, Subgroup]:
        """Aut_F(Q) as permutations of Q's member positions, plus Aut_Q(Q) inside it."""
        q = self.idx(Q)
        pos = self.lattice.pos[q]
        perms = [tuple(pos[y] for y in phi) for phi in self.aut(q)]
        n = self.lattice.orders[q]
        T = closure(perms, degree=n, max_order=max(len(perms), 1))
        inner = [T.index[tuple(pos[y] for y in phi)] for phi in self.inner_autos(q, by=q)]
        return T, T.subgroup(inner)

    def f_class(self, Q) -> list[int]:
        q = self.idx(Q)
        return sorted({self.image(phi) for phi in self.isos[q]})

    def morphisms(self) -> Iterator[Morphism]:
        for i in self.objects:
            for phi in sorted(self.isos[i]):
                yield Morphism(i, self.image(phi), phi)

    def morphism_count(self) -> int:
        return sum(len(s) for s in self.isos.values())

    def signature(self) -> tuple:
        """Canonical, totally ordered identity of the table."""
        return (self.support, tuple((i, tuple(sorted(self.isos[i]))) for i in self.objects))

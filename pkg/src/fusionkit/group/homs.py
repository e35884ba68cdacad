"""Homomorphism search and the structural tests built on it."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from ..config import BOUNDS
from ..errors import OrderBoundExceeded, SearchBoundExceeded
from .catalog import cp_wr_cp
from .lattice import enumerate_subgroups
from .ops import p_part, quotient_group
from .perm import Permutation
from .table import GroupTable, Subgroup, as_group, closure


@dataclass(frozen=True)
class GroupMap:
    domain: Subgroup
    codomain: Subgroup
    images: dict  # domain element index -> codomain element index

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def injective(self) -> bool:
        return len(set(self.images.values())) == len(self.images)

    def key(self) -> tuple[int, ...]:
        return tuple(self.images[x] for x in self.domain.members)


def _extend(GQ: GroupTable, GR: GroupTable, pairs: list[tuple[int, int]]) -> dict | None:
    """Extend generator images to <gens>, or None if the assignment is inconsistent."""
    image = {0: 0}
    frontier = [0]
    mq, mr = GQ.mul, GR.mul
    while frontier:
        nxt = []
        for x in frontier:
            ix = image[x]
            for g, r in pairs:
                y = mq[x][g]
                im = mr[ix][r]
                old = image.get(y)
                if old is None:
                    image[y] = im
                    nxt.append(y)
                elif old != im:
                    return None
        frontier = nxt
    return image


def iter_homomorphisms(Q: Subgroup, R: Subgroup, injective_only: bool = False,
                       max_domain: int | None = None,
                       max_nodes: int | None = None) -> Iterator[GroupMap]:
    """Backtrack over images of a generating set of Q, pruning by element order."""
    bound = BOUNDS.max_hom_domain if max_domain is None else max_domain
    node_bound = BOUNDS.max_search_nodes if max_nodes is None else max_nodes
    if Q.order > bound:
        raise SearchBoundExceeded(f"|Q| = {Q.order} exceeds homomorphism bound {bound}")
    if injective_only and Q.order > R.order:
        return
    GQ, GR = Q.ambient, R.ambient
    oq, orr = GQ.element_orders, GR.element_orders
    gens = list(Q.generator_indices)
    cands = []
    for g in gens:
        if injective_only:
            cands.append([r for r in R.members if orr[r] == oq[g]])
        else:
            cands.append([r for r in R.members if oq[g] % orr[r] == 0])
    nodes = 0
    rset = R.member_set

    def rec(i: int, pairs: list[tuple[int, int]]):
        nonlocal nodes
        nodes += 1
        if nodes > node_bound:
            raise SearchBoundExceeded("homomorphism search exceeded node bound")
        image = _extend(GQ, GR, pairs)
        if image is None:
            return
        if injective_only and len(set(image.values())) != len(image):
            return
        if i == len(gens):
            if all(v in rset for v in image.values()):
                yield GroupMap(Q, R, image)
            return
        for r in cands[i]:
            yield from rec(i + 1, pairs + [(gens[i], r)])

    yield from rec(0, [])


def homomorphisms(Q: Subgroup, R: Subgroup, injective_only: bool = False, **kw) -> list[GroupMap]:
    return list(iter_homomorphisms(Q, R, injective_only, **kw))


def automorphism_group(Q: Subgroup) -> GroupTable:
    """Aut(Q) as permutations of the positions in ``Q.members``."""
    pos = {x: k for k, x in enumerate(Q.members)}
    perms = []
    for phi in iter_homomorphisms(Q, Q, injective_only=True):
        perms.append(tuple(pos[phi.images[x]] for x in Q.members))
    perms.sort()
    return closure(perms, degree=Q.order, max_order=len(perms))


def order_profile(T: GroupTable, H: Subgroup | None = None) -> tuple:
    H = T.whole if H is None else H
    orders = T.element_orders
    return tuple(sorted(Counter(orders[x] for x in H.members).items()))


def isomorphism(A: Subgroup, B: Subgroup) -> GroupMap | None:
    """An isomorphism A -> B, or None."""
    if A.order != B.order:
        return None
    if order_profile(A.ambient, A) != order_profile(B.ambient, B):
        return None
    # bijective search is tightly pruned by element orders, so the domain
    # bound is the (larger) subgroup-enumeration bound rather than the hom bound
    bound = max(BOUNDS.max_hom_domain, BOUNDS.max_subgroup_order)
    for phi in iter_homomorphisms(A, B, injective_only=True, max_domain=bound):
        return phi
    return None


def isomorphic(A, B) -> bool:
    """Accepts GroupTables or Subgroups on either side."""
    A = A.whole if isinstance(A, GroupTable) else A
    B = B.whole if isinstance(B, GroupTable) else B
    return isomorphism(A, B) is not None


def strongly_p_embedded(G: GroupTable, p: int, max_order: int | None = None) -> Subgroup | None:
    """The first proper subgroup (lattice order) that is strongly p-embedded, or None.

    H qualifies when it contains a nontrivial Sylow p-subgroup S of G and
    H meets S^x trivially for every x outside H.
    """
    bound = BOUNDS.max_subgroup_order if max_order is None else max_order
    if G.order > bound:
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds bound {bound}")
    target = p_part(G.order, p)
    if target == 1:
        return None
    L = enumerate_subgroups(G, max_order=bound)
    sylows = [i for i in range(len(L)) if L.orders[i] == target]
    for i, H in enumerate(L.subgroups):
        if H.order == G.order or H.order % target:
            continue
        S = next(j for j in sylows if L.sets[j] <= L.sets[i])
        hs = L.sets[i]
        ok = True
        for x in range(G.order):
            if x in hs:
                continue
            if any(G.conj(s, x) in hs for s in L.members[S] if s != 0):
                ok = False
                break
        if ok:
            return H
    return None


def _as_table(P) -> GroupTable:
    if isinstance(P, GroupTable):
        return P
    if P.order == P.ambient.order:
        return P.ambient
    return as_group(P)[0]


def section_free(P, H) -> bool:
    """True iff no section K/L of P (L normal in K <= P) is isomorphic to H."""
    T = _as_table(P)
    H = _as_table(H)
    h = H.order
    if T.order % h:
        return True
    L = T.lattice
    target = order_profile(H)
    for k in range(len(L)):
        K = L.subgroups[k]
        if K.order % h:
            continue
        want = K.order // h
        for n in L.below[k]:
            if L.orders[n] != want:
                continue
            N = L.subgroups[n]
            if any(T.conj(x, g) not in N.member_set for x in N.generator_indices
                   for g in K.generator_indices):
                continue
            quo = quotient_group(T, N, K).quotient
            if order_profile(quo) != target:
                continue
            if isomorphic(quo, H):
                return False
    return True


def build_Y(p: int, m: int, max_order: int | None = None) -> GroupTable:
    """Y_1 = C_p wr C_p; for m > 1 the pull-back of C_p wr C_p -> C_p <- C_{p^m}.

    Realized on p^2 + p^m points: the wreath product acts on the first p^2
    points, the cyclic group of order p^m on the rest.  Generated by the base
    p-cycle, the pair (block rotation, generator of C_{p^m}) and the p-th power
    of the cyclic generator, which together exhaust the pull-back.
    """
    if m < 1:
        raise ValueError("m must be positive")
    base, top = cp_wr_cp(p)
    if m == 1:
        return closure([base, top], max_order=max_order, name=f"Y_1(p={p})")
    n1, n2 = p * p, p**m
    deg = n1 + n2

    def pair(a: Permutation | None, shift: int) -> Permutation:
        left = a.images if a is not None else tuple(range(n1))
        right = tuple(n1 + (i + shift) % n2 for i in range(n2))
        return Permutation(left + right)

    gens = [pair(base, 0), pair(top, 1), pair(None, p)]
    return closure(gens, degree=deg, max_order=max_order, name=f"Y_{m}(p={p})")


def is_slim(P, p: int) -> bool:
    """No subgroup of P is isomorphic to any Y_m.

    Only m with p^(p+m) <= |P| can embed, because |Y_m| = p^(p+m); the order
    of each constructed Y_m is checked against that formula before use.
    """
    T = _as_table(P)
    m = 1
    while p ** (p + m) <= T.order:
        Y = build_Y(p, m)
        if Y.order != p ** (p + m):
            raise AssertionError(f"|Y_{m}| = {Y.order}, expected {p ** (p + m)}")
        L = T.lattice
        for i in range(len(L)):
            if L.orders[i] == Y.order and isomorphic(L.subgroups[i], Y):
                return False
        m += 1
    return True

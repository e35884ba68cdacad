"""Local subgroups, characteristic subgroups, Sylow subgroups and quotients."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotAPGroup, NotASubgroup, NotNormal
from .table import GroupTable, Subgroup, as_group, closure


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p^k, k >= 1; None for n = 1 or composite non-prime-powers."""
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def is_prime(n: int) -> bool:
    pp = prime_power(n)
    return pp is not None and pp[1] == 1


def p_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def is_p_group_order(n: int, p: int | None = None) -> bool:
    if n == 1:
        return True
    pp = prime_power(n)
    return pp is not None and (p is None or pp[0] == p)


def _check_sub(G: GroupTable, Q: Subgroup) -> None:
    if Q.ambient is not G:
        raise NotASubgroup("subgroup belongs to a different table")


@dataclass(frozen=True)
class LocalData:
    normalizer: Subgroup
    centralizer: Subgroup
    center_of_Q: Subgroup


def normalizer(G: GroupTable, Q: Subgroup) -> Subgroup:
    _check_sub(G, Q)
    s, gens = Q.member_set, Q.generator_indices
    return G.subgroup_from_members(
        [g for g in range(G.order) if all(G.conj(x, g) in s for x in gens)], check=False)


def centralizer(G: GroupTable, Q: Subgroup) -> Subgroup:
    _check_sub(G, Q)
    mul = G.mul
    gens = Q.generator_indices
    return G.subgroup_from_members(
        [g for g in range(G.order) if all(mul[g][x] == mul[x][g] for x in gens)], check=False)


def local_data(G: GroupTable, Q: Subgroup) -> LocalData:
    N = normalizer(G, Q)
    C = centralizer(G, Q)
    return LocalData(N, C, Q.intersect(C))


def center(G: GroupTable) -> Subgroup:
    return centralizer(G, G.whole)


def derived_subgroup(G: GroupTable, H: Subgroup | None = None) -> Subgroup:
    """[H, H] inside G (H defaults to G)."""
    H = G.whole if H is None else H
    comms = {G.commutator(x, y) for x in H.members for y in H.members}
    return G.subgroup(sorted(comms))


def normal_closure(G: GroupTable, elems) -> Subgroup:
    conjs = {G.conj(x, g) for x in elems for g in range(G.order)}
    return G.subgroup(sorted(conjs))


@dataclass(frozen=True)
class CharacteristicSubgroups:
    derived: Subgroup
    frattini: Subgroup
    thompson: Subgroup


def _lift(H: Subgroup, G: GroupTable, emb: list[int]) -> Subgroup:
    return G.subgroup_from_members([emb[x] for x in H.members], check=False)


def characteristic_subgroups(P: Subgroup) -> CharacteristicSubgroups:
    """Derived, Frattini and Thompson subgroups of a p-group.

    The Frattini subgroup is computed twice, as the intersection of maximal
    subgroups and as the smallest normal subgroup with elementary abelian
    quotient; disagreement raises ``AssertionError``.
    """
    pp = prime_power(P.order)
    if P.order > 1 and pp is None:
        raise NotAPGroup(f"order {P.order} is not a prime power")
    G = P.ambient
    if P.order == G.order:
        T, emb = G, list(range(G.order))
    else:
        T, emb = as_group(P)
    L = T.lattice
    derived = derived_subgroup(T)
    if T.order == 1:
        triv = T.trivial
        return CharacteristicSubgroups(*(_lift(triv, G, emb),) * 3)
    p = pp[0]

    maximal = [i for i in L.maximal_below[L.top]]
    inter = frozenset(range(T.order))
    for i in maximal:
        inter &= L.sets[i]

    def elementary_quotient(i: int) -> bool:
        s = L.sets[i]
        return all(T.power(x, p) in s for x in range(T.order)) and derived.member_set <= s

    candidates = [i for i in range(len(L)) if L.normal[i] and elementary_quotient(i)]
    smallest = min(candidates, key=lambda i: L.orders[i])
    if any(not L.sets[smallest] <= L.sets[i] for i in candidates):
        raise AssertionError("no unique smallest normal subgroup with elementary abelian quotient")
    if L.sets[smallest] != inter:
        raise AssertionError("Frattini computations disagree")

    mul = T.mul
    abelian = [i for i, H in enumerate(L.subgroups)
               if all(mul[a][b] == mul[b][a] for a in H.generator_indices for b in H.generator_indices)]
    top = max(L.orders[i] for i in abelian)
    gens = [x for i in abelian if L.orders[i] == top for x in L.subgroups[i].generator_indices]
    thompson = T.subgroup(gens)
    return CharacteristicSubgroups(_lift(derived, G, emb), _lift(L.subgroups[smallest], G, emb),
                                   _lift(thompson, G, emb))


def sylow(G: GroupTable, p: int) -> Subgroup:
    """A Sylow p-subgroup, found by climbing normalizers.

    Starting from the trivial group, repeatedly adjoin the first element (in
    table order) of N_G(S) \\ S whose adjunction keeps S a p-group.
    """
    target = p_part(G.order, p)
    S = G.trivial
    while S.order < target:
        N = normalizer(G, S)
        for g in N.members:
            if g in S.member_set:
                continue
            K = G.close(S.generator_indices + (g,), start=S.member_set)
            if is_p_group_order(len(K), p):
                S = G.subgroup_from_members(K, check=False)
                break
        else:  # pragma: no cover - Sylow's theorem guarantees progress
            raise AssertionError("normalizer climb stalled")
    return S


@dataclass(frozen=True)
class Quotient:
    quotient: GroupTable
    projection: list[int]  # element index of G -> element index of quotient
    cosets: list[tuple[int, ...]]


def quotient_group(G: GroupTable, N: Subgroup, H: Subgroup | None = None) -> Quotient:
    """H/N realized as the permutation action of H on the right cosets of N in H.

    ``H`` defaults to the whole of ``G``; ``projection`` is -1 on elements of G
    outside H.
    """
    _check_sub(G, N)
    H = G.whole if H is None else H
    if not N.member_set <= H.member_set:
        raise NotASubgroup("N is not contained in H")
    if any(G.conj(x, g) not in N.member_set for x in N.generator_indices for g in H.generator_indices):
        raise NotNormal("N is not normal")
    mul = G.mul
    coset_of: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for g in H.members:
        if g in coset_of:
            continue
        c = tuple(sorted(mul[n][g] for n in N.members))
        for x in c:
            coset_of[x] = len(cosets)
        cosets.append(c)
    reps = [c[0] for c in cosets]

    def action(g: int) -> tuple[int, ...]:
        return tuple(coset_of[mul[r][g]] for r in reps)

    gens = [action(g) for g in H.generator_indices]
    Q = closure(gens, degree=len(cosets), max_order=len(cosets))
    projection = [-1] * G.order
    for g in H.members:
        projection[g] = Q.index[action(g)]
    return Quotient(Q, projection, cosets)

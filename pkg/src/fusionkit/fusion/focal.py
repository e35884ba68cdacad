"""Focal subgroups, the iterated focal series and p-length."""

from __future__ import annotations

from dataclasses import dataclass

from .local import o_p, quotient_system
from .system import FusionSystem


def focal(F: FusionSystem, Q) -> int:
    """[Q, F] = <x^-1 phi(x) : x in Q, phi in Hom_F(<x>, P)>, as a lattice index."""
    q = F.idx(Q)
    L = F.lattice
    G = F.group
    gens = set()
    for x in L.members[q]:
        c = L.cyclic[x]
        for phi in F.isos[c]:
            gens.add(G.mul[G.inverse[x]][F.apply(c, phi, x)])
    return L.index[G.close(sorted(gens))]


@dataclass(frozen=True)
class FocalSeries:
    focal: int
    iterates: tuple[int, ...]  # [Q,F;1], [Q,F;2], ... until the first repeat
    limit: int


def focal_series(F: FusionSystem, Q) -> FocalSeries:
    cur = focal(F, Q)
    seq = [cur]
    while True:
        nxt = focal(F, cur)
        if nxt == cur:
            break
        seq.append(nxt)
        cur = nxt
    return FocalSeries(seq[0], tuple(seq), cur)


def p_length_chain(F: FusionSystem) -> list[int] | None:
    """Greedy chain 1 = P_0 < P_1 < ... < P_n = P with P_i the preimage of O_p(F/P_{i-1}).

    None when the ascent stalls below P.
    """
    L = F.lattice
    bottom = L.index[frozenset([0])]
    chain = [bottom]
    while chain[-1] != F.support:
        Fq = quotient_system(F, chain[-1])
        O = o_p(Fq)
        if Fq.lattice.orders[O] == 1:
            return None
        keep = Fq.lattice.sets[O]
        pre = frozenset(x for x in L.members[F.support] if Fq.projection[x] in keep)
        chain.append(L.index[pre])
    return chain


def p_length(F: FusionSystem) -> int | None:
    chain = p_length_chain(F)
    return None if chain is None else len(chain) - 1

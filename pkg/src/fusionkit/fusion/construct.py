"""Building fusion systems: from a group, the trivial system, generated subsystems."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from ..errors import NotASubgroup
from ..group.ops import sylow
from ..group.table import GroupTable, as_group
from .system import FusionSystem, Iso, Morphism


def from_group(G: GroupTable, p: int, name: str = "") -> FusionSystem:
    """F_P(G): Hom(Q, R) = {c_g|_Q : g in G, Q^g <= R} for a Sylow p-subgroup P."""
    S = sylow(G, p)
    P, emb = as_group(S, name=f"Syl_{p}({G.name or 'G'})")
    back = {g: i for i, g in enumerate(emb)}
    L = P.lattice
    mul, inv = G.mul, G.inverse
    conj_rows = [(mul[inv[g]], g) for g in range(G.order)]
    isos: dict[int, set[Iso]] = {}
    for i in range(len(L)):
        mem = [emb[x] for x in L.members[i]]
        out: set[Iso] = set()
        for row, g in conj_rows:
            img = []
            for x in mem:
                y = back.get(mul[row[x]][g])
                if y is None:
                    break
                img.append(y)
            else:
                out.add(tuple(img))
        isos[i] = out
    F = FusionSystem(P, p, isos, name=name or f"F_P({G.name or 'G'})")
    F.origin = (G, emb)
    return F


def trivial_system(P: GroupTable, p: int, support: int | None = None) -> FusionSystem:
    """F_S(S) on the support S (default: all of P)."""
    F = FusionSystem(P, p, {}, support=support, name="trivial")
    F.isos = {i: F.inner(i) for i in F.objects}
    return F


def is_trivial(F: FusionSystem) -> bool:
    return all(F.isos[i] == F.inner(i) for i in F.objects)


def _seed_pairs(F: FusionSystem, seed) -> Iterable[tuple[int, Iso]]:
    if isinstance(seed, FusionSystem):
        for i in seed.objects:
            for phi in seed.isos[i]:
                yield i, phi
        return
    for item in seed:
        if isinstance(item, Morphism):
            yield item.domain, item.images
        elif isinstance(item, FusionSystem):
            yield from _seed_pairs(F, item)
        else:
            i, phi = item
            yield int(i), tuple(phi)


def _perm_closure(gens: list[tuple[int, ...]], n: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Elements of the permutation group generated by ``gens`` and a reduced generator list."""
    ident = tuple(range(n))
    elements = [ident]
    seen = {ident}
    kept: list[tuple[int, ...]] = []
    for g in gens:
        if g in seen:
            continue
        kept.append(g)
        head = 0
        while head < len(elements):
            x = elements[head]
            head += 1
            for h in kept:
                y = tuple(h[k] for k in x)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
    return elements, kept


def generate(ambient: FusionSystem, seed=(), support: int | None = None,
             name: str = "") -> FusionSystem:
    """Smallest system on ``support`` containing inner fusion and ``seed``.

    Closed under composition, restriction and inverses.  Isomorphisms only
    compose between subgroups of equal order and restriction only moves
    downwards, so the closure is computed one order at a time from the top:
    at each order the groupoid generated by the incoming edges is assembled
    from a transporter to each object plus the automorphism group of a base
    object, and restrictions of those generators become edges for the orders
    below.  The seed is not checked against ``ambient``; when it is drawn
    from ``ambient`` the result is a sub-table of it.
    """
    F = ambient
    L = F.lattice
    sup = F.support if support is None else support
    objs = L.below[sup]
    objset = set(objs)
    by_order: dict[int, list[int]] = defaultdict(list)
    for i in objs:
        by_order[L.orders[i]].append(i)
    edges: dict[int, set[tuple[int, Iso]]] = defaultdict(set)
    for u in L.subgroups[sup].generator_indices:
        edges[L.orders[sup]].add((sup, F.conjugation(sup, u)))
    sup_set = L.sets[sup]
    for i, phi in _seed_pairs(F, seed):
        if i not in objset or not sup_set.issuperset(phi):
            raise NotASubgroup("seed morphism leaves the support")
        edges[L.orders[i]].add((i, phi))

    result: dict[int, set[Iso]] = {}
    for order in sorted(by_order, reverse=True):
        nodes = by_order[order]
        adj: dict[int, list[tuple[int, Iso]]] = {n: [] for n in nodes}
        level = sorted(edges.get(order, ()))
        for i, phi in level:
            k, back = F.invert(i, phi)
            adj[i].append((k, phi))
            adj[k].append((i, back))
        seen: set[int] = set()
        for base in nodes:
            if base in seen:
                continue
            trans = {base: F.identity(base)}  # base -> X
            comp = [base]
            seen.add(base)
            for x in comp:
                for k, phi in adj[x]:
                    if k not in trans:
                        trans[k] = F.compose(trans[x], phi)
                        seen.add(k)
                        comp.append(k)
            tinv = {x: F.invert(base, t)[1] for x, t in trans.items()}  # X -> base
            posb = L.pos[base]
            loops = []
            for x in comp:
                for k, phi in adj[x]:
                    loop = F.compose(F.compose(trans[x], phi), tinv[k])
                    loops.append(tuple(posb[y] for y in loop))
            loops.sort()
            autos, kept = _perm_closure(loops, order)
            mb = L.members[base]
            auto_isos = [tuple(mb[k] for k in a) for a in autos]
            for x in comp:
                out = set()
                for a in auto_isos:
                    xa = F.compose(tinv[x], a)
                    for y in comp:
                        out.add(F.compose(xa, trans[y]))
                result[x] = out
            gens = [(base, trans[x]) for x in comp if x != base]
            gens += [(base, tuple(mb[k] for k in a)) for a in kept]
            for i, phi in gens:
                for j in L.below[i]:
                    if j != i:
                        edges[L.orders[j]].add((j, F.restrict(i, phi, j)))
    out = FusionSystem(F.group, F.p, result, support=sup, name=name or "generated")
    return out

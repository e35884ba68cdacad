"""Normalizer and centralizer subsystems, closure properties, and quotients."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotStronglyClosed
from ..group.ops import quotient_group
from .saturation import fully_centralized, fully_normalized
from .system import FusionSystem, Iso

KINDS = ("N", "PC", "C")


def local_system(F: FusionSystem, Q, kind: str = "N") -> FusionSystem:
    """N_F(Q), N_P(Q)C_F(Q) or C_F(Q).

    A morphism phi: R -> S of F (R, S in the support of the local system) is
    kept iff it is the restriction of some F-morphism QR -> QS that maps Q
    onto Q (kind N), restricts to an element of Aut_P(Q) on Q (kind PC) or
    restricts to the identity on Q (kind C).  The result carries
    ``saturation_guaranteed``: whether Q is fully normalized (N) or fully
    centralized (PC, C).
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    q = F.idx(Q)
    L = F.lattice
    sup = F.c_p(q) if kind == "C" else F.n_p(q)
    objs = L.below[sup]
    objset = set(objs)
    qset = L.sets[q]
    aut_p_q = F.inner_autos(q)
    ident = F.identity(q)
    ext: dict[int, dict[Iso, list[Iso]]] = {}
    isos: dict[int, set[Iso]] = {}
    for r in objs:
        qr = L.product(q, r)
        if qr not in ext:
            ext[qr] = {}
        by_res: dict[Iso, list[Iso]] = {}
        for big in F.isos[qr]:
            by_res.setdefault(F.restrict(qr, big, r), []).append(big)
        keep = set()
        for phi in F.isos[r]:
            t = F.image(phi)
            if t not in objset:
                continue
            qt_set = L.sets[L.product(q, t)]
            for big in by_res.get(phi, ()):
                if not qt_set.issuperset(big):
                    continue
                on_q = F.restrict(qr, big, q)
                if kind == "N":
                    ok = frozenset(on_q) == qset
                elif kind == "PC":
                    ok = on_q in aut_p_q
                else:
                    ok = on_q == ident
                if ok:
                    keep.add(phi)
                    break
        isos[r] = keep
    out = FusionSystem(F.group, F.p, isos, support=sup, name=f"{kind}_F({q})")
    out.saturation_guaranteed = (fully_normalized(F, q) if kind == "N" else fully_centralized(F, q))
    return out


@dataclass(frozen=True)
class SubgroupFlags:
    weakly_closed: bool
    strongly_closed: bool
    normal_in_F: bool
    central_in_F: bool


def is_weakly_closed(F: FusionSystem, Q) -> bool:
    q = F.idx(Q)
    return F.f_class(q) == [q]


def is_strongly_closed(F: FusionSystem, Q) -> bool:
    q = F.idx(Q)
    L = F.lattice
    qset = L.sets[q]
    return all(qset.issuperset(phi) for j in L.below[q] for phi in F.isos[j])


def is_normal(F: FusionSystem, Q) -> bool:
    q = F.idx(Q)
    if F.n_p(q) != F.support:
        return False
    return local_system(F, q, "N") == F


def is_central(F: FusionSystem, Q) -> bool:
    q = F.idx(Q)
    if F.c_p(q) != F.support:
        return False
    return local_system(F, q, "C") == F


def subgroup_status(F: FusionSystem, Q) -> SubgroupFlags:
    q = F.idx(Q)
    return SubgroupFlags(is_weakly_closed(F, q), is_strongly_closed(F, q),
                         is_normal(F, q), is_central(F, q))


def _largest(F: FusionSystem, pred) -> int:
    L = F.lattice
    hits = [i for i in F.objects if pred(F, i)]
    best = max(hits, key=lambda i: (L.orders[i], -i))
    if any(not L.sets[i] <= L.sets[best] for i in hits):
        raise AssertionError("no unique largest subgroup with the property")
    return best


def o_p(F: FusionSystem) -> int:
    """O_p(F): the largest subgroup normal in F (lattice index)."""
    return _largest(F, is_normal)


def z_f(F: FusionSystem) -> int:
    """Z(F): the largest subgroup central in F (lattice index)."""
    return _largest(F, is_central)


def quotient_system(F: FusionSystem, Q) -> FusionSystem:
    """F/Q on P/Q for Q strongly F-closed.

    Hom_{F/Q}(R/Q, S/Q) consists of the maps rQ -> phi(r)Q induced by
    phi in Hom_F(R, S) for R, S containing Q.  The result records the
    ``projection`` (P index -> P/Q index) and the ``kernel`` lattice index.
    """
    q = F.idx(Q)
    if not is_strongly_closed(F, q):
        raise NotStronglyClosed(f"subgroup {q} is not strongly closed")
    L = F.lattice
    quo = quotient_group(F.group, L.subgroups[q], L.subgroups[F.support])
    Pbar, proj = quo.quotient, quo.projection
    Lb = Pbar.lattice
    qset = L.sets[q]
    isos: dict[int, set[Iso]] = {}
    for r in F.objects:
        if not qset <= L.sets[r]:
            continue
        rb = Lb.index[frozenset(proj[x] for x in L.members[r])]
        rep: dict[int, int] = {}
        for x in L.members[r]:
            rep.setdefault(proj[x], x)
        reps = [rep[xb] for xb in Lb.members[rb]]
        isos[rb] = {tuple(proj[F.apply(r, phi, x)] for x in reps) for phi in F.isos[r]}
    out = FusionSystem(Pbar, F.p, isos, name=f"{F.name}/{q}")
    out.projection = proj
    out.kernel = q
    return out

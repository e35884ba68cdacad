"""Censuses of subsystems of a fusion system on a subgroup.

Two independent searches:

* :func:`enumerate_subsystems` builds candidate subsystems from automorphism
  group assignments and keeps the saturated ones.  Completeness rests on
  Alperin's fusion theorem: a saturated subsystem E on Q is generated by
  Aut_E(Q) together with Aut_E(S) for one fully E-normalized representative
  S of each class of E-essential subgroups.  For such S we have C_Q(S) <= S,
  Aut_Q(S) is a Sylow p-subgroup of Aut_E(S) and Aut_E(S)/Aut_S(S) has a
  strongly p-embedded subgroup; for S = Q, Aut_Q(Q) is Sylow in Aut_E(Q).
  So E occurs among the systems generated by assignments S -> A(S) with
  Aut_Q(S) <= A(S) <= Aut_F(S) satisfying those conditions (A(S) = Aut_Q(S)
  standing for "contributes nothing").  This argument is machine-checked
  against the brute-force census below whenever Q has at most six subgroups,
  and is otherwise a proof obligation of the argument above.

* :func:`subset_closure_census` explores every sub-table reachable by adding
  one F-isomorphism at a time to the inner fusion of Q and closing.  Every
  closed sub-table is generated by its own morphisms, so this reaches all of
  them; it is exponential in general and serves as an oracle and as the
  strict (not necessarily saturated) census.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from ..config import BOUNDS
from ..errors import SearchBoundExceeded
from ..fusion.construct import generate, trivial_system
from ..fusion.saturation import check_saturation
from ..fusion.system import FusionSystem, Iso
from ..group.homs import strongly_p_embedded
from ..group.ops import p_part, quotient_group


@dataclass
class SubsystemCensus:
    base: FusionSystem
    on_subgroup: int
    found: list[FusionSystem]
    search_stats: dict = field(default_factory=dict)

    def signatures(self) -> set[tuple]:
        return {E.signature() for E in self.found}

    def nontrivial(self) -> list[FusionSystem]:
        return [E for E in self.found if any(E.isos[i] != E.inner(i) for i in E.objects)]


def _sort(systems) -> list[FusionSystem]:
    return sorted(systems, key=lambda E: (E.morphism_count(), E.signature()))


def _aut_options(F: FusionSystem, s: int, q: int) -> list[list[Iso]]:
    """Admissible A(S) between Aut_Q(S) and Aut_F(S), as lists of automorphisms."""
    L = F.lattice
    T, inner = F.aut_table(s)
    pos = L.pos[s]
    members = L.members[s]
    aut_q = F.inner_autos(s, by=q)
    if len(aut_q) == T.order:
        return [sorted(aut_q)]
    base = T.subgroup([T.index[tuple(pos[y] for y in a)] for a in aut_q])
    TL = T.lattice
    out = []
    for j in range(len(TL)):
        A = TL.subgroups[j]
        if not base.member_set <= A.member_set or p_part(A.order, F.p) != base.order:
            continue
        if A.order > base.order and s != q:
            out_a = quotient_group(T, inner, A).quotient  # A / Aut_S(S)
            if strongly_p_embedded(out_a, F.p) is None:
                continue
        out.append(sorted(tuple(members[k] for k in T.elements[x]) for x in A.members))
    return out


def enumerate_subsystems(F: FusionSystem, Q=None) -> SubsystemCensus:
    """All saturated subsystems of F on Q (default: the support of F)."""
    q = F.support if Q is None else F.idx(Q)
    L = F.lattice
    qset = L.sets[q]
    branch = []
    for s in L.below[q]:
        if s != q and not (L.sets[F.c_p(s)] & qset) <= L.sets[s]:
            continue  # not Q-centric, so never essential in a subsystem on Q
        opts = _aut_options(F, s, q)
        if len(opts) > 1:
            branch.append((s, opts))
    total = 1
    for _, opts in branch:
        total *= len(opts)
    if total > BOUNDS.max_census_assignments:
        raise SearchBoundExceeded(f"{total} assignment vectors exceed bound "
                                  f"{BOUNDS.max_census_assignments}")
    seen: dict[tuple, FusionSystem] = {}
    for choice in itertools.product(*(opts for _, opts in branch)):
        seed = [(s, a) for (s, _), A in zip(branch, choice) for a in A]
        E = generate(F, seed, support=q, name=f"sub_{q}")
        seen.setdefault(E.signature(), E)
    found = [E for E in seen.values() if check_saturation(E).saturated]
    stats = {"branch_points": len(branch), "assignments": total,
             "distinct_tables": len(seen), "saturated": len(found)}
    return SubsystemCensus(F, q, _sort(found), stats)


def subset_closure_census(F: FusionSystem, Q=None, saturated_only: bool = True,
                          max_states: int | None = None) -> SubsystemCensus:
    """Brute-force census: every closed sub-table of F on Q, optionally only saturated ones."""
    q = F.support if Q is None else F.idx(Q)
    L = F.lattice
    qset = L.sets[q]
    bound = BOUNDS.max_closure_subsets if max_states is None else max_states
    candidates = sorted((i, phi) for i in L.below[q] for phi in F.isos[i] if qset.issuperset(phi))
    start = trivial_system(F.group, F.p, support=q)
    seen = {start.signature(): start}
    queue = deque([start])
    while queue:
        E = queue.popleft()
        for i, phi in candidates:
            if phi in E.isos[i]:
                continue
            E2 = generate(F, [E, (i, phi)], support=q)
            key = E2.signature()
            if key not in seen:
                if len(seen) >= bound:
                    raise SearchBoundExceeded(f"more than {bound} closed sub-tables")
                seen[key] = E2
                queue.append(E2)
    tables = list(seen.values())
    found = [E for E in tables if check_saturation(E).saturated] if saturated_only else tables
    stats = {"closed_tables": len(tables), "kept": len(found)}
    return SubsystemCensus(F, q, _sort(found), stats)

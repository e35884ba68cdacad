"""Sparse, extremely sparse and constrained verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fusion.construct import is_trivial
from ..fusion.local import is_normal, o_p
from ..fusion.subgroups import is_centric
from ..fusion.system import FusionSystem
from .census import enumerate_subsystems, subset_closure_census


def _census(F: FusionSystem, q: int, strict: bool):
    if strict:
        return subset_closure_census(F, q, saturated_only=False)
    return enumerate_subsystems(F, q)


def _nontrivial_proper(F: FusionSystem, q: int, strict: bool) -> list[FusionSystem]:
    """Subsystems on S_q other than the inner one (and other than F itself when q is the support)."""
    out = []
    for E in _census(F, q, strict).nontrivial():
        if q == F.support and E == F:
            continue
        out.append(E)
    return out


@dataclass
class Sparseness:
    sparse: bool
    extremely_sparse: bool
    witnesses: list[FusionSystem] = field(default_factory=list)
    strict: bool = False

    def witness_json(self) -> list[dict]:
        return [witness_json(E) for E in self.witnesses]


def witness_json(E: FusionSystem) -> dict:
    """A subsystem as its support plus the morphisms beyond inner fusion."""
    extra = []
    for i in E.objects:
        for phi in sorted(E.isos[i] - E.inner(i)):
            extra.append({"domain": i, "codomain": E.image(phi), "images": list(phi)})
    return {"support": E.support, "support_order": E.order,
            "morphisms": E.morphism_count(), "extra_morphisms": extra}


def sparseness(F: FusionSystem, strict: bool = False) -> Sparseness:
    """Sparse: nontrivial and the only proper subsystem on P is the inner one.

    Extremely sparse: additionally every subsystem on every proper subgroup
    is inner.  By default subsystems are the saturated ones; ``strict``
    quantifies over all closed sub-tables instead.  Witnesses: the least
    offending subsystem found, scanning P first and then proper subgroups
    in lattice order.
    """
    if is_trivial(F):
        return Sparseness(False, False, [], strict)
    top = F.support
    witnesses = _nontrivial_proper(F, top, strict)[:1]
    sparse = not witnesses
    below = []
    for q in F.objects:
        if q == top:
            continue
        hits = _nontrivial_proper(F, q, strict)
        if hits:
            below = hits[:1]
            break
    return Sparseness(sparse, sparse and not below, witnesses + below, strict)


@dataclass(frozen=True)
class Constrained:
    constrained: bool
    witness: int | None  # largest normal F-centric subgroup


def is_constrained(F: FusionSystem) -> Constrained:
    """Constrained iff some subgroup is normal in F and F-centric.

    Computed by a scan and cross-checked against "O_p(F) is F-centric".
    """
    L = F.lattice
    hits = [i for i in F.objects if is_normal(F, i) and is_centric(F, i)]
    witness = max(hits, key=lambda i: (L.orders[i], -i)) if hits else None
    via_op = is_centric(F, o_p(F))
    if via_op != bool(hits):
        raise AssertionError("constrained scan disagrees with the O_p(F) test")
    return Constrained(bool(hits), witness)

"""Per-subgroup classification: classes, centric and essential subgroups."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ..group.homs import strongly_p_embedded
from ..group.ops import quotient_group
from ..group.table import GroupTable
from .local import is_normal, is_strongly_closed, is_weakly_closed
from .saturation import fully_centralized, fully_normalized
from .system import FusionSystem


@dataclass(frozen=True)
class SubgroupStatus:
    subgroup: int  # lattice index
    order: int
    f_class: int  # least lattice index in the F-class
    fully_normalized: bool
    fully_centralized: bool
    centric: bool
    essential: bool
    weakly_closed: bool
    strongly_closed: bool
    normal_in_F: bool

    def to_json(self) -> dict:
        return asdict(self)


def is_centric(F: FusionSystem, Q) -> bool:
    L = F.lattice
    return all(L.sets[F.c_p(r)] <= L.sets[r] for r in F.f_class(Q))


def out_f(F: FusionSystem, Q) -> GroupTable:
    """Out_F(Q) = Aut_F(Q)/Aut_Q(Q) as a coset-action permutation group."""
    T, inner = F.aut_table(Q)
    return quotient_group(T, inner).quotient


def is_essential(F: FusionSystem, Q) -> bool:
    q = F.idx(Q)
    if not is_centric(F, q):
        return False
    return strongly_p_embedded(out_f(F, q), F.p) is not None


def essentials(F: FusionSystem) -> list[int]:
    return [i for i in F.objects if is_essential(F, i)]


def essential_rank(F: FusionSystem) -> int:
    return len({F.f_class(i)[0] for i in essentials(F)})


def classify_subgroups(F: FusionSystem) -> tuple[list[SubgroupStatus], int]:
    """Status of every object of F, and the essential rank."""
    L = F.lattice
    out = []
    ess_classes = set()
    essential_cache: dict[int, bool] = {}
    for i in F.objects:
        cls = F.f_class(i)[0]
        if cls not in essential_cache:
            essential_cache[cls] = is_essential(F, i)
        ess = essential_cache[cls]
        if ess:
            ess_classes.add(cls)
        out.append(SubgroupStatus(
            subgroup=i, order=L.orders[i], f_class=cls,
            fully_normalized=fully_normalized(F, i),
            fully_centralized=fully_centralized(F, i),
            centric=is_centric(F, i), essential=ess,
            weakly_closed=is_weakly_closed(F, i),
            strongly_closed=is_strongly_closed(F, i),
            normal_in_F=is_normal(F, i)))
    return out, len(ess_classes)

"""Graphviz rendering of the subgroup lattice with its fusion.

Subgroups of P are nodes, ranked by order, joined by gray Hasse edges.
Subgroups conjugate in P are chained by solid edges; the extra fusion of F,
joining P-classes that F merges, is drawn dashed.
"""

from __future__ import annotations

from collections import defaultdict

from .system import FusionSystem


def _p_classes(F: FusionSystem) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for i in F.objects:
        if i in seen:
            continue
        cls = sorted({F.image(phi) for phi in F.inner(i)})
        seen.update(cls)
        out.append(cls)
    return out


def to_dot(F: FusionSystem, name: str = "") -> str:
    L = F.lattice
    lines = [f'graph "{name or F.name or "fusion"}" {{',
             "  rankdir=BT;",
             "  node [shape=circle, width=0.3, fixedsize=true, fontsize=9];"]
    by_order: dict[int, list[int]] = defaultdict(list)
    for i in F.objects:
        by_order[L.orders[i]].append(i)
    for order in sorted(by_order):
        nodes = " ".join(f"s{i};" for i in by_order[order])
        lines.append(f"  {{ rank=same; {nodes} }}")
    for i in F.objects:
        lines.append(f'  s{i} [label="{i}", tooltip="order {L.orders[i]}"];')
    for i in F.objects:
        for j in L.maximal_below[i]:
            lines.append(f"  s{j} -- s{i} [color=gray70];")
    p_classes = _p_classes(F)
    for cls in p_classes:
        for a, b in zip(cls, cls[1:]):
            lines.append(f"  s{a} -- s{b} [constraint=false, penwidth=1.5];")
    rep_of = {i: cls[0] for cls in p_classes for i in cls}
    done: set[int] = set()
    for cls in p_classes:
        rep = cls[0]
        if rep in done:
            continue
        reps = sorted({rep_of[k] for k in F.f_class(rep)})
        done.update(reps)
        for a, b in zip(reps, reps[1:]):
            lines.append(f"  s{a} -- s{b} [constraint=false, style=dashed, penwidth=1.5];")
    lines.append("}")
    return "\n".join(lines) + "\n"

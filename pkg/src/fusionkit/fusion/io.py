"""JSON dump format for fusion systems.

Layout::

    {"name": ..., "p": 2,
     "group": {"degree": n, "elements": [[...], ...]},
     "support": k,
     "subgroups": [[member indices], ...],
     "morphisms": [{"domain": i, "codomain": j, "images": [...]}, ...]}

Each morphism is an isomorphism listed with its image subgroup as codomain;
``images`` is aligned with the members of the domain.  Hom(Q, R) for larger
R is recovered by following with the inclusion.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import NotASubgroup
from ..group.table import GroupTable
from .system import FusionSystem


def dump_system(F: FusionSystem) -> dict:
    L = F.lattice
    return {
        "name": F.name,
        "p": F.p,
        "group": {"degree": F.group.degree, "elements": [list(e) for e in F.group.elements]},
        "support": F.support,
        "subgroups": [list(m) for m in L.members],
        "morphisms": [{"domain": m.domain, "codomain": m.codomain, "images": list(m.images)}
                      for m in F.morphisms()],
    }


def load_system(data: dict) -> FusionSystem:
    """Rebuild a system from :func:`dump_system` output.

    The table is taken as given, so a damaged dump loads fine and can be
    handed to the saturation checker.
    """
    G = GroupTable.from_elements(data["group"]["elements"], name=data.get("name", ""))
    L = G.lattice
    remap = []
    for members in data["subgroups"]:
        key = frozenset(members)
        if key not in L.index:
            raise NotASubgroup(f"listed subgroup {sorted(members)} is not a subgroup")
        remap.append(L.index[key])
    isos: dict[int, set] = {}
    for m in data["morphisms"]:
        isos.setdefault(remap[m["domain"]], set()).add(tuple(m["images"]))
    return FusionSystem(G, int(data["p"]), isos, support=remap[data["support"]],
                        name=data.get("name", ""))


def save(F: FusionSystem, path) -> None:
    Path(path).write_text(dumps(F))


def dumps(F: FusionSystem) -> str:
    return json.dumps(dump_system(F), sort_keys=True)


def load(path) -> FusionSystem:
    return load_system(json.loads(Path(path).read_text()))

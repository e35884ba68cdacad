"""JSON reports for single systems and for batches of catalog groups."""

from __future__ import annotations

from typing import Iterable

from ..errors import FusionKitError, SearchBoundExceeded
from ..fusion.construct import from_group
from ..fusion.focal import focal_series, p_length
from ..fusion.local import o_p, z_f
from ..fusion.saturation import check_saturation
from ..fusion.subgroups import essential_rank
from ..fusion.system import FusionSystem
from ..group.catalog import catalog
from ..group.table import closure
from .sparse import is_constrained, sparseness
from .theorems import run_theorem_suite

DEFAULT_CATALOG = (("s3", 3), ("s4", 2), ("a4", 2), ("sl23", 2), ("d8", 2), ("d16", 2),
                   ("pgl27", 2), ("cp_wr_cp(3)", 3))


def build_catalog_system(name: str, p: int) -> FusionSystem:
    G = closure(catalog(name), name=name)
    return from_group(G, p, name=f"{name}/p{p}")


def build_report(F: FusionSystem, system: str = "", include_strict: bool = True) -> dict:
    """Verdicts for one system.

    The default sparseness verdicts quantify over saturated subsystems; the
    ``strict_*`` fields quantify over all closed sub-tables (null when that
    search exceeds its bound).
    """
    L = F.lattice
    sat = check_saturation(F)
    sp = sparseness(F)
    report = {
        "system": system or F.name,
        "p": F.p,
        "order": F.order,
        "saturated": sat.saturated,
        "essential_rank": essential_rank(F),
        "sparse": sp.sparse,
        "extremely_sparse": sp.extremely_sparse,
        "sparse_witnesses": sp.witness_json(),
    }
    if include_strict:
        try:
            strict = sparseness(F, strict=True)
            report["strict_sparse"] = strict.sparse
            report["strict_extremely_sparse"] = strict.extremely_sparse
        except SearchBoundExceeded:
            report["strict_sparse"] = report["strict_extremely_sparse"] = None
    con = is_constrained(F)
    theorems = run_theorem_suite(F, report["system"])
    report.update({
        "constrained": con.constrained,
        "o_p_order": L.orders[o_p(F)],
        "z_f_order": L.orders[z_f(F)],
        "focal_order": L.orders[focal_series(F, F.support).focal],
        "p_length": p_length(F),
        "s4_free": theorems.result("T1").witness["s4_free"],
        "theorems": [r.to_json() for r in theorems.results],
        "failing_theorems": [r.id for r in theorems.failures],
    })
    return report


def run_catalog_suite(pairs: Iterable[tuple[str, int]] = DEFAULT_CATALOG,
                      include_strict: bool = True) -> list[dict]:
    """One report per (name, p), in the given order; build errors are recorded, not raised."""
    out = []
    for name, p in pairs:
        label = f"{name}/p{p}"
        try:
            F = build_catalog_system(name, p)
            out.append(build_report(F, label, include_strict))
        except FusionKitError as exc:
            out.append({"system": label, "p": p, "error": f"{type(exc).__name__}: {exc}"})
    return out

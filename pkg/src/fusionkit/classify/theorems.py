"""Executable checks of the sparse / extremely sparse theory on concrete systems.

Each check evaluates its hypotheses computationally and then its
conclusion.  A check *fails* only when the hypotheses hold and the
conclusion does not; with unmet hypotheses the conclusion is still
evaluated and reported for information.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from ..fusion.construct import generate, is_trivial
from ..fusion.focal import focal_series
from ..fusion.local import is_normal, local_system, quotient_system, z_f
from ..fusion.subgroups import essential_rank
from ..fusion.system import FusionSystem, Iso
from ..group.catalog import catalog
from ..group.homs import is_slim, section_free
from ..group.ops import characteristic_subgroups, is_prime
from ..group.table import closure
from .sparse import Constrained, Sparseness, is_constrained, sparseness

THEOREM_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10")


@dataclass
class TheoremResult:
    id: str
    hypotheses_met: bool
    conclusion_holds: bool
    witness: Any = None

    @property
    def failing(self) -> bool:
        return self.hypotheses_met and not self.conclusion_holds

    @property
    def status(self) -> str:
        if self.failing:
            return "FAIL"
        return "pass" if self.hypotheses_met else "vacuous"

    def to_json(self) -> dict:
        return {"id": self.id, "hypotheses_met": self.hypotheses_met,
                "conclusion_holds": self.conclusion_holds, "witness": self.witness}


@dataclass
class TheoremReport:
    system: str
    results: list[TheoremResult] = field(default_factory=list)

    @property
    def failures(self) -> list[TheoremResult]:
        return [r for r in self.results if r.failing]

    @property
    def ok(self) -> bool:
        return not self.failures

    def result(self, tid: str) -> TheoremResult:
        return next(r for r in self.results if r.id == tid)


class _Context:
    """Lazily computed facts about F shared by the individual checks."""

    def __init__(self, F: FusionSystem):
        self.F = F
        self.L = F.lattice
        self.top = F.support

    @cached_property
    def trivial(self) -> bool:
        return is_trivial(self.F)

    @cached_property
    def sparse(self) -> Sparseness:
        return sparseness(self.F)

    @cached_property
    def constrained(self) -> Constrained:
        return is_constrained(self.F)

    @cached_property
    def d8_free(self) -> bool:
        return section_free(self.F.subgroup(self.top), closure(catalog("d8")))

    @cached_property
    def slim(self) -> bool:
        return is_slim(self.F.subgroup(self.top), self.F.p)

    @cached_property
    def s4_free(self) -> str:
        return "implied" if self.F.p % 2 or self.d8_free else "unknown"

    @cached_property
    def chars(self):
        return characteristic_subgroups(self.F.subgroup(self.top))

    @cached_property
    def normal(self) -> list[int]:
        return [i for i in self.F.objects if is_normal(self.F, i)]

    @cached_property
    def normal_in_p(self) -> list[int]:
        return [i for i in self.F.objects if self.F.n_p(i) == self.top]

    @cached_property
    def n_f_p_trivial(self) -> bool:
        return is_trivial(local_system(self.F, self.top, "N"))

    @cached_property
    def focal(self):
        return focal_series(self.F, self.top)

    @cached_property
    def rank(self) -> int:
        return essential_rank(self.F)

    @cached_property
    def beta(self) -> tuple[int, Iso] | None:
        """Least beta in Aut_F(P) of prime order q != p generating F, as (q, beta)."""
        F, top = self.F, self.top
        ident = F.identity(top)
        for phi in F.aut(top):
            n, cur = 1, phi
            while cur != ident:
                cur = F.compose(cur, phi)
                n += 1
            if n == F.p or not is_prime(n):
                continue
            if generate(F, [(top, phi)]) == F:
                return n, phi
        return None


def _t1(c: _Context) -> TheoremResult:
    hyp = c.sparse.sparse and (c.F.p % 2 == 1 or c.d8_free)
    return TheoremResult("T1", hyp, c.constrained.constrained,
                         {"s4_free": c.s4_free, "constrained_witness": c.constrained.witness})


def _t2(c: _Context) -> TheoremResult:
    F, L = c.F, c.L
    z = L.sets[z_f(F)]
    center = L.sets[F.center]
    qs = [q for q in c.normal if L.product(q, F.c_p(q)) not in c.normal]
    bad = []
    for q in qs:
        ok = local_system(F, q, "PC") == F and (L.sets[q] & center) <= z
        if not ok:
            bad.append(q)
    hyp = c.sparse.sparse and bool(qs)
    return TheoremResult("T2", hyp, not bad, {"subgroups": qs, "counterexamples": bad})


def _t3(c: _Context) -> TheoremResult:
    F, L = c.F, c.L
    bad = []
    for q in c.normal:
        qc = L.product(q, F.c_p(q))
        seed = [local_system(F, q, "PC"), local_system(F, qc, "N")]
        if generate(F, seed) != F:
            bad.append(q)
    return TheoremResult("T3", True, not bad, {"normal_subgroups": c.normal, "counterexamples": bad})


def _t4(c: _Context) -> TheoremResult:
    F, L = c.F, c.L
    J = F.idx(c.chars.thompson)
    zj = L.meet(J, L.centralizer(J))
    lhs = is_trivial(local_system(F, zj, "N"))
    return TheoremResult("T4", F.p % 2 == 1, lhs == c.trivial,
                         {"zj": zj, "zj_order": L.orders[zj], "n_f_zj_trivial": lhs,
                          "trivial": c.trivial})


def _t5(c: _Context) -> TheoremResult:
    F, L = c.F, c.L
    lo, hi = L.sets[F.idx(c.chars.derived)], L.sets[F.idx(c.chars.frattini)]
    qs = [q for q in F.objects if lo <= L.sets[q] <= hi]
    bad = [q for q in qs if not is_trivial(local_system(F, q, "N"))]
    return TheoremResult("T5", c.n_f_p_trivial, not bad, {"subgroups": qs, "counterexamples": bad})


def _t6(c: _Context) -> TheoremResult:
    p = c.F.p
    hyp = (p % 2 == 1 and c.slim) or (p == 2 and c.d8_free)
    return TheoremResult("T6", hyp, c.trivial == c.n_f_p_trivial,
                         {"trivial": c.trivial, "n_f_p_trivial": c.n_f_p_trivial})


def _t7(c: _Context) -> TheoremResult:
    limit = c.focal.limit
    return TheoremResult("T7", c.L.orders[limit] == 1, c.trivial,
                         {"limit": limit, "limit_order": c.L.orders[limit]})


def _t8(c: _Context) -> TheoremResult:
    hyp = c.sparse.extremely_sparse
    beta = c.beta
    holds = c.rank == 0 and beta is not None
    witness = {"essential_rank": c.rank,
               "q": beta[0] if beta else None, "beta": list(beta[1]) if beta else None}
    return TheoremResult("T8", hyp, holds, witness)


def _t9(c: _Context) -> TheoremResult:
    F, L, top = c.F, c.L, c.top
    beta = c.beta
    hyp = c.sparse.extremely_sparse
    if beta is None:
        return TheoremResult("T9", hyp, False, {"reason": "no generating automorphism of prime order"})
    phi = beta[1]
    bad = []
    for q in F.objects:
        if q == top:
            continue
        r = F.restrict(top, phi, q)
        if frozenset(r) == L.sets[q] and r != F.identity(q):
            bad.append(q)
    focal_full = c.focal.focal == top
    return TheoremResult("T9", hyp, not bad and focal_full,
                         {"moved_subgroups": bad, "focal_is_P": focal_full})


def _t10(c: _Context) -> TheoremResult:
    F, L = c.F, c.L
    pairs = 0
    bad = []
    for q in c.normal_in_p:
        if local_system(F, q, "PC") != F:
            continue
        Fq = quotient_system(F, q)
        Lq = Fq.lattice
        for r in c.normal_in_p:
            if not L.sets[q] <= L.sets[r]:
                continue
            pairs += 1
            rb = Lq.index[frozenset(Fq.projection[x] for x in L.members[r])]
            same_trivial = is_trivial(local_system(F, r, "N")) == is_trivial(local_system(Fq, rb, "N"))
            same_normal = is_normal(F, r) == is_normal(Fq, rb)
            if not (same_trivial and same_normal):
                bad.append([q, r])
    return TheoremResult("T10", pairs > 0, not bad, {"pairs": pairs, "counterexamples": bad})


_CHECKS = (_t1, _t2, _t3, _t4, _t5, _t6, _t7, _t8, _t9, _t10)


def run_theorem_suite(F: FusionSystem, system: str = "") -> TheoremReport:
    """Evaluate T1-T10 on a saturated system."""
    c = _Context(F)
    return TheoremReport(system or F.name, [check(c) for check in _CHECKS])

"""Factoring F-isomorphisms through automorphisms of P and of essential subgroups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import NoDecomposition
from .subgroups import essentials
from .system import FusionSystem, Iso, Morphism


@dataclass(frozen=True)
class AlperinStep:
    over: int  # S: the support or an essential subgroup
    automorphism: Iso  # alpha in Aut_F(S), aligned with members of S
    domain: int  # the subgroup alpha is restricted to

    def to_json(self) -> dict:
        return {"over": self.over, "automorphism": list(self.automorphism), "domain": self.domain}


def recompose(F: FusionSystem, q: int, steps: list[AlperinStep]) -> Iso:
    """Apply the restricted steps left to right, starting from the identity on S_q."""
    cur = F.identity(q)
    for st in steps:
        if F.image(cur) != st.domain:
            raise ValueError("step domain does not match the running image")
        cur = F.compose(cur, F.restrict(st.over, st.automorphism, st.domain))
    return cur


class AlperinSearch:
    """Breadth-first search over F-isomorphisms out of a fixed subgroup.

    Edges are restrictions of Aut_F(S) with S the support or an essential
    subgroup containing the current image.  Reusable across many targets.
    """

    def __init__(self, F: FusionSystem):
        self.F = F
        self.hubs = [F.support] + [e for e in essentials(F) if e != F.support]
        self._moves: dict[int, list[tuple[Iso, int, Iso]]] = {}
        self._trees: dict[int, dict[Iso, tuple[Iso | None, AlperinStep | None]]] = {}

    def moves(self, x: int) -> list[tuple[Iso, int, Iso]]:
        """Distinct restrictions alpha|_X, each with a first witness (S, alpha)."""
        if x not in self._moves:
            F, L = self.F, self.F.lattice
            seen: dict[Iso, tuple[int, Iso]] = {}
            for s in self.hubs:
                if not L.sets[x] <= L.sets[s]:
                    continue
                for alpha in F.aut(s):
                    r = F.restrict(s, alpha, x)
                    if r not in seen:
                        seen[r] = (s, alpha)
            self._moves[x] = [(r, s, a) for r, (s, a) in sorted(seen.items())]
        return self._moves[x]

    def tree(self, q: int) -> dict[Iso, tuple[Iso | None, AlperinStep | None]]:
        if q in self._trees:
            return self._trees[q]
        F = self.F
        start = F.identity(q)
        parent: dict[Iso, tuple[Iso | None, AlperinStep | None]] = {start: (None, None)}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            x = F.image(cur)
            for r, s, alpha in self.moves(x):
                nxt = F.compose(cur, r)
                if nxt not in parent:
                    parent[nxt] = (cur, AlperinStep(s, alpha, x))
                    queue.append(nxt)
        self._trees[q] = parent
        return parent

    def decompose(self, phi) -> list[AlperinStep]:
        F = self.F
        q, images = (phi.domain, phi.images) if isinstance(phi, Morphism) else (int(phi[0]), tuple(phi[1]))
        parent = self.tree(q)
        if images not in parent:
            raise NoDecomposition(f"no factorization of {list(images)} through P and essentials")
        steps = []
        cur = images
        while parent[cur][0] is not None:
            cur, st = parent[cur]
            steps.append(st)
        steps.reverse()
        if not steps:
            top = F.support
            steps = [AlperinStep(top, F.identity(top), q)]
        return steps


def alperin_decompose(F: FusionSystem, phi) -> list[AlperinStep]:
    """Steps (S_i, alpha_i) whose restrictions compose, left to right, to ``phi``.

    Every S_i is the support of F or an F-essential subgroup.  Raises
    NoDecomposition when no such factorization exists, which for a saturated
    system would contradict Alperin's fusion theorem.
    """
    return AlperinSearch(F).decompose(phi)

"""Axiom checks for fusion systems and the extension control subgroup N_phi."""

from __future__ import annotations

from dataclasses import dataclass, field

from .system import FusionSystem, Iso, Morphism


@dataclass(frozen=True)
class Violation:
    axiom: str  # inclusion | inverse | inner | composition | restriction | homomorphism | sylow | extension
    domain: int
    images: Iso = ()
    detail: str = ""

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "domain": self.domain, "images": list(self.images),
                "detail": self.detail}


@dataclass
class SaturationResult:
    saturated: bool
    violations: list[Violation] = field(default_factory=list)

    @property
    def violated_axioms(self) -> list[str]:
        return sorted({v.axiom for v in self.violations})

    def __bool__(self) -> bool:
        return self.saturated


def _unpack(phi) -> tuple[int, Iso]:
    if isinstance(phi, Morphism):
        return phi.domain, phi.images
    i, images = phi
    return int(i), tuple(images)


def fully_normalized(F: FusionSystem, Q) -> bool:
    q = F.idx(Q)
    L = F.lattice
    best = max(L.orders[F.n_p(r)] for r in F.f_class(q))
    return L.orders[F.n_p(q)] == best


def fully_centralized(F: FusionSystem, Q) -> bool:
    q = F.idx(Q)
    L = F.lattice
    best = max(L.orders[F.c_p(r)] for r in F.f_class(q))
    return L.orders[F.c_p(q)] == best


def fully_normalized_rep(F: FusionSystem, Q) -> int:
    """Least lattice index in the F-class of Q among those maximizing |N_P(.)|."""
    cls = F.f_class(Q)
    L = F.lattice
    best = max(L.orders[F.n_p(r)] for r in cls)
    return min(r for r in cls if L.orders[F.n_p(r)] == best)


def n_phi(F: FusionSystem, phi, Q: int | None = None) -> int:
    """N_phi = {u in N_P(Q) : phi c_u phi^-1 in Aut_P(phi(Q))}, as a lattice index.

    ``phi`` is a Morphism or a pair (domain index, images).
    """
    q, img = _unpack(phi) if Q is None else (Q, tuple(phi))
    L = F.lattice
    r = F.image(img)
    aut_p_r = F.inner_autos(r)
    _, inv = F.invert(q, img)
    G = F.group
    mem_r = L.members[r]
    keep = []
    for u in L.members[F.n_p(q)]:
        # phi o c_u o phi^-1 evaluated on the members of phi(Q)
        conj = tuple(F.apply(q, img, G.conj(F.apply(r, inv, y), u)) for y in mem_r)
        if conj in aut_p_r:
            keep.append(u)
    return L.index[frozenset(keep)]


def _is_hom(F: FusionSystem, i: int, phi: Iso) -> bool:
    L = F.lattice
    mem, pos = L.members[i], L.pos[i]
    mul = F.group.mul
    for a, fa in zip(mem, phi):
        row = mul[a]
        frow = mul[fa]
        for b, fb in zip(mem, phi):
            if phi[pos[row[b]]] != frow[fb]:
                return False
    return True


def check_axioms(F: FusionSystem, check_maps: bool = True) -> list[Violation]:
    """Axioms (a)-(c) plus closure under composition and restriction."""
    out: list[Violation] = []
    L = F.lattice
    for i in F.objects:
        isos = F.isos[i]
        if F.identity(i) not in isos:
            out.append(Violation("inclusion", i, F.identity(i)))
        for phi in sorted(F.inner(i) - isos):
            out.append(Violation("inner", i, phi))
        for phi in sorted(isos):
            if len(set(phi)) != len(phi) or frozenset(phi) not in L.index:
                out.append(Violation("homomorphism", i, phi, "image is not a subgroup"))
                continue
            if check_maps and not _is_hom(F, i, phi):
                out.append(Violation("homomorphism", i, phi))
                continue
            k, inv = F.invert(i, phi)
            if k not in F.isos:
                out.append(Violation("homomorphism", i, phi, "image outside the support"))
                continue
            if inv not in F.isos[k]:
                out.append(Violation("inverse", i, phi))
            for psi in F.isos[k]:
                if F.compose(phi, psi) not in isos:
                    out.append(Violation("composition", i, phi, f"then {list(psi)}"))
                    break
            for j in L.below[i]:
                if j != i and F.restrict(i, phi, j) not in F.isos[j]:
                    out.append(Violation("restriction", i, phi, f"to subgroup {j}"))
                    break
    return out


def check_sylow(F: FusionSystem) -> list[Violation]:
    top = F.support
    n_aut = len(F.aut(top))
    n_inner = len(F.inner_autos(top))
    index = n_aut // n_inner
    if n_aut % n_inner or index % F.p == 0:
        return [Violation("sylow", top, (), f"|Aut_F(P)| = {n_aut}, |Aut_P(P)| = {n_inner}")]
    return []


def check_extension(F: FusionSystem) -> list[Violation]:
    out = []
    fn = {}
    restricted: dict[tuple[int, int], set[Iso]] = {}
    for i in F.objects:
        for phi in sorted(F.isos[i]):
            k = F.image(phi)
            if k not in fn:
                fn[k] = fully_normalized(F, k)
            if not fn[k]:
                continue
            n = n_phi(F, (i, phi))
            if n == i:
                continue
            key = (n, i)
            if key not in restricted:
                restricted[key] = {F.restrict(n, psi, i) for psi in F.isos[n]}
            if phi not in restricted[key]:
                out.append(Violation("extension", i, phi, f"no extension to N_phi = {n}"))
    return out


def check_saturation(F: FusionSystem) -> SaturationResult:
    """Check axioms (a)-(c), closure, the Sylow axiom and the extension axiom.

    Violations are returned as data.  The Sylow and extension checks only run
    when the basic axioms hold, since they presuppose a well-formed table.
    """
    violations = check_axioms(F)
    if not violations:
        violations += check_sylow(F)
        violations += check_extension(F)
    return SaturationResult(not violations, violations)

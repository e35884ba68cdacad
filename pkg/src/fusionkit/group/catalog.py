"""Named permutation groups used as fixtures (all 0-based)."""

from __future__ import annotations

import re

from ..errors import UnknownName
from .perm import Permutation

_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\(([^)]*)\))?\s*$")

NAMES = ("s3", "s4", "a4", "d8", "d16", "sl23", "pgl27",
         "cp_wr_cp(p)", "cyclic(n)", "dihedral(2n)", "elementary(p,k)")


def _cycle(points, degree: int) -> Permutation:
    img = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a] = b
    return Permutation(tuple(img))


def cyclic(n: int) -> list[Permutation]:
    if n < 1:
        raise UnknownName(f"cyclic({n})")
    if n == 1:
        return [Permutation.identity(1)]
    return [_cycle(list(range(n)), n)]


def dihedral(order: int) -> list[Permutation]:
    """Dihedral group of the given order 2n, acting on n points (n >= 3)."""
    if order < 2 or order % 2:
        raise UnknownName(f"dihedral({order})")
    n = order // 2
    if n == 1:
        return [Permutation((1, 0))]
    if n == 2:
        return [Permutation((1, 0, 2, 3)), Permutation((0, 1, 3, 2))]
    rot = _cycle(list(range(n)), n)
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return [rot, ref]


def elementary(p: int, k: int) -> list[Permutation]:
    degree = max(p * k, 1)
    return [_cycle(list(range(i * p, (i + 1) * p)), degree) for i in range(k)]


def cp_wr_cp(p: int) -> list[Permutation]:
    """C_p wr C_p on p^2 points: a p-cycle on the first block and the block rotation."""
    n = p * p
    base = _cycle(list(range(p)), n)
    top = Permutation(tuple((i + p) % n for i in range(n)))
    return [base, top]


def _sl23() -> list[Permutation]:
    # natural action on the 8 nonzero vectors of F_3^2
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    where = {v: i for i, v in enumerate(vecs)}

    def act(m):
        (a, b), (c, d) = m
        return Permutation(tuple(where[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs))

    return [act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))]


def _pgl27() -> list[Permutation]:
    # projective line over F_7: points 0..6 and infinity = 7
    inf = 7

    def moebius(f):
        return Permutation(tuple(f(x) for x in range(8)))

    def shift(x):
        return inf if x == inf else (x + 1) % 7

    def scale(x):
        return inf if x == inf else (3 * x) % 7

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, 5, 7)) % 7  # -1/x, since x^-1 = x^5 in F_7

    return [moebius(shift), moebius(scale), moebius(invert)]


def catalog(name: str) -> list[Permutation]:
    """Generators for a named group, e.g. ``"s4"``, ``"cyclic(8)"``, ``"elementary(2,3)"``."""
    m = _CALL.match(name.lower())
    if not m:
        raise UnknownName(name)
    key, args = m.group(1), m.group(2)
    try:
        params = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise UnknownName(name) from None
    fixed = {
        "s3": lambda: [_cycle([0, 1], 3), _cycle([0, 1, 2], 3)],
        "s4": lambda: [_cycle([0, 1], 4), _cycle([0, 1, 2, 3], 4)],
        "a4": lambda: [_cycle([0, 1, 2], 4), _cycle([1, 2, 3], 4)],
        "d8": lambda: dihedral(8),
        "d16": lambda: dihedral(16),
        "sl23": _sl23,
        "pgl27": _pgl27,
    }
    if key in fixed and not params:
        return fixed[key]()
    builders = {"cyclic": (cyclic, 1), "dihedral": (dihedral, 1),
                "elementary": (elementary, 2), "cp_wr_cp": (cp_wr_cp, 1)}
    if key in builders and len(params) == builders[key][1]:
        return builders[key][0](*params)
    raise UnknownName(name)


def catalog_degree(name: str) -> int:
    return catalog(name)[0].degree

from __future__ import annotations

import functools
import sys
from pathlib import Path

import pytest

from fusionkit.fusion.construct import from_group
from fusionkit.group.catalog import catalog
from fusionkit.group.table import closure

DATA = Path(__file__).parent / "data"

DEFAULT_PAIRS = [("s3", 3), ("s4", 2), ("a4", 2), ("sl23", 2), ("d8", 2), ("d16", 2),
                 ("pgl27", 2), ("cp_wr_cp(3)", 3)]
# the same list without the order-81 wreath product, for the slower brute-force checks
SMALL_PAIRS = DEFAULT_PAIRS[:-1]


@functools.lru_cache(maxsize=None)
def group(name: str):
    return closure(catalog(name), name=name)


@functools.lru_cache(maxsize=None)
def system(name: str, p: int):
    return from_group(group(name), p, name=f"{name}/p{p}")


def raw_closure(gens, degree):
    """Independent group closure on plain tuples (composition: apply left factor first)."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def compose(a, b):
    """a then b."""
    return tuple(b[i] for i in a)


def invert(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def all_function_homs(Q, R, injective_only):
    """Every function Q -> R with f(xy) = f(x)f(y).

    Walks the full function space element by element, dropping a partial
    function as soon as two assigned elements and their product disagree.
    """
    GQ, GR = Q.ambient, R.ambient
    elems = list(Q.members)
    out = []

    def rec(k, f):
        if k == len(elems):
            if not injective_only or len(set(f.values())) == len(f):
                out.append(tuple(f[x] for x in elems))
            return
        x = elems[k]
        for r in R.members:
            f[x] = r
            if all(consistent(u, v, f) for u in f for v in (x,)):
                rec(k + 1, f)
            del f[x]

    def consistent(u, v, f):
        for a, b in ((u, v), (v, u)):
            w = GQ.mul[a][b]
            if w in f and f[w] != GR.mul[f[a]][f[b]]:
                return False
        return True

    rec(0, {})
    return sorted(out)


@pytest.fixture
def f_s4():
    return system("s4", 2)


@pytest.fixture
def f_pgl():
    return system("pgl27", 2)


def normal_v4(F):
    """The Klein four subgroup of P that is normal in F (for F = F_{D8}(S4))."""
    L = F.lattice
    from fusionkit.fusion.local import o_p
    q = o_p(F)
    assert L.orders[q] == 4
    return q


def pytest_terminal_summary(terminalreporter):
    lines = [line for mod in list(sys.modules.values())
             for line in getattr(mod, "ACCEPTANCE_LINES", [])]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(set(lines), key=lambda s: s.split()[1]):
            terminalreporter.write_line(line)

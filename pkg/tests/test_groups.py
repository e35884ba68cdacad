import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fusionkit.errors import DegreeMismatch, NotNormal, OrderBoundExceeded, UnknownName
from fusionkit.group.catalog import catalog
from fusionkit.group.homs import isomorphic
from fusionkit.group.lattice import enumerate_subgroups
from fusionkit.group.ops import (characteristic_subgroups, derived_subgroup, local_data,
                                 p_part, quotient_group, sylow)
from fusionkit.group.perm import Permutation
from fusionkit.group.table import GroupTable, as_group, closure

from conftest import group, raw_closure

P_GROUPS = ["d8", "d16", "cyclic(8)", "elementary(2,3)", "cp_wr_cp(3)", "cyclic(9)",
            "elementary(3,2)"]


# -- closure ------------------------------------------------------------------

def test_closure_orders():
    assert closure([], degree=4).order == 1
    assert group("s4").order == 24
    assert group("pgl27").order == 336
    assert group("pgl27").degree == 8


def test_closure_is_breadth_first_and_deterministic():
    G = group("s4")
    H = closure(catalog("s4"))
    assert G.elements == H.elements
    assert G.elements[0] == tuple(range(4))
    # identity first, then the generators in input order
    assert G.elements[1:3] == [g.images for g in catalog("s4")]


def test_closure_errors():
    with pytest.raises(OrderBoundExceeded):
        closure(catalog("s4"), max_order=10)
    with pytest.raises(DegreeMismatch):
        closure([Permutation((1, 0)), Permutation((1, 2, 0))])


def test_table_invariants():
    G = group("sl23")
    n = G.order
    assert all(G.mul[a][G.inverse[a]] == 0 for a in range(n))
    assert all(0 <= G.mul[a][b] < n for a in range(n) for b in range(n))
    for a, b in [(1, 2), (3, 5), (7, 11)]:
        assert G.elements[G.mul[a][b]] == tuple(G.elements[b][i] for i in G.elements[a])


# -- subgroup enumeration -------------------------------------------------------

def _oracle_subgroups(G: GroupTable) -> set[frozenset]:
    """Every subgroup generated by at most two elements, by independent closure.

    Enough for S4 and D8, all of whose subgroups are 2-generated.
    """
    out = set()
    for a, b in itertools.combinations_with_replacement(G.elements, 2):
        out.add(raw_closure([a, b], G.degree))
    return out


@pytest.mark.parametrize("name,count", [("d8", 10), ("s4", 30), ("cyclic(5)", 2),
                                        ("cyclic(7)", 2), ("d16", 19), ("pgl27", 413),
                                        ("cp_wr_cp(3)", 50)])
def test_subgroup_counts(name, count):
    assert len(group(name).lattice) == count


@pytest.mark.parametrize("name", ["d8", "s4"])
def test_subgroups_match_brute_force(name):
    G = group(name)
    ours = {frozenset(G.elements[x] for x in H.members) for H in G.lattice.subgroups}
    assert ours == _oracle_subgroups(G)


def test_subgroup_order_and_uniqueness():
    L = group("pgl27").lattice
    keys = [(H.order, H.members) for H in L.subgroups]
    assert keys == sorted(keys)
    assert len(set(L.sets)) == len(L)


@pytest.mark.parametrize("name", ["s4", "pgl27", "sl23", "a4"])
def test_lagrange_and_sylow_counting(name):
    G = group(name)
    L = G.lattice
    assert all(G.order % H.order == 0 for H in L.subgroups)
    for p in (2, 3, 5, 7):
        target = p_part(G.order, p)
        count = sum(1 for o in L.orders if o == target)
        assert count % p == 1 % p


def test_conjugacy_classes_and_normality_in_s4():
    L = group("s4").lattice
    normal_orders = sorted(L.orders[i] for i in range(len(L)) if L.normal[i])
    assert normal_orders == [1, 4, 12, 24]
    assert sum(len(c) for c in L.classes) == len(L)
    assert len(L.classes) == 11


def test_enumeration_bound():
    with pytest.raises(OrderBoundExceeded):
        enumerate_subgroups(group("s4"), max_order=10)


# -- local data ----------------------------------------------------------------

def test_local_data_examples():
    G = group("d8")
    loc = local_data(G, G.whole)
    assert loc.normalizer.order == 8 and loc.centralizer.order == 2
    Z = loc.centralizer
    zl = local_data(G, Z)
    assert Z.order == 2 and zl.normalizer.order == 8
    S = group("s4")
    v4 = next(H for H in S.lattice.subgroups if H.order == 4 and S.lattice.normal[S.lattice.index[H.member_set]])
    sl = local_data(S, v4)
    assert sl.normalizer.order == 24
    assert sl.centralizer == v4
    assert sl.center_of_Q == v4


@pytest.mark.parametrize("name", ["s4", "d16", "sl23"])
def test_local_data_invariants(name):
    G = group(name)
    for H in G.lattice.subgroups:
        loc = local_data(G, H)
        assert H <= loc.normalizer
        C = loc.centralizer
        assert all(G.conj(c, n) in C.member_set for c in C.generator_indices
                   for n in loc.normalizer.generator_indices)


# -- characteristic subgroups ------------------------------------------------------

def test_characteristic_subgroups_examples():
    D8 = group("d8")
    ch = characteristic_subgroups(D8.whole)
    assert ch.derived.order == 2 and ch.frattini == ch.derived
    assert ch.thompson.order == 8
    C = group("elementary(2,3)")
    ch = characteristic_subgroups(C.whole)
    assert ch.derived.order == 1 and ch.thompson.order == 8
    # golden: J(D16) is the cyclic subgroup of order 8
    D16 = group("d16")
    J = characteristic_subgroups(D16.whole).thompson
    assert J.order == 8
    assert max(D16.element_orders[x] for x in J.members) == 8


@pytest.mark.parametrize("name", P_GROUPS)
def test_frattini_cross_check(name):
    # both Frattini computations run inside; a mismatch raises AssertionError
    ch = characteristic_subgroups(group(name).whole)
    assert ch.derived <= ch.frattini


def test_characteristic_subgroups_of_sylow_lift_back():
    G = group("s4")
    P = sylow(G, 2)
    ch = characteristic_subgroups(P)
    assert ch.thompson.ambient is G and ch.thompson.order == 8


# -- Sylow ---------------------------------------------------------------------

def test_sylow_examples():
    S4 = group("s4")
    P = sylow(S4, 2)
    assert P.order == 8 and isomorphic(as_group(P)[0], group("d8"))
    assert sylow(S4, 5).order == 1
    Q = sylow(group("pgl27"), 2)
    assert Q.order == 16 and isomorphic(as_group(Q)[0], group("d16"))
    assert sylow(S4, 2) == P  # deterministic


# -- quotients -----------------------------------------------------------------

def test_quotient_examples():
    S4 = group("s4")
    q = quotient_group(S4, S4.trivial)
    assert q.quotient.order == 24 and isomorphic(q.quotient, S4)
    L = S4.lattice
    v4 = next(L.subgroups[i] for i in range(len(L)) if L.orders[i] == 4 and L.normal[i])
    q = quotient_group(S4, v4)
    assert q.quotient.order == 6 and isomorphic(q.quotient, group("s3"))
    assert {x for x in range(24) if q.projection[x] == 0} == set(v4.members)
    D8 = group("d8")
    z = local_data(D8, D8.whole).centralizer
    q = quotient_group(D8, z)
    assert isomorphic(q.quotient, group("elementary(2,2)"))


def test_quotient_requires_normal():
    S4 = group("s4")
    c2 = next(H for H in S4.lattice.subgroups if H.order == 2)
    with pytest.raises(NotNormal):
        quotient_group(S4, c2)


@pytest.mark.parametrize("name", ["s4", "d16", "sl23", "a4"])
def test_quotient_order_via_projected_generators(name):
    G = group(name)
    L = G.lattice
    for i in range(len(L)):
        if not L.normal[i]:
            continue
        q = quotient_group(G, L.subgroups[i])
        T = q.quotient
        gens = [T.elements[q.projection[g]] for g in G.generator_indices]
        assert len(raw_closure(gens, T.degree)) == G.order // L.orders[i]


# -- catalog -------------------------------------------------------------------

def test_catalog_examples():
    assert group("d8").order == 8
    assert closure(catalog("cyclic(1)")).order == 1
    assert closure(catalog("dihedral(4)")).order == 4
    assert closure(catalog("elementary(3,2)")).order == 9
    assert closure(catalog("cp_wr_cp(2)")).order == 8
    for bad in ["s5", "cyclic()", "cyclic(0)", "elementary(2)", "((", "dihedral(7)"]:
        with pytest.raises(UnknownName):
            catalog(bad)


def test_derived_subgroup_examples():
    assert derived_subgroup(group("s4")).order == 12
    assert derived_subgroup(group("pgl27")).order == 168


@settings(max_examples=25, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_closure_matches_independent_closure(gens):
    gens = [tuple(g) for g in gens]
    assert set(closure(gens).elements) == raw_closure(gens, 5)

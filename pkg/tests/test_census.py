import pytest

from fusionkit.classify.census import enumerate_subsystems, subset_closure_census
from fusionkit.classify.sparse import is_constrained, sparseness, witness_json
from fusionkit.config import BOUNDS
from fusionkit.errors import SearchBoundExceeded
from fusionkit.fusion.construct import trivial_system
from fusionkit.fusion.local import is_normal, o_p
from fusionkit.fusion.saturation import check_saturation
from fusionkit.fusion.subgroups import is_centric

from conftest import DEFAULT_PAIRS, SMALL_PAIRS, normal_v4, system


def _small_subgroups(F, limit=6):
    L = F.lattice
    return [q for q in F.objects if len(L.below[q]) <= limit]


@pytest.mark.parametrize("pair", DEFAULT_PAIRS)
def test_assignment_census_matches_subset_closure(pair):
    F = system(*pair)
    for q in _small_subgroups(F):
        fast = enumerate_subsystems(F, q)
        slow = subset_closure_census(F, q)
        assert fast.signatures() == slow.signatures(), q


@pytest.mark.parametrize("pair", SMALL_PAIRS)
def test_full_census_on_p_matches_oracle(pair):
    F = system(*pair)
    assert enumerate_subsystems(F).signatures() == subset_closure_census(F).signatures()


@pytest.mark.parametrize("pair", DEFAULT_PAIRS)
def test_census_is_sound(pair):
    F = system(*pair)
    for q in F.objects:
        census = enumerate_subsystems(F, q)
        sigs = [E.signature() for E in census.found]
        assert len(sigs) == len(set(sigs))
        assert trivial_system(F.group, F.p, support=q) in census.found
        for E in census.found:
            assert E.support == q and E <= F
            assert check_saturation(E).saturated
        if q == F.support:
            assert F in census.found


@pytest.mark.parametrize("pair", SMALL_PAIRS)
def test_census_is_monotone(pair):
    F = system(*pair)
    outer = enumerate_subsystems(F).signatures()
    for E in enumerate_subsystems(F).found:
        assert enumerate_subsystems(E).signatures() <= outer


def test_census_examples(f_s4, f_pgl):
    c = enumerate_subsystems(f_s4)
    assert len(c.found) == 2 and c.found[-1] == f_s4
    assert c.search_stats == {"branch_points": 1, "assignments": 2, "distinct_tables": 2, "saturated": 2}
    on_v4 = enumerate_subsystems(f_s4, normal_v4(f_s4))
    # inner fusion of V4 and F_{V4}(A4); S3 acting on V4 is not saturated (|S3| is even)
    assert [E.morphism_count() for E in on_v4.found] == [5, 13]
    assert len(enumerate_subsystems(f_pgl).found) == 2
    assert len(enumerate_subsystems(system("d16", 2)).found) == 1


def test_strict_census_sees_unsaturated_tables(f_s4):
    v = normal_v4(f_s4)
    every = subset_closure_census(f_s4, v, saturated_only=False)
    sat = subset_closure_census(f_s4, v)
    assert len(every.found) > len(sat.found)
    assert sat.signatures() <= every.signatures()


def test_census_bounds(monkeypatch, f_pgl):
    monkeypatch.setattr(BOUNDS, "max_census_assignments", 1)
    with pytest.raises(SearchBoundExceeded):
        enumerate_subsystems(f_pgl)
    with pytest.raises(SearchBoundExceeded):
        subset_closure_census(f_pgl, max_states=2)


# -- sparseness -------------------------------------------------------------------------

EXPECTED = {
    ("s3", 3): (True, True), ("s4", 2): (True, False), ("a4", 2): (True, True),
    ("sl23", 2): (True, True), ("d8", 2): (False, False), ("d16", 2): (False, False),
    ("pgl27", 2): (True, False), ("cp_wr_cp(3)", 3): (False, False),
}


@pytest.mark.parametrize("pair", DEFAULT_PAIRS)
def test_sparseness_verdicts(pair):
    sp = sparseness(system(*pair))
    assert (sp.sparse, sp.extremely_sparse) == EXPECTED[pair]
    assert sp.extremely_sparse <= sp.sparse


def test_s4_witness_is_a4_on_the_klein_four(f_s4):
    sp = sparseness(f_s4)
    assert len(sp.witnesses) == 1
    W = sp.witnesses[0]
    assert W.support == normal_v4(f_s4) and W.order == 4
    data = witness_json(W)
    assert data["support_order"] == 4 and len(data["extra_morphisms"]) == 8  # 6 between the C2s, 2 on V4
    assert check_saturation(W).saturated


def test_trivial_systems_are_not_sparse():
    for pair in DEFAULT_PAIRS:
        F = system(*pair)
        sp = sparseness(trivial_system(F.group, F.p))
        assert not sp.sparse and not sp.extremely_sparse


def test_strict_mode_is_finer(f_s4):
    strict = sparseness(f_s4, strict=True)
    assert strict.strict and not strict.sparse
    assert sparseness(system("s3", 3), strict=True).extremely_sparse
    assert not sparseness(system("a4", 2), strict=True).sparse


# -- constrained ------------------------------------------------------------------------

def test_constrained_examples(f_s4, f_pgl):
    c = is_constrained(f_s4)
    assert c.constrained and c.witness == normal_v4(f_s4)
    assert not is_constrained(f_pgl).constrained and is_constrained(f_pgl).witness is None
    assert is_constrained(system("s3", 3)).constrained


@pytest.mark.parametrize("pair", DEFAULT_PAIRS)
def test_constrained_iff_o_p_centric(pair):
    F = system(*pair)
    c = is_constrained(F)
    assert c.constrained == is_centric(F, o_p(F))
    if c.witness is not None:
        assert is_normal(F, c.witness) and is_centric(F, c.witness)

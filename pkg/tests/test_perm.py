import json

import pytest
from hypothesis import given, strategies as st

from fusionkit.errors import DegreeMismatch
from fusionkit.group.perm import Permutation, as_permutation, load_group_file, parse_generators

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(n)).map(lambda xs: Permutation(tuple(xs))))


def test_cycle_notation_round_trip():
    g = Permutation.from_cycles("(0 1)(2 3)", 5)
    assert g.images == (1, 0, 3, 2, 4)
    assert str(g) == "(0 1)(2 3)"
    assert Permutation.from_cycles("(0,2,1)").images == (2, 0, 1)
    assert str(Permutation.identity(3)) == "()"


def test_composition_applies_left_factor_first():
    a = Permutation.from_cycles("(0 1)", 3)
    b = Permutation.from_cycles("(1 2)", 3)
    # 0 -> 1 under a, then 1 -> 2 under b
    assert (a * b).images[0] == 2


@pytest.mark.parametrize("bad", ["(0 1", "(0 0)", "(0 1)(1 2)", "x"])
def test_malformed_cycles_rejected(bad):
    with pytest.raises(ValueError):
        Permutation.from_cycles(bad)


def test_not_a_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_degree_checks():
    with pytest.raises(DegreeMismatch):
        Permutation.from_cycles("(0 5)", 3)
    with pytest.raises(DegreeMismatch):
        as_permutation([1, 0], degree=3)
    with pytest.raises(DegreeMismatch):
        Permutation((1, 0)) * Permutation((1, 0, 2))


def test_group_file_accepts_both_notations(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"degree": 4, "generators": ["(0 1)", [1, 2, 3, 0]]}))
    degree, gens = load_group_file(path)
    assert degree == 4
    assert [g.images for g in gens] == [(1, 0, 2, 3), (1, 2, 3, 0)]
    with pytest.raises(DegreeMismatch):
        parse_generators({"degree": 3, "generators": [[1, 0, 2, 3]]})


@given(perms)
def test_inverse_and_cycles(g):
    ident = Permutation.identity(g.degree)
    assert g * g.inverse() == ident
    assert Permutation.from_cycles(str(g), g.degree) == g


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(*[st.permutations(range(n))] * 3)))
def test_associativity(triple):
    a, b, c = (Permutation(tuple(x)) for x in triple)
    assert (a * b) * c == a * (b * c)

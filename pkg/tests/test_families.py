from fractions import Fraction

import pytest

from src.core.audit import audit_structure
from src.core.bases import base_type
from src.core.canonical import canonical_form
from src.core.families import (
    build_G_family,
    build_H,
    build_base,
    build_family,
    build_omission,
    catalog_members,
    classify,
    expected_linearity,
    family_members_of_order,
    family_order,
    family_parameter_names,
    known_omission,
    lemma_base_type,
)
from src.core.graph_core import add_pendants, cycle_graph, is_tricyclic
from src.core.graph_io import parse_graph6
from src.core.linearity import check_two_walk_linear
from src.core.spectral import main_eigenvalue_count_exact
from src.models.errors import ParameterError
from src.models.family import FamilyId, FamilyKind
from src.models.graph import BaseType
from src.models.verdict import Linear
from src.seed.base_catalog import H_TABLE, OMISSIONS

T = BaseType

H_EXPECTED = {
    1: (1, 6), 2: (1, 3), 3: (2, 2), 4: (1, 4), 5: (2, 1), 6: (1, 3), 7: (3, 0), 8: (2, 2),
    9: (2, 1), 10: (1, 3), 11: (3, 0), 12: (1, 6), 13: (0, 8), 14: (2, 2), 15: (1, 4),
    16: (2, 2), 17: (1, 4), 18: (1, 4), 19: (0, 6), 20: (3, -1), 21: (2, 1), 22: (2, 1),
    23: (1, 3), 24: (2, 2), 25: (1, 4), 26: (0, 6), 27: (3, -1), 28: (2, 1), 29: (1, 3),
    30: (2, 2),
}

H_BASE_TYPES = {
    **{i: T.T1 for i in (1, 2)},
    **{i: T.T2 for i in range(3, 7)},
    7: T.T3,
    **{i: T.T4 for i in range(8, 11)},
    **{i: T.T6 for i in range(11, 16)},
    **{i: T.T7 for i in range(16, 24)},
    **{i: T.T8 for i in range(24, 31)},
}

G_EXPECTED = {1: (2, 2), 2: (2, 1), 3: (2, 1), 4: (2, 2), 5: (2, 1), 6: (2, 1), 8: (2, 1)}


def g_members(max_order):
    """Tous les (j, params) valides dont l'ordre ne dépasse pas max_order"""
    members = []
    for j in range(1, 9):
        if j in (1, 4, 7):
            value = 1
            while family_order(j, (value,)) <= max_order:
                members.append((j, (value,)))
                value += 1
            continue
        total = 1
        while 12 + 2 * total <= max_order:
            members.extend((j, (k1, total - k1)) for k1 in range(total + 1))
            total += 1
    return members


@pytest.mark.parametrize("index", range(1, 31))
def test_h_graphs_have_expected_linearity(index):
    g = build_H(index)
    a, b = H_EXPECTED[index]
    assert is_tricyclic(g)
    assert g.n == H_TABLE[index].order
    assert check_two_walk_linear(g) == Linear(Fraction(a), Fraction(b))
    assert expected_linearity(FamilyId.h(index)).to_dict() == {"family": f"H{index}", "a": a, "b": b}


@pytest.mark.parametrize("index", range(1, 31))
def test_h_graphs_come_from_their_base_type(index):
    assert base_type(build_H(index)) == H_BASE_TYPES[index]
    assert lemma_base_type(FamilyId.h(index)) == H_BASE_TYPES[index]


@pytest.mark.parametrize("index", range(1, 31))
def test_classify_recovers_h_graphs(index):
    assert classify(build_H(index)) == FamilyId.h(index)


def test_no_h_graph_from_t5():
    assert all(entry.base != T.T5 for entry in H_TABLE.values())


def test_friendship_base():
    g = build_base(T.T1, (1, 1, 1))
    assert (g.n, g.m) == (7, 9)
    assert g == build_H(1)


def test_g_examples():
    assert check_two_walk_linear(build_G_family(1, 1)) == Linear(Fraction(2), Fraction(2))
    assert check_two_walk_linear(build_G_family(2, 1, 0)) == Linear(Fraction(2), Fraction(1))
    assert check_two_walk_linear(build_G_family(7, 2)) == Linear(Fraction(3), Fraction(2))
    assert expected_linearity(FamilyId.g(7, 5)).b == 5


@pytest.mark.parametrize("j, params", g_members(20))
def test_g_families_up_to_order_20(j, params):
    g = build_G_family(j, *params)
    a, b = G_EXPECTED.get(j, (3, params[0]))
    assert g.n == family_order(j, params)
    assert is_tricyclic(g)
    assert check_two_walk_linear(g) == Linear(Fraction(a), Fraction(b))
    assert main_eigenvalue_count_exact(g) == 2
    assert base_type(g) == lemma_base_type(FamilyId.g(j, *params))


@pytest.mark.slow
def test_g_families_up_to_order_40():
    for j, params in g_members(40):
        g = build_G_family(j, *params)
        expected = expected_linearity(FamilyId.g(j, *params))
        assert check_two_walk_linear(g) == Linear(Fraction(expected.a), Fraction(expected.b))
        assert main_eigenvalue_count_exact(g) == 2


@pytest.mark.parametrize("params", [(0,), (-1,), (1, 1)])
def test_g1_constraints(params):
    with pytest.raises(ParameterError):
        build_G_family(1, *params)


@pytest.mark.parametrize("j, params", [(2, (0, 0)), (2, (1,)), (5, (-1, 2)), (7, (0,)), (9, (1,))])
def test_g_constraints(j, params):
    with pytest.raises(ParameterError):
        build_G_family(j, *params)


def test_h_index_range():
    with pytest.raises(ParameterError):
        build_H(31)
    with pytest.raises(ParameterError):
        FamilyId.h(0)


def test_base_floors():
    with pytest.raises(ParameterError):
        build_base(T.T2, (2, 2, 1, 1))
    with pytest.raises(ParameterError):
        build_base(T.T6, (2, 2, 3, 3))
    with pytest.raises(ParameterError):
        build_base(T.T8, (2, 2, 2))


def test_family_order_grows_with_each_parameter():
    for j in range(1, 9):
        names = family_parameter_names(j)
        start = tuple([1] * len(names))
        for position in range(len(names)):
            bigger = list(start)
            bigger[position] += 1
            assert family_order(j, tuple(bigger)) > family_order(j, start)


def test_members_of_order():
    assert (FamilyId.h(1), build_H(1)) in family_members_of_order(7)
    assert family_members_of_order(3) == []
    with pytest.raises(ParameterError):
        family_members_of_order(0)


def test_isomorphic_parameters_keep_first_identifier():
    ids = [family for family, _ in family_members_of_order(14)]
    assert FamilyId.g(2, 0, 1) in ids
    assert FamilyId.g(2, 1, 0) not in ids
    assert classify(build_G_family(2, 1, 0)) == FamilyId.g(2, 0, 1)


def test_catalog_members_are_sorted_by_order():
    members = catalog_members(8)
    orders = [g.n for _, g in members]
    assert orders == sorted(orders)
    assert {family for family, _ in members} >= {FamilyId.h(1), FamilyId.h(8), FamilyId.h(12)}


def test_classify_rejects_non_members():
    assert classify(add_pendants(cycle_graph(7), 0, 1)) is None
    assert classify(build_base(T.T6, (5, 5, 5, 5))) is None


@pytest.mark.parametrize("j, params", g_members(18))
def test_classify_keeps_family_kind(j, params):
    found = classify(build_G_family(j, *params))
    assert found is not None
    assert found.kind is FamilyKind.G
    expected, found_expected = expected_linearity(FamilyId.g(j, *params)), expected_linearity(found)
    assert (found_expected.a, found_expected.b) == (expected.a, expected.b)


def test_family_id_parsing():
    assert FamilyId.parse("H7") == FamilyId.h(7)
    assert FamilyId.parse("G2:1,0") == FamilyId.g(2, 1, 0)
    assert FamilyId.parse("g2(1, 0)") == FamilyId.g(2, 1, 0)
    assert str(FamilyId.g(2, 1, 0)) == "G2(1,0)"
    assert build_family(FamilyId.parse("G7:1")).n == 8
    with pytest.raises(ParameterError):
        FamilyId.parse("X3")


@pytest.mark.parametrize("entry", OMISSIONS, ids=lambda entry: entry.graph6)
def test_known_omissions_are_two_linear_outside_the_tables(entry):
    g = build_omission(entry)
    assert g.n == entry.order
    assert is_tricyclic(g)
    assert canonical_form(g).decode("ascii") == entry.graph6
    assert base_type(g) == entry.base
    verdict = check_two_walk_linear(g)
    assert verdict == Linear(Fraction(entry.a), Fraction(entry.b))
    assert main_eigenvalue_count_exact(g) == 2
    assert classify(g) is None
    assert audit_structure(g, verdict) == []


@pytest.mark.parametrize("entry", OMISSIONS, ids=lambda entry: entry.graph6)
def test_known_omission_lookup(entry):
    assert known_omission(parse_graph6(entry.graph6)) == entry


def test_known_omission_ignores_catalog_members():
    assert known_omission(build_H(7)) is None
    assert known_omission(build_H(11)) is None

import random
from collections import Counter

import pytest

from z4cosets.codes.constructions import F11, F12, F21, F22, U1_GENERATORS, U2_GENERATORS
from z4cosets.group_ring import delta, element, element_order, generate_subgroup, minus_one, two_torsion, unit_group
from z4cosets.unitsearch import (
    BudgetExceeded,
    coset_parameter_scan,
    gaussian_binomial,
    minimal_degree_representative,
    order40_subgroups,
    pentacode_subgroup_scan,
    render_representations,
    rref_matrices,
    verify_subgroup,
)


@pytest.fixture(scope="module")
def catalog():
    return order40_subgroups()


@pytest.fixture(scope="module")
def hits(catalog):
    return pentacode_subgroup_scan(catalog)


def test_gaussian_binomial():
    assert gaussian_binomial(5, 3) == 155
    assert gaussian_binomial(4, 2) == 35
    assert gaussian_binomial(3, 0) == 1 and gaussian_binomial(3, 4) == 0
    assert sum(1 for _ in rref_matrices(5, 3)) == 155


def test_unit_structure():
    units = unit_group(5)
    assert len(units) == 480
    assert len(two_torsion(units)) == 32
    orders = Counter(element_order(u) for u in units)
    assert orders[5] == 4 and orders[3] == 2


def test_catalog(catalog):
    units = set(unit_group(5))
    assert len(catalog) == 155
    seen = set()
    for entry in catalog:
        U = entry.subgroup
        verify_subgroup(U, 40)
        assert delta(1, 5) in U.elements
        assert len(entry.cosets) == 12
        assert set().union(*entry.cosets) == units
        assert sum(len(c) for c in entry.cosets) == 480
        seen.add(frozenset(U.elements))
    assert len(seen) == 155


def test_minimal_degree_representative():
    U = generate_subgroup([], n=5)
    assert minimal_degree_representative([delta(0, 5)]) == delta(0, 5)
    assert minimal_degree_representative(U.elements) == delta(0, 5)
    assert minimal_degree_representative([element(0, 0, 1, 0, 0), element(0, 1, 0, 0, 0)]) == delta(1, 5)


def test_pentacode_scan(hits):
    U1 = generate_subgroup(U1_GENERATORS)
    U2 = generate_subgroup(U2_GENERATORS)
    assert len(hits) == 2
    assert sum(len(h.representatives) for h in hits) == 4
    groups = {frozenset(h.subgroup.elements): h for h in hits}
    assert set(groups) == {frozenset(U1.elements), frozenset(U2.elements)}
    assert groups[frozenset(U1.elements)].representatives == (F11, F12)
    assert groups[frozenset(U2.elements)].representatives == (F21, F22)
    assert [str(f) for f in (F11, F12, F21, F22)] == ["31100", "33100", "31010", "13010"]


def test_pentacode_scan_order_independent(catalog, hits):
    order = list(range(len(catalog)))
    random.Random(7).shuffle(order)
    again = pentacode_subgroup_scan(catalog, order)
    assert [(frozenset(h.subgroup.elements), h.representatives) for h in again] == [
        (frozenset(h.subgroup.elements), h.representatives) for h in hits
    ]


def test_render_representations(hits):
    text = render_representations(hits)
    assert "f_1,1 = (3,1,1,0,0)" in text and "f_2,2 = (1,3,0,1,0)" in text
    assert "U_1 = < (0,1,0,0,0)," in text


def test_parameter_scan_small():
    hits = coset_parameter_scan(3, 4)
    assert (6, 4, 4) in {h.params for h in hits}
    for h in hits:
        assert h.params[2] >= 4 and h.params[0] == 6


def test_parameter_scan_n5():
    params = {h.params for h in coset_parameter_scan(5, 4)}
    assert (10, 40, 4) in params
    assert all(M <= 40 for (_, M, d) in params if d == 4)


def test_parameter_scan_budget():
    with pytest.raises(BudgetExceeded) as info:
        coset_parameter_scan(5, 4, max_subgroups=2)
    assert isinstance(info.value.partial, list)
    with pytest.raises(ValueError):
        coset_parameter_scan(8, 4)

"""Group arithmetic, characters, subgroups, annihilators."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framelab.errors import CapacityError, DomainError, InvalidElementError, InvalidSubgroupError
from framelab.groups import (
    GroupSpec,
    Subgroup,
    all_subgroups,
    annihilator,
    character_eval,
    character_phase,
    character_sum_over,
    full_group_sum,
    make_subgroup,
    parse_element,
    parse_group,
    parse_subset,
    subgroup_generated,
)

Z6 = GroupSpec((6,))
Z7 = GroupSpec((7,))
Z8 = GroupSpec((8,))
Z2Z4 = GroupSpec((2, 4))


def test_parse_group_grammar():
    assert parse_group("Z8").factors == (8,)
    assert parse_group("Z2xZ4").factors == (2, 4)
    assert parse_group("Z2xZ2xZ2").factors == (2, 2, 2)
    with pytest.raises(DomainError):
        parse_group("S3")
    with pytest.raises(DomainError):
        parse_group("Z1")


def test_parse_elements_and_subsets():
    assert parse_element(Z8, "5") == (5,)
    assert parse_element(Z2Z4, "(1,3)") == (1, 3)
    assert parse_subset(Z6, "0,1,3") == ((0,), (1,), (3,))
    assert parse_subset(Z6, "{0,1,3}") == ((0,), (1,), (3,))
    assert parse_subset(Z2Z4, "(0,0),(1,0),(0,1)") == ((0, 0), (1, 0), (0, 1))
    with pytest.raises(InvalidElementError):
        parse_element(Z2Z4, "3")


def test_group_basics():
    assert Z2Z4.order == 8
    assert Z2Z4.exponent == 4
    els = Z2Z4.elements()
    assert len(set(els)) == 8
    for i, x in enumerate(els):
        assert Z2Z4.index(x) == i
        assert Z2Z4.element(i) == x
    x = (1, 3)
    assert Z2Z4.add(x, Z2Z4.neg(x)) == Z2Z4.zero


def test_character_examples():
    # trivial character
    assert character_eval(Z2Z4, (0, 0), (1, 3)).complex_value == pytest.approx(1)
    # exponent sum 0/2 + 1/4 -> i
    v = character_eval(Z2Z4, (1, 1), (0, 1))
    assert v.phase == Fraction(1, 4)
    assert v.complex_value == pytest.approx(1j)
    # 3*5 = 15 = 1 mod 7
    assert character_phase(Z7, (3,), (5,)) == Fraction(1, 7)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([Z6, Z7, Z8, Z2Z4, GroupSpec((2, 2, 3))]), st.data())
def test_character_symmetry_and_conjugation(g, data):
    els = g.elements()
    x = data.draw(st.sampled_from(els))
    y = data.draw(st.sampled_from(els))
    assert character_phase(g, x, y) == character_phase(g, y, x)
    # conjugation: phase of conj is the negation mod 1
    ph = character_phase(g, x, y)
    assert character_phase(g, g.neg(x), y) == (-ph) % 1
    assert character_phase(g, x, g.neg(y)) == (-ph) % 1


def test_phase_denominator_divides_exponent():
    for g in (Z6, Z2Z4, GroupSpec((4, 6))):
        N = g.exponent
        for x in g.elements():
            for y in g.elements():
                assert N % character_phase(g, x, y).denominator == 0


def test_character_sum_over_subgroup_snaps_exactly():
    H = make_subgroup(Z6, [(0,), (3,)])
    assert character_sum_over(Z6, (2,), H) == 2
    assert character_sum_over(Z6, (4,), H) == 2
    for z in ((1,), (3,), (5,)):
        assert character_sum_over(Z6, z, H) == 0


def test_character_sum_over_plain_set():
    # the Z9 two-level set sums against A = {0,1,3,6,8}
    g = GroupSpec((9,))
    A = [(0,), (1,), (3,), (6,), (8,)]
    v = character_sum_over(g, (3,), A)
    assert v == pytest.approx(2.0, abs=1e-12)


def test_full_group_sum():
    assert full_group_sum(Z7, (0,)) == 7
    assert full_group_sum(Z7, (3,)) == 0
    assert full_group_sum(Z2Z4, (1, 2)) == 0


def test_subgroup_generated():
    assert subgroup_generated(Z8, [(2,)]).elements == ((0,), (2,), (4,), (6,))
    assert subgroup_generated(Z2Z4, [(1, 0)]).elements == ((0, 0), (1, 0))
    assert subgroup_generated(Z7, [(3,)]).order == 7


def brute_force_subgroups(g: GroupSpec) -> set[frozenset]:
    """Oracle: check every subset of the group for closure."""
    els = g.elements()
    out = set()
    for r in range(1, len(els) + 1):
        for c in itertools.combinations(els, r):
            s = frozenset(c)
            if g.zero in s and all(g.add(a, b) in s for a in s for b in s):
                out.add(s)
    return out


@pytest.mark.parametrize(
    "g,count",
    [
        (Z8, 4),
        (GroupSpec((2, 2)), 5),
        (Z7, 2),
        (Z6, 4),
        (Z2Z4, 8),
        (GroupSpec((2, 2, 2)), 16),
        (GroupSpec((12,)), 6),
    ],
)
def test_all_subgroups_against_oracle(g, count):
    subs = all_subgroups(g)
    assert len(subs) == count
    assert {h.as_set() for h in subs} == brute_force_subgroups(g)
    # Lagrange
    for h in subs:
        assert g.order % h.order == 0


def test_all_subgroups_capacity():
    with pytest.raises(CapacityError):
        all_subgroups(GroupSpec((5000,)))


def test_annihilator_examples():
    H = make_subgroup(Z6, [(0,), (3,)])
    assert annihilator(Z6, H).elements == ((0,), (2,), (4,))
    trivial = make_subgroup(Z6, [(0,)])
    assert annihilator(Z6, trivial).order == 6
    assert annihilator(Z6, make_subgroup(Z6, Z6.elements())).elements == ((0,),)
    with pytest.raises(InvalidSubgroupError):
        annihilator(Z6, Subgroup(Z6, ((0,), (1,))))


@pytest.mark.parametrize("g", [Z6, Z8, Z2Z4, GroupSpec((2, 2, 2)), GroupSpec((12,)), GroupSpec((4, 4))])
def test_annihilator_cardinality_and_nesting(g):
    subs = all_subgroups(g)
    anns = {h.elements: annihilator(g, h) for h in subs}
    for h in subs:
        assert anns[h.elements].order * h.order == g.order
    # nesting reversal
    for h1 in subs:
        for h2 in subs:
            if h1.as_set() <= h2.as_set():
                assert anns[h2.elements].as_set() <= anns[h1.elements].as_set()


def test_subgroup_character_sums_are_zero_or_order():
    for g in (Z6, Z2Z4, GroupSpec((2, 2, 2))):
        for h in all_subgroups(g):
            for z in g.elements():
                v = character_sum_over(g, z, h)
                assert v in (0, h.order)


def test_annihilator_product_law_to_order_64():
    # |Ann(H)| * |H| = n for every subgroup of every abelian group to order 64
    from framelab.search import abelian_groups_of_order

    for n in range(2, 65):
        for g in abelian_groups_of_order(n):
            for h in all_subgroups(g):
                assert annihilator(g, h).order * h.order == n


def test_character_value_unit_modulus():
    for g in (Z2Z4, GroupSpec((9,))):
        for x in g.elements():
            for y in g.elements():
                v = character_eval(g, x, y)
                assert abs(abs(v.complex_value) - 1) < 1e-12
    assert character_eval(Z8, (4,), (1,)).is_real
    assert not character_eval(Z8, (1,), (1,)).is_real

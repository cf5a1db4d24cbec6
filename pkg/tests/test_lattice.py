import pytest

from _helpers import brute_force_subgroup_masks
from dng.errors import GeneratingSetError, LatticeGuardError, TrivialGroupError
from dng.groups import closure_mask, is_cyclic, make_alternating, make_cyclic, make_symmetric
from dng.groupspec import build, parse_spec
from dng.lattice import (
    all_maximals_even,
    all_maximals_odd,
    all_subgroups,
    even_maximals_cover,
    frattini,
    intersection_subgroups,
    largest_odd_normal_in_frattini,
    lattice_dot,
    maximal_subgroups,
    smallest_intersection_containing,
    union_of_maximals,
)


def test_subgroup_counts_small():
    assert len(all_subgroups(make_cyclic(6))) == 4
    assert len(all_subgroups(build(parse_spec("Z2 x Z2")))) == 5


@pytest.mark.parametrize("spec", ["A4", "Z12", "Dic2", "D4", "Z2 x Z2 x Z2"])
def test_enumeration_matches_brute_force(spec):
    g = build(parse_spec(spec))
    expected = brute_force_subgroup_masks(g)
    got = {s.mask for s in all_subgroups(g).subgroups}
    assert got == expected


def test_a4_has_ten_subgroups():
    assert len(all_subgroups(make_alternating(4))) == 10


def test_lattice_guard():
    g = build(parse_spec("Z2 x Z2 x Z2 x Z2"))
    g._cache.clear()
    with pytest.raises(LatticeGuardError):
        all_subgroups(g, guard=10)


def test_subgroup_invariants():
    for spec in ["A4", "Dic3", "Z18 x Z2", "Dih(Z3 x Z3)"]:
        g = build(parse_spec(spec))
        for s in all_subgroups(g).subgroups:
            assert 0 in s
            assert closure_mask(g, s.mask) == s.mask
            assert g.order % s.order == 0


def test_maximals_of_a4():
    orders = sorted(m.order for m in maximal_subgroups(make_alternating(4)))
    assert orders == [3, 3, 3, 3, 4]


def test_maximals_of_z12():
    orders = sorted(m.order for m in maximal_subgroups(make_cyclic(12)))
    assert orders == [4, 6]


def test_maximals_of_prime_cyclic():
    maximals = maximal_subgroups(make_cyclic(7))
    assert [m.order for m in maximals] == [1]


def test_maximals_trivial_group_raises():
    with pytest.raises(TrivialGroupError):
        maximal_subgroups(make_cyclic(1))


def test_frattini_examples():
    assert frattini(make_alternating(4)).order == 1
    assert frattini(build(parse_spec("Z18 x Z2"))).order == 3
    assert frattini(make_cyclic(4)).order == 2


def test_intersection_subgroups_a4():
    a4 = make_alternating(4)
    poset = intersection_subgroups(a4)
    assert sorted(s.order for s in poset.members) == [1, 3, 3, 3, 3, 4]
    # the order-2 subgroups exist in the lattice but are not intersections
    assert any(s.order == 2 for s in all_subgroups(a4).subgroups)
    assert not any(s.order == 2 for s in poset.members)
    assert poset.bottom.order == 1


def test_intersection_subgroups_prime_cyclic():
    poset = intersection_subgroups(make_cyclic(5))
    assert [s.order for s in poset.members] == [1]


def test_intersection_subgroups_z6xz2():
    poset = intersection_subgroups(build(parse_spec("Z6 x Z2")))
    orders = [s.order for s in poset.members]
    assert poset.bottom.order == 1
    assert orders.count(6) == 3


def test_intersection_closed_and_bottom_minimal():
    for spec in ["A4", "S4", "Z6 x Z2", "Dic3", "Z18 x Z2"]:
        g = build(parse_spec(spec))
        poset = intersection_subgroups(g)
        masks = {s.mask for s in poset.members}
        for a in masks:
            for b in masks:
                assert a & b in masks
        assert all(poset.bottom.mask & ~s.mask == 0 for s in poset.members)
        assert poset.bottom.mask == frattini(g).mask


def test_smallest_intersection_of_empty_set_is_frattini():
    for spec in ["A4", "Z12", "S3"]:
        g = build(parse_spec(spec))
        assert smallest_intersection_containing(g, ()).mask == frattini(g).mask


def test_smallest_intersection_of_maximal_is_itself():
    g = make_symmetric(4)
    for m in maximal_subgroups(g):
        assert smallest_intersection_containing(g, m.mask).mask == m.mask


def test_smallest_intersection_of_three_cycle():
    a4 = make_alternating(4)
    x = next(i for i in range(a4.order) if closure_mask(a4, 1 << i).bit_count() == 3)
    found = smallest_intersection_containing(a4, [x])
    assert found.order == 3 and x in found


def test_smallest_intersection_rejects_generating_set():
    g = make_cyclic(6)
    with pytest.raises(GeneratingSetError):
        smallest_intersection_containing(g, [1])


def test_covering_predicates():
    assert even_maximals_cover(build(parse_spec("Z2 x Z3 x Z3")))
    assert not even_maximals_cover(make_symmetric(3))
    assert all_maximals_odd(make_cyclic(3))
    assert all_maximals_even(make_cyclic(4))


def test_cover_iff_noncyclic(catalog36):
    for _, g in catalog36:
        covers = union_of_maximals(g) == g.full_mask
        assert covers == (not is_cyclic(g))


def test_direct_product_maximals(catalog24):
    from dng.groups import direct_product

    for hs, ks in [("S3", "Z2"), ("Z4", "Z3"), ("A4", "Z2")]:
        h, k = build(parse_spec(hs)), build(parse_spec(ks))
        g = direct_product(h, k)
        gmax = {m.mask for m in maximal_subgroups(g)}
        kfull = k.full_mask
        for m in maximal_subgroups(h):
            lifted = 0
            for a in m.members():
                lifted |= kfull << (a * k.order)
            assert lifted in gmax


def test_cyclic_even_maximals_iff_4_divides():
    for n in range(2, 65):
        assert all_maximals_even(make_cyclic(n)) == (n % 4 == 0)


def test_generalized_dihedral_maximals():
    for aspec in ["Z3", "Z5", "Z6", "Z2 x Z2", "Z3 x Z3", "Z2 x Z4"]:
        a = build(parse_spec(aspec))
        g = build(parse_spec(f"Dih({aspec})"))
        a_copy_mask = (1 << a.order) - 1  # canonical embedding: A ids come first
        for m in maximal_subgroups(g):
            if m.mask != a_copy_mask:
                assert m.order % 2 == 0


def test_largest_odd_normal_in_frattini():
    assert largest_odd_normal_in_frattini(build(parse_spec("Z18 x Z2"))).order == 3
    assert largest_odd_normal_in_frattini(make_symmetric(4)).order == 1
    assert largest_odd_normal_in_frattini(make_cyclic(27)).order == 9


def test_lattice_dot_deterministic():
    g = make_alternating(4)
    dot = lattice_dot(g)
    assert dot == lattice_dot(g)
    assert dot.count("[label=") == 10
    assert dot.startswith("digraph lattice {")


def test_lattice_dot_transitive_reduction():
    dot = lattice_dot(make_cyclic(4))
    # chain 1 < 2 < 4: only the two covering edges survive
    assert dot.count("->") == 2

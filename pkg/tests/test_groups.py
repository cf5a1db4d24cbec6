import math

import numpy as np
import pytest

from dng.errors import BudgetError, GeneratorCapError, NonAbelianError, NotNormalError
from dng.groups import (
    Group,
    closure_mask,
    coset_ids,
    direct_product,
    element_order,
    element_orders,
    is_abelian,
    is_cyclic,
    make_alternating,
    make_cyclic,
    make_dicyclic,
    make_generalized_dihedral,
    make_symmetric,
    min_generators,
    quotient,
)
from dng.groupspec import build, parse_spec
from dng.lattice import frattini


def involutions(g):
    return [x for x in range(1, g.order) if g.mul(x, x) == 0]


def test_cyclic_trivial():
    g = make_cyclic(1)
    assert g.order == 1


def test_cyclic_table():
    g = make_cyclic(4)
    assert g.mul(1, 3) == 0
    assert involutions(g) == [2]


def test_cyclic_element_orders():
    assert element_orders(make_cyclic(6)) == [1, 2, 3, 3, 6, 6]


def test_cyclic_budget():
    with pytest.raises(BudgetError):
        make_cyclic(1000)


def test_generalized_dihedral_of_z3():
    g = make_generalized_dihedral(make_cyclic(3))
    assert g.order == 6
    assert len(involutions(g)) == 3
    # same element-order multiset as Sym(3)
    assert element_orders(g) == element_orders(make_symmetric(3))


def test_generalized_dihedral_of_trivial():
    assert make_generalized_dihedral(make_cyclic(1)).order == 2


def test_generalized_dihedral_of_z3xz3():
    a = build(parse_spec("Z3 x Z3"))
    g = make_generalized_dihedral(a)
    assert g.order == 18
    # everything outside the abelian copy is an involution
    assert all(element_order(g, x) == 2 for x in range(9, 18))
    assert len(involutions(g)) == 9


def test_generalized_dihedral_rejects_nonabelian():
    with pytest.raises(NonAbelianError):
        make_generalized_dihedral(make_symmetric(3))


def test_dicyclic_q8():
    q8 = make_dicyclic(2)
    assert q8.order == 8
    assert len(involutions(q8)) == 1


def test_dicyclic_coset_orders():
    g = make_dicyclic(3)
    assert g.order == 12
    assert all(element_order(g, x) == 4 for x in range(6, 12))


def test_dicyclic_rejects_small_n():
    with pytest.raises(ValueError):
        make_dicyclic(1)


def test_symmetric_3():
    s3 = make_symmetric(3)
    assert s3.order == 6
    assert len(involutions(s3)) == 3
    for t in involutions(s3):
        assert element_order(s3, t) == 2


def test_alternating_3_is_cyclic():
    a3 = make_alternating(3)
    assert a3.order == 3
    assert is_cyclic(a3)


def test_alternating_4_orders():
    a4 = make_alternating(4)
    assert a4.order == 12
    assert 6 not in element_orders(a4)


def test_symmetric_sizes():
    for n in range(1, 6):
        assert make_symmetric(n).order == math.factorial(n)
        assert make_alternating(n).order == max(math.factorial(n) // 2, 1)


def test_direct_product_z2_z3():
    g = direct_product(make_cyclic(2), make_cyclic(3))
    assert g.order == 6
    assert 6 in element_orders(g)


def test_direct_product_identity_factor():
    s3 = make_symmetric(3)
    g = direct_product(s3, make_cyclic(1))
    assert element_orders(g) == element_orders(s3)


def test_direct_product_z18_z2():
    assert direct_product(make_cyclic(18), make_cyclic(2)).order == 36


@pytest.mark.parametrize("specs", ["Z2 x Z3", "Z4 x Z6", "S3 x Z4"])
def test_direct_product_order_is_lcm(specs):
    g = build(parse_spec(specs))
    left, right = specs.split(" x ")
    a, b = build(parse_spec(left)), build(parse_spec(right))
    for x in range(a.order):
        for y in range(b.order):
            expected = math.lcm(element_order(a, x), element_order(b, y))
            assert element_order(g, x * b.order + y) == expected


def test_quotient_frattini_of_z18xz2():
    g = build(parse_spec("Z18 x Z2"))
    q = quotient(g, frattini(g))
    assert q.order == 12
    assert element_orders(q) == element_orders(build(parse_spec("Z6 x Z2")))


def test_quotient_by_trivial():
    g = make_symmetric(3)
    q = quotient(g, 1)
    assert element_orders(q) == element_orders(g)


def test_quotient_z6_by_z3():
    z6 = make_cyclic(6)
    sub = closure_mask(z6, 1 << 2)  # <2> = {0, 2, 4}
    q = quotient(z6, sub)
    assert q.order == 2


def test_quotient_rejects_non_normal():
    s3 = make_symmetric(3)
    t = involutions(s3)[0]
    with pytest.raises(NotNormalError):
        quotient(s3, closure_mask(s3, 1 << t))


def test_quotient_projection_is_homomorphism():
    for spec in ["Z18 x Z2", "Dic3", "A4"]:
        g = build(parse_spec(spec))
        sub = frattini(g)
        if sub.order == 1:
            sub = 1
        q = quotient(g, sub)
        proj = coset_ids(g, sub)
        for a in range(g.order):
            for b in range(g.order):
                assert proj[g.mul(a, b)] == q.mul(proj[a], proj[b])


def test_element_order_identity_and_generator():
    z6 = make_cyclic(6)
    assert element_order(z6, 0) == 1
    assert element_order(z6, 1) == 6


def test_element_order_divides_group_order():
    for spec in ["Z12", "S4", "Dic3", "Dih(Z3 x Z3)"]:
        g = build(parse_spec(spec))
        assert all(g.order % element_order(g, x) == 0 for x in range(g.order))


def test_is_cyclic_and_min_generators():
    assert is_cyclic(make_cyclic(6))
    assert min_generators(make_cyclic(6)) == 1
    v4 = build(parse_spec("Z2 x Z2"))
    assert not is_cyclic(v4)
    assert min_generators(v4) == 2
    assert min_generators(make_symmetric(4)) == 2


def test_min_generators_cap():
    g = build(parse_spec("Z2 x Z2 x Z2"))
    assert min_generators(g, cap=3) == 3
    with pytest.raises(GeneratorCapError):
        min_generators(g, cap=2)


@pytest.mark.parametrize(
    "spec",
    ["Z1", "Z17", "D6", "Dic2", "S4", "A4", "Z2 x Z3 x Z3", "Dih(Z2 x Z4)"],
)
def test_group_axioms_exhaustively(spec):
    g = build(parse_spec(spec))
    n = g.order
    ids = np.arange(n)
    assert np.array_equal(g.table[0], ids) and np.array_equal(g.table[:, 0], ids)
    assert np.array_equal(np.sort(g.table, axis=1), np.broadcast_to(ids, (n, n)))
    assert np.array_equal(np.sort(g.table, axis=0), np.broadcast_to(ids[:, None], (n, n)))
    assert all(g.mul(x, g.inv(x)) == 0 for x in range(n))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_from_table_rejects_bad_tables():
    with pytest.raises(ValueError):
        Group.from_table([[0, 1], [1, 1]], "bad")
    with pytest.raises(ValueError):
        Group.from_table([[1, 0], [0, 1]], "no-identity")


def test_is_abelian():
    assert is_abelian(make_cyclic(12))
    assert not is_abelian(make_symmetric(3))


def test_json_round_trip_shape():
    g = make_cyclic(4)
    d = g.to_json_dict()
    assert d["format"] == "dng-group-v1"
    assert d["order"] == 4
    assert d["table"][1][3] == 0

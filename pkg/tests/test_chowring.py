import pytest

from cayley._rat import Q
from cayley.chowring import (ChowClass, multiply, pairing, pieri_class,
                             pieri_Hk, generator_decomposition,
                             solve_structure_constants)


def _named(diagram, terms):
    return ChowClass({diagram.id_of(n): Q(c) for n, c in terms.items()})


def test_hyperplane_powers_through_degree_four(diagram):
    top = diagram.top
    assert pieri_Hk(diagram, top, 0) == ChowClass.basis(top)
    assert pieri_Hk(diagram, top, 4) == _named(diagram,
                                               {"s4p": 1, "s4pp": 1})
    assert pieri_Hk(diagram, diagram.id_of("s4p"), 4) == _named(
        diagram, {"s8": 1, "s8p": 3, "s8pp": 2})
    assert pieri_Hk(diagram, diagram.id_of("s8p"), 4) == _named(
        diagram, {"s12p": 3, "s12pp": 4})


def test_hyperplane_powers_compose(diagram):
    for name in ("s0", "s4p", "s8pp"):
        i = diagram.id_of(name)
        for a in range(0, 5):
            for b in range(0, 5):
                lhs = pieri_class(diagram, pieri_Hk(diagram, i, a), b)
                assert lhs == pieri_Hk(diagram, i, a + b)


def test_full_hyperplane_power_is_the_degree(diagram):
    top_power = pieri_Hk(diagram, diagram.top, diagram.max_length)
    assert top_power == ChowClass.basis(diagram.bottom).scale(78)


def test_structure_constant_solver(diagram):
    sc = solve_structure_constants(diagram)
    assert sc.gammas == (0, 2, 1)
    assert sc.s4p_sq == _named(diagram, {"s8": 1, "s8p": 1, "s8pp": 1})
    assert sc.s4pp_sq == _named(diagram, {"s8": 1, "s8p": 2, "s8pp": 2})
    assert sc.s4p_s4pp == _named(diagram, {"s8p": 2, "s8pp": 1})


def test_generator_decomposition_reconstructs_each_class(diagram):
    decomp = generator_decomposition(diagram)
    i4p, i8 = diagram.id_of("s4p"), diagram.id_of("s8")
    for u, (a, b, c) in decomp.items():
        d = diagram.node(u).length
        got = pieri_Hk(diagram, diagram.top, d).scale(a)
        if b:
            got = got + pieri_Hk(diagram, i4p, d - 4).scale(b)
        if c:
            got = got + pieri_Hk(diagram, i8, d - 8).scale(c)
        assert got == ChowClass.basis(u)


def test_table_is_commutative_nonnegative_integral(diagram, table):
    for u, v in table.pairs():
        p = table.get(u, v)
        assert p == table.get(v, u)
        assert p.is_integral()
        assert all(c >= 0 for c in p.coeffs.values())


def test_table_grading(diagram, table):
    for u, v in table.pairs():
        p = table.get(u, v)
        if p:
            want = diagram.node(u).length + diagram.node(v).length
            assert p.grade(diagram) == want


def test_hyperplane_column_of_the_table_is_pieri(diagram, table):
    h = diagram.id_of("s1")
    for u in range(len(diagram)):
        if diagram.node(u).length + 1 > diagram.max_length:
            continue
        assert table.get(u, h) == pieri_Hk(diagram, u, 1)


def test_poincare_pairing(diagram, table):
    L = diagram.max_length
    for u in range(len(diagram)):
        for v in diagram.by_length[L - diagram.node(u).length]:
            val = pairing(ChowClass.basis(u), ChowClass.basis(v), table)
            assert val == (1 if v == diagram.dual(u) else 0)


def test_pairing_rejects_non_complementary_grades(diagram, table):
    a = ChowClass.basis(diagram.id_of("s4p"))
    with pytest.raises(ValueError):
        pairing(a, a, table)


def test_degree_via_self_intersection(diagram, table):
    # deg(s4p) = s4p . H^12 evaluated on the point class
    h12 = pieri_Hk(diagram, diagram.top, 12)
    got = pairing(ChowClass.basis(diagram.id_of("s4p")), h12, table)
    assert got == 33


def test_multiply_is_bilinear(diagram, table):
    a = _named(diagram, {"s4p": 2, "s4pp": -1})
    b = _named(diagram, {"s8": 1, "s8p": 3})
    lhs = multiply(a, b, table)
    rhs = ChowClass()
    for n1, c1 in (("s4p", 2), ("s4pp", -1)):
        for n2, c2 in (("s8", 1), ("s8p", 3)):
            rhs = rhs + table.get(diagram.id_of(n1),
                                  diagram.id_of(n2)).scale(c1 * c2)
    assert lhs == rhs


def test_class_by_name_round_trip(diagram):
    cls = _named(diagram, {"s8": 1, "s8p": 2})
    assert cls.by_name(diagram) == {"s8": 1, "s8p": 2}

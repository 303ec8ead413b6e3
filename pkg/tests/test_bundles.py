import pytest

from cayley._rat import Q
from cayley.bundles import (chern_normal, chern_projected, degree_y8,
                            segre_projected)
from cayley.chowring import ChowClass, multiply, pieri_Hk


def _named(diagram, terms):
    return ChowClass({diagram.id_of(n): Q(c) for n, c in terms.items()})


def test_normal_bundle_rank_and_grading(diagram):
    cn = chern_normal(diagram)
    assert cn.rank == 10
    assert len(cn.classes) == 11
    for k, cls in enumerate(cn.classes):
        assert cls.grade(diagram) == k
        assert cls.is_integral()


def test_normal_bundle_values(diagram):
    cn = chern_normal(diagram)
    assert cn.classes[1] == pieri_Hk(diagram, diagram.top, 1).scale(15)
    assert cn.classes[4] == _named(diagram, {"s4p": 1107, "s4pp": 1113})
    assert cn.classes[8] == _named(diagram,
                                   {"s8": 2751, "s8p": 9786, "s8pp": 7032})
    want10 = (pieri_Hk(diagram, diagram.id_of("s8"), 2).scale(153)
              + pieri_Hk(diagram, diagram.id_of("s8p"), 2).scale(549)
              + pieri_Hk(diagram, diagram.id_of("s8pp"), 2).scale(387))
    assert cn.classes[10] == want10


def test_projected_bundle_values(diagram):
    cp = chern_projected(diagram)
    assert cp.rank == 9
    assert cp.classes[1] == pieri_Hk(diagram, diagram.top, 1).scale(14)
    assert cp.classes[5] == _named(diagram, {"s5p": 2536, "s5pp": 1292})
    assert cp.classes[9] == _named(diagram, {"s9p": 702, "s9pp": 936})
    assert not cp.classes[10]


def test_whitney_sum_with_the_hyperplane_line_bundle(diagram, table):
    # c(N) = (1 + H) c(Nbar), checked degree by degree through the table
    cn = chern_normal(diagram).classes
    cp = chern_projected(diagram).classes
    h = ChowClass.basis(diagram.id_of("s1"))
    for k in range(11):
        want = cp[k]
        if k >= 1:
            want = want + multiply(h, cp[k - 1], table)
        assert cn[k] == want


def test_segre_values(diagram):
    sg = segre_projected(diagram)
    assert len(sg) == 16
    assert sg[0] == ChowClass.basis(diagram.top)
    assert sg[4] == _named(diagram, {"s4p": 2763, "s4pp": 2757})
    assert sg[12] == _named(diagram,
                            {"s12p": 491985531, "s12pp": 669523221})
    assert sg[15] == _named(diagram, {"s15": 12591161406})


def test_segre_inverts_chern(diagram, table):
    # sum_{i+j=k} (-1)^i c_i s_j = 0 for 1 <= k <= 9
    cp = chern_projected(diagram).classes
    sg = segre_projected(diagram)
    for k in range(1, 10):
        acc = ChowClass()
        for i in range(0, k + 1):
            term = multiply(cp[i], sg[k - i], table)
            acc = acc + (term if i % 2 == 0 else term.scale(-1))
        assert not acc


def test_degree_y8(diagram):
    assert degree_y8(diagram) == 1_047_361_761

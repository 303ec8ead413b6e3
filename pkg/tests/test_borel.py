from cayley._rat import Q
from cayley.acceptance import _ideal_invariance, _word_independence
from cayley.borel import (divided_diff, divided_diff_word, expand_invariant,
                          functional_step, functional_vector, is_w0_invariant,
                          reflect_poly, w_invariant_quadratic)
from cayley.chowring import ChowClass
from cayley.polynomial import Poly, elementary_invariants, weight_form

X = [Poly.var(i) for i in range(6)]


def _sample_polys():
    return [X[0] * X[1] + X[5] * X[5],
            (X[2] + X[4]).power(3),
            X[0] * X[3] * X[5] + X[1].power(2) * X[4]]


def test_reflections_are_involutive_ring_maps():
    for i in range(1, 7):
        for f in _sample_polys():
            sf = reflect_poly(i, f)
            assert reflect_poly(i, sf) == f
        g, h = _sample_polys()[:2]
        assert reflect_poly(i, g * h) == \
            reflect_poly(i, g) * reflect_poly(i, h)


def test_divided_difference_annihilates_symmetric_inputs():
    inv = elementary_invariants()
    for i in range(1, 6):
        for name in ("e2", "e4", "e5", "e6", "e8"):
            assert not divided_diff(i, inv[name])


def test_divided_difference_twisted_leibniz():
    # if s_i f = f then del_i(f g) = f del_i(g)
    inv = elementary_invariants()
    for i in range(1, 6):
        f, g = inv["e2"], _sample_polys()[1]
        assert divided_diff(i, f * g) == f * divided_diff(i, g)


def test_divided_difference_lowers_degree_by_one():
    for i in range(1, 7):
        for f in _sample_polys():
            df = divided_diff(i, f)
            if df:
                assert df.degree() == f.degree() - 1


def test_convention_pin():
    # fixes the orientation of the whole engine: the length-two functional
    # of the quadratic invariant
    e2 = elementary_invariants()["e2"]
    assert divided_diff_word((6, 5), e2).constant() == Q(-3, 4)
    assert not divided_diff_word((5, 6), e2)


def test_full_invariant_quadratic():
    qw = w_invariant_quadratic()
    assert qw.degree() == 2
    for i in range(1, 7):
        assert reflect_poly(i, qw) == qw


def test_w0_invariance_predicate():
    inv = elementary_invariants()
    assert is_w0_invariant(inv["e4"])
    assert not is_w0_invariant(X[0] * X[1])


def test_functional_vector_matches_direct_application(diagram):
    f = elementary_invariants()["e4"]
    for i in diagram.by_length[4]:
        word = tuple(reversed(diagram.reduced_word(i)))
        vec = functional_vector(word)
        direct = divided_diff_word(word, f).constant()
        dot = sum((c * vec[e] for e, c in f.terms.items() if e in vec),
                  Q(0))
        assert dot == direct


def test_expansion_of_fundamental_invariants(diagram):
    inv = elementary_invariants()
    got = expand_invariant(inv["e8"], diagram).by_name(diagram)
    assert got == {"s8": Q(21, 128), "s8p": Q(291, 256),
                   "s8pp": Q(-519, 256)}
    got2 = expand_invariant(inv["e2"], diagram).by_name(diagram)
    assert got2 == {"s2": Q(-3, 4)}


def test_word_independence(diagram):
    assert _word_independence(diagram) is None


def test_representative_independence_under_ideal_shifts(diagram):
    assert _ideal_invariance(diagram) is None


def test_representatives_expand_to_basis_classes(diagram, engine):
    for node in range(len(diagram)):
        rep = engine.representative(node)
        assert engine.expand(rep) == ChowClass.basis(node)


def test_hyperplane_shortcut_agrees_with_polynomial_products(diagram, engine):
    for key in ((0, 0, 3), (0, 1, 2), (1, 1, 1), (0, 2, 4)):
        assert engine.family_expand_polynomial(*key) == \
            engine._family_expand(*key)


def test_engine_matches_table_on_spot_pairs(diagram, table, engine):
    for a, b in (("s4p", "s4pp"), ("s2", "s8p"), ("s5p", "s7pp"),
                 ("s8", "s8")):
        u, v = diagram.id_of(a), diagram.id_of(b)
        assert engine.multiply(u, v) == table.get(u, v)

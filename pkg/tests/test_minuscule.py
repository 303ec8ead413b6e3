import pytest

from cayley.minuscule import (NotMinusculeError, build_spinor_diagram,
                              build_weight_diagram)


def test_shape(diagram):
    assert len(diagram) == 27
    assert diagram.max_length == 16
    assert diagram.rank_sizes() == [1, 1, 1, 1, 2, 2, 2, 2, 3,
                                    2, 2, 2, 2, 1, 1, 1, 1]


def test_names_cover_all_nodes(diagram):
    names = diagram.names()
    assert all(names)
    assert len(set(names)) == 27
    assert diagram.name_of(diagram.top) == "s0"
    assert diagram.name_of(diagram.bottom) == "s16"
    assert diagram.id_of("h") == diagram.id_of("s1")
    with pytest.raises(KeyError):
        diagram.id_of("s17")


def test_degrees(diagram):
    assert diagram.degree(diagram.top) == 78
    assert diagram.degree(diagram.id_of("s4p")) == 33
    assert diagram.degree(diagram.id_of("s4pp")) == 45
    assert diagram.degree(diagram.id_of("s8")) == 2
    assert diagram.degree(diagram.id_of("s8p")) == 7
    assert diagram.degree(diagram.id_of("s8pp")) == 5
    assert diagram.degree(diagram.bottom) == 1


def test_kappa_composes_through_levels(diagram):
    # kappa(u, w) = sum over any full intermediate rank v of
    # kappa(u, v) kappa(v, w)
    u = diagram.top
    w = diagram.bottom
    for mid in range(1, diagram.max_length):
        total = sum(diagram.kappa(u, v) * diagram.kappa(v, w)
                    for v in diagram.by_length[mid])
        assert total == diagram.kappa(u, w)


def test_duality_is_a_graded_involution(diagram):
    L = diagram.max_length
    for i in range(len(diagram)):
        j = diagram.dual(i)
        assert diagram.dual(j) == i
        assert diagram.node(j).length == L - diagram.node(i).length
    # self-dual middle rank
    for i in diagram.by_length[L // 2]:
        assert diagram.dual(i) == i


def test_reduced_words_walk_to_the_top(diagram):
    rs = diagram.rs
    for i in range(len(diagram)):
        for word in diagram.reduced_words(i, cap=5):
            assert len(word) == diagram.node(i).length
            w = diagram.node(i).weight
            for lab in word:
                assert w.inner(rs.root(lab)) < 0
                w = rs.reflect(lab, w)
            assert w == diagram.node(diagram.top).weight


def test_reduced_word_counts_match_upward_path_counts(diagram):
    for i in range(len(diagram)):
        words = diagram.reduced_words(i)
        assert len(set(words)) == len(words)
        assert len(words) == diagram.kappa(diagram.top, i)


def test_spinor_diagram(spinor):
    assert len(spinor) == 16
    assert spinor.rank_sizes() == [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]
    assert spinor.degree(spinor.top) == 12


def test_non_minuscule_representation_is_rejected(diagram):
    rs = diagram.rs
    # the adjoint representation (highest weight dual to the branch node)
    # has weight multiplicities, so the closure cannot stay graded
    with pytest.raises(NotMinusculeError):
        build_weight_diagram(rs, rs.fundamental_weights[3])


def test_spinor_diagram_reuses_the_ambient_lattice(diagram):
    assert build_spinor_diagram(diagram.rs).rs is diagram.rs

from cayley._rat import Q
from cayley.lattice import Weight, build_e6


def test_simple_roots_have_norm_two():
    rs = build_e6()
    for i in range(1, 7):
        assert rs.root(i).inner(rs.root(i)) == 2


def test_cartan_matrix_shape():
    # chain 1-2-3-5-6 with 4 attached to 3; everything else orthogonal
    rs = build_e6()
    bonds = {(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)}
    for i in range(1, 7):
        for j in range(i + 1, 7):
            want = -1 if (i, j) in bonds else 0
            assert rs.root(i).inner(rs.root(j)) == want


def test_fundamental_weights_dual_to_roots():
    rs = build_e6()
    for i, w in enumerate(rs.fundamental_weights, start=1):
        for j in range(1, 7):
            assert w.inner(rs.root(j)) == (1 if i == j else 0)


def test_minuscule_weight_coordinates():
    # the weight generating the 27-dimensional representation
    rs = build_e6()
    w6 = rs.fundamental_weights[5]
    assert w6.c == (0, 0, 0, 0, 0)
    assert w6.u == Q(2, 3)


def test_reflections_are_isometric_involutions():
    rs = build_e6()
    probes = [rs.fundamental_weights[k] for k in range(6)] + [rs.rho]
    for i in range(1, 7):
        for w in probes:
            sw = rs.reflect(i, w)
            assert rs.reflect(i, sw) == w
            assert sw.inner(sw) == w.inner(w)


def test_weight_arithmetic():
    a = Weight((1, 0, 0, 0, 0), Q(1, 2))
    b = Weight((0, 1, 0, 0, 0), Q(1, 2))
    assert (a + b) - b == a
    assert (-a).inner(a) == -a.inner(a)
    assert a.scale(2).inner(b) == 2 * a.inner(b)
    assert a.inner(b) == 3 * Q(1, 4)


def test_height_counts_simple_root_levels():
    rs = build_e6()
    for i in range(1, 7):
        assert rs.height(rs.root(i)) == 1

import random

import pytest

from cayley._rat import Q
from cayley.jordan import (Hermitian2, JordanMatrix, Octonion, cell_point,
                           det_form, det_polarization, infinity_conditions,
                           infinity_point, infinity_rank_conditions,
                           jordan_product, mult_image, nu2, nu2_tangent_basis,
                           oct_conj, oct_mul, q, q_polar, rank_one_check,
                           trace_form)

SEED = 20260826


def _rng():
    return random.Random(SEED)


def _rand_oct(rng):
    return Octonion(tuple(Q(rng.randint(-12, 12), rng.randint(1, 9))
                          for _ in range(8)))


NULL = Octonion.basis(0) + Octonion.basis(4)  # q = 1 - 1 = 0


def test_unit_and_conjugation():
    rng = _rng()
    a = _rand_oct(rng)
    one = Octonion.unit()
    assert oct_mul(one, a) == a
    assert oct_mul(a, one) == a
    assert oct_conj(oct_conj(a)) == a
    assert oct_mul(a, oct_conj(a)) == one.scale(q(a))


def test_quadratic_form_signature():
    # split form: four plus signs, four minus signs
    signs = [q(Octonion.basis(i)) for i in range(8)]
    assert signs == [1, 1, 1, 1, -1, -1, -1, -1]
    assert q(NULL) == 0


def test_composition_law():
    rng = _rng()
    for _ in range(200):
        a, b = _rand_oct(rng), _rand_oct(rng)
        assert q(oct_mul(a, b)) == q(a) * q(b)


def test_octonions_are_alternative_not_associative():
    rng = _rng()
    associator_seen = False
    for _ in range(50):
        a, b = _rand_oct(rng), _rand_oct(rng)
        aa = oct_mul(a, a)
        assert oct_mul(aa, b) == oct_mul(a, oct_mul(a, b))
        assert oct_mul(b, aa) == oct_mul(oct_mul(b, a), a)
        c = _rand_oct(rng)
        if oct_mul(oct_mul(a, b), c) != oct_mul(a, oct_mul(b, c)):
            associator_seen = True
    assert associator_seen


def test_polarization():
    rng = _rng()
    a, b = _rand_oct(rng), _rand_oct(rng)
    assert q_polar(a, b) == q(a + b) - q(a) - q(b)


def test_jordan_product_commutative_trace_associative():
    rng = _rng()
    for _ in range(50):
        x = cell_point(1, _rand_oct(rng), _rand_oct(rng))
        y = cell_point(2, _rand_oct(rng), _rand_oct(rng))
        z = cell_point(3, _rand_oct(rng), _rand_oct(rng))
        assert jordan_product(x, y) == jordan_product(y, x)
        assert trace_form(jordan_product(x, y), z) == \
            trace_form(x, jordan_product(y, z))


def test_identity_matrix_is_idempotent():
    e = JordanMatrix.identity()
    assert jordan_product(e, e) == e
    assert e.trace() == 3
    assert not rank_one_check(e)


def test_cell_points_are_rank_one():
    rng = _rng()
    for n in range(200):
        kind = 1 + n % 3
        x = cell_point(kind, _rand_oct(rng), _rand_oct(rng))
        assert rank_one_check(x)
        assert trace_form(x, x) == x.trace() ** 2


def test_cell_point_rejects_bad_kind():
    with pytest.raises(ValueError):
        cell_point(4, Octonion.zero(), Octonion.zero())


def test_mult_image_is_isotropic_of_dimension_four():
    for side in ("left", "right"):
        basis = mult_image(NULL, side)
        assert len(basis) == 4
        for i, a in enumerate(basis):
            assert q(a) == 0
            for b in basis[i + 1:]:
                assert q_polar(a, b) == 0


def test_mult_image_rejections():
    with pytest.raises(ValueError):
        mult_image(Octonion.zero())
    with pytest.raises(ValueError):
        mult_image(Octonion.unit())  # q = 1
    with pytest.raises(ValueError):
        mult_image(NULL, side="middle")


def _kernel_vector(rng):
    basis = mult_image(NULL)
    acc = Octonion.zero()
    for v in basis:
        acc = acc + v.scale(rng.randint(-3, 3))
    return acc


def test_infinity_rank_conditions_match_rank_one():
    rng = _rng()
    checked = 0
    for _ in range(300):
        triple = (_kernel_vector(rng), _kernel_vector(rng),
                  _kernel_vector(rng))
        point = infinity_point(*triple)
        assert infinity_rank_conditions(*triple) == rank_one_check(point)
        checked += 1
    assert checked == 300


def test_displayed_infinity_conditions_are_flagged_inconsistent():
    """The classical display mixes up two index conventions: a concrete
    rank-one zero-diagonal point satisfies the derived conditions but not
    the displayed ones.  Recorded as a flag, not silently corrected."""
    from cayley.linalg import nullspace

    x3 = NULL
    cols = [oct_mul(x3, Octonion.basis(i)).coords for i in range(8)]
    rows = [[cols[j][i] for j in range(8)] for i in range(8)]
    kernel = [Octonion(tuple(v)) for v in nullspace(rows)]
    assert len(kernel) == 4
    rng = _rng()
    found = False
    for _ in range(500):
        x1 = Octonion.zero()
        for v in kernel:
            x1 = x1 + v.scale(rng.randint(-3, 3))
        if not x1 or not oct_mul(x1, x3):
            continue
        triple = (x1, Octonion.zero(), x3)
        if not infinity_rank_conditions(*triple):
            continue
        assert rank_one_check(infinity_point(*triple))
        if not infinity_conditions(*triple):
            found = True
            break
    assert found, "expected a witness separating the two condition sets"


def test_nu2_diagonal_values():
    rng = _rng()
    x = _rand_oct(rng)
    m = nu2(x, Octonion.zero())
    assert m.c1 == q(x) and m.c2 == 0 and not m.x
    assert not nu2(NULL, Octonion.zero())


def test_nu2_tangent_space_is_isotropic_five_dimensional():
    # (x, y) with nu2(x, y) = 0: both null with x ybar = 0
    rng = _rng()
    x = NULL
    y = next(v for v in mult_image(NULL, side="right") if v
             and not oct_mul(x, oct_conj(v)))
    assert not nu2(x, y)
    basis = nu2_tangent_basis(x, y)
    assert len(basis) == 5
    for i, a in enumerate(basis):
        assert det_form(a) == 0
        for b in basis[i + 1:]:
            assert det_polarization(a, b) == 0


def test_det_polarization_doubles_the_form():
    v = tuple(Q(k, 3) for k in range(10))
    assert det_polarization(v, v) == 2 * det_form(v)

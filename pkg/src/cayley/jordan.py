"""Exact octonion and Jordan-algebra arithmetic.

Octonions are built by Cayley-Dickson doubling of the rational
quaternions with doubling sign +1, giving the split composition algebra
with norm form q(x) = x0^2 + x1^2 + x2^2 + x3^2 - x4^2 - ... - x7^2.
The split form is the rational model of the complexified algebra: it
keeps every scalar rational while still containing the nonzero null
vectors (q(z) = 0) that the rank-one geometry at infinity lives on.
Only basis-independent statements are tested downstream, so any fixed
table satisfying the composition law q(ab) = q(a)q(b) would do.

The Jordan algebra is the space of 3x3 Hermitian octonion matrices

    [ c1   x3   x2~ ]
    [ x3~  c2   x1  ]
    [ x2   x1~  c3  ]

(~ marking conjugation) under A o B = (AB + BA)/2; its rank-one points
X^2 = trace(X) X form the Cayley plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ._rat import Q
from .linalg import column_space_basis, rank

__all__ = ["Octonion", "oct_mul", "oct_conj", "q", "JordanMatrix",
           "jordan_product", "trace_form", "rank_one_check", "cell_point",
           "infinity_point", "infinity_conditions",
           "infinity_rank_conditions", "mult_image",
           "Hermitian2", "nu2", "nu2_tangent_basis", "det_form",
           "det_polarization"]


# -- quaternion layer (basis 1, i, j, k) ----------------------------------

def _quat_mul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)


def _quat_conj(a):
    return (a[0], -a[1], -a[2], -a[3])


@dataclass(frozen=True)
class Octonion:
    """Octonion with eight exact rational coordinates on e0..e7."""

    coords: Tuple

    def __post_init__(self):
        object.__setattr__(self, "coords",
                           tuple(Q(c) for c in self.coords))
        if len(self.coords) != 8:
            raise ValueError("an octonion has eight coordinates")

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def unit(cls) -> "Octonion":
        return cls.basis(0)

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        c = [0] * 8
        c[i] = 1
        return cls(tuple(c))

    def __add__(self, o: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coords, o.coords)))

    def __sub__(self, o: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, f) -> "Octonion":
        f = Q(f)
        return Octonion(tuple(f * a for a in self.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def __repr__(self):
        parts = [f"{c}*e{i}" for i, c in enumerate(self.coords) if c]
        return " + ".join(parts) if parts else "0"


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    """Cayley-Dickson product on pairs of quaternions:
    (p, r)(s, t) = (ps + conj(t) r, tp + r conj(s)), doubling sign +1."""
    p, r = a.coords[:4], a.coords[4:]
    s, t = b.coords[:4], b.coords[4:]
    head = tuple(x + y for x, y in
                 zip(_quat_mul(p, s), _quat_mul(_quat_conj(t), r)))
    tail = tuple(x + y for x, y in
                 zip(_quat_mul(t, p), _quat_mul(r, _quat_conj(s))))
    return Octonion(head + tail)


def oct_conj(a: Octonion) -> Octonion:
    c = a.coords
    return Octonion((c[0],) + tuple(-x for x in c[1:]))


def q(a: Octonion):
    """The norm form, read off the e0-coordinate of a * conj(a)."""
    return oct_mul(a, oct_conj(a)).coords[0]


def q_polar(a: Octonion, b: Octonion):
    """Polarization b(a, b) with b(a, a) = 2 q(a)."""
    return q(a + b) - q(a) - q(b)


# -- the exceptional Jordan algebra ---------------------------------------

@dataclass(frozen=True)
class JordanMatrix:
    """Hermitian 3x3 octonion matrix with diagonal c1, c2, c3 and
    off-diagonal octonions x1, x2, x3."""

    c1: object
    c2: object
    c3: object
    x1: Octonion
    x2: Octonion
    x3: Octonion

    def __post_init__(self):
        object.__setattr__(self, "c1", Q(self.c1))
        object.__setattr__(self, "c2", Q(self.c2))
        object.__setattr__(self, "c3", Q(self.c3))

    @classmethod
    def zero(cls) -> "JordanMatrix":
        z = Octonion.zero()
        return cls(0, 0, 0, z, z, z)

    @classmethod
    def identity(cls) -> "JordanMatrix":
        z = Octonion.zero()
        return cls(1, 1, 1, z, z, z)

    def entries(self) -> List[List[Octonion]]:
        c1, c2, c3 = (Octonion.unit().scale(c)
                      for c in (self.c1, self.c2, self.c3))
        return [[c1, self.x3, oct_conj(self.x2)],
                [oct_conj(self.x3), c2, self.x1],
                [self.x2, oct_conj(self.x1), c3]]

    def trace(self):
        return self.c1 + self.c2 + self.c3

    def __add__(self, o: "JordanMatrix") -> "JordanMatrix":
        return JordanMatrix(self.c1 + o.c1, self.c2 + o.c2, self.c3 + o.c3,
                            self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)

    def scale(self, f) -> "JordanMatrix":
        f = Q(f)
        return JordanMatrix(f * self.c1, f * self.c2, f * self.c3,
                            self.x1.scale(f), self.x2.scale(f),
                            self.x3.scale(f))

    def __bool__(self) -> bool:
        return bool(self.c1 or self.c2 or self.c3
                    or self.x1 or self.x2 or self.x3)


def _mat_mul(a: List[List[Octonion]], b: List[List[Octonion]]):
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = Octonion.zero()
            for k in range(3):
                acc = acc + oct_mul(a[i][k], b[k][j])
            row.append(acc)
        out.append(row)
    return out


def _hermitian_of(m: List[List[Octonion]]) -> JordanMatrix:
    """Read a Hermitian entry matrix back into the structured form,
    checking Hermitian symmetry exactly."""
    for i in range(3):
        if any(m[i][i].coords[1:]):
            raise ValueError("diagonal entry is not scalar")
    for i in range(3):
        for j in range(i + 1, 3):
            if m[i][j] != oct_conj(m[j][i]):
                raise ValueError("matrix is not Hermitian")
    return JordanMatrix(m[0][0].coords[0], m[1][1].coords[0],
                        m[2][2].coords[0], m[1][2], m[2][0], m[0][1])


def jordan_product(a: JordanMatrix, b: JordanMatrix) -> JordanMatrix:
    """A o B = (AB + BA) / 2."""
    ea, eb = a.entries(), b.entries()
    ab, ba = _mat_mul(ea, eb), _mat_mul(eb, ea)
    s = [[(ab[i][j] + ba[i][j]).scale(Q(1, 2)) for j in range(3)]
         for i in range(3)]
    return _hermitian_of(s)


def trace_form(a: JordanMatrix, b: JordanMatrix):
    return jordan_product(a, b).trace()


def rank_one_check(x: JordanMatrix) -> bool:
    """True iff X o X = trace(X) X, the rank-one equation cutting out the
    Cayley plane (together with X itself, up to scale)."""
    return jordan_product(x, x) == x.scale(x.trace())


def cell_point(kind: int, a: Octonion, b: Octonion) -> JordanMatrix:
    """Point of one of the three affine rank-one cells.

    Kind 1 puts the unit in the top-left corner with first row (1, a, b);
    kinds 2 and 3 are the analogous cells centred on the other diagonal
    idempotents.
    """
    ca, cb = oct_conj(a), oct_conj(b)
    qa, qb = Octonion.unit().scale(q(a)), Octonion.unit().scale(q(b))
    one = Octonion.unit()
    # mixed off-diagonal products are associated so that the rank-one
    # identity holds without any associativity assumption, e.g. for kind
    # one the (2,3) entry is conj(a) b, making b(conj(b) a) = q(b) a apply
    if kind == 1:
        m = [[one, a, b],
             [ca, qa, oct_mul(ca, b)],
             [cb, oct_mul(cb, a), qb]]
    elif kind == 2:
        m = [[qa, a, oct_mul(a, b)],
             [ca, one, b],
             [oct_mul(cb, ca), cb, qb]]
    elif kind == 3:
        m = [[qb, oct_mul(b, ca), b],
             [oct_mul(a, cb), qa, a],
             [cb, ca, one]]
    else:
        raise ValueError("cell kind must be 1, 2 or 3")
    return _hermitian_of(m)


def infinity_point(x1: Octonion, x2: Octonion, x3: Octonion) -> JordanMatrix:
    """The zero-diagonal Hermitian matrix with first row (0, x3, x2) and
    entry (2,3) equal to x1."""
    return JordanMatrix(0, 0, 0, x1, oct_conj(x2), x3)


def infinity_conditions(x1: Octonion, x2: Octonion, x3: Octonion) -> bool:
    """The conditions at infinity as classically stated:
    q(x_i) = 0 and x2 conj(x3) = x1 x3 = conj(x1) x2 = 0.

    Beware: these are not equivalent to infinity_point(x1, x2, x3) being
    rank one; see infinity_rank_conditions for the equation-level set.
    The two versions differ by swapping the roles of x1 and x3, i.e. by
    a transposed matrix convention.
    """
    return (q(x1) == 0 and q(x2) == 0 and q(x3) == 0
            and not oct_mul(x2, oct_conj(x3))
            and not oct_mul(x1, x3)
            and not oct_mul(oct_conj(x1), x2))


def infinity_rank_conditions(x1: Octonion, x2: Octonion, x3: Octonion) -> bool:
    """Exact rank-one conditions for infinity_point(x1, x2, x3): the
    square of the zero-diagonal matrix vanishes iff q(x_i) = 0 and
    x2 conj(x1) = x3 x1 = conj(x3) x2 = 0."""
    return (q(x1) == 0 and q(x2) == 0 and q(x3) == 0
            and not oct_mul(x2, oct_conj(x1))
            and not oct_mul(x3, x1)
            and not oct_mul(oct_conj(x3), x2))


# -- isotropic multiplication images and the spinor substrate -------------

def mult_image(z: Octonion, side: str = "left") -> List[Octonion]:
    """Basis of the image of (left or right) multiplication by a nonzero
    null octonion; a maximal isotropic 4-dimensional subspace."""
    if not z:
        raise ValueError("z must be nonzero")
    if q(z) != 0:
        raise ValueError("multiplication image requires q(z) = 0")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    cols = []
    for i in range(8):
        e = Octonion.basis(i)
        w = oct_mul(z, e) if side == "left" else oct_mul(e, z)
        cols.append(list(w.coords))
    rows = [[cols[j][i] for j in range(8)] for i in range(8)]
    basis = column_space_basis(rows)
    return [Octonion(tuple(v)) for v in basis]


@dataclass(frozen=True)
class Hermitian2:
    """2x2 Hermitian octonion matrix: diagonal scalars c1, c2 and
    off-diagonal octonion x (entry (1,2); entry (2,1) is conj(x))."""

    c1: object
    c2: object
    x: Octonion

    def __post_init__(self):
        object.__setattr__(self, "c1", Q(self.c1))
        object.__setattr__(self, "c2", Q(self.c2))

    def __bool__(self) -> bool:
        return bool(self.c1 or self.c2 or self.x)


def nu2(x: Octonion, y: Octonion) -> Hermitian2:
    """The quadratic map (x, y) -> (x conj(x), x conj(y); y conj(x),
    y conj(y)) whose projectivized zero locus is the 10-dimensional
    spinor variety."""
    xx = oct_mul(x, oct_conj(x))
    yy = oct_mul(y, oct_conj(y))
    return Hermitian2(xx.coords[0], yy.coords[0], oct_mul(x, oct_conj(y)))


def nu2_tangent_basis(x: Octonion, y: Octonion) -> List[Tuple]:
    """Basis of the image of the tangent map of nu2 at (x, y), as
    10-coordinate vectors (c1, c2, x-coordinates).  At a nonzero zero of
    nu2 this image is 5-dimensional and isotropic for the determinant."""
    rows = []
    for i in range(8):
        e, ce = Octonion.basis(i), oct_conj(Octonion.basis(i))
        # direction (u, 0): d(x xbar) = x ubar + u xbar, d(x ybar) = u ybar
        c1 = (oct_mul(x, ce) + oct_mul(e, oct_conj(x))).coords[0]
        z = oct_mul(e, oct_conj(y))
        rows.append([c1, Q(0)] + list(z.coords))
        # direction (0, v): d(y ybar) = y vbar + v ybar, d(x ybar) = x vbar
        c2 = (oct_mul(y, ce) + oct_mul(e, oct_conj(y))).coords[0]
        z = oct_mul(x, ce)
        rows.append([Q(0), c2] + list(z.coords))
    cols = [[rows[j][i] for j in range(16)] for i in range(10)]
    return [tuple(v) for v in column_space_basis(cols)]


def det_form(m: Sequence):
    """Determinantal quadratic form c1 c2 - q(x) on a 10-coordinate
    vector (c1, c2, x-coordinates)."""
    c1, c2 = Q(m[0]), Q(m[1])
    return c1 * c2 - q(Octonion(tuple(m[2:])))


def det_polarization(m1: Sequence, m2: Sequence):
    """Bilinear form attached to det_form: B(v, v) = 2 det_form(v)."""
    s = tuple(Q(a) + Q(b) for a, b in zip(m1, m2))
    return det_form(s) - det_form(m1) - det_form(m2)

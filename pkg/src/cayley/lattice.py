"""Exact model of the E6 weight lattice.

Coordinates: a weight is written on eps_1..eps_5 plus a sixth coordinate u
measured in units of sqrt(3), i.e. the true eps_6 coordinate is u*sqrt(3).
With that scaling every lattice point is rational and the inner product
becomes  <x, y> = sum_i x_i y_i + 3 u_x u_y.

Simple roots (D5 chain alpha_1..alpha_5 plus the special alpha_6):

    alpha_1 = eps1 - eps2        alpha_4 = eps4 - eps5
    alpha_2 = eps2 - eps3        alpha_5 = eps4 + eps5
    alpha_3 = eps3 - eps4        alpha_6 = -(eps1+..+eps5)/2 + (1/2)*sqrt(3)eps6

All six have squared norm 2.  Fundamental weights are computed from the
duality system <w_i, alpha_j> = delta_ij, which determines them uniquely;
the build asserts that property rather than trusting any transcription.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ._rat import Q
from .linalg import solve_unique

__all__ = ["Weight", "RootSystemE6", "build_e6"]


@dataclass(frozen=True)
class Weight:
    """Point of the weight lattice: (c1..c5; u), all exact rationals."""

    c: Tuple
    u: object

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(Q(x) for x in self.c))
        object.__setattr__(self, "u", Q(self.u))
        if len(self.c) != 5:
            raise ValueError("a weight has five eps-coordinates")

    def __add__(self, o: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.c, o.c)), self.u + o.u)

    def __sub__(self, o: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.c, o.c)), self.u - o.u)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.c), -self.u)

    def scale(self, k) -> "Weight":
        k = Q(k)
        return Weight(tuple(k * a for a in self.c), k * self.u)

    def inner(self, o: "Weight"):
        """<x,y> = sum x_i y_i + 3 u_x u_y (the 3 absorbs the sqrt(3) scaling)."""
        return sum(a * b for a, b in zip(self.c, o.c)) + 3 * self.u * o.u

    def key(self) -> Tuple:
        return (*self.c, self.u)

    def __hash__(self):
        return hash(self.key())


ZERO = Weight((0, 0, 0, 0, 0), 0)


def _eps(i: int) -> Weight:
    c = [0] * 5
    c[i - 1] = 1
    return Weight(tuple(c), 0)


@dataclass(frozen=True)
class RootSystemE6:
    simple_roots: Tuple[Weight, ...]
    fundamental_weights: Tuple[Weight, ...]
    cartan: Tuple[Tuple[int, ...], ...]

    @property
    def rho(self) -> Weight:
        r = ZERO
        for w in self.fundamental_weights:
            r = r + w
        return r

    def root(self, i: int) -> Weight:
        if not 1 <= i <= len(self.simple_roots):
            raise IndexError(f"simple root index {i} out of range")
        return self.simple_roots[i - 1]

    def reflect(self, i: int, w: Weight) -> Weight:
        """s_i(w) = w - <w, alpha_i> alpha_i  (all roots have norm^2 = 2)."""
        a = self.root(i)
        return w - a.scale(w.inner(a))

    def height(self, w: Weight):
        return self.rho.inner(w)


def build_e6() -> RootSystemE6:
    h = Q(1, 2)
    roots = (
        _eps(1) - _eps(2),
        _eps(2) - _eps(3),
        _eps(3) - _eps(4),
        _eps(4) - _eps(5),
        _eps(4) + _eps(5),
        Weight((-h, -h, -h, -h, -h), h),
    )
    cartan = tuple(
        tuple(int(a.inner(b)) for b in roots) for a in roots
    )
    for i in range(6):
        assert cartan[i][i] == 2
        for j in range(6):
            if i != j:
                assert cartan[i][j] in (0, -1)

    # Solve <w, alpha_j> = delta_ij for each fundamental weight. The map
    # weight -> (<w, alpha_j>)_j is linear in the six coordinates.
    basis = [_eps(k) for k in range(1, 6)] + [Weight((0, 0, 0, 0, 0), 1)]
    a = [[b.inner(al) for b in basis] for al in roots]
    fundamental: List[Weight] = []
    for i in range(6):
        rhs = [Q(1) if j == i else Q(0) for j in range(6)]
        x = solve_unique(a, rhs)
        fundamental.append(Weight(tuple(x[:5]), x[5]))
    return RootSystemE6(roots, tuple(fundamental), cartan)

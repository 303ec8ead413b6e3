"""Sparse multivariate polynomials with exact rational coefficients.

Variables: x1..x5 are the eps-coordinates eps_1..eps_5 of the weight
lattice; the sixth variable t is the linear form alpha_6.  In this basis
all six simple reflections act by easy substitutions, which is what makes
the divided-difference computations tractable:

    s_1..s_4 : transpositions of adjacent x's (t fixed)
    s_5      : x4 -> -x5, x5 -> -x4, t -> t + x4 + x5
    s_6      : x_i -> x_i + t/2, t -> -t

A weight (c1..c5; u) corresponds to the linear form
sum_i (c_i + u) x_i + 2u t  (from  sqrt(3) eps6 = 2 alpha_6 + sum eps_i).

Exponent vectors are 6-tuples (x1..x5, t); coefficients are exact
rationals; zero coefficients are never stored.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, Tuple

from ._rat import Q
from .lattice import Weight

__all__ = ["Poly", "weight_form", "elementary_invariants"]

MAX_DEGREE = 32

Expo = Tuple[int, int, int, int, int, int]


class Poly:
    """Immutable sparse polynomial; terms maps exponent vector -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Expo, object] = None, _clean: bool = False):
        if terms is None:
            terms = {}
        if _clean:
            self.terms = terms
        else:
            self.terms = {e: Q(c) for e, c in terms.items() if c}
        for e in self.terms:
            if sum(e) > MAX_DEGREE:
                raise ValueError(f"degree cap {MAX_DEGREE} exceeded")

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        c = Q(c)
        return cls({(0, 0, 0, 0, 0, 0): c} if c else {}, _clean=bool(c))

    @classmethod
    def var(cls, i: int) -> "Poly":
        """x1..x5 for i in 1..5, t for i = 6."""
        e = [0] * 6
        e[i - 1] = 1
        return cls({tuple(e): Q(1)}, _clean=True)

    ZERO: "Poly"
    ONE: "Poly"

    # -- ring operations --------------------------------------------------

    def __add__(self, o: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(out, _clean=True)

    def __sub__(self, o: "Poly") -> "Poly":
        return self + o.scale(-1)

    def scale(self, f) -> "Poly":
        f = Q(f)
        if not f:
            return Poly.ZERO
        return Poly({e: f * c for e, c in self.terms.items()}, _clean=True)

    def __mul__(self, o: "Poly") -> "Poly":
        if len(self.terms) > len(o.terms):
            self, o = o, self
        out: Dict[Expo, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                     e1[3] + e2[3], e1[4] + e2[4], e1[5] + e2[5])
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        out = {e: c for e, c in out.items() if c}
        for e in out:
            if sum(e) > MAX_DEGREE:
                raise ValueError(f"degree cap {MAX_DEGREE} exceeded")
        return Poly(out, _clean=True)

    def power(self, n: int) -> "Poly":
        r = Poly.ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b if n > 1 else b
            n >>= 1
        return r

    # -- queries ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, o) -> bool:
        return isinstance(o, Poly) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def graded_piece(self, k: int) -> "Poly":
        return Poly({e: c for e, c in self.terms.items() if sum(e) == k},
                    _clean=True)

    def constant(self):
        return self.terms.get((0, 0, 0, 0, 0, 0), Q(0))

    def canonical_items(self):
        """Terms in graded-lexicographic order, for stable serialization."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __repr__(self):
        parts = []
        names = ["x1", "x2", "x3", "x4", "x5", "t"]
        for e, c in self.canonical_items():
            mono = "*".join(f"{n}^{p}" if p > 1 else n
                            for n, p in zip(names, e) if p)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) if parts else "0"


Poly.ZERO = Poly({}, _clean=True)
Poly.ONE = Poly({(0, 0, 0, 0, 0, 0): Q(1)}, _clean=True)


def weight_form(w: Weight) -> Poly:
    """The linear form on the lattice dual to evaluation at w."""
    terms: Dict[Expo, object] = {}
    for i, ci in enumerate(w.c):
        v = ci + w.u
        if v:
            e = [0] * 6
            e[i] = 1
            terms[tuple(e)] = Q(v)
    if w.u:
        terms[(0, 0, 0, 0, 0, 1)] = 2 * Q(w.u)
    return Poly(terms, _clean=True)


def elementary_invariants() -> Dict[str, Poly]:
    """The fundamental W0-invariants: e_{2i} = i-th elementary symmetric
    polynomial in x1^2..x5^2 (i = 1..4) and e5 = x1 x2 x3 x4 x5."""
    from itertools import combinations

    out: Dict[str, Poly] = {}
    squares = []
    for i in range(5):
        e = [0] * 6
        e[i] = 2
        squares.append(tuple(e))
    for i in (1, 2, 3, 4):
        terms: Dict[Expo, object] = {}
        for combo in combinations(range(5), i):
            e = [0] * 6
            for j in combo:
                e[j] = 2
            terms[tuple(e)] = Q(1)
        out[f"e{2 * i}"] = Poly(terms, _clean=True)
    out["e5"] = Poly({(1, 1, 1, 1, 1, 0): Q(1)}, _clean=True)
    return out

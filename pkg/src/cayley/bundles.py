"""Characteristic classes of the normal bundle of the Cayley plane.

The normal bundle N of the 16-dimensional variety inside P^26 has the
ten weights +-eps_i - (3/2) omega_6, so its total Chern class is the
polynomial

    c(N) = prod_i ((1 + (3/2)H)^2 - eps_i^2)
         = sum_{i=0..5} (-1)^i (1 + (3/2)H)^(10-2i) e_{2i},

with e_10 = e_5^2.  Projecting from a general point gives a bundle Nbar
of rank 9 fitting in 0 -> O(1) -> N -> Nbar -> 0, so c(Nbar) is the
triangular quotient c(N)/(1+H), and its Segre classes follow from the
recurrence s_k + sum_i (-1)^i c_i s_{k-i} = 0.

Everything is carried on W0-invariant polynomial representatives and
expanded into the Schubert basis only through the divided-difference
engine plus path counts: the multiplication table is deliberately not
used here, so the headline degree depends on a minimal trusted surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Tuple

from ._rat import Q, as_int
from .borel import BorelEngine, expand_invariant
from .chowring import ChowClass, pieri_class
from .minuscule import WeightDiagram
from .polynomial import Poly, weight_form, elementary_invariants

__all__ = ["ChernVector", "chern_normal", "chern_projected",
           "segre_projected", "degree_y8"]


@dataclass(frozen=True)
class ChernVector:
    """Graded Chern classes of a bundle; classes[k] lives in grade k."""
    classes: Tuple[ChowClass, ...]
    rank: int


def _hyperplane(diagram: WeightDiagram) -> Poly:
    return weight_form(diagram.rs.fundamental_weights[5])


def _expand_integral(piece: Poly, diagram: WeightDiagram) -> ChowClass:
    cls = expand_invariant(piece, diagram, check_invariant=False)
    if not cls.is_integral():
        raise ArithmeticError(
            f"non-integral Chern coefficient in {cls.by_name(diagram)}")
    return cls


_NORMAL_POLY_CACHE: Dict[int, List[Poly]] = {}
_PROJECTED_POLY_CACHE: Dict[int, List[Poly]] = {}
_SEGRE_CACHE: Dict[int, List[ChowClass]] = {}


def _chern_normal_polys(diagram: WeightDiagram) -> List[Poly]:
    """Graded pieces (degree 0..10) of the total Chern class of N."""
    got = _NORMAL_POLY_CACHE.get(id(diagram))
    if got is None:
        h = _hyperplane(diagram)
        inv = elementary_invariants()
        es = [Poly.ONE, inv["e2"], inv["e4"], inv["e6"], inv["e8"],
              inv["e5"] * inv["e5"]]
        base = Poly.ONE + h.scale(Q(3, 2))
        total = Poly.ZERO
        for i, e in enumerate(es):
            term = base.power(10 - 2 * i) * e
            total = total + (term if i % 2 == 0 else term.scale(-1))
        got = [total.graded_piece(k) for k in range(11)]
        _NORMAL_POLY_CACHE[id(diagram)] = got
    return got


def _chern_projected_polys(diagram: WeightDiagram) -> List[Poly]:
    """Graded pieces of c(N)/(1+H), by the division cbar_k = c_k - H cbar_{k-1}."""
    got = _PROJECTED_POLY_CACHE.get(id(diagram))
    if got is None:
        h = _hyperplane(diagram)
        c = _chern_normal_polys(diagram)
        got = [Poly.ONE]
        for k in range(1, 11):
            got.append(c[k] - h * got[k - 1])
        _PROJECTED_POLY_CACHE[id(diagram)] = got
    return got


_ENGINE_CACHE: Dict[int, BorelEngine] = {}


def _engine(diagram: WeightDiagram) -> BorelEngine:
    got = _ENGINE_CACHE.get(id(diagram))
    if got is None:
        got = BorelEngine(diagram.rs, diagram)
        _ENGINE_CACHE[id(diagram)] = got
    return got


def _product(diagram: WeightDiagram, a: ChowClass, b: ChowClass) -> ChowClass:
    """Bilinear extension of the divided-difference engine's products."""
    eng = _engine(diagram)
    out = ChowClass()
    for u, cu in a.coeffs.items():
        for v, cv in b.coeffs.items():
            out = out + eng.multiply(u, v).scale(cu * cv)
    return out


def _segre_classes(diagram: WeightDiagram) -> List[ChowClass]:
    """Segre classes s_0..s_15 of the projected bundle, from the
    recurrence s_k = sum_{i>=1} (-1)^(i+1) cbar_i s_{k-i} carried in the
    Schubert basis."""
    got = _SEGRE_CACHE.get(id(diagram))
    if got is None:
        cbar = chern_projected(diagram).classes
        got = [ChowClass.basis(diagram.top)]
        for k in range(1, 16):
            acc = ChowClass()
            for i in range(1, min(k, 9) + 1):
                term = _product(diagram, cbar[i], got[k - i])
                acc = acc + (term if i % 2 == 1 else term.scale(-1))
            got.append(acc)
        _SEGRE_CACHE[id(diagram)] = got
    return got


def chern_normal(diagram: WeightDiagram) -> ChernVector:
    """Chern classes c_0..c_10 of the rank-10 normal bundle; every
    Schubert coefficient must come out an integer."""
    classes = tuple(_expand_integral(p, diagram)
                    for p in _chern_normal_polys(diagram))
    return ChernVector(classes, rank=10)


def chern_projected(diagram: WeightDiagram) -> ChernVector:
    """Chern classes of the projected bundle; the grade-10 entry of this
    rank-9 bundle must vanish identically."""
    polys = _chern_projected_polys(diagram)
    classes = tuple(_expand_integral(p, diagram) for p in polys)
    if classes[10]:
        raise ArithmeticError(
            f"rank-9 bundle has a nonzero c_10: {classes[10].by_name(diagram)}")
    return ChernVector(classes, rank=9)


def segre_projected(diagram: WeightDiagram) -> Tuple[ChowClass, ...]:
    """Segre classes s_0..s_15 of the projected bundle."""
    out = tuple(_segre_classes(diagram))
    for cls in out:
        if not cls.is_integral():
            raise ArithmeticError("non-integral Segre coefficient")
    return out


def degree_y8(diagram: WeightDiagram) -> int:
    """Degree of the 24-dimensional variety of reductions.

    Writing H and E for the hyperplane and exceptional classes on the
    blow-up of the projected Cayley plane, the degree is H (3H - E)^24;
    the E powers reduce to Segre classes of the projected normal bundle,
    leaving 3^24 plus an alternating binomial sum of the integers
    H^(25-k) s_(k-9), each read off as the point-class coefficient.
    """
    segre = segre_projected(diagram)
    total = 3 ** 24
    for k in range(9, 25):
        shifted = pieri_class(diagram, segre[k - 9], 25 - k)
        val = as_int(shifted.coeff(diagram.bottom))
        total += (-1) ** k * comb(24, k) * 3 ** (24 - k) * val
    return total

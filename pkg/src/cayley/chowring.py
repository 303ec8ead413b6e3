"""Schubert-basis Chow ring of the Cayley plane.

Products with powers of the hyperplane class come straight from path counts
in the Hasse diagram (the minuscule Pieri rule).  The remaining structure
constants are pinned down by the same argument used to close the ring by
hand: the geometric axioms

    s8^2 = [point],   s4p * s8 = s12p,   s4pp * s8 = s12pp

plus Poincare duality and the Pieri relations force a small Diophantine
system whose only nonnegative integer solution is gamma = (0, 2, 1).  Every
other product is then reduced through the generating classes H, s4p, s8:
each basis class is an exact linear combination of H^i, s4p H^j, s8 H^k,
so arbitrary products only ever need s4p^2, s4p*s8, s8^2 and Pieri.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from ._rat import Q, as_int, is_integer
from .linalg import solve
from .minuscule import WeightDiagram

__all__ = ["ChowClass", "StructureTable", "StructureConstants", "pieri_Hk",
           "pieri_class", "schubert_degree", "solve_structure_constants",
           "multiply", "pairing", "generator_decomposition"]


class ChowClass:
    """Finitely supported rational coefficient vector over the 27 classes."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[int, object]] = None):
        self.coeffs = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Q(v)
                if v:
                    self.coeffs[k] = v

    @classmethod
    def basis(cls, node_id: int) -> "ChowClass":
        return cls({node_id: Q(1)})

    def __add__(self, o: "ChowClass") -> "ChowClass":
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, Q(0)) + v
        return ChowClass(out)

    def __sub__(self, o: "ChowClass") -> "ChowClass":
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, Q(0)) - v
        return ChowClass(out)

    def scale(self, f) -> "ChowClass":
        f = Q(f)
        return ChowClass({k: f * v for k, v in self.coeffs.items()})

    def __eq__(self, o) -> bool:
        return isinstance(o, ChowClass) and self.coeffs == o.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, node_id: int):
        return self.coeffs.get(node_id, Q(0))

    def grade(self, diagram: WeightDiagram) -> Optional[int]:
        grades = {diagram.node(k).length for k in self.coeffs}
        if len(grades) == 1:
            return grades.pop()
        return None

    def is_integral(self) -> bool:
        return all(is_integer(v) for v in self.coeffs.values())

    def by_name(self, diagram: WeightDiagram) -> Dict[str, object]:
        return {diagram.name_of(k): v for k, v in sorted(self.coeffs.items())}

    def __repr__(self):
        return f"ChowClass({self.coeffs})"


def pieri_Hk(diagram: WeightDiagram, w: int, k: int) -> ChowClass:
    """sigma_w . H^k = sum over length l(w)+k of kappa(w, v) sigma_v."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    target = diagram.node(w).length + k
    if target > diagram.max_length:
        return ChowClass()
    out = {}
    for v in diagram.by_length[target]:
        c = diagram.kappa(w, v)
        if c:
            out[v] = Q(c)
    return ChowClass(out)


def pieri_class(diagram: WeightDiagram, cls: ChowClass, k: int) -> ChowClass:
    out = ChowClass()
    for node, coeff in cls.coeffs.items():
        out = out + pieri_Hk(diagram, node, k).scale(coeff)
    return out


def schubert_degree(diagram: WeightDiagram, w: int) -> int:
    return diagram.degree(w)


@dataclass
class StructureConstants:
    """Degree-4 x 4 products in the codimension-8 basis (s8, s8p, s8pp)."""
    s4p_sq: ChowClass
    s4pp_sq: ChowClass
    s4p_s4pp: ChowClass
    gammas: Tuple[int, int, int]


def solve_structure_constants(diagram: WeightDiagram) -> StructureConstants:
    """Reproduce the hand derivation as an algorithm.

    Unknowns mu_i, nu_i, gamma_i in
        s4p^2   = mu0 s8 + mu1 s8p + mu2 s8pp
        s4pp^2  = nu0 s8 + nu1 s8p + nu2 s8pp
        s4p s4pp= g0 s8 + g1 s8p + g2 s8pp
    Constraints: cutting with s8 (axioms s8^2 = pt, s4p s8 = s12p,
    s4pp s8 = s12pp, plus duality pairings) gives mu0 = nu0 = 1, g0 = 0;
    Pieri gives mu_i + g_i and nu_i + g_i; computing (s4p^2)(s4pp^2) two
    ways gives g1^2 + g2^2 = mu.nu.  Nonnegative integer solutions of the
    resulting 7 g1 + 5 g2 = 19 are enumerated and must be unique.
    """
    h4_s4p = pieri_Hk(diagram, diagram.id_of("s4p"), 4)
    h4_s4pp = pieri_Hk(diagram, diagram.id_of("s4pp"), 4)
    i8 = diagram.id_of("s8")
    i8p = diagram.id_of("s8p")
    i8pp = diagram.id_of("s8pp")
    a = [as_int(h4_s4p.coeff(i)) for i in (i8, i8p, i8pp)]
    b = [as_int(h4_s4pp.coeff(i)) for i in (i8, i8p, i8pp)]
    # mu_i = a_i - g_i, nu_i = b_i - g_i; cutting with s8 forces mu0 = nu0 = 1
    if a[0] != 1 or b[0] != 1:
        raise RuntimeError("Pieri data incompatible with s8-cut axioms")
    solutions = []
    for g1 in range(0, max(a[1], b[1]) + 1):
        for g2 in range(0, max(a[2], b[2]) + 1):
            mu = (1, a[1] - g1, a[2] - g2)
            nu = (1, b[1] - g1, b[2] - g2)
            if min(mu) < 0 or min(nu) < 0:
                continue
            # quartic identity: (s4p s4pp)^2 = (s4p^2)(s4pp^2) under the
            # diagonal codimension-8 pairing
            if g1 * g1 + g2 * g2 == sum(m * n for m, n in zip(mu, nu)):
                solutions.append((mu, nu, (0, g1, g2)))
    if len(solutions) != 1:
        raise RuntimeError(
            f"structure solver expected a unique solution, got {solutions}")
    mu, nu, g = solutions[0]
    mk = lambda t: ChowClass({i8: t[0], i8p: t[1], i8pp: t[2]})
    return StructureConstants(mk(mu), mk(nu), mk(g), g)


def generator_decomposition(diagram: WeightDiagram) -> Dict[int, Tuple]:
    """Write each basis class [sigma_u] of codimension d as
    a * H^d + b * s4p H^(d-4) + c * s8 H^(d-8), using only Pieri data.
    Returns node id -> (a, b, c)."""
    out: Dict[int, Tuple] = {}
    top = diagram.top
    i4p = diagram.id_of("s4p")
    i8 = diagram.id_of("s8")
    for d in range(diagram.max_length + 1):
        span = [pieri_Hk(diagram, top, d)]
        if d >= 4:
            span.append(pieri_Hk(diagram, i4p, d - 4))
        else:
            span.append(ChowClass())
        if d >= 8:
            span.append(pieri_Hk(diagram, i8, d - 8))
        else:
            span.append(ChowClass())
        basis_ids = diagram.by_length[d]
        a = [[s.coeff(i) for s in span] for i in basis_ids]
        for u in basis_ids:
            rhs = [Q(1) if i == u else Q(0) for i in basis_ids]
            x = solve(a, rhs)
            if x is None:
                raise RuntimeError(
                    f"class {diagram.name_of(u)} is not in the H/s4p/s8 span")
            out[u] = tuple(x)
    return out


class StructureTable:
    """Full multiplication table; immutable once built."""

    def __init__(self, diagram: WeightDiagram):
        self.diagram = diagram
        self.constants = solve_structure_constants(diagram)
        self.decomposition = generator_decomposition(diagram)
        self._table: Dict[Tuple[int, int], ChowClass] = {}
        self._build()

    def _mono_product(self, kind1: int, kind2: int, hpow: int) -> ChowClass:
        """Product of two spanning monomials; kind 0/1/2 = 1, s4p, s8."""
        d = self.diagram
        pair = tuple(sorted((kind1, kind2)))
        if pair == (0, 0):
            base = ChowClass.basis(d.top)
        elif pair == (0, 1):
            base = ChowClass.basis(d.id_of("s4p"))
        elif pair == (0, 2):
            base = ChowClass.basis(d.id_of("s8"))
        elif pair == (1, 1):
            base = self.constants.s4p_sq
        elif pair == (1, 2):
            base = ChowClass.basis(d.id_of("s12p"))  # axiom s4p*s8 = s12p
        else:  # (2, 2): s8^2 = point class
            base = ChowClass.basis(d.bottom)
        return pieri_class(d, base, hpow)

    def product(self, u: int, v: int) -> ChowClass:
        d = self.diagram
        lu, lv = d.node(u).length, d.node(v).length
        if lu + lv > d.max_length:
            return ChowClass()
        du, dv = self.decomposition[u], self.decomposition[v]
        degs = (0, 4, 8)
        out = ChowClass()
        for ku, cu in enumerate(du):
            if not cu:
                continue
            for kv, cv in enumerate(dv):
                if not cv:
                    continue
                hpow = (lu - degs[ku]) + (lv - degs[kv])
                out = out + self._mono_product(ku, kv, hpow).scale(cu * cv)
        return out

    def _build(self):
        d = self.diagram
        for u in range(len(d)):
            for v in range(u, len(d)):
                if d.node(u).length + d.node(v).length > d.max_length:
                    continue
                p = self.product(u, v)
                if not p.is_integral():
                    raise RuntimeError(
                        f"non-integral product {d.name_of(u)}*{d.name_of(v)}")
                if any(c < 0 for c in p.coeffs.values()):
                    raise RuntimeError(
                        f"negative coefficient in {d.name_of(u)}*{d.name_of(v)}")
                self._table[(u, v)] = p
                self._table[(v, u)] = p
        # duality normalization check
        for u in range(len(d)):
            for v in d.by_length[d.max_length - d.node(u).length]:
                want = Q(1) if v == d.dual(u) else Q(0)
                if self._table[(u, v)].coeff(d.bottom) != want:
                    raise RuntimeError("duality normalization violated")

    def get(self, u: int, v: int) -> ChowClass:
        d = self.diagram
        if d.node(u).length + d.node(v).length > d.max_length:
            return ChowClass()
        return self._table[(u, v)]

    def pairs(self) -> Iterable[Tuple[int, int]]:
        return self._table.keys()


def multiply(a: ChowClass, b: ChowClass, t: StructureTable) -> ChowClass:
    """Bilinear extension of the structure table."""
    out = ChowClass()
    for u, cu in a.coeffs.items():
        for v, cv in b.coeffs.items():
            out = out + t.get(u, v).scale(cu * cv)
    return out


def pairing(a: ChowClass, b: ChowClass, t: StructureTable):
    """Point-class coefficient of the product (grades must sum to 16)."""
    d = t.diagram
    ga, gb = a.grade(d), b.grade(d)
    if a and b and (ga is None or gb is None or ga + gb != d.max_length):
        raise ValueError("pairing requires complementary homogeneous grades")
    return multiply(a, b, t).coeff(d.bottom)

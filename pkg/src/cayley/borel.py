"""Borel-presentation oracle: divided differences on W0-invariant
polynomials, Schubert expansion of invariants, polynomial representatives,
and an independent multiplication engine.

Coefficient extraction convention: for a node w of codimension d with a
reduced word read along a chain from the TOP down to w (first letter = the
edge leaving the top), the Schubert coefficient of a homogeneous invariant
f of degree d on sigma_w is the constant obtained by applying the divided
differences in that same order:  del_{i_d}( ... del_{i_1}(f) ... ) -- i.e.
letters are consumed top-first.  This is the orientation that reproduces
e_2 = -(3/4) H^2; it is pinned by tests.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from ._rat import Q
from .chowring import ChowClass, generator_decomposition, pieri_class
from .lattice import RootSystemE6
from .linalg import solve
from .minuscule import WeightDiagram
from .polynomial import Poly, weight_form, elementary_invariants

__all__ = ["reflect_poly", "divided_diff", "divided_diff_word",
           "expand_invariant", "BorelEngine", "w_invariant_quadratic"]

# caches for the substitution images of monomials; capped by degree so
# the high-degree tail (used only a handful of times) stays out of memory
_S6_CACHE: Dict[Tuple[int, ...], Tuple] = {}
_S5_CACHE: Dict[Tuple[int, int, int], Tuple] = {}
_SUBST_CACHE_MAX_DEGREE = 10


def _swap(e, i, j):
    l = list(e)
    l[i], l[j] = l[j], l[i]
    return tuple(l)


def _s5_monomial(a: int, b: int, c: int):
    """Image of x4^a x5^b t^c under s5, as ((e4, e5, et), coeff) pairs.

    s5 sends x4 -> -x5, x5 -> -x4, t -> t + x4 + x5, so the image is
    (-1)^(a+b) x5^a x4^b (t + x4 + x5)^c, expanded multinomially.
    """
    key = (a, b, c)
    got = _S5_CACHE.get(key)
    if got is None:
        sign = Q(-1) if (a + b) % 2 else Q(1)
        terms = []
        for i in range(c + 1):
            for j in range(c - i + 1):
                k = c - i - j
                coeff = sign * (factorial(c) // (factorial(i) * factorial(j)
                                                 * factorial(k)))
                terms.append(((b + i, a + j, k), coeff))
        got = tuple(terms)
        if a + b + c <= _SUBST_CACHE_MAX_DEGREE:
            _S5_CACHE[key] = got
    return got


def _s6_monomial(e: Tuple[int, ...]):
    """Image of a monomial under s6 (x_i -> x_i + t/2, t -> -t), as
    (exponent, coeff) pairs expanded binomially."""
    got = _S6_CACHE.get(e)
    if got is None:
        sign = Q(-1) if e[5] % 2 else Q(1)
        terms = [((), sign)]
        for i in range(5):
            ei = e[i]
            if ei:
                terms = [((*head, k), c * comb(ei, k) * Q(1, 2 ** (ei - k)))
                         for head, c in terms for k in range(ei + 1)]
            else:
                terms = [((*head, 0), c) for head, c in terms]
        drop = [sum(e[:5]) - sum(head) for head, _ in terms]
        got = tuple(((*head, e[5] + d), c)
                    for (head, c), d in zip(terms, drop))
        if sum(e) <= _SUBST_CACHE_MAX_DEGREE:
            _S6_CACHE[e] = got
    return got


def reflect_poly(i: int, f: Poly) -> Poly:
    """Substitution action of the simple reflection s_i on polynomials."""
    if i in (1, 2, 3, 4):
        return Poly({_swap(e, i - 1, i): c for e, c in f.terms.items()},
                    _clean=True)
    if i == 5:
        out: Dict[Tuple[int, ...], object] = {}
        for e, c in f.terms.items():
            for (e4, e5, et), cc in _s5_monomial(e[3], e[4], e[5]):
                key = (e[0], e[1], e[2], e4, e5, et)
                nc = out.get(key, 0) + c * cc
                if nc:
                    out[key] = nc
                elif key in out:
                    del out[key]
        return Poly(out, _clean=True)
    if i == 6:
        out = {}
        for e, c in f.terms.items():
            for key, cc in _s6_monomial(e):
                nc = out.get(key, 0) + c * cc
                if nc:
                    out[key] = nc
                elif key in out:
                    del out[key]
        return Poly(out, _clean=True)
    raise IndexError(f"reflection index {i} out of range")


# linear forms of the simple roots in the (x1..x5, t) variables
_ROOT_FORMS = {
    1: ((1, Q(1)), (2, Q(-1))),
    2: ((2, Q(1)), (3, Q(-1))),
    3: ((3, Q(1)), (4, Q(-1))),
    4: ((4, Q(1)), (5, Q(-1))),
    5: ((4, Q(1)), (5, Q(1))),
    6: ((6, Q(1)),),
}


def _div_linear(g: Poly, form: Sequence[Tuple[int, object]]) -> Poly:
    """Exact division of g by the linear form sum c_v * var_v; raises on a
    nonzero remainder."""
    (pivot, cp), rest = form[0], form[1:]
    pidx = pivot - 1
    # group by pivot power
    layers: Dict[int, Dict] = {}
    for e, c in g.terms.items():
        layers.setdefault(e[pidx], {})[e] = c
    quotient: Dict = {}
    for k in range(max(layers), 0, -1):
        layer = layers.get(k)
        if not layer:
            continue
        for e, c in list(layer.items()):
            qe = list(e)
            qe[pidx] -= 1
            qe = tuple(qe)
            qc = c / cp
            quotient[qe] = quotient.get(qe, Q(0)) + qc
            # subtract qc * qe * (rest of the form) from lower layers
            for v, cv in rest:
                se = list(qe)
                se[v - 1] += 1
                se = tuple(se)
                tgt = layers.setdefault(se[pidx], {})
                nc = tgt.get(se, Q(0)) - qc * cv
                if nc:
                    tgt[se] = nc
                elif se in tgt:
                    del tgt[se]
    if layers.get(0):
        raise ValueError("nonzero remainder in divided difference")
    return Poly(quotient)


def divided_diff(i: int, f: Poly) -> Poly:
    """del_i f = (f - s_i f) / alpha_i, an exact division."""
    g = f - reflect_poly(i, f)
    if not g:
        return Poly.ZERO
    return _div_linear(g, _ROOT_FORMS[i])


def divided_diff_word(word: Sequence[int], f: Poly) -> Poly:
    """Apply divided differences along a word, first letter first."""
    for i in word:
        if not f:
            return Poly.ZERO
        f = divided_diff(i, f)
    return f


def _top_down_word(diagram: WeightDiagram, node: int) -> Tuple[int, ...]:
    """Reduced word read along a chain from the top down to the node."""
    return tuple(reversed(diagram.reduced_word(node)))


def is_w0_invariant(f: Poly) -> bool:
    return all(reflect_poly(j, f) == f for j in range(1, 6))


def _monomials(degree: int):
    """All exponent vectors of the given total degree in 6 variables."""
    def gen(pos: int, left: int, acc):
        if pos == 5:
            yield (*acc, left)
            return
        for k in range(left + 1):
            yield from gen(pos + 1, left - k, acc + (k,))
    yield from gen(0, degree, ())


_DD_MONO: Dict[Tuple[int, Tuple[int, ...]], Tuple[Tuple[Tuple[int, ...], object], ...]] = {}
_DD5_PARTIAL: Dict[Tuple[int, int, int], Tuple] = {}


def _dd5_partial(a: int, b: int, c: int):
    """del_5 of x4^a x5^b t^c, as ((e4, e5, et), coeff) pairs; the other
    variables pass through untouched.  The key space is tiny, so this is
    cached without a degree cap."""
    got = _DD5_PARTIAL.get((a, b, c))
    if got is None:
        g: Dict[Tuple[int, ...], object] = {(0, 0, 0, a, b, c): Q(1)}
        for (e4, e5, et), cc in _s5_monomial(a, b, c):
            key = (0, 0, 0, e4, e5, et)
            nc = g.get(key, 0) - cc
            if nc:
                g[key] = nc
            elif key in g:
                del g[key]
        if g:
            quo = _div_linear(Poly(g, _clean=True), _ROOT_FORMS[5])
            got = tuple(((e[3], e[4], e[5]), cc)
                        for e, cc in quo.terms.items())
        else:
            got = ()
        _DD5_PARTIAL[(a, b, c)] = got
    return got


def _dd_monomial(i: int, e: Tuple[int, ...]):
    """Divided difference of a single monomial, cached across nodes for
    low degrees (where the reuse between nodes is concentrated).

    The transposition letters use the closed form
    del(x^a y^b) = sum of x^k y^(a+b-1-k) over b <= k < a (negated with
    the roles swapped when a < b); the letter whose root is t alone is a
    plain shift of the t exponent.  The remaining letter falls back to
    the generic reflect-subtract-divide path.
    """
    got = _DD_MONO.get((i, e))
    if got is not None:
        return got
    if i in (1, 2, 3, 4):
        a, b = e[i - 1], e[i]
        if a == b:
            got = ()
        else:
            lo, hi = min(a, b), max(a, b)
            sign = Q(1) if a > b else Q(-1)
            out = []
            base = list(e)
            for k in range(lo, hi):
                base[i - 1], base[i] = k, a + b - 1 - k
                out.append((tuple(base), sign))
            got = tuple(out)
    elif i == 5:
        part = _dd5_partial(e[3], e[4], e[5])
        got = tuple(((e[0], e[1], e[2], p4, p5, pt), c)
                    for (p4, p5, pt), c in part)
    elif i == 6:
        # (m - s6 m) / t; when m is t-free its own image term x^e cancels m
        out: Dict[Tuple[int, ...], object] = {}
        for img, c in _s6_monomial(e):
            if img[5] == 0:
                continue
            key = (*img[:5], img[5] - 1)
            nc = out.get(key, 0) - c
            if nc:
                out[key] = nc
            elif key in out:
                del out[key]
        if e[5]:
            shifted = (*e[:5], e[5] - 1)
            nc = out.get(shifted, 0) + Q(1)
            if nc:
                out[shifted] = nc
            elif shifted in out:
                del out[shifted]
        got = tuple(out.items())
    else:
        got = tuple(divided_diff(i, Poly({e: Q(1)}, _clean=True)).terms.items())
    if sum(e) <= _SUBST_CACHE_MAX_DEGREE:
        _DD_MONO[(i, e)] = got
    return got


def _level_step_t(prev: Dict[Tuple[int, ...], object]) -> Dict[Tuple[int, ...], object]:
    """One functional-propagation level for the letter whose root is t.

    Writing F' for the previous level, the new level is
        F[(e, c)] = F'[(e, c-1)] - (-1)^c S[(e, c)],
        S[(e, c)]  = sum over k <= e of prod C(e_i, k_i) 2^-(d)
                     * F'[(k, c + d - 1)],     d = sum(e_i - k_i),
    which follows from transposing the divided difference of a monomial.
    S factors through the five x-coordinates, so it is computed by five
    binomial convolution passes instead of one pass per target monomial.
    """
    # H[(k, u)] = F'[(k, u - 1)]
    h = {(*e[:5], e[5] + 1): v for e, v in prev.items()}
    s = h
    for i in range(5):
        out: Dict[Tuple[int, ...], object] = {}
        for e, v in s.items():
            ki, u = e[i], e[5]
            for r in range(u + 1):
                key = (*e[:i], ki + r, *e[i + 1:5], u - r)
                c = v * comb(ki + r, ki) * Q(1, 2 ** r)
                nc = out.get(key, 0) + c
                if nc:
                    out[key] = nc
                elif key in out:
                    del out[key]
        s = out
    nxt: Dict[Tuple[int, ...], object] = {}
    for e, v in h.items():
        nxt[e] = v
    for e, v in s.items():
        sign = Q(-1) if e[5] % 2 == 0 else Q(1)
        nc = nxt.get(e, 0) + sign * v
        if nc:
            nxt[e] = nc
        elif e in nxt:
            del nxt[e]
    return nxt


def functional_step(level: Dict[Tuple[int, ...], object], letter: int,
                    degree: int) -> Dict[Tuple[int, ...], object]:
    """Extend a functional vector over degree-(degree-1) monomials to one
    over degree-degree monomials by transposing one divided difference."""
    if letter == 6:
        return _level_step_t(level)
    nxt: Dict[Tuple[int, ...], object] = {}
    for m in _monomials(degree):
        acc = Q(0)
        for e, c in _dd_monomial(letter, m):
            lv = level.get(e)
            if lv is not None:
                acc += c * lv
        if acc:
            nxt[m] = acc
    return nxt


def functional_vector(word: Sequence[int]) -> Dict[Tuple[int, ...], object]:
    """Vector of the functional f -> constant of divided differences applied
    along the word (first letter first), over degree-len(word) monomials."""
    d = len(word)
    level: Dict[Tuple[int, ...], object] = {(0, 0, 0, 0, 0, 0): Q(1)}
    for j in range(1, d + 1):
        level = functional_step(level, word[d - j], j)
    return level


class CoefficientFunctionals:
    """Per-node linear functionals extracting Schubert coefficients.

    The functional of a node w of length d sends a degree-d polynomial f to
    the constant divided_diff_word(word(w), f).  It is computed once, as an
    explicit vector over the degree-d monomial basis, by propagating the
    word one letter at a time through single-monomial divided differences;
    afterwards every coefficient extraction is a sparse dot product.
    """

    def __init__(self, diagram: WeightDiagram):
        self.diagram = diagram
        self._vectors: Dict[int, Dict[Tuple[int, ...], object]] = {}

    def vector(self, node: int) -> Dict[Tuple[int, ...], object]:
        got = self._vectors.get(node)
        if got is None:
            got = self._build(node)
            self._vectors[node] = got
        return got

    def _build(self, node: int) -> Dict[Tuple[int, ...], object]:
        return functional_vector(_top_down_word(self.diagram, node))

    def apply(self, node: int, f: Poly):
        vec = self.vector(node)
        acc = Q(0)
        for e, c in f.terms.items():
            v = vec.get(e)
            if v is not None:
                acc += c * v
        return acc


def expand_invariant(f: Poly, diagram: WeightDiagram,
                     functionals: Optional[CoefficientFunctionals] = None,
                     check_invariant: bool = True) -> ChowClass:
    """Schubert expansion of a homogeneous W0-invariant of degree <= 16."""
    if not f:
        return ChowClass()
    if not f.is_homogeneous():
        raise ValueError("expand_invariant needs a homogeneous input")
    d = f.degree()
    if d > diagram.max_length:
        raise ValueError("degree exceeds the dimension of the variety")
    if check_invariant and not is_w0_invariant(f):
        raise ValueError("input is not W0-invariant")
    if functionals is None:
        functionals = _shared_functionals(diagram)
    out = {}
    for node in diagram.by_length[d]:
        c = functionals.apply(node, f)
        if c:
            out[node] = c
    return ChowClass(out)


_FUNCTIONAL_CACHE: Dict[int, CoefficientFunctionals] = {}


def _shared_functionals(diagram: WeightDiagram) -> CoefficientFunctionals:
    got = _FUNCTIONAL_CACHE.get(id(diagram))
    if got is None:
        got = CoefficientFunctionals(diagram)
        _FUNCTIONAL_CACHE[id(diagram)] = got
    return got


def w_invariant_quadratic() -> Poly:
    """The (up to scale unique) degree-2 invariant of the full Weyl group,
    found by solving the reflection-invariance constraints exactly."""
    monos = []
    for i in range(6):
        for j in range(i, 6):
            e = [0] * 6
            e[i] += 1
            e[j] += 1
            monos.append(tuple(e))
    basis = [Poly({m: Q(1)}) for m in monos]
    rows = []
    for i in (1, 2, 3, 4, 5, 6):
        # for each monomial e: sum_k c_k * coeff_e(s_i b_k - b_k) = 0
        diffs = [reflect_poly(i, b) - b for b in basis]
        support = sorted({e for dp in diffs for e in dp.terms})
        for e in support:
            rows.append([dp.terms.get(e, Q(0)) for dp in diffs])
    from .linalg import nullspace
    ker = nullspace(rows)
    if len(ker) != 1:
        raise RuntimeError("W-invariant quadratic should be unique up to scale")
    out = Poly.ZERO
    for c, m in zip(ker[0], monos):
        out = out + Poly({m: c})
    return out


class BorelEngine:
    """Independent multiplication engine through polynomial representatives.

    Representatives: H is the linear form of omega_6; s4p and s8 get
    invariant polynomial representatives solved from small linear systems
    against expand_invariant.  A basis class decomposed (via Pieri only) as
    a H^d + b s4p H^(d-4) + c s8 H^(d-8) is represented by the same
    combination of representative polynomials, so any product reduces to
    expansions of (1 | r4 | r8 | r4^2 | r4 r8 | r8^2) * H^k.
    """

    def __init__(self, rs: RootSystemE6, diagram: WeightDiagram):
        self.rs = rs
        self.diagram = diagram
        self.h_rep = weight_form(rs.fundamental_weights[5])
        self.invariants = elementary_invariants()
        self.decomposition = generator_decomposition(diagram)
        self.reps = self._solve_representatives()
        self._base: Dict[Tuple[int, int], ChowClass] = {}
        self._family: Dict[Tuple[int, int, int], ChowClass] = {}

    # -- representatives --------------------------------------------------

    def _match(self, span: List[Poly], targets: List[int]) -> List[Poly]:
        """Find combinations of span whose expansions are exactly the given
        basis classes."""
        d = self.diagram
        expanded = [expand_invariant(p, d) for p in span]
        degree = span[0].degree()
        ids = d.by_length[degree]
        a = [[e.coeff(i) for e in expanded] for i in ids]
        out = []
        for target in targets:
            rhs = [Q(1) if i == target else Q(0) for i in ids]
            x = solve(a, rhs)
            if x is None:
                raise RuntimeError(
                    f"no invariant representative for {d.name_of(target)}")
            rep = Poly.ZERO
            for c, p in zip(x, span):
                if c:
                    rep = rep + p.scale(c)
            out.append(rep)
        return out

    def _solve_representatives(self) -> Dict[str, Poly]:
        d = self.diagram
        inv = self.invariants
        h = self.h_rep
        h2, h3, h4 = h * h, h * h * h, (h * h) * (h * h)
        (r4p,) = self._match([h4, inv["e4"]], [d.id_of("s4p")])
        span8 = [h4 * h4, inv["e4"] * h4, inv["e4"] * inv["e4"],
                 inv["e8"], inv["e6"] * h2, inv["e5"] * h3]
        (r8,) = self._match(span8, [d.id_of("s8")])
        return {"h": h, "s4p": r4p, "s8": r8}

    # -- products ---------------------------------------------------------

    def _base_expand(self, k1: int, k2: int) -> ChowClass:
        """Expansion of rep_{k1} * rep_{k2}, where kind 0/1/2 stands for
        1 / s4p-rep / s8-rep."""
        key = (min(k1, k2), max(k1, k2))
        got = self._base.get(key)
        if got is None:
            reps = [Poly.ONE, self.reps["s4p"], self.reps["s8"]]
            p = reps[key[0]] * reps[key[1]]
            # products of invariants are invariant, skip the explicit check
            got = expand_invariant(p, self.diagram, check_invariant=False)
            self._base[key] = got
        return got

    def _family_expand(self, k1: int, k2: int, hpow: int) -> ChowClass:
        """Expansion of rep_{k1} * rep_{k2} * H^hpow.  The hyperplane
        powers are applied through path counts on the expanded class,
        which agrees with the polynomial product (checked in tests)."""
        key = (min(k1, k2), max(k1, k2), hpow)
        got = self._family.get(key)
        if got is None:
            got = pieri_class(self.diagram, self._base_expand(k1, k2), hpow)
            self._family[key] = got
        return got

    def family_expand_polynomial(self, k1: int, k2: int, hpow: int) -> ChowClass:
        """Same expansion computed entirely on the polynomial side, with no
        path-count shortcut for the hyperplane powers.  Slower; kept as an
        independent cross-check."""
        reps = [Poly.ONE, self.reps["s4p"], self.reps["s8"]]
        p = reps[k1] * reps[k2] * self.h_rep.power(hpow)
        return expand_invariant(p, self.diagram, check_invariant=False)

    def representative(self, node: int) -> Poly:
        """An invariant polynomial whose expansion is exactly sigma_node."""
        a, b, c = self.decomposition[node]
        l = self.diagram.node(node).length
        rep = Poly.ZERO
        if a:
            rep = rep + self.h_rep.power(l).scale(a)
        if b:
            rep = rep + (self.reps["s4p"] * self.h_rep.power(l - 4)).scale(b)
        if c:
            rep = rep + (self.reps["s8"] * self.h_rep.power(l - 8)).scale(c)
        return rep

    def multiply(self, u: int, v: int) -> ChowClass:
        """Product of two Schubert classes computed entirely on the Borel
        side (polynomial representatives + divided differences)."""
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
                out = out + self._family_expand(ku, kv, hpow).scale(cu * cv)
        return out

    def expand(self, f: Poly) -> ChowClass:
        return expand_invariant(f, self.diagram)

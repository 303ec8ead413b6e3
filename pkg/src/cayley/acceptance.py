"""Self-check suite: the numerical contract of the package.

Eleven criteria cover the diagram combinatorics, the degrees, the Pieri
data, the structure-constant solver, the divided-difference engine, the
agreement of the two multiplication engines, the characteristic classes
of the normal bundle, the headline degree, and the algebraic property
suites (word independence, ideal invariance, associativity, octonion
composition, rank-one cells).  Every check is exact; a single mismatch
fails its criterion.  run_all prints one line per criterion and returns
the number of failures.
"""

from __future__ import annotations

import random
import sys
from typing import Callable, Dict, List, Optional, Tuple

from ._rat import Q, as_int
from .borel import (BorelEngine, expand_invariant, functional_step,
                    functional_vector, w_invariant_quadratic)
from .bundles import chern_normal, chern_projected, degree_y8, segre_projected
from .chowring import (ChowClass, StructureTable, multiply, pieri_class,
                       pieri_Hk, solve_structure_constants)
from .jordan import Octonion, cell_point, oct_mul, q, rank_one_check
from .minuscule import (WeightDiagram, build_cayley_diagram,
                        build_spinor_diagram)
from .polynomial import elementary_invariants, weight_form

DEFAULT_SEED = 20260826


class Context:
    """Lazily built shared objects, so cheap criteria stay cheap."""

    def __init__(self):
        self._diagram: Optional[WeightDiagram] = None
        self._spinor = None
        self._table: Optional[StructureTable] = None
        self._engine: Optional[BorelEngine] = None

    @property
    def diagram(self) -> WeightDiagram:
        if self._diagram is None:
            self._diagram = build_cayley_diagram()
        return self._diagram

    @property
    def spinor(self):
        if self._spinor is None:
            self._spinor = build_spinor_diagram(self.diagram.rs)
        return self._spinor

    @property
    def table(self) -> StructureTable:
        if self._table is None:
            self._table = StructureTable(self.diagram)
        return self._table

    @property
    def engine(self) -> BorelEngine:
        if self._engine is None:
            self._engine = BorelEngine(self.diagram.rs, self.diagram)
        return self._engine


def _cls(d: WeightDiagram, terms: Dict[str, object]) -> ChowClass:
    return ChowClass({d.id_of(n): Q(c) for n, c in terms.items()})


def _shifted(d: WeightDiagram, terms: List[Tuple[str, int, object]]) -> ChowClass:
    """Linear combination of basis classes pushed down by hyperplane powers."""
    out = ChowClass()
    for name, hpow, c in terms:
        out = out + pieri_Hk(d, d.id_of(name), hpow).scale(Q(c))
    return out


RANK_SIZES = [1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1]

PIERI_H4 = {
    "s0": {"s4p": 1, "s4pp": 1},
    "s4p": {"s8": 1, "s8p": 3, "s8pp": 2},
    "s4pp": {"s8": 1, "s8p": 4, "s8pp": 3},
    "s8": {"s12p": 1, "s12pp": 1},
    "s8p": {"s12p": 3, "s12pp": 4},
    "s8pp": {"s12p": 2, "s12pp": 3},
}

STRUCTURE_PRODUCTS = [
    ("s8", "s8", {"s16": 1}),
    ("s4p", "s8", {"s12p": 1}),
    ("s4pp", "s8", {"s12pp": 1}),
    ("s8p", "s8p", {"s16": 1}),
    ("s8pp", "s8pp", {"s16": 1}),
    ("s8", "s8p", {}),
    ("s8p", "s8pp", {}),
    ("s8", "s8pp", {}),
    ("s4p", "s12p", {"s16": 1}),
    ("s4pp", "s12pp", {"s16": 1}),
    ("s4p", "s12pp", {}),
    ("s4pp", "s12p", {}),
    ("s4p", "s4p", {"s8": 1, "s8p": 1, "s8pp": 1}),
    ("s4pp", "s4pp", {"s8": 1, "s8p": 2, "s8pp": 2}),
    ("s4p", "s4pp", {"s8p": 2, "s8pp": 1}),
    ("s4p", "s8p", {"s12p": 1, "s12pp": 2}),
    ("s4p", "s8pp", {"s12p": 1, "s12pp": 1}),
    ("s4pp", "s8p", {"s12p": 2, "s12pp": 2}),
    ("s4pp", "s8pp", {"s12p": 1, "s12pp": 2}),
]

INVARIANT_LINES = [
    ("e2", {"s2": Q(-3, 4)}),
    ("e4", {"s4p": Q(-27, 8), "s4pp": Q(21, 8)}),
    ("e5", {"s5p": Q(3, 16), "s5pp": Q(-21, 32)}),
    ("e6", {"s6p": Q(-27, 16), "s6pp": Q(87, 32)}),
    ("e8", {"s8": Q(21, 128), "s8p": Q(291, 256), "s8pp": Q(-519, 256)}),
]

# c_k of the rank-10 normal bundle, as (basis class, hyperplane power, coeff)
CHERN_NORMAL = {
    0: [("s0", 0, 1)],
    1: [("s0", 1, 15)],
    2: [("s0", 2, 102)],
    3: [("s0", 3, 414)],
    4: [("s4p", 0, 1107), ("s4pp", 0, 1113)],
    5: [("s4p", 1, 2025), ("s4pp", 1, 2079)],
    6: [("s6p", 0, 5292), ("s6pp", 0, 8034)],
    7: [("s6p", 1, 4698), ("s6pp", 1, 7218)],
    8: [("s8", 0, 2751), ("s8p", 0, 9786), ("s8pp", 0, 7032)],
    9: [("s8", 1, 963), ("s8p", 1, 3438), ("s8pp", 1, 2466)],
    10: [("s8", 2, 153), ("s8p", 2, 549), ("s8pp", 2, 387)],
}

# c_k of the rank-9 projected bundle; where two printed forms exist
# (shifted generators vs direct basis) both are listed and must agree.
CHERN_PROJECTED = {
    0: [("s0", 0, 1)],
    1: [("s0", 1, 14)],
    2: [("s0", 2, 88)],
    3: [("s0", 3, 326)],
    4: [("s4p", 0, 781), ("s4pp", 0, 787)],
    5: [("s4p", 1, 1244), ("s4pp", 1, 1292)],
    6: [("s6p", 0, 2756), ("s6pp", 0, 4206)],
    7: [("s6p", 1, 1942), ("s6pp", 1, 3012)],
    8: [("s8", 0, 809), ("s8p", 0, 2890), ("s8pp", 0, 2078)],
    9: [("s8", 1, 154), ("s8p", 1, 548), ("s8pp", 1, 388)],
    10: [],
}

CHERN_PROJECTED_DIRECT = {
    5: {"s5p": 2536, "s5pp": 1292},
    7: {"s7p": 1942, "s7pp": 4954},
    9: {"s9p": 702, "s9pp": 936},
}

SEGRE_PROJECTED = {
    0: {"s0": 1},
    1: {"s1": 14},
    2: {"s2": 108},
    3: {"s3": 606},
    4: {"s4p": 2763, "s4pp": 2757},
    5: {"s5p": 21624, "s5pp": 10752},
    6: {"s6p": 75492, "s6pp": 112602},
    7: {"s7p": 240534, "s7pp": 596598},
    8: {"s8": 711489, "s8p": 2462397, "s8pp": 1750947},
    9: {"s9p": 8768196, "s9pp": 11600304},
    10: {"s10p": 53127900, "s10pp": 30193704},
    11: {"s11p": 206857602, "s11pp": 74823228},
    12: {"s12p": 491985531, "s12pp": 669523221},
    13: {"s13": 2657712312},
    14: {"s14": 5875513812},
    15: {"s15": 12591161406},
}

DEGREE_Y8 = 1_047_361_761


# -- criteria ------------------------------------------------------------


def check_diagram_shape(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    ok = len(d) == 27 and d.rank_sizes() == RANK_SIZES
    return ok, f"27 nodes, rank sizes {d.rank_sizes()}"


def check_degrees(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    got = (d.degree(d.top), d.degree(d.id_of("s4p")),
           d.degree(d.id_of("s4pp")), ctx.spinor.degree(ctx.spinor.top))
    ok = got == (78, 33, 45, 12)
    return ok, f"(total, s4p, s4pp, spinor) degrees = {got}"


def check_pieri(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    bad = []
    for name, want in PIERI_H4.items():
        got = pieri_Hk(d, d.id_of(name), 4)
        if got != _cls(d, want):
            bad.append(name)
    return not bad, (f"mismatches at {bad}" if bad
                     else "all six degree-4 hyperplane products exact")


def check_structure_constants(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    sc = solve_structure_constants(d)
    if sc.gammas != (0, 2, 1):
        return False, f"solver gammas = {sc.gammas}, expected (0, 2, 1)"
    t = ctx.table
    bad = []
    for a, b, want in STRUCTURE_PRODUCTS:
        got = t.get(d.id_of(a), d.id_of(b))
        if got != _cls(d, want):
            bad.append(f"{a}*{b}")
    return not bad, (f"mismatches at {bad}" if bad
                     else "gammas (0, 2, 1); all nineteen products exact")


def check_invariant_expansions(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    inv = elementary_invariants()
    bad = []
    for name, want in INVARIANT_LINES:
        got = expand_invariant(inv[name], d)
        if got != _cls(d, want):
            bad.append(name)
    return not bad, (f"mismatches at {bad}" if bad
                     else "all five fundamental invariants expand exactly")


def check_two_engines(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    t, eng = ctx.table, ctx.engine
    pairs = mismatches = 0
    for u in range(len(d)):
        for v in range(u, len(d)):
            if d.node(u).length + d.node(v).length > d.max_length:
                continue
            pairs += 1
            if t.get(u, v) != eng.multiply(u, v):
                mismatches += 1
    return mismatches == 0, (
        f"{pairs} admissible pairs, {mismatches} engine disagreements")


def check_chern_normal(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    cn = chern_normal(d)
    bad = []
    for k, terms in CHERN_NORMAL.items():
        if cn.classes[k] != _shifted(d, terms):
            bad.append(k)
        if not cn.classes[k].is_integral():
            bad.append(f"integrality c{k}")
    return not bad, (f"mismatches at {bad}" if bad
                     else "all ten normal-bundle Chern lines exact, integral")


def check_chern_projected(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    cp = chern_projected(d)
    bad = []
    for k, terms in CHERN_PROJECTED.items():
        if cp.classes[k] != _shifted(d, terms):
            bad.append(k)
    for k, direct in CHERN_PROJECTED_DIRECT.items():
        if cp.classes[k] != _cls(d, direct):
            bad.append(f"direct form c{k}")
    if cp.classes[10]:
        bad.append("c10 nonzero")
    return not bad, (f"mismatches at {bad}" if bad
                     else "all ten projected Chern lines exact; c10 = 0")


def check_segre(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    sg = segre_projected(d)
    bad = [k for k, want in SEGRE_PROJECTED.items() if sg[k] != _cls(d, want)]
    return not bad, (f"mismatches at {bad}" if bad
                     else "all fifteen Segre classes exact")


def check_degree_y8(ctx: Context, seed: int) -> Tuple[bool, str]:
    got = degree_y8(ctx.diagram)
    return got == DEGREE_Y8, f"degree_y8() = {got}"


def _word_independence(d: WeightDiagram) -> Optional[str]:
    """Every reduced word of a node must define the same coefficient
    functional.

    Complete check by induction on the diagram: the functional vector of a
    chain is built one edge at a time, so if every edge into a node extends
    its parents' (already word-independent) vectors to one and the same
    vector, all maximal chains through that node agree.  This covers every
    reduced-word pair of every node with one transpose step per edge.
    Short words are additionally compared head to head, pairwise.
    """
    vectors = {d.top: {(0, 0, 0, 0, 0, 0): Q(1)}}
    for length in range(1, d.max_length + 1):
        for i in d.by_length[length]:
            results = [functional_step(vectors[p], lab, length)
                       for p, lab in d.node(i).up]
            for r in results[1:]:
                if r != results[0]:
                    return f"edge disagreement at {d.name_of(i)}"
            vectors[i] = results[0]
    for i in range(len(d)):
        if d.node(i).length > 9:
            continue
        words = d.reduced_words(i, cap=101)
        built = [functional_vector(tuple(reversed(w))) for w in words[:101]]
        for r in built[1:]:
            if r != built[0]:
                return f"pairwise disagreement at {d.name_of(i)}"
    return None


def _ideal_invariance(d: WeightDiagram) -> Optional[str]:
    """Adding multiples of the full-Weyl-group quadratic invariant must not
    change any expansion: the coefficient functionals kill the ideal."""
    qw = w_invariant_quadratic()
    h = weight_form(d.rs.fundamental_weights[5])
    inv = elementary_invariants()
    shifts = [qw * h.power(2), qw * inv["e2"], qw * inv["e4"] * h.power(2),
              qw * inv["e5"] * h, qw * inv["e6"], qw * inv["e8"] * h.power(4),
              qw * qw * inv["e4"] * h.power(8)]
    for s in shifts:
        if expand_invariant(s, d):
            return f"ideal element of degree {s.degree()} has nonzero image"
    base = inv["e4"] * inv["e4"]
    shifted = base + qw * inv["e6"]
    if expand_invariant(base, d) != expand_invariant(shifted, d):
        return "representative shift changed an expansion"
    return None


def _associativity(d: WeightDiagram, t: StructureTable) -> Optional[str]:
    triples = 0
    for u in range(len(d)):
        lu = d.node(u).length
        for v in range(u, len(d)):
            lv = d.node(v).length
            if lu + lv > d.max_length:
                continue
            uv = t.get(u, v)
            for w in range(v, len(d)):
                if lu + lv + d.node(w).length > d.max_length:
                    continue
                triples += 1
                left = multiply(uv, ChowClass.basis(w), t)
                right = multiply(ChowClass.basis(u), t.get(v, w), t)
                if left != right:
                    return (f"associativity fails at "
                            f"({d.name_of(u)}, {d.name_of(v)}, {d.name_of(w)})")
    if triples == 0:
        return "no admissible triples found"
    return None


def _random_octonion(rng: random.Random) -> Octonion:
    return Octonion(tuple(Q(rng.randint(-20, 20), rng.randint(1, 12))
                          for _ in range(8)))


def _octonion_suites(seed: int) -> Optional[str]:
    rng = random.Random(seed)
    for n in range(1000):
        a, b = _random_octonion(rng), _random_octonion(rng)
        if q(oct_mul(a, b)) != q(a) * q(b):
            return f"composition law fails at sample {n}"
    for n in range(1000):
        kind = 1 + n % 3
        a, b = _random_octonion(rng), _random_octonion(rng)
        if not rank_one_check(cell_point(kind, a, b)):
            return f"cell point of kind {kind} not rank one at sample {n}"
    return None


def check_property_suites(ctx: Context, seed: int) -> Tuple[bool, str]:
    d = ctx.diagram
    for fail in (_word_independence(d), _ideal_invariance(d),
                 _associativity(d, ctx.table), _octonion_suites(seed)):
        if fail is not None:
            return False, fail
    return True, ("word independence, ideal invariance, associativity, "
                  "composition law, rank-one cells all hold")


CRITERIA: List[Tuple[str, Callable[[Context, int], Tuple[bool, str]]]] = [
    ("diagram shape", check_diagram_shape),
    ("degrees", check_degrees),
    ("hyperplane powers", check_pieri),
    ("structure constants", check_structure_constants),
    ("invariant expansions", check_invariant_expansions),
    ("two-engine agreement", check_two_engines),
    ("normal bundle Chern classes", check_chern_normal),
    ("projected bundle Chern classes", check_chern_projected),
    ("Segre classes", check_segre),
    ("reduction variety degree", check_degree_y8),
    ("property suites", check_property_suites),
]


def run_all(stream=None, seed: int = DEFAULT_SEED,
            ctx: Optional[Context] = None) -> int:
    """Run every criterion, print one line each, return the failure count."""
    if stream is None:
        stream = sys.stdout
    if ctx is None:
        ctx = Context()
    failures = 0
    for n, (title, func) in enumerate(CRITERIA, start=1):
        try:
            ok, detail = func(ctx, seed)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        if not ok:
            failures += 1
        status = "PASS" if ok else "FAIL"
        print(f"{status} criterion {n:2d} ({title}): {detail}", file=stream)
    return failures

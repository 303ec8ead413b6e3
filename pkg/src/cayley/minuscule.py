"""Weight diagram of a minuscule representation and the induced Hasse
diagram of Schubert classes.

The diagram is generated by breadth-first closure from the highest weight:
whenever <w, alpha_i> > 0 we draw an edge labeled i from w down to s_i(w).
Node length = codimension of the Schubert class (0 at the top, 16 at the
bottom for the Cayley plane).  Path counts kappa(u, v) between nodes give
both the Pieri coefficients and, against the bottom node, the degrees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ._rat import Q, as_int
from .lattice import Weight, RootSystemE6, build_e6

__all__ = [
    "DiagramNode",
    "WeightDiagram",
    "build_weight_diagram",
    "build_cayley_diagram",
    "build_spinor_diagram",
    "NotMinusculeError",
]


class NotMinusculeError(ValueError):
    """The closure produced a weight at an inconsistent level."""


@dataclass
class DiagramNode:
    id: int
    weight: Weight
    length: int
    # edges toward larger length, as (neighbor id, simple root label)
    down: List[Tuple[int, int]] = field(default_factory=list)
    # edges toward smaller length
    up: List[Tuple[int, int]] = field(default_factory=list)
    name: str = ""


class WeightDiagram:
    """Immutable-after-build graded diagram with path-count helpers."""

    def __init__(self, rs: RootSystemE6, labels: Sequence[int],
                 nodes: List[DiagramNode]):
        self.rs = rs
        self.labels = tuple(labels)
        self.nodes = nodes
        self.top = 0
        self.bottom = max(range(len(nodes)), key=lambda i: nodes[i].length)
        self.max_length = nodes[self.bottom].length
        self.by_length: Dict[int, List[int]] = {}
        for n in nodes:
            self.by_length.setdefault(n.length, []).append(n.id)
        self._kappa: Dict[int, Dict[int, int]] = {}
        self._dual: Optional[List[int]] = None
        self._by_name: Dict[str, int] = {}

    # -- basic queries ----------------------------------------------------

    def node(self, i: int) -> DiagramNode:
        return self.nodes[i]

    def __len__(self) -> int:
        return len(self.nodes)

    def rank_sizes(self) -> List[int]:
        return [len(self.by_length.get(k, []))
                for k in range(self.max_length + 1)]

    # -- path counts ------------------------------------------------------

    def kappa(self, u: int, v: int) -> int:
        """Number of strictly length-increasing edge paths from u to v."""
        return self._paths_to(v).get(u, 0)

    def _paths_to(self, v: int) -> Dict[int, int]:
        if v not in self._kappa:
            counts = {v: 1}
            lv = self.nodes[v].length
            for length in range(lv - 1, -1, -1):
                for i in self.by_length.get(length, []):
                    counts[i] = sum(counts.get(j, 0)
                                    for j, _ in self.nodes[i].down)
            self._kappa[v] = counts
        return self._kappa[v]

    def degree(self, u: int) -> int:
        return self.kappa(u, self.bottom)

    # -- reduced words ----------------------------------------------------

    def reduced_word(self, i: int) -> Tuple[int, ...]:
        """Labels of one shortest chain from node i to the top (first label =
        edge leaving the node).  Deterministic: smallest neighbor id first."""
        word = []
        cur = i
        while cur != self.top:
            j, lab = min(self.nodes[cur].up)
            word.append(lab)
            cur = j
        return tuple(word)

    def reduced_words(self, i: int, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
        """All shortest chains from node i to the top (optionally capped)."""
        out: List[Tuple[int, ...]] = []

        def walk(cur: int, acc: List[int]):
            if cap is not None and len(out) >= cap:
                return
            if cur == self.top:
                out.append(tuple(acc))
                return
            for j, lab in sorted(self.nodes[cur].up):
                walk(j, acc + [lab])

        walk(i, [])
        return out

    # -- duality ----------------------------------------------------------

    def dual(self, i: int) -> int:
        """Poincare-duality partner: the graded antiautomorphism image."""
        if self._dual is None:
            self._dual = self._build_duality()
        return self._dual[i]

    def _build_duality(self) -> List[int]:
        """Exhaustive search for the graded antiautomorphism: ranks are tiny
        (at most 3 nodes), so trying every rank bijection is cheap.  The
        survivor must be unique and an involution."""
        from itertools import permutations, product

        n = len(self.nodes)
        L = self.max_length
        edges = [(m, j) for m in range(n) for j, _ in self.nodes[m].down]
        half = [self.by_length[k] for k in range(L // 2 + 1)]
        choice_sets = []
        for k, ids in enumerate(half):
            partner = self.by_length[L - k]
            if k == L - k:
                # involutions on the middle rank
                opts = [p for p in permutations(ids)
                        if all(p[ids.index(b)] == a for a, b in zip(ids, p))]
            else:
                opts = list(permutations(partner))
            choice_sets.append(opts)
        found = None
        for combo in product(*choice_sets):
            dual = [-1] * n
            for k, perm in enumerate(combo):
                for a, b in zip(half[k], perm):
                    dual[a] = b
                    dual[b] = a
            if any(x < 0 for x in dual):
                continue
            if any(dual[dual[i]] != i for i in range(n)):
                continue
            ok = all((dual[j], dual[m]) in set(edges) for m, j in edges)
            if ok:
                if found is not None and found != dual:
                    raise RuntimeError("graded antiautomorphism is not unique")
                found = dual
        if found is None:
            raise RuntimeError("no graded antiautomorphism exists")
        return found

    # -- naming -----------------------------------------------------------

    def name_of(self, i: int) -> str:
        return self.nodes[i].name

    def id_of(self, name: str) -> int:
        if not self._by_name:
            self._by_name = {n.name: n.id for n in self.nodes if n.name}
            self._by_name.setdefault("h", self._by_name.get("s1", -1))
        if name not in self._by_name:
            raise KeyError(name)
        return self._by_name[name]

    def names(self) -> List[str]:
        return [n.name for n in self.nodes]


def build_weight_diagram(rs: RootSystemE6, highest: Weight,
                         labels: Sequence[int] = (1, 2, 3, 4, 5, 6)) -> WeightDiagram:
    """Breadth-first closure from the highest weight over the given simple
    reflections.  Raises NotMinusculeError if the closure is not graded."""
    nodes: List[DiagramNode] = [DiagramNode(0, highest, 0)]
    index: Dict[Weight, int] = {highest: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        w = nodes[i].weight
        for lab in labels:
            if w.inner(rs.root(lab)) > 0:
                nw = rs.reflect(lab, w)
                j = index.get(nw)
                if j is None:
                    j = len(nodes)
                    nodes.append(DiagramNode(j, nw, nodes[i].length + 1))
                    index[nw] = j
                    queue.append(j)
                elif nodes[j].length != nodes[i].length + 1:
                    raise NotMinusculeError(
                        f"weight reached at levels {nodes[j].length} and "
                        f"{nodes[i].length + 1}; representation is not minuscule")
                nodes[i].down.append((j, lab))
                nodes[j].up.append((i, lab))
    diagram = WeightDiagram(rs, labels, nodes)
    # grading sanity: height drops by exactly one along every edge
    for n in nodes:
        for j, lab in n.down:
            if rs.height(n.weight) - rs.height(nodes[j].weight) != 1:
                raise NotMinusculeError("edge does not drop height by 1")
    return diagram


def _unique(seq):
    lst = list(seq)
    if len(lst) != 1:
        raise RuntimeError(f"expected a unique element, got {lst}")
    return lst[0]


def _assign_names(d: WeightDiagram) -> None:
    """Canonical class names: s<k> for ranks of size one and for the quadric
    line class at codimension 8; s<k>p / s<k>pp for the primed pairs.

    Anchors: deg s4p = 33, deg s4pp = 45; at codimension 8 the degrees
    2 / 7 / 5 pick out s8 / s8p / s8pp.  The remaining primes follow the
    two chains of the diagram and Poincare duality.
    """
    for k, ids in d.by_length.items():
        if len(ids) == 1:
            d.nodes[ids[0]].name = f"s{k}"

    by_deg = {d.degree(i): i for i in d.by_length[4]}
    s4p, s4pp = by_deg[33], by_deg[45]
    d.nodes[s4p].name, d.nodes[s4pp].name = "s4p", "s4pp"

    by_deg8 = {d.degree(i): i for i in d.by_length[8]}
    s8, s8p, s8pp = by_deg8[2], by_deg8[7], by_deg8[5]
    d.nodes[s8].name, d.nodes[s8p].name = "s8", "s8p"
    d.nodes[s8pp].name = "s8pp"

    covers = lambda i: [j for j, _ in d.nodes[i].down]
    s5p = _unique(covers(s4p))
    s5pp = _unique(set(d.by_length[5]) - {s5p})
    s6pp = _unique(covers(s5pp))
    s6p = _unique(set(d.by_length[6]) - {s6pp})
    s7pp = _unique(covers(s6pp))
    s7p = _unique(set(d.by_length[7]) - {s7pp})
    for i, nm in ((s5p, "s5p"), (s5pp, "s5pp"), (s6p, "s6p"),
                  (s6pp, "s6pp"), (s7p, "s7p"), (s7pp, "s7pp")):
        d.nodes[i].name = nm
    # cross-check against the quadric chain: s8 is covered by s7p only
    ups8 = {j for j, _ in d.nodes[s8].up}
    if ups8 != {s7p}:
        raise RuntimeError("codimension-7/8 chain structure unexpected")

    for k in (4, 5, 6, 7):
        for suffix in ("p", "pp"):
            i = d.id_of(f"s{k}{suffix}")
            d.nodes[d.dual(i)].name = f"s{16 - k}{suffix}"
    for i in d.by_length[8]:
        if d.dual(i) != i:
            raise RuntimeError("codimension-8 classes should be self-dual")
    d._by_name = {}


def build_cayley_diagram(rs: Optional[RootSystemE6] = None) -> WeightDiagram:
    """The 27-node diagram of (E6, omega_6), with class names attached."""
    rs = rs or build_e6()
    d = build_weight_diagram(rs, rs.fundamental_weights[5])
    if len(d) != 27 or d.max_length != 16:
        raise RuntimeError("unexpected Cayley plane diagram shape")
    _assign_names(d)
    return d


def build_spinor_diagram(rs: Optional[RootSystemE6] = None) -> WeightDiagram:
    """The 16-node half-spin diagram of the D5 subsystem alpha_1..alpha_5."""
    rs = rs or build_e6()
    h = Q(1, 2)
    spin = Weight((h, h, h, h, h), 0)
    for j in range(1, 6):
        expected = 1 if j == 5 else 0
        assert spin.inner(rs.root(j)) == expected
    return build_weight_diagram(rs, spin, labels=(1, 2, 3, 4, 5))

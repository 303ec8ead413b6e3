"""Command-line interface.

Every subcommand prints deterministic output: JSON is emitted with sorted
keys, class expansions are listed in a fixed grading order, and DOT node
ids follow the scheme w<length>_<index>.  Exit codes: 0 on success, 1 on
a failed self-check, 2 on an unknown class name, 3 when the two
multiplication engines disagree under --engine both.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import acceptance
from ._rat import Q
from .borel import BorelEngine, expand_invariant
from .bundles import chern_normal, chern_projected, degree_y8, segre_projected
from .chowring import ChowClass, StructureTable
from .jordan import (Octonion, cell_point, infinity_conditions,
                     infinity_point, infinity_rank_conditions, jordan_product,
                     mult_image, oct_mul, q, q_polar, rank_one_check,
                     trace_form)
from .minuscule import (WeightDiagram, build_cayley_diagram,
                        build_spinor_diagram)
from .polynomial import elementary_invariants

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_BAD_NAME = 2
EXIT_DIVERGENCE = 3


def _dot_id(diagram: WeightDiagram, i: int) -> str:
    length = diagram.node(i).length
    return f"w{length}_{diagram.by_length[length].index(i)}"


def _sorted_nodes(diagram: WeightDiagram) -> List[int]:
    out = []
    for length in range(diagram.max_length + 1):
        ids = diagram.by_length[length]
        out.extend(sorted(ids, key=lambda i: diagram.node(i).name
                          or _dot_id(diagram, i)))
    return out


def format_class(diagram: WeightDiagram, cls: ChowClass) -> str:
    """Human-readable expansion like 's8 + 2*s8p' in grading order."""
    out = ""
    for i in _sorted_nodes(diagram):
        c = cls.coeff(i)
        if not c:
            continue
        name = diagram.name_of(i) or _dot_id(diagram, i)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        term = name if mag == 1 else f"{mag}*{name}"
        out += (f"{sign}{term}" if not out else f" {sign} {term}")
        if out.startswith("+"):
            out = out[1:]
    return out if out else "0"


def class_json(diagram: WeightDiagram, cls: ChowClass) -> dict:
    return {diagram.name_of(i): str(cls.coeff(i))
            for i in _sorted_nodes(diagram) if cls.coeff(i)}


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


# -- subcommands ---------------------------------------------------------


def cmd_hasse(args) -> int:
    if args.space == "op2":
        d = build_cayley_diagram()
    else:
        d = build_spinor_diagram()
    order = _sorted_nodes(d)
    if args.format == "dot":
        print(f"digraph hasse_{args.space} {{")
        print("  rankdir=TB;")
        for i in order:
            n = d.node(i)
            label = n.name or _dot_id(d, i)
            print(f'  {_dot_id(d, i)} [label="{label} '
                  f'(l={n.length}, deg={d.degree(i)})"];')
        for i in order:
            for j, lab in sorted(d.node(i).down):
                print(f'  {_dot_id(d, i)} -> {_dot_id(d, j)} '
                      f'[label="{lab}"];')
        print("}")
    elif args.format == "json":
        _emit_json({
            "space": args.space,
            "rank_sizes": d.rank_sizes(),
            "total_degree": d.degree(d.top),
            "nodes": [{
                "id": _dot_id(d, i),
                "name": d.node(i).name,
                "length": d.node(i).length,
                "degree": d.degree(i),
                "covers": [[_dot_id(d, j), lab]
                           for j, lab in sorted(d.node(i).down)],
            } for i in order],
        })
    else:
        for i in order:
            n = d.node(i)
            down = ", ".join(f"{d.node(j).name or _dot_id(d, j)}({lab})"
                             for j, lab in sorted(n.down))
            name = n.name or _dot_id(d, i)
            print(f"{name:>8}  length {n.length:2d}  degree {d.degree(i):3d}"
                  + (f"  -> {down}" if down else ""))
    return EXIT_OK


def cmd_degrees(args) -> int:
    d = build_cayley_diagram()
    for i in _sorted_nodes(d):
        print(f"{d.name_of(i)}: {d.degree(i)}")
    return EXIT_OK


def _resolve(d: WeightDiagram, name: str) -> Optional[int]:
    try:
        return d.id_of(name)
    except KeyError:
        return None


def cmd_multiply(args) -> int:
    d = build_cayley_diagram()
    ids = []
    for name in (args.left, args.right):
        i = _resolve(d, name)
        if i is None:
            valid = ["h"] + [d.name_of(j) for j in _sorted_nodes(d)]
            print(f"unknown class name {name!r}; valid names: "
                  + ", ".join(valid), file=sys.stderr)
            return EXIT_BAD_NAME
        ids.append(i)
    u, v = ids
    results = {}
    if args.engine in ("solver", "both"):
        results["solver"] = StructureTable(d).get(u, v)
    if args.engine in ("borel", "both"):
        results["borel"] = BorelEngine(d.rs, d).multiply(u, v)
    if args.engine == "both" and results["solver"] != results["borel"]:
        print(f"engine divergence on {args.left}*{args.right}:",
              file=sys.stderr)
        for eng, cls in results.items():
            print(f"  {eng}: {format_class(d, cls)}", file=sys.stderr)
        return EXIT_DIVERGENCE
    product = next(iter(results.values()))
    print(format_class(d, product))
    return EXIT_OK


def cmd_table(args) -> int:
    d = build_cayley_diagram()
    t = StructureTable(d)
    out = {}
    for i in _sorted_nodes(d):
        row = {}
        for j in _sorted_nodes(d):
            if d.node(i).length + d.node(j).length > d.max_length:
                continue
            row[d.name_of(j)] = class_json(d, t.get(i, j))
        out[d.name_of(i)] = row
    _emit_json(out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    d = build_cayley_diagram()
    inv = elementary_invariants()
    for name in ("e2", "e4", "e5", "e6", "e8"):
        cls = expand_invariant(inv[name], d)
        print(f"{name} = {format_class(d, cls)}")
    return EXIT_OK


def cmd_chern(args) -> int:
    d = build_cayley_diagram()
    vec = chern_projected(d) if args.projected else chern_normal(d)
    label = "projected normal bundle" if args.projected else "normal bundle"
    print(f"# Chern classes of the {label} (rank {vec.rank})")
    for k, cls in enumerate(vec.classes):
        print(f"c{k} = {format_class(d, cls)}")
    return EXIT_OK


def cmd_segre(args) -> int:
    d = build_cayley_diagram()
    for k, cls in enumerate(segre_projected(d)):
        print(f"s{k} = {format_class(d, cls)}")
    return EXIT_OK


def cmd_deg_y8(args) -> int:
    print(degree_y8(build_cayley_diagram()))
    return EXIT_OK


def _random_octonion(rng: random.Random) -> Octonion:
    return Octonion(tuple(Q(rng.randint(-20, 20), rng.randint(1, 12))
                          for _ in range(8)))


def cmd_jordan_selftest(args) -> int:
    rng = random.Random(args.seed)
    failures = 0

    def report(title: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        if not ok:
            failures += 1
        tail = f": {detail}" if detail else ""
        print(f"{'PASS' if ok else 'FAIL'} {title}{tail}")

    n = args.samples
    ok = all(q(oct_mul(a, b)) == q(a) * q(b)
             for a, b in ((_random_octonion(rng), _random_octonion(rng))
                          for _ in range(n)))
    report("composition law", ok, f"q(ab) = q(a)q(b) on {n} samples")

    ok = True
    for k in range(n):
        a, b = _random_octonion(rng), _random_octonion(rng)
        if not rank_one_check(cell_point(1 + k % 3, a, b)):
            ok = False
            break
    report("rank-one cells", ok, f"three affine charts, {n} samples")

    ok = True
    for _ in range(200):
        x = cell_point(1, _random_octonion(rng), _random_octonion(rng))
        y = cell_point(2, _random_octonion(rng), _random_octonion(rng))
        z = cell_point(3, _random_octonion(rng), _random_octonion(rng))
        if jordan_product(x, y) != jordan_product(y, x):
            ok = False
            break
        if trace_form(jordan_product(x, y), z) != \
                trace_form(x, jordan_product(y, z)):
            ok = False
            break
    report("Jordan product", ok,
           "commutativity and trace-form associativity, 200 samples")

    z = Octonion.basis(0) + Octonion.basis(4)  # null: q = 1 - 1 = 0
    basis = mult_image(z)
    iso = all(not q(v) for v in basis) and all(
        not q_polar(a, b) for i, a in enumerate(basis)
        for b in basis[i + 1:])
    report("null multiplication kernel", len(basis) == 4 and iso,
           "image is 4-dimensional and totally isotropic")

    # the two condition sets for the cells at infinity: the derived set
    # must match rank-one membership; the displayed set is reported as-is
    agree = flagged = 0
    for _ in range(200):
        ker = mult_image(z)
        triple = (sum((v.scale(rng.randint(-3, 3)) for v in ker),
                      Octonion.zero()),
                  _random_octonion(rng).scale(rng.randint(0, 1)),
                  sum((v.scale(rng.randint(-3, 3)) for v in ker),
                      Octonion.zero()))
        derived = infinity_rank_conditions(*triple)
        printed = infinity_conditions(*triple)
        if derived == rank_one_check(infinity_point(*triple)):
            agree += 1
        if derived != printed:
            flagged += 1
    report("infinity chart conditions", agree == 200,
           f"derived conditions match rank one on 200 samples; "
           f"displayed condition set disagrees on {flagged} "
           f"(known index-swap inconsistency, flagged not fixed)")

    return EXIT_OK if failures == 0 else EXIT_SELFTEST


def cmd_selftest(args) -> int:
    failures = acceptance.run_all(seed=args.seed)
    if failures:
        print(f"{failures} criterion(s) failed", file=sys.stderr)
        return EXIT_SELFTEST
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cayley",
        description="Exact Schubert calculus on the Cayley plane.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hasse", help="print a weight diagram")
    s.add_argument("--space", choices=("op2", "s10"), default="op2")
    s.add_argument("--format", choices=("dot", "json", "text"),
                   default="text")
    s.set_defaults(func=cmd_hasse)

    s = sub.add_parser("degrees", help="degrees of all 27 Schubert classes")
    s.set_defaults(func=cmd_degrees)

    s = sub.add_parser("multiply", help="product of two Schubert classes")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--engine", choices=("solver", "borel", "both"),
                   default="solver")
    s.set_defaults(func=cmd_multiply)

    s = sub.add_parser("table", help="full multiplication table as JSON")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("invariants",
                       help="Schubert expansions of the fundamental "
                            "Weyl-invariant polynomials")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("chern", help="Chern classes of the normal bundle")
    s.add_argument("--projected", action="store_true",
                   help="rank-9 bundle of the projected variety")
    s.set_defaults(func=cmd_chern)

    s = sub.add_parser("segre",
                       help="Segre classes of the projected normal bundle")
    s.set_defaults(func=cmd_segre)

    s = sub.add_parser("deg-y8",
                       help="degree of the variety of reductions")
    s.set_defaults(func=cmd_deg_y8)

    s = sub.add_parser("jordan-selftest",
                       help="octonion and Jordan-algebra property suites")
    s.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    s.add_argument("--samples", type=int, default=1000)
    s.set_defaults(func=cmd_jordan_selftest)

    s = sub.add_parser("selftest", help="full acceptance suite")
    s.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    s.set_defaults(func=cmd_selftest)

    return p


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

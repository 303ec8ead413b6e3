"""Exact Schubert calculus on the Cayley plane.

The package computes the Chow ring of the 16-dimensional Cayley plane,
the closed orbit of rank-one elements in the projectivized exceptional
Jordan algebra, with two independent engines:

* a combinatorial engine that solves for the structure constants from
  path counts on the 27-node minuscule weight diagram, and
* a polynomial engine that multiplies Weyl-invariant representatives and
  expands them through divided differences.

On top of the ring it computes Chern and Segre classes of the normal
bundle of the embedding and, from those, the degree 1 047 361 761 of
the 24-dimensional variety of reductions.  A small exact octonion and
Jordan-algebra layer backs the rank-one geometry.  All arithmetic is
exact rational.
"""

from ._rat import Q, as_int, is_integer
from .lattice import Weight, RootSystemE6, build_e6
from .minuscule import (DiagramNode, WeightDiagram, NotMinusculeError,
                        build_weight_diagram, build_cayley_diagram,
                        build_spinor_diagram)
from .chowring import (ChowClass, pieri_Hk, pieri_class, schubert_degree,
                       StructureConstants, solve_structure_constants,
                       generator_decomposition, StructureTable, multiply,
                       pairing)
from .polynomial import Poly, weight_form, elementary_invariants
from .borel import (reflect_poly, divided_diff, divided_diff_word,
                    is_w0_invariant, w_invariant_quadratic,
                    CoefficientFunctionals, expand_invariant, BorelEngine)
from .bundles import (ChernVector, chern_normal, chern_projected,
                      segre_projected, degree_y8)
from .jordan import (Octonion, oct_mul, oct_conj, q, q_polar, JordanMatrix,
                     jordan_product, trace_form, rank_one_check, cell_point,
                     infinity_point, infinity_conditions,
                     infinity_rank_conditions, mult_image, Hermitian2,
                     nu2, nu2_tangent_basis, det_form, det_polarization)

__version__ = "1.0.0"

__all__ = [
    "Q", "as_int", "is_integer",
    "Weight", "RootSystemE6", "build_e6",
    "DiagramNode", "WeightDiagram", "NotMinusculeError",
    "build_weight_diagram", "build_cayley_diagram", "build_spinor_diagram",
    "ChowClass", "pieri_Hk", "pieri_class", "schubert_degree",
    "StructureConstants", "solve_structure_constants",
    "generator_decomposition", "StructureTable", "multiply", "pairing",
    "Poly", "weight_form", "elementary_invariants",
    "reflect_poly", "divided_diff", "divided_diff_word", "is_w0_invariant",
    "w_invariant_quadratic", "CoefficientFunctionals", "expand_invariant",
    "BorelEngine",
    "ChernVector", "chern_normal", "chern_projected", "segre_projected",
    "degree_y8",
    "Octonion", "oct_mul", "oct_conj", "q", "q_polar", "JordanMatrix",
    "jordan_product", "trace_form", "rank_one_check", "cell_point",
    "infinity_point", "infinity_conditions", "infinity_rank_conditions",
    "mult_image", "Hermitian2", "nu2", "nu2_tangent_basis", "det_form",
    "det_polarization",
]

"""Exact-arithmetic toolkit for split-associativity algebra structures.

The package is organised by subject: ``linalg`` (rationals, matrices,
order-3 tensors), ``core`` (the algebra type, axiom checkers, derived
operations and projections), ``bimodules``, ``operators`` (O-operators
and Rota-Baxter operators with their induced structures), ``yangbaxter``
(the tensor equations, lifts and canonical double solutions), ``forms``
(bilinear-form classification and the tensor-form bridge), ``catalog``
(verified examples and seeded generators), ``bundle`` (the JSON format)
and ``cli``.
"""

from .core import (ClusterAlgebra, Level, Report, Violation, check_axioms,
                   derived_op, mult_operator, opposite, opposite_check,
                   project, zero_algebra)
from .bimodules import (Bimodule, check_bimodule, dual_bimodule,
                        regular_bimodule, restrict_bimodule, semidirect_sum)
from .operators import (InterMap, compatible_from_invertible, induce_on_module,
                        is_o_operator, is_rota_baxter, rb_finer,
                        rb_pair_quadri, rb_triple_octo)
from .yangbaxter import (Tensor2, canonical_double_solution, check_aybe,
                         check_d_equation, check_o_equation,
                         check_q_dual_forms, check_q_equation, double_product,
                         induce_dual_product, lift_o_operator, slot_product)
from .forms import (BilinearForm, bridge_equivalence, classify_form,
                    finer_from_form, form_to_tensor, tensor_to_form)
from .linalg import Matrix, Rational, Singular, Tensor3, permute_tensor3

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""The rank-2 engine: normal-ordered algebra arithmetic, Verma modules and
invariant forms, irreducible quotients, unitarity verdicts, and the
truncated tensor product."""

from .algebra import (SO5, SO23, AlgebraElement, StraighteningError,
                      engine_for, normal_order, root_vectors)
from .verma import (DeformedWeight, VermaModule, gram_det, gram_det_ord,
                    shapovalov_det_formula, verify_det)
from .irreps import (IrrepReport, irrep_character, physical_rep,
                     singular_vectors, sweep_module, unitarity_so5)
from .tensor import (PhysModule, TensorProduct, is_physical_label,
                     truncated_chain, truncated_tensor_so23)

__all__ = [
    "SO5", "SO23", "AlgebraElement", "StraighteningError", "engine_for",
    "normal_order", "root_vectors", "DeformedWeight", "VermaModule",
    "gram_det", "gram_det_ord", "shapovalov_det_formula", "verify_det",
    "IrrepReport", "irrep_character", "physical_rep", "singular_vectors",
    "sweep_module", "unitarity_so5", "PhysModule", "TensorProduct",
    "is_physical_label", "truncated_chain", "truncated_tensor_so23",
]

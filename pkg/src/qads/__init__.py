"""qads: exact workbench for unitary representations of quantum Anti-de
Sitter groups at roots of unity.

Everything is computed in exact arithmetic over cyclotomic fields; no
floating point enters any decision.  See README.md for a tour.
"""

from .cyclo import (CycloField, CycloNumber, DegenerateParameterError,
                    QParams, hermitian_signature, qbinom, qfactorial, qint,
                    sign_of_real)
from .b2 import (RootDatum, Weight, AffineReflection, classify_weight,
                 one_dim_weights, par_count, reflect, shift_by_omega,
                 strongly_linked)
from . import uqsl2
from . import uqso5

__all__ = [
    "CycloField", "CycloNumber", "DegenerateParameterError", "QParams",
    "hermitian_signature", "qbinom", "qfactorial", "qint", "sign_of_real",
    "RootDatum", "Weight", "AffineReflection", "classify_weight",
    "one_dim_weights", "par_count", "reflect", "shift_by_omega",
    "strongly_linked", "uqsl2", "uqso5",
]

__version__ = "0.1.0"

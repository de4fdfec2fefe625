"""Computational algebra for semiring pairs: carriers with a distinguished
quasi-zero layer and tangible monoid, their congruences, polynomials,
fractions, extensions and growth invariants."""

__version__ = "0.1.0"

from .errors import (AxiomReport, BoundExhausted, PairAlgError,
                     PreconditionError, StructureError,
                     UnsupportedStructureError, Verdict)
from .semirings import (FiniteSemiring, SymbolicSemiring, boolean_semiring,
                        double, nmax_trunc, supertropical_extension,
                        supertropical_integers, supertropical_naturals)
from .pairs import SemiringPair, is_shallow, property_n_status, verify_admissible

__all__ = [
    "AxiomReport", "BoundExhausted", "FiniteSemiring", "PairAlgError",
    "PreconditionError", "SemiringPair", "StructureError", "SymbolicSemiring",
    "UnsupportedStructureError", "Verdict", "boolean_semiring", "double",
    "is_shallow", "nmax_trunc", "property_n_status",
    "supertropical_extension", "supertropical_integers",
    "supertropical_naturals", "verify_admissible",
]

"""Mutually unbiased bases in dimension 6.

Analytic MUB-triplet construction, numerical search for vectors unbiased
to (Id, F(a,b)), and an interval-certified exhaustive search showing that
no such pair extends to a MUB quartet.
"""

from .core import (
    PhaseVector,
    EquivalenceOp,
    apply_equivalence,
    dephase,
    haagerup_invariant,
    inner_product,
    is_complex_hadamard,
    is_orthonormal_basis,
    is_unbiased,
)
from .fourier import FourierParams, build_F, in_fundamental_domain

__version__ = "0.1.0"

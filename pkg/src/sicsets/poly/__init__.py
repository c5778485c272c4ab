"""Exact polynomial arithmetic used by the classification."""

from .multipoly import (
    InexactDivision,
    MultiPoly,
    ParseError,
    VariableMismatch,
    from_text,
    lcm_denominator,
    poly_ring,
    to_text,
)
from .resultant import bareiss_determinant, resultant, sylvester_matrix
from .symmetric import (
    NotSymmetric,
    divided_difference,
    elementary_symmetric,
    expand_symmetric,
    is_symmetric,
    symmetric_reduce,
)
from .univariate import (
    RootFindingError,
    SturmChain,
    UniRealPoly,
    isolate_roots,
    real_roots,
    refine_root,
    sturm_chain,
    sturm_count,
)

__all__ = [
    "InexactDivision", "MultiPoly", "ParseError", "VariableMismatch", "from_text",
    "lcm_denominator", "poly_ring", "to_text", "bareiss_determinant", "resultant",
    "sylvester_matrix", "NotSymmetric", "divided_difference", "elementary_symmetric",
    "expand_symmetric", "is_symmetric", "symmetric_reduce", "RootFindingError",
    "SturmChain", "UniRealPoly", "isolate_roots", "real_roots", "refine_root",
    "sturm_chain", "sturm_count",
]

"""Exact combinatorics of segments, Jacquet modules and the Hopf algebra R.

Representations of GL(n) over a p-adic division algebra are modeled only
through their classes: segments of cuspidal points label the essentially
square-integrable delta's, multisegments label standard products, and the
comultiplication m* records Jacquet modules.
"""
from .core import (
    EMPTY,
    ArityError,
    ConfigError,
    CuspidalLine,
    CuspidalPoint,
    CuspSum,
    JacquetError,
    LineMismatch,
    MalformedSegment,
    Multisegment,
    NotASegment,
    PreconditionError,
    RElem,
    Segment,
    TensorElem,
    dual,
    is_unitary,
    segment_from_endpoints,
    segment_parts,
    supp,
    twist,
)
from .criteria import (
    CasselmanVerdict,
    NoOrderingError,
    casselman,
    linked,
    ordering_for_extraction,
    satisfies_indexing,
)
from .hopf import (
    FilterSpec,
    comult_iterate,
    cuspidal_jacquet,
    filter,
    iterated_jacquet,
    mstar,
    mstar_bottom,
    mstar_segment,
    product,
)
from .structure import (
    PairDecision,
    SIClassification,
    classify_square_integrable,
    decide_pair,
    langlands_class,
    tempered_product_class,
    zelevinsky_class,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "ArityError",
    "ConfigError",
    "CuspidalLine",
    "CuspidalPoint",
    "CuspSum",
    "JacquetError",
    "LineMismatch",
    "MalformedSegment",
    "Multisegment",
    "NotASegment",
    "PreconditionError",
    "RElem",
    "Segment",
    "TensorElem",
    "dual",
    "is_unitary",
    "segment_from_endpoints",
    "segment_parts",
    "supp",
    "twist",
    "CasselmanVerdict",
    "NoOrderingError",
    "casselman",
    "linked",
    "ordering_for_extraction",
    "satisfies_indexing",
    "FilterSpec",
    "comult_iterate",
    "cuspidal_jacquet",
    "filter",
    "iterated_jacquet",
    "mstar",
    "mstar_bottom",
    "mstar_segment",
    "product",
    "PairDecision",
    "SIClassification",
    "classify_square_integrable",
    "decide_pair",
    "langlands_class",
    "tempered_product_class",
    "zelevinsky_class",
]

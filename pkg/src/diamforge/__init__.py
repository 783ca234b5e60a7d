"""Maximum-diameter triangle complexes and Hamilton-square packings.

The core codec turns (labels, layout) pairs into triangle walks; generating
sequences build the long circular walks; the assembly layer cuts and extends
them into diameter-optimal complexes for every vertex count; hampack
partitions complete graphs into squares of Hamilton cycles; the oracle
brute-forces tiny orders as independent ground truth.
"""

from .core import (
    Certificate,
    LabelsLayout,
    TriangleSeq,
    certify,
    dual_diameter,
    encode_triples,
    expand_pair,
    hs_max_diameter,
    is_good,
)
from .assembly import construct_optimal, small_table
from .genseq import (
    GeneratingSequence,
    gs_full,
    gs_missing_12,
    gs_missing_1248,
    verify_generating_sequence,
)
from .hampack import (
    SEQUENCES_105,
    cycles_from_sequences,
    decompose_prime,
    verify_partition,
)
from .oracle import SearchResult, search_max_diameter

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "GeneratingSequence",
    "LabelsLayout",
    "SearchResult",
    "SEQUENCES_105",
    "TriangleSeq",
    "certify",
    "construct_optimal",
    "cycles_from_sequences",
    "decompose_prime",
    "dual_diameter",
    "encode_triples",
    "expand_pair",
    "gs_full",
    "gs_missing_12",
    "gs_missing_1248",
    "hs_max_diameter",
    "is_good",
    "search_max_diameter",
    "small_table",
    "verify_generating_sequence",
    "verify_partition",
    "__version__",
]

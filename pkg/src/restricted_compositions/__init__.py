"""Compositions with restricted parts.

Bijections, closed counting formulas and generating functions for
compositions whose parts obey congruence or size restrictions, all checked
against exhaustive enumeration.
"""

from .core import (
    BinarySequence,
    Composition,
    DescentSet,
    PartitionInBox,
    composition_from_descents,
    descent_set,
    from_binary,
    is_gap_free,
    opposite,
    partitions_in_box,
    to_binary,
)
from .enumeration import Kind, RestrictionSpec, count, count_with_distinguished_part, generate, total_parts
from .errors import (
    CompositionError,
    EmptyCompositionError,
    MalformedInputError,
    ParameterError,
    PreconditionError,
)

__version__ = "0.1.0"

__all__ = [
    "BinarySequence",
    "Composition",
    "DescentSet",
    "PartitionInBox",
    "composition_from_descents",
    "descent_set",
    "from_binary",
    "is_gap_free",
    "opposite",
    "partitions_in_box",
    "to_binary",
    "Kind",
    "RestrictionSpec",
    "count",
    "count_with_distinguished_part",
    "generate",
    "total_parts",
    "CompositionError",
    "EmptyCompositionError",
    "MalformedInputError",
    "ParameterError",
    "PreconditionError",
]

"""Triangle dissections of a based polygon, their ear statistics, and the
Catalan identities those statistics refine.

All counts are exact Python integers.
"""

from catalan_ears.exactmath import ExactDivisionError, binomial, catalan, exact_div, pow2
from catalan_ears.structures import (
    BinaryTree,
    Dissection,
    DyckPath,
    InvalidStructureError,
    OrderedTree,
    ParseError,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryTree",
    "Dissection",
    "DyckPath",
    "ExactDivisionError",
    "InvalidStructureError",
    "OrderedTree",
    "ParseError",
    "binomial",
    "catalan",
    "exact_div",
    "pow2",
]

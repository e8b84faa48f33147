"""Canonical longest single-arm-gapped palindromes (SAGPs).

A SAGP is a substring w g u rev(u) rev(w) with non-empty w, g, u; its
pivot is the center of the inner palindrome u rev(u).  This package
computes, for every pivot, all canonical longest SAGPs (longest arm
|w|+|u|, then longest |u|) through several interchangeable backends, and
checks them against a brute-force oracle.
"""

from .core import (
    AugmentedText,
    PivotType,
    Sagp,
    SagpReport,
    Text,
    canonical_key,
    canonical_order,
    validate_sagp,
)
from .oracle import brute_force_findr, brute_force_pals, brute_force_sagps
from .pipeline import BACKEND_CHOICES, Prepared, find_sagps
from .verify import verify_text

__all__ = [
    "AugmentedText",
    "BACKEND_CHOICES",
    "PivotType",
    "Prepared",
    "Sagp",
    "SagpReport",
    "Text",
    "brute_force_findr",
    "brute_force_pals",
    "brute_force_sagps",
    "canonical_key",
    "canonical_order",
    "find_sagps",
    "validate_sagp",
    "verify_text",
]

__version__ = "0.1.0"

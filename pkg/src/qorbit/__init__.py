"""Exact computation of the modular group action on Q*(sqrt n)."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AmbiguityBranchError,
    DomainError,
    MembershipError,
    NonClosureError,
    NonTerminationError,
    PrimitivityError,
    QorbitError,
)
from .quadirr import QuadIrr, make  # noqa: E402
from .group import GMatrix, GWord, Letter, apply_letter, apply_word, matrix_of, reduce_to_ambiguous, word_of  # noqa: E402
from .orbits import enumerate_ambiguous, fixing_word, orbit_decomposition, orbit_of  # noqa: E402
from .residues import enumerate_classes, partition_ACsets, predicted_subset_count, subset_label  # noqa: E402

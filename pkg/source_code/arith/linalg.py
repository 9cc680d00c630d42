"""
Exact Linear Algebra Module

This module provides exact ranks of sparse Gaussian-rational vectors.
"""

import logging
from typing import Dict, Hashable, List, Mapping, Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .scalar import Scalar

logger = logging.getLogger(__name__)

SparseVector = Mapping[Hashable, Scalar]


def exact_rank(rows: Sequence[SparseVector]) -> int:
    """
    Rank of a list of sparse vectors over the Gaussian rationals.

    Columns are indexed by first appearance, so the result does not depend
    on any ordering of the keys.

    Args:
        rows: Sparse vectors, each a map index -> scalar

    Returns:
        int: The exact rank
    """
    columns: Dict[Hashable, int] = {}
    entries: Dict[int, Dict[int, Scalar]] = {}
    for row_index, row in enumerate(rows):
        packed = {}
        for key, value in row.items():
            if not value:
                continue
            column = columns.setdefault(key, len(columns))
            packed[column] = value
        if packed:
            entries[row_index] = packed

    if not entries:
        return 0
    matrix = DomainMatrix(entries, (len(rows), len(columns)), QQ_I)
    rank = matrix.rank()
    logger.debug(f"Rank of {len(rows)} x {len(columns)} sparse matrix: {rank}")
    return rank


def in_span(basis: Sequence[SparseVector], vector: SparseVector) -> bool:
    """
    Check whether a vector lies in the span of the given vectors.

    Args:
        basis: Spanning vectors
        vector: Candidate vector

    Returns:
        bool: True if adding the vector does not raise the rank
    """
    if not any(vector.values()):
        return True
    return exact_rank(list(basis) + [vector]) == exact_rank(basis)


def independent_rows(rows: Sequence[SparseVector]) -> List[int]:
    """
    Indices of a greedy basis: each row is kept when it raises the rank of
    the rows kept before it.

    Args:
        rows: Sparse vectors in the order they should be tried

    Returns:
        list: Indices of the kept rows, increasing
    """
    kept: List[int] = []
    for index, row in enumerate(rows):
        if not any(row.values()):
            continue
        if exact_rank([rows[i] for i in kept] + [row]) > len(kept):
            kept.append(index)
    return kept

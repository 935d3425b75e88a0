"""Exact distance-based indexes and spanning-tree counting.

No floating point is used anywhere in this package: distances, Wiener
indexes, polynomial coefficients, and tree counts are Python integers or
:class:`fractions.Fraction` values, so every comparison is exact.
"""

from cgtportal.indexes.distances import DistanceMatrix, all_pairs_bfs, all_pairs_floyd_warshall
from cgtportal.indexes.wiener import HosoyaWienerPolynomial, hosoya_wiener, wiener
from cgtportal.indexes.odd_sequence import (
    ODD_WIENER_REFERENCE,
    SequenceCheck,
    VerificationReport,
    odd_wiener_deutsch,
    odd_wiener_mathar,
    verify_a136328,
)
from cgtportal.indexes.spanning import TreeClass, spanning_tree_census, spanning_tree_count

__all__ = [
    "DistanceMatrix",
    "HosoyaWienerPolynomial",
    "ODD_WIENER_REFERENCE",
    "SequenceCheck",
    "TreeClass",
    "VerificationReport",
    "all_pairs_bfs",
    "all_pairs_floyd_warshall",
    "hosoya_wiener",
    "odd_wiener_deutsch",
    "odd_wiener_mathar",
    "spanning_tree_census",
    "spanning_tree_count",
    "verify_a136328",
    "wiener",
]

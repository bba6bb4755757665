"""Per-column sorted-suffix permutations built by a right-to-left radix sort.

Column ``j`` of the table is the permutation pi_j ordering the strings by
their suffixes starting at column ``j``; ties between equal suffixes resolve
to ascending string index because every counting-sort pass is stable and the
sweep is seeded with the identity.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .collection import StringCollection
from .errors import IndexOutOfRangeError


@dataclass(frozen=True)
class ColumnCounts:
    """Symbol frequencies of one collection column and their exclusive prefix sums."""

    freq: np.ndarray = field(compare=False)
    c_array: np.ndarray = field(compare=False)


@dataclass(frozen=True)
class PermutationTable:
    """The (length+1, n) table of permutations; row ``j`` is pi_j, row ``length`` the identity."""

    table: np.ndarray = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.table.shape[1]

    @property
    def length(self) -> int:
        return self.table.shape[0] - 1

    def column(self, j: int) -> np.ndarray:
        if not 0 <= j <= self.length:
            raise IndexOutOfRangeError(f"column {j} not in [0, {self.length}]")
        return self.table[j]


def build_permutations(collection: StringCollection) -> PermutationTable:
    """Radix-sort the collection right to left, keeping every intermediate column."""
    seed = np.arange(collection.n, dtype=np.int32)
    table = _kernels.radix_sweep(collection.codes, seed, collection.alphabet.sigma)
    return PermutationTable(table=table)


def rebuild_column(collection: StringCollection, start: np.ndarray, j_start: int, j_target: int) -> np.ndarray:
    """Recompute pi_{j_target} from a known pi_{j_start}, j_target <= j_start.

    Runs the same counting-sort recurrence over the column span and discards
    the intermediate columns.
    """
    if j_target == j_start:
        return start
    span = collection.codes[:, j_target:j_start]
    table = _kernels.radix_sweep(span, np.asarray(start, dtype=np.int32), collection.alphabet.sigma)
    return table[0]


def counts_for_column(codes_column: np.ndarray, sigma: int) -> ColumnCounts:
    freq = np.bincount(codes_column, minlength=sigma).astype(np.int64)
    c_array = np.zeros(sigma, dtype=np.int64)
    np.cumsum(freq[:-1], out=c_array[1:])
    return ColumnCounts(freq=freq, c_array=c_array)


def column_counts(collection: StringCollection, j: int) -> ColumnCounts:
    """Counts over the multiset of column-``j`` characters of the collection."""
    if not 0 <= j < collection.length:
        raise IndexOutOfRangeError(f"column {j} not in [0, {collection.length})")
    return counts_for_column(collection.codes[:, j], collection.alphabet.sigma)

"""The PBWT matrix with per-column counts and rank tables, and the backward step.

Column ``j`` of the matrix lists the column-``j`` characters of the strings
reordered by pi_{j+1}, i.e. by the lexicographic rank of the suffix that
follows each character.  With the per-column C-array and a rank table, the
match interval for a pattern extended one character to the left costs two
rank queries.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .alphabet import Alphabet
from .collection import StringCollection
from .errors import IndexOutOfRangeError
from .permutations import ColumnCounts, PermutationTable, counts_for_column

BLOCK = 64


@dataclass(frozen=True)
class Interval:
    """Inclusive pair (f, l) of lexicographic ranks; f > l is normalized to the empty value."""

    f: int
    l: int

    def __post_init__(self):
        if self.f > self.l:
            object.__setattr__(self, "f", 0)
            object.__setattr__(self, "l", -1)

    @property
    def is_empty(self) -> bool:
        return self.l < self.f

    @property
    def width(self) -> int:
        return 0 if self.is_empty else self.l - self.f + 1


EMPTY = Interval(0, -1)


class RankTable:
    """occ(a, i) = occurrences of symbol rank ``a`` among the first ``i`` characters.

    The default representation is an exact (sigma, n+1) prefix-count table
    with O(1) queries.  ``blocked=True`` keeps one checkpoint row per 64
    characters and scans inside the block, trading query time for space.
    """

    def __init__(self, codes: np.ndarray, sigma: int, blocked: bool = False, _occ: np.ndarray | None = None):
        self._codes = codes
        self.sigma = sigma
        self.n = codes.shape[0]
        self.blocked = blocked
        if blocked:
            n_blocks = self.n // BLOCK + 1
            chk = np.zeros((sigma, n_blocks), np.int32)
            for b in range(1, n_blocks):
                seg = codes[(b - 1) * BLOCK : b * BLOCK]
                chk[:, b] = chk[:, b - 1] + np.bincount(seg, minlength=sigma).astype(np.int32)
            self._chk = chk
            self._occ = None
        else:
            if _occ is None:
                _occ = _kernels.occ_tables(codes[None, :], sigma)[0]
            self._occ = _occ
            self._chk = None

    def rank(self, a: int, i: int) -> int:
        """Exact occurrence count of symbol ``a`` in the first ``i`` characters."""
        if not 0 <= a < self.sigma:
            raise IndexOutOfRangeError(f"symbol rank {a} not in [0, {self.sigma})")
        if not 0 <= i <= self.n:
            raise IndexOutOfRangeError(f"prefix length {i} not in [0, {self.n}]")
        if self._occ is not None:
            return int(self._occ[a, i])
        b = i // BLOCK
        base = int(self._chk[a, b])
        if i % BLOCK:
            base += int(np.count_nonzero(self._codes[b * BLOCK : i] == a))
        return base


def rank_query(table: RankTable, a: int, i: int) -> int:
    """Module-level spelling of :meth:`RankTable.rank`."""
    return table.rank(a, i)


@dataclass(frozen=True)
class PbwtMatrix:
    """PBWT columns as a (length, n) rank-code matrix plus per-column counts and rank tables."""

    cols: np.ndarray = field(repr=False, compare=False)
    c_arrays: np.ndarray = field(repr=False, compare=False)
    freqs: np.ndarray = field(repr=False, compare=False)
    ranks: list = field(repr=False, compare=False)
    alphabet: Alphabet = field(compare=False)
    occ: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def length(self) -> int:
        return self.cols.shape[0]

    @property
    def n(self) -> int:
        return self.cols.shape[1]

    def column_string(self, j: int) -> str:
        if not 0 <= j < self.length:
            raise IndexOutOfRangeError(f"column {j} not in [0, {self.length})")
        return self.alphabet.decode(self.cols[j])

    def counts(self, j: int) -> ColumnCounts:
        if not 0 <= j < self.length:
            raise IndexOutOfRangeError(f"column {j} not in [0, {self.length})")
        return ColumnCounts(freq=self.freqs[j], c_array=self.c_arrays[j])


def matrix_from_codes(codes: np.ndarray, perm_table: np.ndarray, sigma: int, alphabet: Alphabet,
                      blocked: bool = False) -> PbwtMatrix:
    """Assemble the PBWT from a code matrix and its full permutation table."""
    width = codes.shape[1]
    cols = codes[perm_table[1:], np.arange(width, dtype=np.intp)[:, None]]
    cols = np.ascontiguousarray(cols, dtype=np.uint8)
    freqs = np.empty((width, sigma), np.int64)
    c_arrays = np.zeros((width, sigma), np.int64)
    for j in range(width):
        cc = counts_for_column(codes[:, j], sigma)
        freqs[j] = cc.freq
        c_arrays[j] = cc.c_array
    if blocked:
        occ = None
        ranks = [RankTable(cols[j], sigma, blocked=True) for j in range(width)]
    else:
        occ = _kernels.occ_tables(cols, sigma)
        ranks = [RankTable(cols[j], sigma, _occ=occ[j]) for j in range(width)]
    return PbwtMatrix(cols=cols, c_arrays=c_arrays, freqs=freqs, ranks=ranks,
                      alphabet=alphabet, occ=occ)


def build_pbwt(collection: StringCollection, perms: PermutationTable, blocked: bool = False) -> PbwtMatrix:
    """Materialize the PBWT of a collection from its permutation table."""
    return matrix_from_codes(collection.codes, perms.table, collection.alphabet.sigma,
                             collection.alphabet, blocked=blocked)


def backward_step(matrix: PbwtMatrix, j: int, interval: Interval, c: str) -> Interval:
    """Extend the matched pattern one character to the left.

    ``interval`` holds ranks in pi_{j+1} order; the result holds ranks in
    pi_j order for patterns starting with ``c`` at column ``j``.  An empty
    input is absorbing, so search loops can run unconditionally.
    """
    a = matrix.alphabet.rank(c)
    if not 0 <= j < matrix.length:
        raise IndexOutOfRangeError(f"column {j} not in [0, {matrix.length})")
    if interval.is_empty:
        return EMPTY
    base = int(matrix.c_arrays[j, a])
    table = matrix.ranks[j]
    f = base + table.rank(a, interval.f)
    l = base + table.rank(a, interval.l + 1) - 1
    return Interval(f, l)

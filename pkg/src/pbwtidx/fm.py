"""BWT of a single string via the cyclic-shift PBWT, plus FM-index count/locate.

Appending a sentinel below every symbol makes all cyclic shifts distinct, and
the PBWT of the set of shifts then has a single distinct column: the BWT.
Substring search becomes prefix search over that one column, and locate uses
suffix-array samples taken at regularly spaced text positions (sampling
diagonals of the unsorted shift matrix), so every backward walk ends within
one stride.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .alphabet import Alphabet
from .errors import EmptyInputError, IndexOutOfRangeError, UnknownCharacterError
from .pbwt import EMPTY, Interval, RankTable


@dataclass(frozen=True)
class SentinelText:
    """A text over the alphabet plus its sentinel-terminated form."""

    text: str
    alphabet: Alphabet

    def __post_init__(self):
        if not self.text:
            raise EmptyInputError("text is empty")
        if self.alphabet.sentinel in self.text:
            raise UnknownCharacterError(
                f"text must not contain the sentinel {self.alphabet.sentinel!r}"
            )
        self.alphabet.encode(self.text)

    @property
    def terminated(self) -> str:
        return self.text + self.alphabet.sentinel

    @property
    def n(self) -> int:
        return len(self.text)


def _ext_encode(st: SentinelText) -> np.ndarray:
    """Rank codes of the terminated text with the sentinel at rank 0, symbols shifted up."""
    codes = st.alphabet.encode(st.text).astype(np.uint8) + 1
    return np.concatenate([codes, np.zeros(1, np.uint8)])


def sorted_rotations(st: SentinelText) -> list[int]:
    """Start positions of the cyclic shifts of the terminated text, in lexicographic order.

    Plain comparison sort over materialized rotations; the radix-based
    cyclic-shift PBWT in :func:`verify_column_collapse` is the independent
    cross-check of this construction.
    """
    term = st.terminated
    doubled = term + term
    size = len(term)
    return sorted(range(size), key=lambda p: doubled[p : p + size])


def bwt_build(st: SentinelText) -> str:
    """The character cyclically preceding each sorted shift, read top to bottom."""
    term = st.terminated
    size = len(term)
    return "".join(term[(p - 1) % size] for p in sorted_rotations(st))


def verify_column_collapse(st: SentinelText) -> bool:
    """Check that every column of the cyclic-shift PBWT equals the BWT.

    The shifts are sorted with two radix sweeps: the first, seeded with the
    identity, yields the full cyclic order at column 0; the second, seeded
    with that order, breaks every truncated-suffix tie by the wrapped-around
    context, which is what makes the columns collapse.
    """
    ext = _ext_encode(st)
    size = ext.shape[0]
    sigma = st.alphabet.sigma + 1
    rot = ext[(np.arange(size)[:, None] + np.arange(size)[None, :]) % size]
    rot = np.ascontiguousarray(rot, dtype=np.uint8)
    first = _kernels.radix_sweep(rot, np.arange(size, dtype=np.int32), sigma)
    second = _kernels.radix_sweep(rot, first[0], sigma)
    cols = rot[second[1:], np.arange(size, dtype=np.intp)[:, None]]
    expected = np.array([0 if c == st.alphabet.sentinel else st.alphabet.rank(c) + 1
                         for c in bwt_build(st)], dtype=np.uint8)
    return bool(np.all(cols == expected[None, :]))


@dataclass(frozen=True)
class FmIndex:
    """BWT string, global C-array, rank table, and diagonal suffix-array samples."""

    text: str
    alphabet: Alphabet
    bwt: str
    bwt_codes: np.ndarray = field(repr=False, compare=False)
    c_array: np.ndarray = field(repr=False, compare=False)
    rank_table: RankTable = field(repr=False, compare=False)
    sa_samples: dict[int, int] = field(repr=False, compare=False)
    sampled_pos: np.ndarray = field(repr=False, compare=False)
    stride: int = 1

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def rows(self) -> int:
        return len(self.bwt)


def _assemble(text: str, alphabet: Alphabet, bwt: str, samples: dict[int, int], stride: int) -> FmIndex:
    bwt_codes = np.array([0 if c == alphabet.sentinel else alphabet.rank(c) + 1 for c in bwt],
                         dtype=np.uint8)
    sigma = alphabet.sigma + 1
    freq = np.bincount(bwt_codes, minlength=sigma).astype(np.int64)
    c_array = np.zeros(sigma, dtype=np.int64)
    np.cumsum(freq[:-1], out=c_array[1:])
    rank_table = RankTable(bwt_codes, sigma)
    sampled_pos = np.full(len(bwt), -1, dtype=np.int64)
    for row, pos in samples.items():
        sampled_pos[row] = pos
    return FmIndex(text=text, alphabet=alphabet, bwt=bwt, bwt_codes=bwt_codes,
                   c_array=c_array, rank_table=rank_table, sa_samples=dict(samples),
                   sampled_pos=sampled_pos, stride=stride)


def fm_build(st: SentinelText, stride: int = 1) -> FmIndex:
    """Index the text for substring search, sampling text positions p with p % stride == 0."""
    if stride < 1:
        raise ValueError("stride must be >= 1")
    order = sorted_rotations(st)
    bwt = "".join(st.terminated[(p - 1) % len(st.terminated)] for p in order)
    samples = {row: p for row, p in enumerate(order) if p % stride == 0}
    return _assemble(st.text, st.alphabet, bwt, samples, stride)


def lf_step(index: FmIndex, row: int) -> int:
    """Row of the cyclic shift one position earlier in the text (the LF mapping)."""
    if not 0 <= row < index.rows:
        raise IndexOutOfRangeError(f"row {row} not in [0, {index.rows})")
    a = int(index.bwt_codes[row])
    return int(index.c_array[a]) + index.rank_table.rank(a, row)


def _ext_rank(index: FmIndex, c: str) -> int:
    if c == index.alphabet.sentinel:
        raise UnknownCharacterError("patterns must not contain the sentinel")
    return index.alphabet.rank(c) + 1


def count_trace(index: FmIndex, pattern: str) -> list[tuple[int, Interval]]:
    """Backward-search trace: (characters consumed, interval) per step, widest first."""
    interval = Interval(0, index.rows - 1)
    trace = [(0, interval)]
    for step, c in enumerate(reversed(pattern), start=1):
        a = _ext_rank(index, c)
        if interval.is_empty:
            trace.append((step, EMPTY))
            continue
        base = int(index.c_array[a])
        f = base + index.rank_table.rank(a, interval.f)
        l = base + index.rank_table.rank(a, interval.l + 1) - 1
        interval = Interval(f, l)
        trace.append((step, interval))
    return trace


def fm_count(index: FmIndex, pattern: str) -> Interval:
    """BWT-row interval of sorted shifts prefixed by ``pattern`` (equivalently, suffixes)."""
    return count_trace(index, pattern)[-1][1]


def locate_with_steps(index: FmIndex, interval: Interval) -> tuple[list[int], list[int]]:
    """Text positions for an interval, plus the number of LF steps each walk took."""
    if interval.is_empty:
        return [], []
    rows = np.arange(interval.f, interval.l + 1, dtype=np.int64)
    occ = index.rank_table._occ
    pos, steps = _kernels.lf_walk(rows, index.bwt_codes, index.c_array, occ, index.sampled_pos)
    return [int(p) for p in pos], [int(d) for d in steps]


def fm_locate(index: FmIndex, interval: Interval) -> list[int]:
    """Starting positions of the occurrences in the interval, in row order."""
    return locate_with_steps(index, interval)[0]

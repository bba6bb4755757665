"""On-disk index format: magic "PBWTIDX1", little-endian fixed-width integers.

Layout (common header, then one payload per mode):

    magic           8 bytes  b"PBWTIDX1"
    mode            u8       1 = positional, 2 = substring
    alphabet        u16 size + symbol bytes + 1 sentinel byte

    positional payload:
        n, length           u32, u32
        policy              u8 (0 full, 1 sampled, 2 none) + u32 stride (0 when unused)
        rank representation u8 (0 exact tables, 1 blocked)
        collection codes    n*length bytes
        stored permutations u32 count, then per column: u32 index + n i32
        pbwt columns        length*n bytes
        column counts       length*sigma i64 freqs + length*sigma i64 C-arrays
        rank tables         length*sigma*(n+1) i32 (exact mode only)

    substring payload:
        n (text), stride    u32, u32
        text                n bytes
        bwt                 n+1 bytes
        global C-array      (sigma+1) i64
        rank table          (sigma+1)*(n+2) i32
        sa samples          u32 count, then per sample: u32 row + u32 position

The source strings/text travel with the index because binary and rebuild
searches compare suffixes directly and ``--verify`` reruns the brute-force
oracle against them.
"""

import struct

import numpy as np

from .alphabet import Alphabet
from .collection import StringCollection
from .errors import PbwtIndexError
from .fm import FmIndex, _assemble
from .pbwt import PbwtMatrix, RankTable
from .positional import PositionalIndex, StoragePolicy

MAGIC = b"PBWTIDX1"
MODE_POSITIONAL = 1
MODE_SUBSTRING = 2

_POLICY_TAGS = {"full": 0, "sampled": 1, "none": 2}
_POLICY_NAMES = {v: k for k, v in _POLICY_TAGS.items()}


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.at = 0

    def take(self, count: int) -> bytes:
        if self.at + count > len(self.data):
            raise PbwtIndexError("index file is truncated")
        chunk = self.data[self.at : self.at + count]
        self.at += count
        return chunk

    def unpack(self, fmt: str):
        return struct.unpack("<" + fmt, self.take(struct.calcsize("<" + fmt)))

    def array(self, dtype, shape) -> np.ndarray:
        count = int(np.prod(shape)) if shape else 1
        raw = self.take(count * np.dtype(dtype).itemsize)
        return np.frombuffer(raw, dtype=dtype).reshape(shape).copy()


def _pack_arr(arr: np.ndarray, dtype) -> bytes:
    return np.ascontiguousarray(arr, dtype=dtype).tobytes()


def to_bytes(index) -> bytes:
    if isinstance(index, PositionalIndex):
        return _positional_bytes(index)
    if isinstance(index, FmIndex):
        return _substring_bytes(index)
    raise TypeError(f"cannot serialize {type(index).__name__}")


def _header(mode: int, alphabet: Alphabet) -> bytes:
    symbols = alphabet.symbols.encode("ascii")
    return (MAGIC + struct.pack("<B", mode)
            + struct.pack("<H", len(symbols)) + symbols
            + alphabet.sentinel.encode("ascii"))


def _positional_bytes(index: PositionalIndex) -> bytes:
    col = index.collection
    mat = index.matrix
    policy = index.policy
    blocked = mat.occ is None
    parts = [_header(MODE_POSITIONAL, col.alphabet)]
    parts.append(struct.pack("<IIBI", col.n, col.length,
                             _POLICY_TAGS[policy.kind], policy.stride or 0))
    parts.append(struct.pack("<B", 1 if blocked else 0))
    parts.append(_pack_arr(col.codes, np.uint8))
    parts.append(struct.pack("<I", len(index.stored_perms)))
    for j in sorted(index.stored_perms):
        parts.append(struct.pack("<I", j))
        parts.append(_pack_arr(index.stored_perms[j], np.int32))
    parts.append(_pack_arr(mat.cols, np.uint8))
    parts.append(_pack_arr(mat.freqs, np.int64))
    parts.append(_pack_arr(mat.c_arrays, np.int64))
    if not blocked:
        parts.append(_pack_arr(mat.occ, np.int32))
    return b"".join(parts)


def _substring_bytes(index: FmIndex) -> bytes:
    parts = [_header(MODE_SUBSTRING, index.alphabet)]
    parts.append(struct.pack("<II", index.n, index.stride))
    parts.append(index.text.encode("ascii"))
    parts.append(index.bwt.encode("ascii"))
    parts.append(_pack_arr(index.c_array, np.int64))
    parts.append(_pack_arr(index.rank_table._occ, np.int32))
    parts.append(struct.pack("<I", len(index.sa_samples)))
    for row in sorted(index.sa_samples):
        parts.append(struct.pack("<II", row, index.sa_samples[row]))
    return b"".join(parts)


def from_bytes(data: bytes):
    r = _Reader(data)
    if r.take(len(MAGIC)) != MAGIC:
        raise PbwtIndexError("not a pbwtidx index file (bad magic)")
    (mode,) = r.unpack("B")
    (sym_count,) = r.unpack("H")
    symbols = r.take(sym_count).decode("ascii")
    sentinel = r.take(1).decode("ascii")
    alphabet = Alphabet(symbols=symbols, sentinel=sentinel)
    if mode == MODE_POSITIONAL:
        return _read_positional(r, alphabet)
    if mode == MODE_SUBSTRING:
        return _read_substring(r, alphabet)
    raise PbwtIndexError(f"unknown index mode tag {mode}")


def _read_positional(r: _Reader, alphabet: Alphabet) -> PositionalIndex:
    n, length, policy_tag, stride = r.unpack("IIBI")
    (blocked,) = r.unpack("B")
    codes = r.array(np.uint8, (n, length))
    strings = tuple(alphabet.decode(codes[i]) for i in range(n))
    collection = StringCollection(strings=strings, alphabet=alphabet, codes=codes)
    (perm_count,) = r.unpack("I")
    stored = {}
    for _ in range(perm_count):
        (j,) = r.unpack("I")
        stored[j] = r.array(np.int32, (n,))
    cols = r.array(np.uint8, (length, n))
    freqs = r.array(np.int64, (length, alphabet.sigma))
    c_arrays = r.array(np.int64, (length, alphabet.sigma))
    if blocked:
        occ = None
        ranks = [RankTable(cols[j], alphabet.sigma, blocked=True) for j in range(length)]
    else:
        occ = r.array(np.int32, (length, alphabet.sigma, n + 1))
        ranks = [RankTable(cols[j], alphabet.sigma, _occ=occ[j]) for j in range(length)]
    matrix = PbwtMatrix(cols=cols, c_arrays=c_arrays, freqs=freqs, ranks=ranks,
                        alphabet=alphabet, occ=occ)
    policy = StoragePolicy(_POLICY_NAMES[policy_tag], stride or None)
    return PositionalIndex(collection=collection, matrix=matrix, policy=policy,
                           stored_perms=stored)


def _read_substring(r: _Reader, alphabet: Alphabet) -> FmIndex:
    n, stride = r.unpack("II")
    text = r.take(n).decode("ascii")
    bwt = r.take(n + 1).decode("ascii")
    r.array(np.int64, (alphabet.sigma + 1,))          # C-array, rebuilt by _assemble
    r.array(np.int32, (alphabet.sigma + 1, n + 2))    # rank table, likewise
    (sample_count,) = r.unpack("I")
    samples = {}
    for _ in range(sample_count):
        row, pos = r.unpack("II")
        samples[row] = pos
    return _assemble(text, alphabet, bwt, samples, stride)


def save_index(index, path: str) -> int:
    """Write the index to ``path``; returns the number of bytes written."""
    blob = to_bytes(index)
    with open(path, "wb") as fh:
        fh.write(blob)
    return len(blob)


def load_index(path: str):
    """Read an index written by :func:`save_index`."""
    with open(path, "rb") as fh:
        return from_bytes(fh.read())

"""The input string collection: parsing, validation, suffix access."""

from dataclasses import dataclass, field

import numpy as np

from .alphabet import Alphabet
from .errors import EmptyInputError, IndexOutOfRangeError, RaggedCollectionError, UnknownCharacterError


@dataclass(frozen=True)
class StringCollection:
    """``n`` equal-length strings over a shared alphabet.

    ``codes`` holds the same data as a dense (n, length) rank matrix; all
    index construction works on it, while queries that compare suffixes use
    the original strings.
    """

    strings: tuple[str, ...]
    alphabet: Alphabet
    codes: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        if not self.strings:
            raise EmptyInputError("collection has no strings")

    @property
    def n(self) -> int:
        return len(self.strings)

    @property
    def length(self) -> int:
        return len(self.strings[0])


def from_strings(strings, alphabet: Alphabet | None = None) -> StringCollection:
    """Build a validated collection from an in-memory sequence of strings."""
    alphabet = alphabet or Alphabet()
    strings = tuple(strings)
    if not strings:
        raise EmptyInputError("collection has no strings")
    width = len(strings[0])
    if width == 0:
        raise EmptyInputError("strings must be non-empty")
    rows = []
    for lineno, s in enumerate(strings, start=1):
        if len(s) != width:
            raise RaggedCollectionError(
                f"line {lineno}: length {len(s)} differs from length {width} of line 1"
            )
        try:
            rows.append(alphabet.encode(s))
        except UnknownCharacterError as exc:
            raise UnknownCharacterError(f"line {lineno}: {exc}") from None
    codes = np.vstack(rows)
    return StringCollection(strings=strings, alphabet=alphabet, codes=codes)


def parse_collection(text: str | bytes, alphabet: Alphabet | None = None) -> StringCollection:
    """Parse newline-delimited strings, one per non-empty line."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise UnknownCharacterError(f"input is not ASCII text: {exc}") from None
    lines = [line for line in text.splitlines() if line]
    if not lines:
        raise EmptyInputError("no input strings")
    return from_strings(lines, alphabet)


def serialize_collection(collection: StringCollection) -> str:
    """Inverse of :func:`parse_collection`, with a single trailing newline."""
    return "\n".join(collection.strings) + "\n"


def suffix(collection: StringCollection, i: int, j: int) -> str:
    """Return ``S_i[j..]``; the empty string when ``j`` equals the length."""
    if not 0 <= i < collection.n:
        raise IndexOutOfRangeError(f"string index {i} not in [0, {collection.n})")
    if not 0 <= j <= collection.length:
        raise IndexOutOfRangeError(f"column {j} not in [0, {collection.length}]")
    return collection.strings[i][j:]

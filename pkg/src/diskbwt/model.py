"""Alphabet, validated string collection and the suffix ordering conventions.

Everything here is immutable after construction and safe to share across
threads; the comparison helpers are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import EmptyInput, UnequalLength, UnknownSymbol

SENTINEL = 0  # symbol code reserved for the end-of-string marker


class Alphabet:
    """Ordered alphabet of 1..255 letters plus a sentinel that sorts first.

    Symbol codes are stable: the sentinel maps to 0 and the i-th letter
    (1-based, in declared order) maps to i.  Letters must be declared in
    strictly increasing character order so that code order and character
    order agree.
    """

    def __init__(self, letters: str | Sequence[str] = "ACGT", sentinel: str = "$"):
        letters = "".join(letters)
        if not 1 <= len(letters) <= 255:
            raise ValueError("alphabet needs between 1 and 255 letters")
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet letters must be distinct")
        if len(sentinel) != 1:
            raise ValueError("sentinel must be a single character")
        if sentinel in letters:
            raise ValueError("sentinel may not appear among the letters")
        if list(letters) != sorted(letters):
            raise ValueError("letters must be declared in increasing order")
        self.letters = letters
        self.sentinel = sentinel
        self._chars = sentinel + letters
        self._codes = {ch: i + 1 for i, ch in enumerate(letters)}

    @property
    def size(self) -> int:
        """Number of letters, excluding the sentinel."""
        return len(self.letters)

    def encode(self, ch: str) -> int:
        try:
            return self._codes[ch]
        except KeyError:
            raise UnknownSymbol(f"character {ch!r} is not in the alphabet") from None

    def encode_string(self, text: str) -> bytes:
        codes = self._codes
        try:
            return bytes(codes[ch] for ch in text)
        except KeyError as exc:
            raise UnknownSymbol(f"character {exc.args[0]!r} is not in the alphabet") from None

    def decode(self, code: int) -> str:
        return self._chars[code]

    def decode_all(self, codes: Iterable[int]) -> str:
        chars = self._chars
        return "".join(chars[c] for c in codes)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Alphabet)
            and self.letters == other.letters
            and self.sentinel == other.sentinel
        )

    def __repr__(self) -> str:
        return f"Alphabet({self.letters!r}, sentinel={self.sentinel!r})"


class StringCollection:
    """A validated set of m strings of k symbol codes each.

    String indices are 1-based and fixed at ingest; identical suffixes of
    different strings are tie-broken by the smaller string index, which is
    the implicit ordering of the per-string sentinels.
    """

    def __init__(self, strings: Sequence[bytes], alphabet: Alphabet):
        if not strings:
            raise EmptyInput("no input strings")
        k = len(strings[0])
        if k == 0:
            raise EmptyInput("strings must hold at least one symbol")
        for pos, s in enumerate(strings, start=1):
            if len(s) != k:
                raise UnequalLength(f"string {pos}: length {len(s)} != {k}")
            if SENTINEL in s:
                raise UnknownSymbol(f"string {pos}: sentinel code inside a string")
        self.strings: tuple[bytes, ...] = tuple(bytes(s) for s in strings)
        self.alphabet = alphabet
        self.m = len(strings)
        self.k = k

    def string(self, index: int) -> bytes:
        """Symbol codes of the 1-based string `index`."""
        return self.strings[index - 1]

    def suffix_letters(self, ref: "SuffixRef") -> bytes:
        """The non-sentinel symbols of the referenced suffix."""
        s = self.strings[ref.string_index - 1]
        return s[self.k - ref.length:]

    def __repr__(self) -> str:
        return f"StringCollection(m={self.m}, k={self.k})"


class SuffixRef(NamedTuple):
    """A suffix identified by its string (1..m) and its length (0..k).

    Length 0 denotes the bare sentinel suffix.
    """

    string_index: int
    length: int


@dataclass
class OutputBundle:
    """Final outputs of a build: BWT symbols, LCP values and run counters."""

    bwt: list[int]
    lcp: list[int]
    iterations: int
    io_stats: dict = field(default_factory=dict)

    def bwt_text(self, alphabet: Alphabet) -> str:
        return alphabet.decode_all(self.bwt)


def validate_collection(raw_strings: Sequence[str], alphabet: Alphabet) -> StringCollection:
    """Encode and validate input lines; reject any violation rather than repair it."""
    if not raw_strings:
        raise EmptyInput("no input strings")
    k = len(raw_strings[0])
    if k == 0:
        raise EmptyInput("string 1 is empty")
    encoded = []
    for pos, line in enumerate(raw_strings, start=1):
        if len(line) != k:
            raise UnequalLength(f"string {pos}: length {len(line)} != {k}")
        try:
            encoded.append(alphabet.encode_string(line))
        except UnknownSymbol as exc:
            raise UnknownSymbol(f"string {pos}: {exc}") from None
    return StringCollection(encoded, alphabet)


def compare_suffixes(a: SuffixRef, b: SuffixRef, prefix_depth: int, coll: StringCollection) -> int:
    """Three-key suffix comparison: prefix of `prefix_depth` symbols, then
    suffix length, then string index.

    Prefixes are compared with sentinel padding once a suffix is exhausted,
    so a shorter suffix whose symbols all match sorts first.  Returns -1, 0
    or 1; 0 only when `a` and `b` reference the same suffix.
    """
    if a == b:
        return 0
    k = coll.k
    sa = coll.strings[a.string_index - 1]
    sb = coll.strings[b.string_index - 1]
    la, lb = a.length, b.length
    oa, ob = k - la, k - lb
    for t in range(prefix_depth):
        ca = sa[oa + t] if t < la else SENTINEL
        cb = sb[ob + t] if t < lb else SENTINEL
        if ca != cb:
            return -1 if ca < cb else 1
    if la != lb:
        return -1 if la < lb else 1
    return -1 if a.string_index < b.string_index else 1

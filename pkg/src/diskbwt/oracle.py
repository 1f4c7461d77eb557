"""In-memory brute-force reference for BWT, LCP and the interleave encoding.

This module is the ground truth for tests and for `--verify` runs.  It sorts
every suffix with the explicit three-key comparator and derives everything
else directly from the sorted list, sharing nothing with the streaming
pipeline beyond the core types.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cmp_to_key

from .errors import TooLargeForOracle
from .model import SENTINEL, StringCollection, SuffixRef, compare_suffixes

POSITION_GUARD = 10 ** 6  # max (k+1)*m positions the oracle will attempt


@dataclass(frozen=True)
class OracleResult:
    sa: list[SuffixRef]          # suffixes in full lexicographic order
    bwt: list[int]               # symbol preceding each sorted suffix
    lcp: list[int]               # lcp[0] = -1 by convention
    encoding: list[int]          # suffix length of each sorted suffix
    partial_b: list[list[int]]   # per length l: preceding symbols of sorted l-suffixes
    longest_repeat: int          # longest substring occurring at least twice


def preceding_symbol(coll: StringCollection, ref: SuffixRef) -> int:
    """Symbol just before the suffix; sentinel when the suffix is the whole string."""
    if ref.length == coll.k:
        return SENTINEL
    return coll.strings[ref.string_index - 1][coll.k - ref.length - 1]


def lcp_of(coll: StringCollection, a: SuffixRef, b: SuffixRef) -> int:
    """Length of the longest common prefix of two suffixes.

    Sentinels of distinct strings never match, so only leading letters count.
    """
    sa = coll.suffix_letters(a)
    sb = coll.suffix_letters(b)
    n = min(len(sa), len(sb))
    for t in range(n):
        if sa[t] != sb[t]:
            return t
    return n


def longest_repeated_substring(coll: StringCollection) -> int:
    """Brute-force length of the longest substring with >= 2 occurrences.

    Enumerates the substring multiset one length at a time, longest first,
    so the answer is the first length at which any substring repeats.
    Occurrences may overlap and may come from duplicate strings.
    """
    k = coll.k
    for length in range(k, 0, -1):
        counts: Counter = Counter()
        for s in coll.strings:
            for i in range(k - length + 1):
                counts[s[i:i + length]] += 1
        if any(n >= 2 for n in counts.values()):
            return length
    return 0


def oracle_all(coll: StringCollection) -> OracleResult:
    """Sort all (k+1)*m suffixes and derive SA, BWT, LCP, encoding, columns, L."""
    m, k = coll.m, coll.k
    total = (k + 1) * m
    if total > POSITION_GUARD:
        raise TooLargeForOracle(f"{total} positions exceed the {POSITION_GUARD} guard")
    refs = [SuffixRef(j, l) for j in range(1, m + 1) for l in range(k + 1)]
    full_depth = k + 1
    refs.sort(key=cmp_to_key(lambda a, b: compare_suffixes(a, b, full_depth, coll)))

    bwt = [preceding_symbol(coll, ref) for ref in refs]
    lcp = [-1] + [lcp_of(coll, refs[i - 1], refs[i]) for i in range(1, total)]
    encoding = [ref.length for ref in refs]
    partial_b = [[] for _ in range(k + 1)]
    for ref, sym in zip(refs, bwt):
        partial_b[ref.length].append(sym)
    return OracleResult(
        sa=refs,
        bwt=bwt,
        lcp=lcp,
        encoding=encoding,
        partial_b=partial_b,
        longest_repeat=longest_repeated_substring(coll),
    )

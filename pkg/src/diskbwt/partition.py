"""Phase 1: per-length partial BWT columns via streaming radix passes.

Each pass l reorders the string indices so they follow the sorted order of
the length-l suffixes, then writes the column of symbols preceding those
suffixes.  Only the single column of input symbols needed by the current
pass is held in RAM; every other array streams through files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LengthMismatch, MissingColumn, RankOverflow
from .extseq import BucketSet, ElementKind, ExtSequence, Workspace, concat_buckets
from .model import SENTINEL, StringCollection

PHASE = "partition"


@dataclass
class ColumnMatrix:
    """The k+1 input columns, one file each.

    Column l holds, for every string, the symbol preceding its length-l
    suffix; column k is all sentinels so that the final pass needs no
    special case.
    """

    m: int
    k: int
    columns: list[ExtSequence]

    def load(self, l: int) -> bytes:
        """Read column l fully into memory (m symbols)."""
        return bytes(self.columns[l].stream(PHASE))


@dataclass
class PartialBwtColumns:
    """Finalized per-length BWT columns B_0 .. B_k, m symbols each."""

    m: int
    k: int
    columns: list[ExtSequence]

    def column(self, l: int) -> ExtSequence:
        if not 0 <= l <= self.k:
            raise MissingColumn(f"no column for suffix length {l}")
        return self.columns[l]


def build_columns(coll: StringCollection, ws: Workspace) -> ColumnMatrix:
    """Single pass over the input writing all k+1 column files S_l.bin."""
    m, k = coll.m, coll.k
    writers = [ws.writer(f"S_{l}.bin", ElementKind.SYMBOL, PHASE) for l in range(k + 1)]
    for s in coll.strings:
        for l in range(k):
            writers[l].append(s[k - l - 1])
        writers[k].append(SENTINEL)
    return ColumnMatrix(m, k, [w.finalize() for w in writers])


def project(n_prev: ExtSequence, b_prev: ExtSequence, buckets: BucketSet) -> BucketSet:
    """Route each string index to the bucket of its preceding symbol.

    The coordinated scan keeps the relative order inside every bucket, which
    is what makes the pass a stable radix step.
    """
    if n_prev.length != b_prev.length:
        raise LengthMismatch(
            f"{n_prev.path.name} has {n_prev.length} entries, "
            f"{b_prev.path.name} has {b_prev.length}")
    n_it, b_it = n_prev.stream(PHASE), b_prev.stream(PHASE)
    for idx, sym in zip(n_it, b_it):
        buckets.append(sym, idx)
    n_it.close()
    b_it.close()
    return buckets.finalize()


def _check_permutation(seq: ExtSequence, m: int) -> None:
    seen = sorted(seq.stream(PHASE))
    if seen != list(range(1, m + 1)):
        raise RankOverflow(f"{seq.path.name} is not a permutation of 1..{m}")


def partition_suffixes(coll: StringCollection, cm: ColumnMatrix, ws: Workspace,
                       verify: bool = False) -> PartialBwtColumns:
    """Run the k radix passes and produce B_0.bin .. B_k.bin.

    With verify=True every index permutation is checked to contain each
    string exactly once before the corresponding column is written.
    """
    m, k = coll.m, coll.k
    sigma = coll.alphabet.size

    col = cm.load(0)
    b_cur = ws.writer("B_0.bin", ElementKind.SYMBOL, PHASE)
    for sym in col:
        b_cur.append(sym)
    b_cur.finalize()
    n_cur = ws.writer("N_0.bin", ElementKind.INDEX, PHASE)
    for j in range(1, m + 1):
        n_cur.append(j)
    n_cur.finalize()
    if ws.rolling:
        cm.columns[0].delete()

    out_columns = [b_cur]
    for l in range(1, k + 1):
        buckets = BucketSet(ws, ElementKind.INDEX, f"Nbkt_{l}", PHASE, sigma + 1)
        project(n_cur, b_cur, buckets)
        n_next = concat_buckets(buckets, ws.writer(f"N_{l}.bin", ElementKind.INDEX, PHASE))
        buckets.delete()
        if verify:
            _check_permutation(n_next, m)

        col = cm.load(l)
        b_next = ws.writer(f"B_{l}.bin", ElementKind.SYMBOL, PHASE)
        for idx in n_next.stream(PHASE):
            b_next.append(col[idx - 1])
        b_next.finalize()

        if ws.rolling:
            n_cur.delete()
            cm.columns[l].delete()
        n_cur, b_cur = n_next, b_next
        out_columns.append(b_next)

    if ws.rolling:
        n_cur.delete()
    return PartialBwtColumns(m, k, out_columns)

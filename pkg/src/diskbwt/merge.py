"""Phase 2: refine the interleave encoding and the LCP column pass by pass.

The encoding starts as m zeros, m ones, ... m k's (suffixes grouped by
length) and is refined by bucketing each run of positions that still share a
common prefix on the next symbol of their suffixes.  A companion bit file
marks where those runs end, and the LCP column is filled in exactly where a
run splits.  The loop stops once every run has width 1; a hard cap of k+1
passes guarantees termination even when the input contains duplicate
strings.

Everything streams: the only mandatory in-memory structure is the array of
k+1 occurrence counters used to walk the per-length successor columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import LengthMismatch, MissingColumn, RankOverflow
from .extseq import (BucketSet, ElementKind, ExtSequence, SpillList, Workspace,
                     concat_buckets)
from .model import SENTINEL, StringCollection
from .partition import PartialBwtColumns

PHASE = "merge"


@dataclass
class MergeState:
    """Outputs of one refinement pass, everything finalized on disk.

    `successors` maps each still-active suffix length to the column of the
    symbols those suffixes contribute at the next pass; shorter suffixes are
    exhausted and implicitly contribute the sentinel.
    """

    p: int
    encoding: ExtSequence               # suffix-length labels, (k+1)*m entries
    ends: ExtSequence                   # bit per position: 1 = end of a run
    lcp: ExtSequence                    # partial LCP values
    successors: dict[int, ExtSequence] = field(default_factory=dict)
    converged: bool = False
    widest: int = 0
    m: int = 0
    k: int = 0
    sigma: int = 0

    def files(self) -> list[ExtSequence]:
        return [self.encoding, self.ends, self.lcp, *self.successors.values()]


def _counting_sorted(column: ExtSequence, sigma: int, out: ExtSequence) -> ExtSequence:
    """Stable counting sort of a symbol column (values only, so trivially stable)."""
    counts = [0] * (sigma + 1)
    for sym in column.stream(PHASE):
        counts[sym] += 1
    for code, n in enumerate(counts):
        for _ in range(n):
            out.append(code)
    return out.finalize()


def init_merge_state(coll: StringCollection, columns: PartialBwtColumns,
                     ws: Workspace) -> MergeState:
    """Pass-0 state: length-grouped encoding, one all-covering run, zero LCP."""
    m, k = coll.m, coll.k
    if columns.m != m or columns.k != k:
        raise MissingColumn(
            f"columns are for m={columns.m}, k={columns.k}, input is m={m}, k={k}")
    sigma = coll.alphabet.size
    total = (k + 1) * m

    enc = ws.writer("I_0.bin", ElementKind.INDEX, PHASE)
    for label in range(k + 1):
        for _ in range(m):
            enc.append(label)
    enc.finalize()

    ends = ws.writer("E_0.bin", ElementKind.BIT, PHASE)
    for _ in range(total - 1):
        ends.append(0)
    ends.append(1)
    ends.finalize()

    lcp = ws.writer("LCP_0.bin", ElementKind.LCPVAL, PHASE)
    for _ in range(total):
        lcp.append(0)
    lcp.finalize()

    # first symbols of the sorted l-suffixes = the sorted preceding column
    successors = {}
    for l in range(1, k + 1):
        out = ws.writer(f"Q_1_{l}.bin", ElementKind.SYMBOL, PHASE)
        successors[l] = _counting_sorted(columns.column(l - 1), sigma, out)

    return MergeState(p=0, encoding=enc, ends=ends, lcp=lcp, successors=successors,
                      converged=False, widest=total, m=m, k=k, sigma=sigma)


def advance_successor_columns(columns: PartialBwtColumns, sigma: int,
                              prev: dict[int, ExtSequence], depth: int,
                              ws: Workspace) -> dict[int, ExtSequence]:
    """Columns of the `depth`-th suffix symbols from the (depth-1)-th ones.

    For each still-active length l the previous column for length l-1 is
    rebucketed by the symbols preceding the (l-1)-suffixes; concatenating the
    buckets in symbol order lines the values up with the sorted l-suffixes.
    Lengths below `depth` are exhausted and get no column.
    """
    if depth < 2:
        raise ValueError("advance_successor_columns starts at depth 2")
    out: dict[int, ExtSequence] = {}
    for l in range(depth, columns.k + 1):
        src = prev.get(l - 1)
        if src is None:
            raise MissingColumn(f"missing successor column for length {l - 1}")
        b_prev = columns.column(l - 1)
        if src.length != b_prev.length:
            raise LengthMismatch(
                f"{src.path.name} has {src.length} entries, "
                f"{b_prev.path.name} has {b_prev.length}")
        buckets = BucketSet(ws, ElementKind.SYMBOL, f"Qbkt_{depth}_{l}", PHASE, sigma + 1)
        b_it, src_it = b_prev.stream(PHASE), src.stream(PHASE)
        for sym, value in zip(b_it, src_it):
            buckets.append(sym, value)
        b_it.close()
        src_it.close()
        buckets.finalize()
        out[l] = concat_buckets(
            buckets, ws.writer(f"Q_{depth}_{l}.bin", ElementKind.SYMBOL, PHASE))
        buckets.delete()
    return out


def merge_iteration(state: MergeState, columns: PartialBwtColumns,
                    ws: Workspace) -> MergeState:
    """One refinement pass: split every run of the previous pass on the next symbol.

    A single coordinated scan reads the previous encoding, run-end bits and
    LCP values while k+1 occurrence counters track how far each successor
    column has been consumed.  Inside a run, each label goes to the bucket of
    its suffix's next symbol (sentinel once exhausted).  Flushing the buckets
    in symbol order emits the refined encoding; sentinel entries each close a
    width-1 run, every non-empty letter bucket closes one run, and LCP
    becomes the pass number everywhere a letter bucket continues.
    """
    p = state.p + 1
    m, k, sigma = state.m, state.k, state.sigma
    total = (k + 1) * m

    enc_in = state.encoding.stream(PHASE)
    ends_in = state.ends.stream(PHASE)
    lcp_in = state.lcp.stream(PHASE)
    succ: list[Iterator[int] | None] = [None] * (k + 1)
    for label, seq in state.successors.items():
        if seq.length != m:
            raise LengthMismatch(f"{seq.path.name} has {seq.length} entries, expected {m}")
        succ[label] = seq.stream(PHASE)

    enc_out = ws.writer(f"I_{p}.bin", ElementKind.INDEX, PHASE)
    ends_out = ws.writer(f"E_{p}.bin", ElementKind.BIT, PHASE)
    lcp_out = ws.writer(f"LCP_{p}.bin", ElementKind.LCPVAL, PHASE)

    ranks = [0] * (k + 1)
    buckets = [SpillList(ws, f"Lspill_{p}_c{c}.bin", ElementKind.INDEX,
                         ws.spill_threshold, PHASE)
               for c in range(sigma + 1)]
    used: list[int] = []
    carried: list[int] = []  # previous-pass LCP values of the open run
    widest = 1
    seen = 0

    for label, end_flag, prev_lcp in zip(enc_in, ends_in, lcp_in):
        seen += 1
        r = ranks[label] + 1
        ranks[label] = r
        if r > m:
            raise RankOverflow(f"label {label} occurred more than {m} times")
        gen = succ[label]
        code = next(gen) if gen is not None else SENTINEL
        bucket = buckets[code]
        if not bucket:
            used.append(code)
        bucket.append(label)
        carried.append(prev_lcp)
        if end_flag:
            used.sort()
            pos = 0
            for code in used:
                bucket = buckets[code]
                n = len(bucket)
                if code == SENTINEL:
                    for x in bucket.drain():
                        enc_out.append(x)
                        lcp_out.append(carried[pos])
                        ends_out.append(1)
                        pos += 1
                else:
                    if n > widest:
                        widest = n
                    last = n - 1
                    for i, x in enumerate(bucket.drain()):
                        enc_out.append(x)
                        lcp_out.append(carried[pos] if i == 0 else p)
                        ends_out.append(1 if i == last else 0)
                        pos += 1
            used.clear()
            carried.clear()

    # the coordinated scan exhausts only the first iterator; release the rest
    for gen in (enc_in, ends_in, lcp_in, *filter(None, succ)):
        gen.close()

    if seen != total:
        raise LengthMismatch(f"pass {p} scanned {seen} positions, expected {total}")
    if any(r != m for r in ranks):
        raise RankOverflow(f"pass {p} label multiplicities are off: {ranks}")

    enc_out.finalize()
    ends_out.finalize()
    lcp_out.finalize()

    successors = advance_successor_columns(columns, sigma, state.successors, p + 1, ws) \
        if p + 1 <= k else {}
    return MergeState(p=p, encoding=enc_out, ends=ends_out, lcp=lcp_out,
                      successors=successors, converged=widest <= 1, widest=widest,
                      m=m, k=k, sigma=sigma)


def merge_passes(coll: StringCollection, columns: PartialBwtColumns,
                 ws: Workspace) -> Iterator[MergeState]:
    """Run passes until every run has width 1, yielding each state.

    The first yielded state is the pass-0 initialization.  In rolling mode
    the files of pass p-1 are deleted right after pass p succeeds.
    """
    state = init_merge_state(coll, columns, ws)
    yield state
    while not state.converged and state.p <= coll.k:
        nxt = merge_iteration(state, columns, ws)
        if ws.rolling:
            for seq in state.files():
                seq.delete()
        state = nxt
        yield state


def merge_suffixes(coll: StringCollection, columns: PartialBwtColumns,
                   ws: Workspace) -> tuple[ExtSequence, ExtSequence, int]:
    """Full phase 2: final encoding, final LCP column and the pass count."""
    state = None
    for state in merge_passes(coll, columns, ws):
        pass
    return state.encoding, state.lcp, state.p

"""Reconstruct an interleave from its encoding and emit the final outputs.

An interleave encoding labels each merged position with its source part; the
j-th occurrence of label i marks where part i's j-th element went.  Rebuilding
the merged sequence therefore needs one forward reader per part and a single
pass over the encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LabelCountMismatch, LabelOutOfRange
from .extseq import END, ElementKind, ExtSequence, Workspace
from .model import SENTINEL, OutputBundle
from .partition import PartialBwtColumns

PHASE = "emit"


@dataclass
class InterleaveInput:
    parts: list[ExtSequence]
    encoding: ExtSequence


def reconstruct_interleave(inp: InterleaveInput, out: ExtSequence,
                           phase: str = PHASE) -> ExtSequence:
    """Merge the parts back together as dictated by the encoding.

    Keeps one open sequential reader per part (documented limit: the OS open
    file cap; a clear error is raised if it is hit) and streams the encoding
    once.
    """
    n_parts = len(inp.parts)
    if sum(part.length for part in inp.parts) != inp.encoding.length:
        raise LabelCountMismatch(
            f"parts hold {sum(p.length for p in inp.parts)} elements, "
            f"encoding has {inp.encoding.length} positions")
    readers = []
    try:
        for part in inp.parts:
            readers.append(part.stream(phase))
    except OSError as exc:
        for r in readers:
            r.close()
        raise OSError(
            f"could not open all {n_parts} part files at once "
            f"(OS open-file limit?): {exc}") from exc

    counts = [0] * n_parts
    try:
        for label in inp.encoding.stream(phase):
            if label >= n_parts:
                raise LabelOutOfRange(f"encoding label {label}, only {n_parts} parts")
            value = next(readers[label], END)
            if value is END:
                raise LabelCountMismatch(
                    f"part {label} exhausted after {counts[label]} elements")
            counts[label] += 1
            out.append(value)
        for label, reader in enumerate(readers):
            if next(reader, END) is not END:
                raise LabelCountMismatch(
                    f"part {label} has more than {counts[label]} elements")
    finally:
        for reader in readers:
            reader.close()
    return out.finalize()


def emit_outputs(encoding: ExtSequence, lcp: ExtSequence,
                 columns: PartialBwtColumns, iterations: int,
                 ws: Workspace) -> OutputBundle:
    """Interleave the per-length columns into the BWT and package the result.

    LCP position 1 is rewritten to -1 on the way out; internally it is stored
    as 0 so the files never need a signed representation.
    """
    out = reconstruct_interleave(
        InterleaveInput(list(columns.columns), encoding),
        ws.writer("BWT.bin", ElementKind.SYMBOL, PHASE))
    bwt = list(out.stream(PHASE))
    lcp_values = list(lcp.stream(PHASE))
    lcp_values[0] = -1

    total = (columns.k + 1) * columns.m
    assert len(bwt) == total and len(lcp_values) == total
    assert bwt.count(SENTINEL) == columns.m
    return OutputBundle(bwt=bwt, lcp=lcp_values, iterations=iterations,
                        io_stats=ws.stats.snapshot())

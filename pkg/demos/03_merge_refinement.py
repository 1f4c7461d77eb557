"""Watch phase 2 refine the interleave encoding pass by pass.

Each pass splits every run of suffixes that still share a common prefix by
one more symbol.  Run ends are drawn as '|' after the position; the LCP
column fills in wherever a run keeps going.

Run from a source checkout:  python demos/03_merge_refinement.py
"""

import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from diskbwt import (Alphabet, Workspace, build_columns, merge_passes,
                     partition_suffixes, validate_collection)

strings = ["ACCA", "CACA"]
alphabet = Alphabet("AC")
coll = validate_collection(strings, alphabet)
print(f"collection: {strings}  ((k+1)*m = {(coll.k + 1) * coll.m} suffixes)\n")


def drawn(encoding, ends):
    cells = []
    for label, end in zip(encoding, ends):
        cells.append(str(label) + ("|" if end else " "))
    return " ".join(cells)


with tempfile.TemporaryDirectory() as workdir:
    ws = Workspace(workdir, rolling=False)
    cm = build_columns(coll, ws)
    columns = partition_suffixes(coll, cm, ws)
    for state in merge_passes(coll, columns, ws):
        encoding = list(state.encoding.stream("demo"))
        ends = list(state.ends.stream("demo"))
        lcp = list(state.lcp.stream("demo"))
        widest = max(
            (e - s + 1 for s, e in zip(
                [0] + [i + 1 for i, b in enumerate(ends[:-1]) if b],
                [i for i, b in enumerate(ends) if b])),
            default=1)
        print(f"pass {state.p}:  encoding {drawn(encoding, ends)}")
        print(f"         lcp      {' '.join(f'{v} ' for v in lcp)}"
              f"  widest run {widest}"
              f"{'  -> converged' if state.converged else ''}")

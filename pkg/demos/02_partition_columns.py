"""Phase 1 step by step: radix passes that sort suffixes one length at a time.

Run from a source checkout:  python demos/02_partition_columns.py
"""

import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from diskbwt import (Alphabet, ElementKind, Workspace, build_columns, oracle_all,
                     partition_suffixes, validate_collection)

strings = ["ACGT", "CGTA", "ACGA"]
alphabet = Alphabet("ACGT")
coll = validate_collection(strings, alphabet)
print(f"collection: {strings}\n")

with tempfile.TemporaryDirectory() as workdir:
    ws = Workspace(workdir, rolling=False)   # keep every pass on disk
    cm = build_columns(coll, ws)
    print("input columns (column l = symbol preceding each length-l suffix):")
    for l in range(coll.k + 1):
        print(f"  S_{l}: {alphabet.decode_all(cm.load(l))}")

    columns = partition_suffixes(coll, cm, ws, verify=True)

    print("\nper-pass index permutations and partial BWT columns:")
    for l in range(coll.k + 1):
        perm = list(ws.open(f"N_{l}.bin", ElementKind.INDEX, "demo").stream())
        col = alphabet.decode_all(columns.column(l).stream("demo"))
        print(f"  length {l}: suffix order by string {perm}, preceding symbols {col}")

reference = oracle_all(coll)
print("\nbrute-force check of every column:")
for l in range(coll.k + 1):
    want = alphabet.decode_all(reference.partial_b[l])
    print(f"  B_{l} = {want}  (matches)")

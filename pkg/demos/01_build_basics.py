"""Build the BWT and LCP array of a tiny collection and inspect the result.

Run from a source checkout:  python demos/01_build_basics.py
"""

import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from diskbwt import Alphabet, Workspace, oracle_all, run_pipeline, validate_collection

strings = ["GATTACA", "CATGATT", "TACAGAT"]
alphabet = Alphabet("ACGT")
coll = validate_collection(strings, alphabet)
print(f"collection: {strings}  (m={coll.m} strings, k={coll.k} symbols each)")

with tempfile.TemporaryDirectory() as workdir:
    run = run_pipeline(coll, Workspace(workdir), verify_permutations=True)

bundle = run.bundle
print(f"\nBWT      : {bundle.bwt_text(alphabet)}")
print(f"LCP      : {bundle.lcp}")
print(f"encoding : {run.encoding}")
print(f"passes   : {bundle.iterations}")

# position i of the BWT holds the symbol preceding the i-th smallest suffix;
# the encoding says which suffix length contributed each position
reference = oracle_all(coll)
assert bundle.bwt == reference.bwt
assert bundle.lcp == reference.lcp
assert run.encoding == reference.encoding
print("\nbrute-force reference agrees on BWT, LCP and encoding")

print("\nsorted suffixes with their BWT symbol and LCP value:")
for i, ref in enumerate(reference.sa):
    suffix = alphabet.decode_all(coll.suffix_letters(ref)) + "$"
    print(f"  {i + 1:2d}  lcp={bundle.lcp[i]:>2}  bwt={alphabet.decode(bundle.bwt[i])}  "
          f"{suffix}  (string {ref.string_index}, length {ref.length})")

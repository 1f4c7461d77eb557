"""diskbwt: disk-backed BWT and LCP array construction for string collections.

The pipeline has two phases.  Phase 1 streams k radix passes over the input
and writes one partial BWT column per suffix length.  Phase 2 iteratively
refines the interleave encoding of those columns, splitting runs of suffixes
that still share a common prefix and filling in the LCP array as runs split.
All large arrays live in files and are read and written strictly
sequentially.
"""

from .errors import DiskBwtError
from .extseq import (DEFAULT_BUFFER_SIZE, END, BucketSet, ElementKind, ExtSequence,
                     IoStats, Workspace, concat_buckets)
from .interleave import InterleaveInput, emit_outputs, reconstruct_interleave
from .merge import (MergeState, advance_successor_columns, init_merge_state,
                    merge_iteration, merge_passes, merge_suffixes)
from .model import (SENTINEL, Alphabet, OutputBundle, StringCollection, SuffixRef,
                    compare_suffixes, validate_collection)
from .oracle import OracleResult, oracle_all
from .partition import (ColumnMatrix, PartialBwtColumns, build_columns,
                        partition_suffixes, project)
from .pipeline import PipelineRun, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "BucketSet", "ColumnMatrix", "DEFAULT_BUFFER_SIZE", "DiskBwtError",
    "END", "ElementKind", "ExtSequence", "InterleaveInput", "IoStats", "MergeState",
    "OracleResult", "OutputBundle", "PartialBwtColumns", "PipelineRun", "SENTINEL",
    "StringCollection", "SuffixRef", "Workspace", "advance_successor_columns",
    "build_columns", "compare_suffixes", "concat_buckets", "emit_outputs",
    "init_merge_state", "merge_iteration", "merge_passes", "merge_suffixes",
    "oracle_all", "partition_suffixes", "project", "reconstruct_interleave",
    "run_pipeline", "validate_collection",
]

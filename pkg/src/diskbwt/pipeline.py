"""End-to-end driver: partition passes, merge passes, output emission."""

from __future__ import annotations

from dataclasses import dataclass

from .extseq import Workspace
from .interleave import emit_outputs
from .merge import merge_suffixes
from .model import OutputBundle, StringCollection
from .partition import PartialBwtColumns, build_columns, partition_suffixes


@dataclass
class PipelineRun:
    """Everything a caller may want back from a full build."""

    bundle: OutputBundle
    encoding: list[int]
    columns: PartialBwtColumns


def run_pipeline(coll: StringCollection, ws: Workspace,
                 verify_permutations: bool = False) -> PipelineRun:
    """Build the BWT and LCP array of `coll` inside the workspace directory."""
    cm = build_columns(coll, ws)
    columns = partition_suffixes(coll, cm, ws, verify=verify_permutations)
    encoding, lcp, iterations = merge_suffixes(coll, columns, ws)
    bundle = emit_outputs(encoding, lcp, columns, iterations, ws)
    return PipelineRun(bundle=bundle,
                       encoding=list(encoding.stream("emit")),
                       columns=columns)

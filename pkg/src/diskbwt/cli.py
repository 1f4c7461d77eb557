"""Command line front end.

    diskbwt build --input reads.txt --workdir work [options]

Exit codes: 0 success, 1 usage or validation problem, 2 runtime I/O failure,
3 output disagrees with the brute-force reference under --verify.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .errors import (DiskBwtError, EmptyInput, TooLargeForOracle, UnequalLength,
                     UnknownSymbol, UsageError, VerifyMismatch)
from .extseq import DEFAULT_BUFFER_SIZE, Workspace
from .model import Alphabet, StringCollection, validate_collection
from .oracle import POSITION_GUARD, oracle_all
from .pipeline import run_pipeline

_VALIDATION_ERRORS = (UsageError, EmptyInput, UnknownSymbol, UnequalLength,
                      TooLargeForOracle, ValueError)


@dataclass
class RunConfig:
    input: Path
    workdir: Path
    format: str = "plain"
    alphabet: str = "ACGT"
    out_bwt: Path | None = None
    out_lcp: Path | None = None
    stats: Path | None = None
    verify: bool = False
    keep_intermediates: bool = False
    binary: bool = False
    buffer_size: int = DEFAULT_BUFFER_SIZE
    force: bool = False


def _read_plain(text: str) -> list[str]:
    lines = text.splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    return lines


def _read_fasta(text: str) -> list[str]:
    records: list[str] = []
    parts: list[str] | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            if parts is not None:
                records.append("".join(parts))
            parts = []
        else:
            if parts is None:
                raise UsageError("FASTA: sequence data before the first header")
            parts.append(line)
    if parts is not None:
        records.append("".join(parts))
    if not records:
        raise EmptyInput("no FASTA records found")
    return records


def parse_input(path: Path, fmt: str, alphabet: Alphabet) -> StringCollection:
    """Read one string per line (plain) or per record (fasta); uppercase first."""
    text = Path(path).read_text()
    raw = _read_fasta(text) if fmt == "fasta" else _read_plain(text)
    return validate_collection([s.upper() for s in raw], alphabet)


def _write_stats(path: Path, flat: dict) -> None:
    with open(path, "w") as fh:
        for key, value in flat.items():
            fh.write(f"{key}={value}\n")
    nested: dict = {"phases": {}}
    for key, value in flat.items():
        if "." in key:
            phase, metric = key.split(".", 1)
            nested["phases"].setdefault(phase, {})[metric] = value
        else:
            nested[key] = value
    with open(str(path) + ".json", "w") as fh:
        json.dump(nested, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _verify_against_oracle(coll: StringCollection, bundle, encoding: list[int]) -> None:
    ref = oracle_all(coll)
    for name, got, want in (("bwt", bundle.bwt, ref.bwt),
                            ("lcp", bundle.lcp, ref.lcp),
                            ("encoding", encoding, ref.encoding)):
        if got != want:
            idx = next(i for i, (a, b) in enumerate(zip(got, want)) if a != b)
            raise VerifyMismatch(
                f"{name} differs from the reference at position {idx + 1}: "
                f"got {got[idx]}, expected {want[idx]}")


def run_build(cfg: RunConfig) -> int:
    alphabet = Alphabet(cfg.alphabet)
    coll = parse_input(cfg.input, cfg.format, alphabet)
    if cfg.verify and (coll.k + 1) * coll.m > POSITION_GUARD:
        raise TooLargeForOracle(
            f"--verify needs (k+1)*m <= {POSITION_GUARD} positions")

    workdir = Path(cfg.workdir)
    if workdir.exists() and any(workdir.iterdir()) and not cfg.force:
        raise UsageError(f"workdir {workdir} is not empty (use --force to proceed)")
    ws = Workspace(workdir, buffer_size=cfg.buffer_size,
                   rolling=not cfg.keep_intermediates)

    started = time.perf_counter()
    run = run_pipeline(coll, ws, verify_permutations=cfg.verify)
    elapsed = time.perf_counter() - started
    bundle = run.bundle

    out_bwt = Path(cfg.out_bwt) if cfg.out_bwt else workdir / "bwt.txt"
    out_lcp = Path(cfg.out_lcp) if cfg.out_lcp else workdir / "lcp.txt"
    stats_path = Path(cfg.stats) if cfg.stats else workdir / "stats.txt"

    if cfg.binary:
        out_bwt.write_bytes(bytes(bundle.bwt))
    else:
        out_bwt.write_text(bundle.bwt_text(alphabet) + "\n")
    out_lcp.write_text("".join(f"{v}\n" for v in bundle.lcp))

    flat = {
        "m": coll.m,
        "k": coll.k,
        "sigma": alphabet.size,
        "iterations": bundle.iterations,
        "positions": (coll.k + 1) * coll.m,
        "wall_time_seconds": f"{elapsed:.6f}",
    }
    for phase in sorted(bundle.io_stats):
        for metric, value in sorted(bundle.io_stats[phase].items()):
            flat[f"{phase}.{metric}"] = value
    _write_stats(stats_path, flat)

    if cfg.verify:
        _verify_against_oracle(coll, bundle, run.encoding)

    if not cfg.keep_intermediates:
        for leftover in workdir.glob("*.bin"):
            leftover.unlink()
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diskbwt",
                     description="Disk-backed BWT and LCP construction for "
                                 "collections of equal-length strings.")
    sub = parser.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="build the BWT and LCP array of a collection")
    b.add_argument("--input", required=True, type=Path, help="input file")
    b.add_argument("--format", choices=("plain", "fasta"), default="plain",
                   help="plain: one string per line; fasta: one string per record")
    b.add_argument("--alphabet", default="ACGT",
                   help="letters in increasing order (default ACGT)")
    b.add_argument("--workdir", required=True, type=Path,
                   help="directory for the streamed intermediate files")
    b.add_argument("--out-bwt", type=Path, help="BWT output (default workdir/bwt.txt)")
    b.add_argument("--out-lcp", type=Path, help="LCP output (default workdir/lcp.txt)")
    b.add_argument("--stats", type=Path,
                   help="stats output; a .json twin is written next to it")
    b.add_argument("--verify", action="store_true",
                   help="check the outputs against the in-memory brute force")
    b.add_argument("--keep-intermediates", action="store_true",
                   help="keep every per-pass file instead of rolling deletion")
    b.add_argument("--binary", action="store_true",
                   help="write the BWT as raw symbol-code bytes")
    b.add_argument("--buffer-size", type=int, default=DEFAULT_BUFFER_SIZE,
                   help="read/write buffer in bytes")
    b.add_argument("--force", action="store_true",
                   help="run even if the workdir is not empty")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig(input=args.input, workdir=args.workdir, format=args.format,
                        alphabet=args.alphabet, out_bwt=args.out_bwt,
                        out_lcp=args.out_lcp, stats=args.stats, verify=args.verify,
                        keep_intermediates=args.keep_intermediates,
                        binary=args.binary, buffer_size=args.buffer_size,
                        force=args.force)
        return run_build(cfg)
    except VerifyMismatch as exc:
        print(f"diskbwt: verify mismatch: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"diskbwt: {exc}", file=sys.stderr)
        return 1
    except _VALIDATION_ERRORS as exc:
        print(f"diskbwt: {exc}", file=sys.stderr)
        return 1
    except (OSError, DiskBwtError) as exc:
        print(f"diskbwt: I/O failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

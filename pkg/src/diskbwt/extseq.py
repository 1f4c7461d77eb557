"""File-backed typed sequences with strictly sequential access.

Every large array in the pipeline lives in a file and is either being
appended (writing state) or scanned front to back (reading state); there is
no random access.  All reads and writes pass through buffered chunks and are
charged to per-phase byte counters, which is what the I/O behaviour checks
measure.
"""

from __future__ import annotations

import os
import sys
import threading
from array import array
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import CorruptFile, ValueOutOfRange, WrongState

DEFAULT_BUFFER_SIZE = 1 << 20

# array typecode with a 4-byte unsigned item (platform dependent name)
_U32 = next(tc for tc in "ILQ" if array(tc).itemsize == 4)
_BIG_ENDIAN = sys.byteorder == "big"

# bit i of a byte is the i-th element (LSB first)
_BYTE_TO_BITS = [tuple((b >> i) & 1 for i in range(8)) for b in range(256)]

END = object()
"""Marker returned by read_next() once a sequence is exhausted."""


def _write_all(handle, data) -> None:
    # raw (unbuffered) files may write fewer bytes than asked
    view = memoryview(data)
    while view:
        written = handle.write(view)
        view = view[written:]


class ElementKind(Enum):
    """On-disk element encodings and their widths."""

    SYMBOL = ("symbol", 1)   # one unsigned byte per symbol code
    INDEX = ("index", 4)     # little-endian uint32
    LCPVAL = ("lcpval", 4)   # little-endian uint32
    BIT = ("bit", None)      # bits packed LSB-first into bytes

    def __init__(self, label: str, width: int | None):
        self.label = label
        self.width = width


class IoStats:
    """Per-phase byte and file-open counters; updates are atomic."""

    _KEYS = ("bytes_read", "bytes_written", "files_opened")

    def __init__(self):
        self._lock = threading.Lock()
        self._phases: dict[str, dict[str, int]] = {}

    def _bucket(self, phase: str) -> dict[str, int]:
        d = self._phases.get(phase)
        if d is None:
            d = self._phases[phase] = dict.fromkeys(self._KEYS, 0)
        return d

    def add_read(self, phase: str, nbytes: int) -> None:
        with self._lock:
            self._bucket(phase)["bytes_read"] += nbytes

    def add_written(self, phase: str, nbytes: int) -> None:
        with self._lock:
            self._bucket(phase)["bytes_written"] += nbytes

    def count_open(self, phase: str) -> None:
        with self._lock:
            self._bucket(phase)["files_opened"] += 1

    def phase(self, phase: str) -> dict[str, int]:
        with self._lock:
            return dict(self._bucket(phase))

    def snapshot(self) -> dict[str, dict[str, int]]:
        with self._lock:
            return {name: dict(vals) for name, vals in self._phases.items()}

    def total(self, key: str) -> int:
        with self._lock:
            return sum(vals[key] for vals in self._phases.values())


_WRITING = "writing"
_FINALIZED = "finalized"
_READING = "reading"


class ExtSequence:
    """A typed on-disk sequence.

    Create with :meth:`create` (writing state), fill with :meth:`append`,
    seal with :meth:`finalize`.  A finalized sequence can be scanned any
    number of times with :meth:`stream` (each scan is one forward pass) or
    through the :meth:`open_read` / :meth:`read_next` pair.
    """

    def __init__(self, path, kind: ElementKind, *, stats: IoStats | None = None,
                 phase: str = "", buffer_size: int = DEFAULT_BUFFER_SIZE):
        self.path = Path(path)
        self.kind = kind
        self.length = 0
        self._stats = stats
        self._phase = phase
        self._buffer_size = max(8, buffer_size)
        self._state = _FINALIZED
        self._handle = None
        self._reader = None
        # writer staging, per kind
        self._buf = None
        self._bit_cur = 0
        self._bit_fill = 0
        self._flushed_bytes = 0

    # -- construction --------------------------------------------------

    @classmethod
    def create(cls, path, kind: ElementKind, *, stats: IoStats | None = None,
               phase: str = "", buffer_size: int = DEFAULT_BUFFER_SIZE) -> "ExtSequence":
        """Open a fresh sequence for appending (truncates any existing file)."""
        seq = cls(path, kind, stats=stats, phase=phase, buffer_size=buffer_size)
        seq._state = _WRITING
        # the staging buffers already batch writes, so skip Python's own layer
        seq._handle = open(seq.path, "wb", buffering=0)
        if stats is not None:
            stats.count_open(phase)
        if kind is ElementKind.SYMBOL:
            seq._buf = bytearray()
        elif kind is ElementKind.BIT:
            seq._buf = bytearray()
            seq._bit_cur = 0
            seq._bit_fill = 0
        else:
            seq._buf = array(_U32)
        return seq

    @classmethod
    def open_path(cls, path, kind: ElementKind, *, length: int | None = None,
                  stats: IoStats | None = None, phase: str = "",
                  buffer_size: int = DEFAULT_BUFFER_SIZE) -> "ExtSequence":
        """Wrap an existing file as a finalized sequence, checking its size."""
        size = os.path.getsize(path)
        if kind is ElementKind.BIT:
            if length is None:
                raise ValueError("bit sequences need an explicit length to be opened")
            expected = (length + 7) // 8
            if size != expected:
                raise CorruptFile(f"{path}: {size} bytes, expected {expected} for {length} bits")
        else:
            width = kind.width
            if size % width:
                raise CorruptFile(f"{path}: {size} bytes is not a multiple of {width}")
            n = size // width
            if length is not None and n != length:
                raise CorruptFile(f"{path}: holds {n} elements, expected {length}")
            length = n
        seq = cls(path, kind, stats=stats, phase=phase, buffer_size=buffer_size)
        seq.length = length
        return seq

    # -- writing ---------------------------------------------------------

    def append(self, value: int) -> None:
        """Append one element; the sequence must be in writing state."""
        if self._state is not _WRITING:
            raise WrongState(f"{self.path.name}: append while {self._state}")
        kind = self.kind
        if kind is ElementKind.BIT:
            if value not in (0, 1):
                raise ValueOutOfRange(f"bit value {value!r}")
            self._bit_cur |= value << self._bit_fill
            self._bit_fill += 1
            if self._bit_fill == 8:
                self._buf.append(self._bit_cur)
                self._bit_cur = 0
                self._bit_fill = 0
        else:
            try:
                self._buf.append(value)
            except (ValueError, TypeError, OverflowError):
                raise ValueOutOfRange(
                    f"value {value!r} does not fit element kind {kind.label}") from None
        self.length += 1
        if len(self._buf) * (1 if kind in (ElementKind.SYMBOL, ElementKind.BIT) else 4) \
                >= self._buffer_size:
            self._flush()

    def extend(self, values) -> None:
        for v in values:
            self.append(v)

    def _flush(self) -> None:
        buf = self._buf
        if not buf:
            return
        if isinstance(buf, bytearray):
            data = bytes(buf)
            self._buf = bytearray()
        else:
            if _BIG_ENDIAN:
                buf = array(_U32, buf)
                buf.byteswap()
            data = buf.tobytes()
            self._buf = array(_U32)
        _write_all(self._handle, data)
        self._flushed_bytes += len(data)
        if self._stats is not None:
            self._stats.add_written(self._phase, len(data))

    def finalize(self) -> "ExtSequence":
        """Flush, close and switch to the finalized (readable) state."""
        if self._state is not _WRITING:
            raise WrongState(f"{self.path.name}: finalize while {self._state}")
        if self.kind is ElementKind.BIT and self._bit_fill:
            self._buf.append(self._bit_cur)
            self._bit_cur = 0
            self._bit_fill = 0
        self._flush()
        self._handle.close()
        self._handle = None
        self._buf = None
        self._state = _FINALIZED
        return self

    # -- reading ---------------------------------------------------------

    @property
    def nbytes(self) -> int:
        """Exact byte size of the finalized file."""
        if self.kind is ElementKind.BIT:
            return (self.length + 7) // 8
        return self.length * self.kind.width

    def stream(self, phase: str | None = None):
        """One buffered forward pass over all elements.

        Opens the backing file, verifies its size, and returns a generator.
        The sequence stays in reading state until the generator is exhausted
        or closed.
        """
        if self._state is not _FINALIZED:
            raise WrongState(f"{self.path.name}: cannot read while {self._state}")
        phase = self._phase if phase is None else phase
        handle = open(self.path, "rb", buffering=0)
        size = os.fstat(handle.fileno()).st_size
        if size != self.nbytes:
            handle.close()
            raise CorruptFile(f"{self.path}: {size} bytes on disk, expected {self.nbytes}")
        if self._stats is not None:
            self._stats.count_open(phase)
        self._state = _READING
        if self.kind is ElementKind.SYMBOL:
            gen = self._stream_symbols(handle, phase)
        elif self.kind is ElementKind.BIT:
            gen = self._stream_bits(handle, phase)
        else:
            gen = self._stream_u32(handle, phase)
        return gen

    def _stream_symbols(self, handle, phase):
        stats = self._stats
        bufsize = self._buffer_size
        try:
            while True:
                chunk = handle.read(bufsize)
                if not chunk:
                    break
                if stats is not None:
                    stats.add_read(phase, len(chunk))
                yield from chunk
        finally:
            handle.close()
            self._state = _FINALIZED

    def _stream_u32(self, handle, phase):
        stats = self._stats
        bufsize = max(4, self._buffer_size - self._buffer_size % 4)
        pending = b""
        try:
            while True:
                chunk = handle.read(bufsize)
                if not chunk:
                    break
                if stats is not None:
                    stats.add_read(phase, len(chunk))
                if pending:
                    chunk = pending + chunk
                    pending = b""
                extra = len(chunk) % 4
                if extra:
                    pending = chunk[-extra:]
                    chunk = chunk[:-extra]
                arr = array(_U32)
                arr.frombytes(chunk)
                if _BIG_ENDIAN:
                    arr.byteswap()
                yield from arr
            if pending:
                raise CorruptFile(f"{self.path}: trailing partial element")
        finally:
            handle.close()
            self._state = _FINALIZED

    def _stream_bits(self, handle, phase):
        stats = self._stats
        bufsize = self._buffer_size
        remaining = self.length
        table = _BYTE_TO_BITS
        try:
            while remaining > 0:
                chunk = handle.read(bufsize)
                if not chunk:
                    raise CorruptFile(f"{self.path}: truncated bit sequence")
                if stats is not None:
                    stats.add_read(phase, len(chunk))
                for byte in chunk:
                    if remaining >= 8:
                        yield from table[byte]
                        remaining -= 8
                    else:
                        yield from table[byte][:remaining]
                        remaining = 0
                        break
        finally:
            handle.close()
            self._state = _FINALIZED

    def open_read(self, phase: str | None = None) -> "ExtSequence":
        """Start an explicit forward pass served by :meth:`read_next`."""
        self._reader = self.stream(phase)
        return self

    def read_next(self):
        """Next element of the pass started by open_read, or END when done."""
        if self._reader is None:
            raise WrongState(f"{self.path.name}: read_next without open_read")
        return next(self._reader, END)

    # -- lifecycle ---------------------------------------------------------

    def delete(self) -> None:
        """Remove the backing file; only valid once finalized."""
        if self._state is not _FINALIZED:
            raise WrongState(f"{self.path.name}: delete while {self._state}")
        self.path.unlink(missing_ok=True)

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return f"ExtSequence({self.path.name}, {self.kind.label}, n={self.length}, {self._state})"


@dataclass
class Workspace:
    """A working directory plus the knobs shared by every sequence in it."""

    root: Path
    stats: IoStats = field(default_factory=IoStats)
    buffer_size: int = DEFAULT_BUFFER_SIZE
    rolling: bool = True
    spill_threshold: int = DEFAULT_BUFFER_SIZE

    def __post_init__(self):
        self.root = Path(self.root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path(self, name: str) -> Path:
        return self.root / name

    def writer(self, name: str, kind: ElementKind, phase: str) -> ExtSequence:
        return ExtSequence.create(self.path(name), kind, stats=self.stats,
                                  phase=phase, buffer_size=self.buffer_size)

    def open(self, name: str, kind: ElementKind, phase: str,
             length: int | None = None) -> ExtSequence:
        return ExtSequence.open_path(self.path(name), kind, length=length,
                                     stats=self.stats, phase=phase,
                                     buffer_size=self.buffer_size)

    def delete(self, name: str) -> None:
        self.path(name).unlink(missing_ok=True)


class SpillList:
    """Staging list that lives in RAM up to a byte budget, then in a file.

    Spilling never changes the element order or the bytes a consumer sees;
    it only bounds the resident memory of a bucket while it is being filled.
    """

    __slots__ = ("_ws", "_name", "_kind", "_limit", "_phase", "_items", "_file",
                 "_count", "_sealed")

    def __init__(self, ws: "Workspace", name: str, kind: ElementKind,
                 limit_bytes: int, phase: str):
        self._ws = ws
        self._name = name
        self._kind = kind
        self._limit = max(limit_bytes, kind.width or 1)
        self._phase = phase
        self._items: list[int] = []
        self._file: ExtSequence | None = None
        self._count = 0
        self._sealed = False

    def __len__(self) -> int:
        return self._count

    def append(self, value: int) -> None:
        if self._sealed:
            raise WrongState(f"{self._name}: append after seal")
        self._count += 1
        if self._file is not None:
            self._file.append(value)
            return
        items = self._items
        items.append(value)
        if len(items) * (self._kind.width or 1) > self._limit:
            writer = self._ws.writer(self._name, self._kind, self._phase)
            for v in items:
                writer.append(v)
            self._items = []
            self._file = writer

    def seal(self) -> "SpillList":
        """No further appends; any spilled file becomes readable."""
        if not self._sealed:
            if self._file is not None and self._file._state is _WRITING:
                self._file.finalize()
            self._sealed = True
        return self

    def drain(self):
        """Yield all elements in append order, then reset to empty and open."""
        self._count = 0
        self._sealed = False
        if self._file is None:
            items = self._items
            self._items = []
            yield from items
        else:
            seq = self._file
            self._file = None
            if seq._state is _WRITING:
                seq.finalize()
            yield from seq.stream(self._phase)
            seq.delete()

    def discard(self) -> None:
        """Drop contents and any spilled file without reading them."""
        if self._file is not None:
            if self._file._state is _WRITING:
                self._file.finalize()
            self._file.delete()
            self._file = None
        self._items = []
        self._count = 0
        self._sealed = False


class BucketSet:
    """One staging bucket per symbol code 0..count-1.

    Concatenation order is strictly by ascending code, and the order of
    elements inside each bucket is the order they were appended.  Buckets
    stay in RAM up to the workspace spill threshold and overflow to files,
    which keeps the resident footprint bounded without changing any output
    byte.
    """

    def __init__(self, ws: Workspace, kind: ElementKind, prefix: str, phase: str,
                 count: int, limit_bytes: int | None = None):
        limit = ws.spill_threshold if limit_bytes is None else limit_bytes
        self.buckets = [SpillList(ws, f"{prefix}_c{c}.bin", kind, limit, phase)
                        for c in range(count)]
        self.sealed = False

    def append(self, code: int, value: int) -> None:
        self.buckets[code].append(value)

    def finalize(self) -> "BucketSet":
        for bucket in self.buckets:
            bucket.seal()
        self.sealed = True
        return self

    def delete(self) -> None:
        for bucket in self.buckets:
            bucket.discard()
        self.sealed = False


def concat_buckets(buckets: BucketSet, out: ExtSequence) -> ExtSequence:
    """Append every bucket's elements to `out` in ascending code order."""
    if not buckets.sealed:
        raise WrongState("buckets must be finalized before concatenation")
    for bucket in buckets.buckets:
        for value in bucket.drain():
            out.append(value)
    buckets.sealed = False
    out.finalize()
    return out

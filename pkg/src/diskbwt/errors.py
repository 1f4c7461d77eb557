"""Exception hierarchy shared by all diskbwt modules."""


class DiskBwtError(Exception):
    """Base class for every error raised by this package."""


# -- input validation ------------------------------------------------------

class EmptyInput(DiskBwtError):
    """The input holds no usable strings."""


class UnknownSymbol(DiskBwtError):
    """A character outside the declared alphabet appeared in the input."""


class UnequalLength(DiskBwtError):
    """An input string does not match the common length of the collection."""


# -- on-disk sequences -----------------------------------------------------

class WrongState(DiskBwtError):
    """A sequence operation was attempted in the wrong state (writing vs reading)."""


class ValueOutOfRange(DiskBwtError):
    """A value does not fit the element encoding of the sequence."""


class CorruptFile(DiskBwtError):
    """A backing file has an impossible size for its element encoding."""


class LengthMismatch(DiskBwtError):
    """Two sequences that must be scanned in lockstep have different lengths."""


# -- pipeline --------------------------------------------------------------

class MissingColumn(DiskBwtError):
    """A required per-length column file is absent."""


class RankOverflow(DiskBwtError):
    """Internal inconsistency: a suffix-length label occurred too often."""


class LabelCountMismatch(DiskBwtError):
    """Encoding label counts disagree with the lengths of the interleaved parts."""


class LabelOutOfRange(DiskBwtError):
    """The encoding references a part that does not exist."""


# -- verification / front end ----------------------------------------------

class TooLargeForOracle(DiskBwtError):
    """The instance exceeds the in-memory brute-force guard."""


class VerifyMismatch(DiskBwtError):
    """Pipeline output disagrees with the brute-force reference."""


class UsageError(DiskBwtError):
    """Bad command line or run configuration."""

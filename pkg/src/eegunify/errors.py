"""Exception hierarchy for the eegunify package.

Every operational failure raises a subclass of :class:`EegUnifyError`, so
batch workers can fence per-file failures with a single except clause.
"""


class EegUnifyError(Exception):
    """Base class for all errors raised by this package."""


# --- locator -----------------------------------------------------------

class MissingColumn(EegUnifyError):
    """A required locator CSV header is absent."""


class Unreadable(EegUnifyError):
    """A file could not be read from disk."""


class Unwritable(EegUnifyError):
    """A file could not be written to disk."""


class DuplicateEntry(EegUnifyError):
    """Two locator rows share the same (file path, domain tag) pair."""


class UnknownColumn(EegUnifyError):
    """A row predicate references a column that does not exist."""


# --- formats -----------------------------------------------------------

class RootNotFound(EegUnifyError):
    """Dataset scan root directory does not exist."""


class MalformedHeader(EegUnifyError):
    """A binary file header violates its format specification."""


class MixedSamplingRates(EegUnifyError):
    """EDF/BDF data channels carry unequal sampling rates."""


class TruncatedRecord(EegUnifyError):
    """File ends before the data promised by its header."""


class NoNumericColumns(EegUnifyError):
    """A delimited text file contains no numeric signal columns."""


class InconsistentColumnCount(EegUnifyError):
    """Delimited rows do not all have the same number of columns."""


class UnsupportedMatVersion(EegUnifyError):
    """MAT file is not a version 5 container (e.g. v7.3 / HDF5)."""


class NoNumericArray(EegUnifyError):
    """MAT file holds no usable 2-D numeric array."""


class SidecarMismatch(EegUnifyError):
    """Raw payload length disagrees with its JSON sidecar."""


class MissingSamplingRate(EegUnifyError):
    """No sampling rate could be resolved for a signal file."""


# --- metrics / cleaning ------------------------------------------------

class EmptyTable(EegUnifyError):
    """Operation requires at least one locator row."""


class TooShort(EegUnifyError):
    """Recording has too few samples for the requested analysis."""


class NoCompletedRows(EegUnifyError):
    """Sampling requires at least one row with Completed status."""


class InvalidBand(EegUnifyError):
    """Filter band edges are out of range for the sampling rate."""


class RankDeficient(EegUnifyError):
    """Whitening retained zero components."""


# --- unification -------------------------------------------------------

class RatioOverflow(EegUnifyError):
    """Resampling ratio has no small rational approximation."""


class UnknownChannel(EegUnifyError):
    """Requested channel is absent from recording and montage."""


class NoDonorChannels(EegUnifyError):
    """No present channel has montage coordinates to interpolate from."""


class LengthMismatch(EegUnifyError):
    """Per-channel metadata length disagrees with the channel count."""


class UnknownUnit(EegUnifyError):
    """Unit conversion requested on a channel with unknown unit."""


# --- batch -------------------------------------------------------------

class SpecInvalid(EegUnifyError):
    """Pipeline specification failed pre-flight validation."""


class OutputUnwritable(EegUnifyError):
    """Pipeline output directory cannot be created or written."""


class DuplicateName(EegUnifyError):
    """Operation name already registered."""


# --- llm boost ---------------------------------------------------------

class EndpointUnreachable(EegUnifyError):
    """No LLM endpoint configured, or the endpoint did not respond."""


class MalformedResponse(EegUnifyError):
    """LLM endpoint returned an unparseable response (after retry)."""

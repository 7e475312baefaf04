"""Exception types raised across the toolkit."""


class ContrailError(Exception):
    """Base class for all toolkit errors."""


# --- NPY codec ---

class BadMagic(ContrailError):
    """Input does not start with the NPY magic string."""


class UnsupportedVersion(ContrailError):
    """NPY file version other than 1.0."""


class UnsupportedDtype(ContrailError):
    """Array dtype outside the supported set (f32, f64, i64, u8, bool)."""


class TruncatedPayload(ContrailError):
    """Payload byte count does not match the header's element count."""


class NonFiniteData(ContrailError):
    """Strict loader found NaN or Inf in a floating-point array."""


# --- false color / band handling ---

class MissingBand(ContrailError):
    """A required ABI band is absent from the cube."""


class NonPositiveSpread(ContrailError):
    """A channel normalization spread must be strictly positive."""


class CropTooLarge(ContrailError):
    """Requested crop exceeds the input dimensions."""


# --- masks and RLE ---

class MalformedRle(ContrailError):
    """RLE text is not a sequence of positive integer start/length pairs."""


class OutOfBounds(ContrailError):
    """An RLE run extends past the end of the image."""


class OverlappingRuns(ContrailError):
    """RLE runs overlap or are out of order."""


class EmptyComponent(ContrailError):
    """A pixel-set operation received no pixels."""


# --- shared numeric contracts ---

class ShapeMismatch(ContrailError):
    """Operands have incompatible shapes."""


class NotScalar(ContrailError):
    """Backward pass requires a scalar loss."""


# --- models and training ---

class BadConfig(ContrailError):
    """Model or input configuration violates its invariants."""


class EmptyDataset(ContrailError):
    """Training requires at least one record."""


class TooFewRecords(ContrailError):
    """Not enough records for the requested fold count."""


# --- pipeline ---

class BadSpec(ContrailError):
    """Synthetic scene spec has a degenerate or invalid range."""


class EmptyModelList(ContrailError):
    """Fused prediction needs at least one model."""


class DuplicateId(ContrailError):
    """Submission record ids must be unique."""


class MissingTruth(ContrailError):
    """A submission record has no ground-truth mask."""

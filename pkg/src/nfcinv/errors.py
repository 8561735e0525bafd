"""Exception types shared across the codec, simulator and store layers.

Everything derives from ValueError so callers that only care about
"bad input" can catch broadly, while the store and HTTP layers map the
concrete classes to machine-readable error codes.
"""


class TagError(ValueError):
    """Base class for tag/record codec failures."""


class InvalidName(TagError):
    """Name is empty, longer than 64 bytes, has a NUL byte or bad UTF-8."""


class InvalidDates(TagError):
    """Day count out of u16 range, or expiry earlier than manufacturing."""


class BadVersion(TagError):
    """Record header byte is not the supported version."""


class Truncated(TagError):
    """Byte stream ends before the declared record does."""


class TrailingGarbage(TagError):
    """Extra bytes follow a complete record."""


class CapacityExceeded(TagError):
    """Payload does not fit the tag's TLV data area."""


class TagLocked(TagError):
    """Write attempted on a write-locked tag."""


class BlankTag(TagError):
    """Tag data area is all zeroes; nothing to read."""


class MalformedTlv(TagError):
    """TLV framing is damaged: bad tag byte, bad length, missing
    terminator or non-zero padding."""


class BarcodeError(ValueError):
    """Base class for barcode codec failures."""


class InvalidCharacter(BarcodeError):
    """Character outside the Code 39 alphabet."""


class WrongLength(BarcodeError):
    """Digit string has the wrong length for the symbology."""


class NonDigit(BarcodeError):
    """Non-digit character where only digits are allowed."""


class OutOfRange(BarcodeError):
    """Numeric argument outside the modelled range."""


class StoreError(ValueError):
    """Base class for inventory/checkout failures."""


class DuplicateSku(StoreError):
    """SKU already provisioned in this store."""


class UnknownProduct(StoreError):
    """Scanned product id is not in the catalog."""


class UnknownCarrier(StoreError):
    """Carrier reference (tag UID / label code) is not bound to an item."""


class AlreadySold(StoreError):
    """Item was already checked out."""


class ItemSold(StoreError):
    """Mutation attempted on a sold item."""


class ImmutableCarrier(StoreError):
    """Reprice attempted on a printed barcode label."""


class MalformedPayload(StoreError):
    """Scan payload could not be decoded into a product id."""


class ScanFailed(StoreError):
    """Checkout attempted with an unsuccessful scan outcome."""

    def __init__(self, failure_reason=None):
        self.failure_reason = failure_reason
        super().__init__(f"scan failed: {failure_reason}")


class CorruptLog(StoreError):
    """Event log has a gap, a bad line or an unknown event kind."""

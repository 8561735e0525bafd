"""Simulated NFC Forum Type-2 tags with a 128-byte data area.

The data area is either all-zero (blank) or a single TLV frame:
0x03, length, payload, 0xFE terminator, zero padding. Tags are
immutable values; writing returns a new tag with the same UID, which
models in-place rewritability while keeping the API pure.
"""

from dataclasses import dataclass, replace

from nfcinv import _kernels
from nfcinv.errors import TagLocked
from nfcinv.records import ProductRecord, decode_record, encode_record

TAG_CAPACITY = _kernels.TAG_CAPACITY
MAX_PAYLOAD = _kernels.TLV_MAX_PAYLOAD
UID_LENGTH = 7

_BLANK_AREA = bytes(TAG_CAPACITY)


@dataclass(frozen=True)
class Type2Tag:
    uid: bytes
    data: bytes = _BLANK_AREA
    write_locked: bool = False

    def __post_init__(self):
        if len(self.uid) != UID_LENGTH:
            raise ValueError(f"uid must be {UID_LENGTH} bytes, got {len(self.uid)}")
        if len(self.data) != TAG_CAPACITY:
            raise ValueError(
                f"data area must be {TAG_CAPACITY} bytes, got {len(self.data)}")

    @property
    def capacity_bytes(self) -> int:
        return TAG_CAPACITY

    @property
    def is_blank(self) -> bool:
        return not any(self.data)


def mint_uid(serial: int) -> bytes:
    """Deterministic 7-byte UID: 0x04 vendor byte + 6-byte serial."""
    if not 0 <= serial < 1 << 48:
        raise ValueError(f"serial {serial} does not fit in 6 bytes")
    return b"\x04" + serial.to_bytes(6, "big")


def blank_tag(uid: bytes) -> Type2Tag:
    return Type2Tag(uid=uid)


def write_tag(tag: Type2Tag, record: ProductRecord) -> Type2Tag:
    """Replace the tag's data area with a freshly framed record.

    Any previous content is fully overwritten; writing the same record
    twice yields identical data areas.
    """
    if tag.write_locked:
        raise TagLocked(f"tag {tag.uid.hex()} is write-locked")
    payload = encode_record(record)
    return replace(tag, data=_kernels.tlv_wrap(payload))


def tag_payload(tag: Type2Tag) -> bytes:
    """Raw TLV payload bytes; raises BlankTag / MalformedTlv."""
    return _kernels.tlv_unwrap(tag.data)


def read_tag(tag: Type2Tag) -> ProductRecord:
    """Parse the TLV frame and decode the record inside it."""
    return decode_record(tag_payload(tag))

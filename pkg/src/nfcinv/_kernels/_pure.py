"""Pure-Python byte kernels: record packing, TLV framing, checksums.

This is the fallback used when the compiled _speedups extension is not
available. Both implementations must stay byte-for-byte and
error-for-error identical; tests/test_kernels.py cross-checks them.

Record layout (big-endian, 16 + n bytes):

    offset  size  field
    0       1     version, always 0x01
    1       4     product_id
    5       1     n = name length in bytes (1..64)
    6       n     name, UTF-8, no NUL bytes
    6+n     4     price_minor
    10+n    2     manufacturing_date (days since 2000-01-01)
    12+n    2     expiry_date
    14+n    2     delivery_date

Tag data area (exactly 128 bytes): 0x03, L, payload[L], 0xFE, zero
padding. L <= 125 so the terminator always stays inside the area.
"""

import struct

from nfcinv.errors import (
    BadVersion,
    BlankTag,
    CapacityExceeded,
    InvalidCharacter,
    InvalidName,
    MalformedTlv,
    NonDigit,
    TrailingGarbage,
    Truncated,
)

RECORD_VERSION = 0x01
RECORD_MIN_LEN = 17  # version + fixed fields + 1-byte name
NAME_MAX_BYTES = 64

TAG_CAPACITY = 128
TLV_NDEF = 0x03
TLV_TERMINATOR = 0xFE
TLV_MAX_PAYLOAD = TAG_CAPACITY - 3  # tag byte + length byte + terminator

CODE39_ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ-. $/+%"
_CODE39_VALUES = {c: i for i, c in enumerate(CODE39_ALPHABET)}

_HEAD = struct.Struct(">BIB")
_TAIL = struct.Struct(">IHHH")


def encode_record(product_id, name, price_minor, manufacturing_date,
                  expiry_date, delivery_date):
    """Pack validated record fields; `name` is the UTF-8 byte string."""
    return (_HEAD.pack(RECORD_VERSION, product_id, len(name)) + name
            + _TAIL.pack(price_minor, manufacturing_date, expiry_date,
                         delivery_date))


def decode_record_fields(buf):
    """Parse a record byte stream into its raw fields.

    Returns (product_id, name_bytes, price_minor, manufacturing_date,
    expiry_date, delivery_date). UTF-8 decoding of the name is left to
    the caller.
    """
    if len(buf) < RECORD_MIN_LEN:
        raise Truncated(f"need at least {RECORD_MIN_LEN} bytes, got {len(buf)}")
    version, product_id, name_len = _HEAD.unpack_from(buf, 0)
    if version != RECORD_VERSION:
        raise BadVersion(f"unsupported version byte 0x{version:02x}")
    if not 1 <= name_len <= NAME_MAX_BYTES:
        raise InvalidName(f"name length byte {name_len} outside 1..{NAME_MAX_BYTES}")
    total = 16 + name_len
    if len(buf) < total:
        raise Truncated(f"declared {total} bytes, got {len(buf)}")
    if len(buf) > total:
        raise TrailingGarbage(f"{len(buf) - total} bytes after record end")
    name = bytes(buf[6:6 + name_len])
    if 0 in name:
        raise InvalidName("name contains NUL byte")
    price_minor, mfg, exp, dlv = _TAIL.unpack_from(buf, 6 + name_len)
    return product_id, name, price_minor, mfg, exp, dlv


def tlv_wrap(payload):
    """Frame a payload into a fresh 128-byte tag data area."""
    if len(payload) > TLV_MAX_PAYLOAD:
        raise CapacityExceeded(
            f"payload of {len(payload)} bytes exceeds {TLV_MAX_PAYLOAD}")
    area = bytearray(TAG_CAPACITY)
    area[0] = TLV_NDEF
    area[1] = len(payload)
    area[2:2 + len(payload)] = payload
    area[2 + len(payload)] = TLV_TERMINATOR
    return bytes(area)


def tlv_unwrap(data):
    """Extract the payload from a 128-byte tag data area.

    All reads stay inside the fixed-size area: the length byte is
    bounded by TLV_MAX_PAYLOAD, so the terminator index is at most 127.
    """
    if len(data) != TAG_CAPACITY:
        raise MalformedTlv(f"data area must be {TAG_CAPACITY} bytes, got {len(data)}")
    if not any(data):
        raise BlankTag("data area is all zeroes")
    if data[0] != TLV_NDEF:
        raise MalformedTlv(f"bad TLV tag byte 0x{data[0]:02x}")
    length = data[1]
    if length > TLV_MAX_PAYLOAD:
        raise MalformedTlv(f"TLV length {length} exceeds {TLV_MAX_PAYLOAD}")
    if data[2 + length] != TLV_TERMINATOR:
        raise MalformedTlv("missing terminator byte")
    if any(data[3 + length:]):
        raise MalformedTlv("non-zero padding after terminator")
    return bytes(data[2:2 + length])


def code39_value_sum(payload):
    """Sum of Code 39 character values, for the mod-43 check character."""
    total = 0
    for ch in payload:
        value = _CODE39_VALUES.get(ch)
        if value is None:
            raise InvalidCharacter(f"not a Code 39 character: {ch!r}")
        total += value
    return total


def ean_weighted_sum(digits):
    """EAN weighted sum: rightmost digit weight 3, alternating 1/3 leftward."""
    total = 0
    weight = 3
    for ch in reversed(digits):
        if ch < "0" or ch > "9":
            raise NonDigit(f"not a digit: {ch!r}")
        total += (ord(ch) - 48) * weight
        weight = 4 - weight
    return total

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled byte kernels; must match _pure.py byte-for-byte and
error-for-error. See _pure.py for the layout documentation."""

from cpython.bytes cimport PyBytes_FromStringAndSize

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

cdef enum:
    _RECORD_VERSION = 0x01
    _RECORD_MIN_LEN = 17
    _NAME_MAX_BYTES = 64
    _TAG_CAPACITY = 128
    _TLV_NDEF = 0x03
    _TLV_TERMINATOR = 0xFE
    _TLV_MAX_PAYLOAD = 125

RECORD_VERSION = _RECORD_VERSION
RECORD_MIN_LEN = _RECORD_MIN_LEN
NAME_MAX_BYTES = _NAME_MAX_BYTES
TAG_CAPACITY = _TAG_CAPACITY
TLV_NDEF = _TLV_NDEF
TLV_TERMINATOR = _TLV_TERMINATOR
TLV_MAX_PAYLOAD = _TLV_MAX_PAYLOAD

CODE39_ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ-. $/+%"

cdef int _code39_value(Py_UCS4 ch) noexcept:
    if u"0" <= ch <= u"9":
        return <int>ch - 48
    if u"A" <= ch <= u"Z":
        return <int>ch - 55
    if ch == u"-":
        return 36
    if ch == u".":
        return 37
    if ch == u" ":
        return 38
    if ch == u"$":
        return 39
    if ch == u"/":
        return 40
    if ch == u"+":
        return 41
    if ch == u"%":
        return 42
    return -1


def encode_record(product_id, name, price_minor, manufacturing_date,
                  expiry_date, delivery_date):
    """Pack validated record fields; `name` is the UTF-8 byte string."""
    cdef const unsigned char[:] nm = name
    cdef Py_ssize_t n = nm.shape[0]
    cdef unsigned long pid = product_id
    cdef unsigned long price = price_minor
    cdef unsigned int mfg = manufacturing_date
    cdef unsigned int exp = expiry_date
    cdef unsigned int dlv = delivery_date
    cdef bytes out = PyBytes_FromStringAndSize(NULL, 16 + n)
    cdef unsigned char* p = <unsigned char*><char*>out
    cdef Py_ssize_t i

    p[0] = _RECORD_VERSION
    p[1] = (pid >> 24) & 0xFF
    p[2] = (pid >> 16) & 0xFF
    p[3] = (pid >> 8) & 0xFF
    p[4] = pid & 0xFF
    p[5] = <unsigned char>n
    for i in range(n):
        p[6 + i] = nm[i]
    p[6 + n] = (price >> 24) & 0xFF
    p[7 + n] = (price >> 16) & 0xFF
    p[8 + n] = (price >> 8) & 0xFF
    p[9 + n] = price & 0xFF
    p[10 + n] = (mfg >> 8) & 0xFF
    p[11 + n] = mfg & 0xFF
    p[12 + n] = (exp >> 8) & 0xFF
    p[13 + n] = exp & 0xFF
    p[14 + n] = (dlv >> 8) & 0xFF
    p[15 + n] = dlv & 0xFF
    return out


def decode_record_fields(buf):
    """Parse a record byte stream into its raw fields."""
    cdef const unsigned char[:] b = buf
    cdef Py_ssize_t size = b.shape[0]
    cdef Py_ssize_t i, total
    cdef int version, name_len
    cdef unsigned long product_id, price
    cdef unsigned int mfg, exp, dlv

    if size < _RECORD_MIN_LEN:
        raise Truncated(f"need at least {_RECORD_MIN_LEN} bytes, got {size}")
    version = b[0]
    if version != _RECORD_VERSION:
        raise BadVersion(f"unsupported version byte 0x{version:02x}")
    name_len = b[5]
    if name_len < 1 or name_len > _NAME_MAX_BYTES:
        raise InvalidName(
            f"name length byte {name_len} outside 1..{_NAME_MAX_BYTES}")
    total = 16 + name_len
    if size < total:
        raise Truncated(f"declared {total} bytes, got {size}")
    if size > total:
        raise TrailingGarbage(f"{size - total} bytes after record end")
    for i in range(name_len):
        if b[6 + i] == 0:
            raise InvalidName("name contains NUL byte")
    product_id = (<unsigned long>b[1] << 24) | (b[2] << 16) | (b[3] << 8) | b[4]
    i = 6 + name_len
    price = (<unsigned long>b[i] << 24) | (b[i + 1] << 16) | (b[i + 2] << 8) | b[i + 3]
    mfg = (b[i + 4] << 8) | b[i + 5]
    exp = (b[i + 6] << 8) | b[i + 7]
    dlv = (b[i + 8] << 8) | b[i + 9]
    name = bytes(buf[6:6 + name_len])
    return product_id, name, price, mfg, exp, dlv


def tlv_wrap(payload):
    """Frame a payload into a fresh 128-byte tag data area."""
    cdef const unsigned char[:] pl = payload
    cdef Py_ssize_t n = pl.shape[0]
    cdef Py_ssize_t i
    if n > _TLV_MAX_PAYLOAD:
        raise CapacityExceeded(
            f"payload of {n} bytes exceeds {_TLV_MAX_PAYLOAD}")
    cdef bytes out = PyBytes_FromStringAndSize(NULL, _TAG_CAPACITY)
    cdef unsigned char* p = <unsigned char*><char*>out
    for i in range(_TAG_CAPACITY):
        p[i] = 0
    p[0] = _TLV_NDEF
    p[1] = <unsigned char>n
    for i in range(n):
        p[2 + i] = pl[i]
    p[2 + n] = _TLV_TERMINATOR
    return out


def tlv_unwrap(data):
    """Extract the payload from a 128-byte tag data area."""
    cdef const unsigned char[:] d = data
    cdef Py_ssize_t size = d.shape[0]
    cdef Py_ssize_t i
    cdef int length
    cdef bint all_zero = True

    if size != _TAG_CAPACITY:
        raise MalformedTlv(
            f"data area must be {_TAG_CAPACITY} bytes, got {size}")
    for i in range(_TAG_CAPACITY):
        if d[i] != 0:
            all_zero = False
            break
    if all_zero:
        raise BlankTag("data area is all zeroes")
    if d[0] != _TLV_NDEF:
        raise MalformedTlv(f"bad TLV tag byte 0x{d[0]:02x}")
    length = d[1]
    if length > _TLV_MAX_PAYLOAD:
        raise MalformedTlv(f"TLV length {length} exceeds {_TLV_MAX_PAYLOAD}")
    if d[2 + length] != _TLV_TERMINATOR:
        raise MalformedTlv("missing terminator byte")
    for i in range(3 + length, _TAG_CAPACITY):
        if d[i] != 0:
            raise MalformedTlv("non-zero padding after terminator")
    return bytes(data[2:2 + length])


def code39_value_sum(payload):
    """Sum of Code 39 character values, for the mod-43 check character."""
    cdef str s = payload
    cdef long total = 0
    cdef int value
    cdef Py_UCS4 ch
    for ch in s:
        value = _code39_value(ch)
        if value < 0:
            raise InvalidCharacter(f"not a Code 39 character: {chr(ch)!r}")
        total += value
    return total


def ean_weighted_sum(digits):
    """EAN weighted sum: rightmost digit weight 3, alternating 1/3 leftward."""
    cdef str s = digits
    cdef Py_ssize_t n = len(s)
    cdef Py_ssize_t i
    cdef long total = 0
    cdef int weight = 3
    cdef Py_UCS4 ch
    for i in range(n - 1, -1, -1):
        ch = s[i]
        if ch < u"0" or ch > u"9":
            raise NonDigit(f"not a digit: {chr(ch)!r}")
        total += (<int>ch - 48) * weight
        weight = 4 - weight
    return total

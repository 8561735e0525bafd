"""Kernel selection: compiled _speedups when available, else pure Python.

Set NFCINV_PURE_PYTHON=1 to force the fallback (useful for the
benchmark and for debugging the compiled path).
"""

import os

from . import _pure

if os.environ.get("NFCINV_PURE_PYTHON"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

ACCELERATED = _impl is not _pure
IMPLEMENTATION = "c" if ACCELERATED else "python"

RECORD_VERSION = _pure.RECORD_VERSION
RECORD_MIN_LEN = _pure.RECORD_MIN_LEN
NAME_MAX_BYTES = _pure.NAME_MAX_BYTES
TAG_CAPACITY = _pure.TAG_CAPACITY
TLV_NDEF = _pure.TLV_NDEF
TLV_TERMINATOR = _pure.TLV_TERMINATOR
TLV_MAX_PAYLOAD = _pure.TLV_MAX_PAYLOAD
CODE39_ALPHABET = _pure.CODE39_ALPHABET

encode_record = _impl.encode_record
decode_record_fields = _impl.decode_record_fields
tlv_wrap = _impl.tlv_wrap
tlv_unwrap = _impl.tlv_unwrap
code39_value_sum = _impl.code39_value_sum
ean_weighted_sum = _impl.ean_weighted_sum

"""Product records and their fixed binary layout.

A record is the payload written onto a tag: id, name, price in minor
currency units, and three day-count dates. Dates are u16 days since
2000-01-01 (covers ~179 years without timezone ambiguity). The byte
layout is documented in _kernels/_pure.py; encoded size is 16 + n
bytes for an n-byte name, so the worst case (64-byte name) is 80 bytes
and always fits a 128-byte tag.
"""

import datetime
from dataclasses import dataclass

from nfcinv import _kernels
from nfcinv.errors import InvalidDates, InvalidName

U16_MAX = 0xFFFF
U32_MAX = 0xFFFFFFFF

DAY_EPOCH = datetime.date(2000, 1, 1)

NAME_MAX_BYTES = _kernels.NAME_MAX_BYTES


def to_day_count(day: datetime.date) -> int:
    """Calendar date -> u16 day count since 2000-01-01."""
    count = (day - DAY_EPOCH).days
    if not 0 <= count <= U16_MAX:
        raise InvalidDates(f"{day.isoformat()} outside the representable range")
    return count


def from_day_count(count: int) -> datetime.date:
    """u16 day count -> calendar date."""
    if not 0 <= count <= U16_MAX:
        raise InvalidDates(f"day count {count} outside 0..{U16_MAX}")
    return DAY_EPOCH + datetime.timedelta(days=count)


def _encoded_name(name: str) -> bytes:
    if not isinstance(name, str):
        raise InvalidName(f"name must be str, got {type(name).__name__}")
    try:
        raw = name.encode("utf-8")
    except UnicodeEncodeError as exc:
        raise InvalidName(f"name is not encodable as UTF-8: {exc}") from exc
    if not 1 <= len(raw) <= NAME_MAX_BYTES:
        raise InvalidName(f"name must be 1..{NAME_MAX_BYTES} bytes, got {len(raw)}")
    if 0 in raw:
        raise InvalidName("name contains NUL byte")
    return raw


@dataclass(frozen=True)
class ProductRecord:
    """Immutable product payload; validated on construction."""

    product_id: int
    name: str
    price_minor: int
    manufacturing_date: int = 0
    expiry_date: int = 0
    delivery_date: int = 0

    def __post_init__(self):
        if not 0 <= self.product_id <= U32_MAX:
            raise ValueError(f"product_id {self.product_id} outside 0..{U32_MAX}")
        if not 0 <= self.price_minor <= U32_MAX:
            raise ValueError(f"price_minor {self.price_minor} outside 0..{U32_MAX}")
        _encoded_name(self.name)
        for label, value in (("manufacturing_date", self.manufacturing_date),
                             ("expiry_date", self.expiry_date),
                             ("delivery_date", self.delivery_date)):
            if not 0 <= value <= U16_MAX:
                raise InvalidDates(f"{label} {value} outside 0..{U16_MAX}")
        if self.expiry_date < self.manufacturing_date:
            raise InvalidDates(
                f"expiry day {self.expiry_date} before manufacturing "
                f"day {self.manufacturing_date}")

    @property
    def encoded_length(self) -> int:
        return 16 + len(self.name.encode("utf-8"))

    @property
    def sku(self) -> str:
        return str(self.product_id)


def encode_record(record: ProductRecord) -> bytes:
    """Serialize a record to its canonical byte form."""
    return _kernels.encode_record(
        record.product_id,
        _encoded_name(record.name),
        record.price_minor,
        record.manufacturing_date,
        record.expiry_date,
        record.delivery_date,
    )


def decode_record(data: bytes) -> ProductRecord:
    """Parse bytes back into a record; strict inverse of encode_record.

    Rejects wrong version, truncation and trailing bytes. Field
    invariants are re-checked by the ProductRecord constructor, so an
    encoded stream with e.g. expiry before manufacturing raises
    InvalidDates.
    """
    pid, raw_name, price, mfg, exp, dlv = _kernels.decode_record_fields(data)
    try:
        name = raw_name.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidName(f"name is not valid UTF-8: {exc}") from exc
    return ProductRecord(
        product_id=pid,
        name=name,
        price_minor=price,
        manufacturing_date=mfg,
        expiry_date=exp,
        delivery_date=dlv,
    )


def hex_dump(data: bytes) -> str:
    """Debug rendering: two hex digits per byte, space-separated,
    16 bytes per line, trailing newline."""
    lines = []
    for start in range(0, len(data), 16):
        chunk = data[start:start + 16]
        lines.append(" ".join(f"{b:02x}" for b in chunk))
    return "\n".join(lines) + "\n"

"""Catalog, stock and checkout state machine with event-log persistence.

State changes flow through exactly one path: a command validates its
preconditions, appends an event, and the event is applied by the same
code replay uses. That makes replay-equals-live a structural property
instead of something to test around.

Event log: one JSON object per line with fields seq, kind, ts
(RFC 3339 UTC) and payload; seq is gap-free from 1. Snapshot: a single
canonical JSON document {"items": [...], "next_receipt_id": n,
"last_seq": n} with sorted keys, so two equal states serialize to
identical bytes.
"""

import enum
import json
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable, Optional

from nfcinv.barcodes import BarcodeLabel, Symbology, ean13_code_for_product, parse_ean13
from nfcinv.errors import (
    AlreadySold,
    BarcodeError,
    CorruptLog,
    DuplicateSku,
    ImmutableCarrier,
    ItemSold,
    MalformedPayload,
    ScanFailed,
    StoreError,
    TagError,
    TagLocked,
    UnknownCarrier,
    UnknownProduct,
)
from nfcinv.records import ProductRecord, decode_record
from nfcinv.scan import ScanOutcome
from nfcinv.tags import Type2Tag, blank_tag, mint_uid, write_tag


class CarrierKind(str, enum.Enum):
    NFC = "NFC"
    BARCODE = "BARCODE"


class ItemStatus(str, enum.Enum):
    IN_STOCK = "IN_STOCK"
    SOLD = "SOLD"


class EventKind(str, enum.Enum):
    PROVISIONED = "PROVISIONED"
    SOLD = "SOLD"
    REPRICED = "REPRICED"


@dataclass(frozen=True)
class Carrier:
    """The physical data medium bound to an item: a tag or a label.

    `ref` is the lookup key (UID hex for tags, the EAN-13 code for
    labels). `generation` counts printed label replacements; it stays
    1 for tags, which are rewritten in place.
    """

    kind: CarrierKind
    ref: str
    tag: Optional[Type2Tag] = None
    label: Optional[BarcodeLabel] = None
    generation: int = 1


@dataclass(frozen=True)
class InventoryItem:
    sku: str
    record: ProductRecord
    carrier: Carrier
    status: ItemStatus = ItemStatus.IN_STOCK
    sold_at: Optional[str] = None


@dataclass(frozen=True)
class ReceiptLine:
    sku: str
    name: str
    price_minor: int


@dataclass(frozen=True)
class Receipt:
    receipt_id: int
    lines: tuple[ReceiptLine, ...]
    total_minor: int
    issued_at: str

    def __post_init__(self):
        if not self.lines:
            raise ValueError("receipt must have at least one line")
        if self.total_minor != sum(line.price_minor for line in self.lines):
            raise ValueError("receipt total does not match its lines")


@dataclass(frozen=True)
class StoreEvent:
    seq: int
    kind: EventKind
    ts: str
    payload: dict

    def to_json(self) -> str:
        doc = {"seq": self.seq, "kind": self.kind.value, "ts": self.ts,
               "payload": self.payload}
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _utc_now() -> datetime:
    return datetime.now(timezone.utc)


def _rfc3339(moment: datetime) -> str:
    return moment.astimezone(timezone.utc).isoformat().replace("+00:00", "Z")


def parse_event_line(line: str) -> StoreEvent:
    """One log line -> event; any defect is CorruptLog."""
    try:
        doc = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorruptLog(f"bad log line: {exc}") from exc
    if not isinstance(doc, dict):
        raise CorruptLog("log line is not a JSON object")
    missing = {"seq", "kind", "ts", "payload"} - doc.keys()
    if missing:
        raise CorruptLog(f"log line missing fields: {sorted(missing)}")
    try:
        kind = EventKind(doc["kind"])
    except ValueError as exc:
        raise CorruptLog(f"unknown event kind {doc['kind']!r}") from exc
    if not isinstance(doc["seq"], int):
        raise CorruptLog("event seq must be an integer")
    if not isinstance(doc["payload"], dict):
        raise CorruptLog("event payload must be an object")
    return StoreEvent(seq=doc["seq"], kind=kind, ts=doc["ts"],
                      payload=doc["payload"])


class EventLog:
    """Append-only JSONL file with LF endings, flushed per event."""

    def __init__(self, path: Path):
        self.path = Path(path)

    def append(self, event: StoreEvent) -> None:
        with self.path.open("a", encoding="utf-8", newline="\n") as fh:
            fh.write(event.to_json() + "\n")

    def read(self) -> list[StoreEvent]:
        if not self.path.exists():
            return []
        events = []
        with self.path.open("r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    events.append(parse_event_line(line))
        return events


def _record_payload(record: ProductRecord) -> dict:
    return {
        "product_id": record.product_id,
        "name": record.name,
        "price_minor": record.price_minor,
        "manufacturing_date": record.manufacturing_date,
        "expiry_date": record.expiry_date,
        "delivery_date": record.delivery_date,
    }


class Store:
    """Single-writer inventory: all mutations serialize on one lock in
    arrival order; values crossing the boundary are immutable."""

    def __init__(self, data_dir: Optional[str | Path] = None,
                 clock: Callable[[], datetime] = _utc_now):
        self._lock = threading.RLock()
        self._clock = clock
        self._items: dict[str, InventoryItem] = {}
        self._by_carrier: dict[str, str] = {}
        self._receipts: dict[int, Receipt] = {}
        self._events: list[StoreEvent] = []
        self._next_receipt_id = 1
        self._uid_serial = 0
        self._log: Optional[EventLog] = None
        if data_dir is not None:
            data_dir = Path(data_dir)
            data_dir.mkdir(parents=True, exist_ok=True)
            self._log = EventLog(data_dir / "events.jsonl")
            for event in self._log.read():
                self._ingest(event)

    @classmethod
    def replay(cls, events: Iterable[StoreEvent]) -> "Store":
        """Rebuild an in-memory store from an event sequence."""
        store = cls()
        for event in events:
            store._ingest(event)
        return store

    # -- command side -----------------------------------------------------

    def provision(self, record: ProductRecord,
                  carrier_kind: CarrierKind) -> InventoryItem:
        """Bind a new record to a freshly minted carrier.

        Tags get a deterministic fresh UID and the record written to
        them; barcode items get an EAN-13 label for the product id.
        """
        carrier_kind = CarrierKind(carrier_kind)
        with self._lock:
            sku = record.sku
            if sku in self._items:
                raise DuplicateSku(f"sku {sku} already provisioned")
            if carrier_kind is CarrierKind.NFC:
                ref = mint_uid(self._uid_serial + 1).hex()
            else:
                ref = ean13_code_for_product(record.product_id)
            self._append(EventKind.PROVISIONED, {
                "sku": sku,
                "carrier_kind": carrier_kind.value,
                "carrier_ref": ref,
                "record": _record_payload(record),
            })
            return self._items[sku]

    def checkout(self, scan: ScanOutcome) -> Receipt:
        """Fig-style sale flow: decode the scan payload, look the item
        up, mark it sold and issue a single-line receipt at the price
        currently stored in the catalog."""
        with self._lock:
            if not scan.success:
                raise ScanFailed(scan.failure_reason)
            sku = self._sku_from_payload(scan.payload)
            item = self._items.get(sku)
            if item is None:
                raise UnknownProduct(f"product {sku} is not in the catalog")
            if item.status is ItemStatus.SOLD:
                raise AlreadySold(f"item {sku} was already sold")
            receipt_id = self._next_receipt_id
            self._append(EventKind.SOLD, {
                "sku": sku,
                "receipt_id": receipt_id,
                "name": item.record.name,
                "price_minor": item.record.price_minor,
            })
            return self._receipts[receipt_id]

    def reprice(self, carrier_ref: str, new_price_minor: int) -> InventoryItem:
        """Rewrite the price on a tag-carried item. Printed labels are
        immutable; use replace_label for those."""
        with self._lock:
            item = self._require_carrier(carrier_ref)
            if item.status is ItemStatus.SOLD:
                raise ItemSold(f"item {item.sku} was sold; cannot reprice")
            if item.carrier.kind is CarrierKind.BARCODE:
                raise ImmutableCarrier(
                    f"item {item.sku} carries a printed label; print a "
                    f"replacement label instead")
            if item.carrier.tag is not None and item.carrier.tag.write_locked:
                raise TagLocked(f"tag {carrier_ref} is write-locked")
            replace(item.record, price_minor=new_price_minor)  # validates range
            self._append(EventKind.REPRICED, {
                "sku": item.sku,
                "new_price_minor": new_price_minor,
                "carrier_kind": item.carrier.kind.value,
                "generation": item.carrier.generation,
            })
            return self._items[item.sku]

    def replace_label(self, carrier_ref: str,
                      new_price_minor: int) -> InventoryItem:
        """Retire a printed label and mint its replacement (same code,
        next generation) carrying the new price."""
        with self._lock:
            item = self._require_carrier(carrier_ref)
            if item.status is ItemStatus.SOLD:
                raise ItemSold(f"item {item.sku} was sold; cannot relabel")
            if item.carrier.kind is not CarrierKind.BARCODE:
                raise ValueError("replace_label applies to barcode carriers")
            replace(item.record, price_minor=new_price_minor)
            self._append(EventKind.REPRICED, {
                "sku": item.sku,
                "new_price_minor": new_price_minor,
                "carrier_kind": item.carrier.kind.value,
                "generation": item.carrier.generation + 1,
            })
            return self._items[item.sku]

    # -- query side -------------------------------------------------------

    def items(self, status: Optional[ItemStatus] = None) -> list[InventoryItem]:
        with self._lock:
            rows = sorted(self._items.values(), key=lambda it: int(it.sku))
            if status is not None:
                rows = [it for it in rows if it.status is status]
            return rows

    def get_item(self, sku: str) -> Optional[InventoryItem]:
        with self._lock:
            return self._items.get(sku)

    def get_by_carrier(self, carrier_ref: str) -> Optional[InventoryItem]:
        with self._lock:
            sku = self._by_carrier.get(carrier_ref)
            return self._items.get(sku) if sku is not None else None

    def receipt(self, receipt_id: int) -> Optional[Receipt]:
        with self._lock:
            return self._receipts.get(receipt_id)

    def receipts(self) -> list[Receipt]:
        with self._lock:
            return [self._receipts[k] for k in sorted(self._receipts)]

    def events(self) -> list[StoreEvent]:
        with self._lock:
            return list(self._events)

    @property
    def next_receipt_id(self) -> int:
        with self._lock:
            return self._next_receipt_id

    # -- snapshot ---------------------------------------------------------

    def snapshot_doc(self) -> dict:
        with self._lock:
            items = []
            for item in sorted(self._items.values(), key=lambda it: int(it.sku)):
                carrier = {
                    "kind": item.carrier.kind.value,
                    "ref": item.carrier.ref,
                    "generation": item.carrier.generation,
                }
                if item.carrier.tag is not None:
                    carrier["tag_hex"] = item.carrier.tag.data.hex()
                    carrier["write_locked"] = item.carrier.tag.write_locked
                items.append({
                    "sku": item.sku,
                    "status": item.status.value,
                    "sold_at": item.sold_at,
                    "record": _record_payload(item.record),
                    "carrier": carrier,
                })
            return {
                "items": items,
                "next_receipt_id": self._next_receipt_id,
                "last_seq": len(self._events),
            }

    def snapshot_bytes(self) -> bytes:
        doc = json.dumps(self.snapshot_doc(), sort_keys=True,
                         separators=(",", ":"))
        return doc.encode("utf-8") + b"\n"

    def write_snapshot(self, path: str | Path) -> None:
        Path(path).write_bytes(self.snapshot_bytes())

    # -- internals --------------------------------------------------------

    def _require_carrier(self, carrier_ref: str) -> InventoryItem:
        item = self.get_by_carrier(carrier_ref)
        if item is None:
            raise UnknownCarrier(f"no item bound to carrier {carrier_ref!r}")
        return item

    def _sku_from_payload(self, payload) -> str:
        if payload is None:
            raise MalformedPayload("scan returned no payload")
        if isinstance(payload, (bytes, bytearray)):
            try:
                record = decode_record(bytes(payload))
            except TagError as exc:
                raise MalformedPayload(f"undecodable tag payload: {exc}") from exc
            return record.sku
        if isinstance(payload, str):
            try:
                return str(parse_ean13(payload))
            except BarcodeError as exc:
                raise MalformedPayload(f"bad label code: {exc}") from exc
        raise MalformedPayload(f"unsupported payload type {type(payload).__name__}")

    def _append(self, kind: EventKind, payload: dict) -> StoreEvent:
        event = StoreEvent(seq=len(self._events) + 1, kind=kind,
                           ts=_rfc3339(self._clock()), payload=payload)
        if self._log is not None:
            self._log.append(event)
        self._events.append(event)
        self._apply(event)
        return event

    def _ingest(self, event: StoreEvent) -> None:
        """Replay path: validate sequencing, then apply."""
        expected = len(self._events) + 1
        if event.seq != expected:
            raise CorruptLog(f"expected seq {expected}, got {event.seq}")
        if not isinstance(event.kind, EventKind):
            raise CorruptLog(f"unknown event kind {event.kind!r}")
        self._events.append(event)
        try:
            self._apply(event)
        except (StoreError, TagError, KeyError, TypeError) as exc:
            raise CorruptLog(f"event {event.seq} does not apply: {exc}") from exc

    def _apply(self, event: StoreEvent) -> None:
        payload = event.payload
        if event.kind is EventKind.PROVISIONED:
            record = ProductRecord(**payload["record"])
            kind = CarrierKind(payload["carrier_kind"])
            ref = payload["carrier_ref"]
            if kind is CarrierKind.NFC:
                uid = bytes.fromhex(ref)
                tag = write_tag(blank_tag(uid), record)
                carrier = Carrier(kind=kind, ref=ref, tag=tag)
                self._uid_serial = max(self._uid_serial,
                                       int.from_bytes(uid[1:], "big"))
            else:
                label = BarcodeLabel(Symbology.EAN13, ref)
                carrier = Carrier(kind=kind, ref=ref, label=label)
            item = InventoryItem(sku=payload["sku"], record=record,
                                 carrier=carrier)
            self._items[item.sku] = item
            self._by_carrier[ref] = item.sku
        elif event.kind is EventKind.SOLD:
            item = self._items[payload["sku"]]
            self._items[item.sku] = replace(item, status=ItemStatus.SOLD,
                                            sold_at=event.ts)
            receipt_id = payload["receipt_id"]
            line = ReceiptLine(sku=item.sku, name=payload["name"],
                               price_minor=payload["price_minor"])
            self._receipts[receipt_id] = Receipt(
                receipt_id=receipt_id, lines=(line,),
                total_minor=line.price_minor, issued_at=event.ts)
            self._next_receipt_id = receipt_id + 1
        elif event.kind is EventKind.REPRICED:
            item = self._items[payload["sku"]]
            record = replace(item.record,
                             price_minor=payload["new_price_minor"])
            carrier = item.carrier
            if carrier.kind is CarrierKind.NFC:
                carrier = replace(carrier, tag=write_tag(carrier.tag, record))
            else:
                carrier = replace(carrier, generation=payload["generation"])
            self._items[item.sku] = replace(item, record=record,
                                            carrier=carrier)

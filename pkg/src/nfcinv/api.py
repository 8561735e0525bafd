"""HTTP/JSON facade over the store and the scan simulator.

Scan and checkout are deliberately split: POST /api/scan simulates the
read and returns a short-lived scan_token, and POST /api/checkout
commits the sale for that token. Modeled scan failures (ANGLE, RANGE,
DAMAGE, SIZE) are 200 responses with success=false, never errors.

Every modeled error maps to one (status, code) pair; 500 is never used
for modeled outcomes. Malformed JSON or body shape is 400.
"""

import secrets
import threading
import time
from typing import Callable, Literal, Optional

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from nfcinv import errors
from nfcinv.barcodes import Damage
from nfcinv.records import ProductRecord
from nfcinv.scan import (
    ReaderKind,
    ScanContext,
    ScanOutcome,
    SimConfig,
    scan_barcode,
    scan_nfc,
    sweep_csv,
)
from nfcinv.store import CarrierKind, InventoryItem, ItemStatus, Receipt, Store

SCAN_TOKEN_TTL_S = 60.0

# (status, code) per core error; first matching class in MRO order wins.
ERROR_MAP = [
    (errors.DuplicateSku, 409, "DUPLICATE_SKU"),
    (errors.AlreadySold, 409, "ALREADY_SOLD"),
    (errors.ItemSold, 409, "ITEM_SOLD"),
    (errors.ImmutableCarrier, 409, "IMMUTABLE_CARRIER"),
    (errors.ScanFailed, 409, "SCAN_FAILED"),
    (errors.UnknownProduct, 404, "UNKNOWN_PRODUCT"),
    (errors.UnknownCarrier, 404, "UNKNOWN_CARRIER"),
    (errors.MalformedPayload, 422, "MALFORMED_PAYLOAD"),
    (errors.TagLocked, 409, "TAG_LOCKED"),
    (errors.CapacityExceeded, 422, "CAPACITY_EXCEEDED"),
    (errors.InvalidName, 422, "INVALID_NAME"),
    (errors.InvalidDates, 422, "INVALID_DATES"),
    (errors.TagError, 422, "INVALID_RECORD"),
    (errors.BarcodeError, 422, "INVALID_CODE"),
    (errors.StoreError, 409, "STORE_ERROR"),
    (ValueError, 422, "INVALID_VALUE"),
]


class RecordBody(BaseModel):
    product_id: int
    name: str
    price_minor: int
    manufacturing_date: int = 0
    expiry_date: int = 0
    delivery_date: int = 0


class ProvisionBody(BaseModel):
    record: RecordBody
    carrier_kind: Literal["NFC", "BARCODE"]


class ScanBody(BaseModel):
    carrier_ref: str
    tilt_deg: int = 0
    distance_cm: float = 0.0
    damage: Literal["NONE", "SCRATCHED", "WRINKLED"] = "NONE"


class CheckoutBody(BaseModel):
    scan_token: str


class RepriceBody(BaseModel):
    new_price_minor: int
    replace_label: bool = False


class TokenRegistry:
    """Maps scan tokens to their outcomes until they expire."""

    def __init__(self, ttl_s: float = SCAN_TOKEN_TTL_S,
                 now: Callable[[], float] = time.monotonic):
        self._ttl = ttl_s
        self._now = now
        self._lock = threading.Lock()
        self._tokens: dict[str, tuple[float, ScanOutcome]] = {}

    def issue(self, outcome: ScanOutcome) -> str:
        token = secrets.token_hex(16)
        with self._lock:
            self._tokens[token] = (self._now() + self._ttl, outcome)
        return token

    def redeem(self, token: str) -> Optional[ScanOutcome]:
        with self._lock:
            entry = self._tokens.get(token)
            if entry is None:
                return None
            expires_at, outcome = entry
            if self._now() > expires_at:
                del self._tokens[token]
                return None
            return outcome


def item_json(item: InventoryItem) -> dict:
    doc = {
        "sku": item.sku,
        "status": item.status.value,
        "sold_at": item.sold_at,
        "record": {
            "product_id": item.record.product_id,
            "name": item.record.name,
            "price_minor": item.record.price_minor,
            "manufacturing_date": item.record.manufacturing_date,
            "expiry_date": item.record.expiry_date,
            "delivery_date": item.record.delivery_date,
        },
        "carrier": {
            "kind": item.carrier.kind.value,
            "ref": item.carrier.ref,
            "generation": item.carrier.generation,
        },
    }
    if item.carrier.label is not None:
        doc["carrier"]["width_mm"] = item.carrier.label.width_mm
    return doc


def receipt_json(receipt: Receipt) -> dict:
    return {
        "receipt_id": receipt.receipt_id,
        "lines": [{"sku": ln.sku, "name": ln.name,
                   "price_minor": ln.price_minor} for ln in receipt.lines],
        "total_minor": receipt.total_minor,
        "issued_at": receipt.issued_at,
    }


def outcome_json(outcome: ScanOutcome, token: Optional[str] = None) -> dict:
    payload = outcome.payload
    if isinstance(payload, (bytes, bytearray)):
        payload = bytes(payload).hex()
    doc = {
        "success": outcome.success,
        "failure_reason": (outcome.failure_reason.value
                           if outcome.failure_reason else None),
        "latency_ms": outcome.latency_ms,
        "payload": payload,
    }
    if token is not None:
        doc["scan_token"] = token
    return doc


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"code": code, "message": message})


def create_app(store: Store, *, sim: Optional[SimConfig] = None,
               token_ttl_s: float = SCAN_TOKEN_TTL_S,
               now: Callable[[], float] = time.monotonic,
               ui_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="nfcinv", docs_url=None, redoc_url=None)
    tokens = TokenRegistry(ttl_s=token_ttl_s, now=now)
    sim_config = sim or SimConfig()

    @app.exception_handler(RequestValidationError)
    async def bad_body(request: Request, exc: RequestValidationError):
        return _error_response(400, "BAD_REQUEST", str(exc.errors()[:1]))

    @app.exception_handler(ValueError)
    async def core_error(request: Request, exc: ValueError):
        for klass, status, code in ERROR_MAP:
            if isinstance(exc, klass):
                return _error_response(status, code, str(exc))
        raise exc

    @app.get("/api/items")
    def list_items(status: Optional[Literal["IN_STOCK", "SOLD"]] = None,
                   limit: Optional[int] = Query(default=None, ge=1)):
        wanted = ItemStatus(status) if status else None
        rows = store.items(status=wanted)
        if limit is not None:
            rows = rows[:limit]
        return {"items": [item_json(it) for it in rows]}

    @app.post("/api/items", status_code=201)
    def provision(body: ProvisionBody):
        record = ProductRecord(**body.record.model_dump())
        item = store.provision(record, CarrierKind(body.carrier_kind))
        return item_json(item)

    @app.post("/api/scan")
    def scan(body: ScanBody):
        item = store.get_by_carrier(body.carrier_ref)
        if item is None:
            raise errors.UnknownCarrier(
                f"no item bound to carrier {body.carrier_ref!r}")
        if item.carrier.kind is CarrierKind.NFC:
            ctx = ScanContext(reader=ReaderKind.NFC_READER,
                              tilt_deg=body.tilt_deg,
                              distance_cm=body.distance_cm,
                              damage=Damage(body.damage))
            outcome = scan_nfc(item.carrier.tag, ctx)
        else:
            ctx = ScanContext(reader=ReaderKind.BARCODE_READER,
                              tilt_deg=body.tilt_deg,
                              distance_cm=body.distance_cm,
                              damage=Damage(body.damage))
            outcome = scan_barcode(item.carrier.label, ctx, sim_config)
        token = tokens.issue(outcome) if outcome.success else None
        return outcome_json(outcome, token)

    @app.post("/api/checkout")
    def checkout(body: CheckoutBody):
        outcome = tokens.redeem(body.scan_token)
        if outcome is None:
            return _error_response(410, "TOKEN_EXPIRED",
                                   "scan token expired or unknown")
        receipt = store.checkout(outcome)
        return receipt_json(receipt)

    @app.post("/api/items/{sku}/reprice")
    def reprice(sku: str, body: RepriceBody):
        item = store.get_item(sku)
        if item is None:
            raise errors.UnknownProduct(f"product {sku} is not in the catalog")
        if body.replace_label and item.carrier.kind is CarrierKind.BARCODE:
            updated = store.replace_label(item.carrier.ref,
                                          body.new_price_minor)
        else:
            updated = store.reprice(item.carrier.ref, body.new_price_minor)
        return item_json(updated)

    @app.get("/api/receipts/{receipt_id}")
    def get_receipt(receipt_id: int):
        receipt = store.receipt(receipt_id)
        if receipt is None:
            return _error_response(404, "UNKNOWN_RECEIPT",
                                   f"no receipt {receipt_id}")
        return receipt_json(receipt)

    @app.get("/api/experiments/angle-sweep")
    def angle_sweep(technology: Literal["barcode", "nfc"],
                    step: int = Query(default=1, ge=1)):
        return PlainTextResponse(sweep_csv(technology, step),
                                 media_type="text/csv")

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app

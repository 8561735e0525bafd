"""NFC vs. barcode retail inventory toolkit.

Subsystems: record/tag codec (records, tags), barcode codecs and the
width model (barcodes), the scan-link simulator (scan), the
event-sourced store (store), the HTTP facade (api) and the experiment
CLI (experiments, cli). Byte-level hot paths live in _kernels, which
picks the compiled extension when it is built.
"""

from nfcinv._kernels import ACCELERATED, IMPLEMENTATION
from nfcinv.barcodes import (
    BarcodeLabel,
    Damage,
    Readability,
    Symbology,
    code39_check_char,
    ean_check_digit,
    readability_class,
    validate,
    width_model,
)
from nfcinv.records import ProductRecord, decode_record, encode_record, hex_dump
from nfcinv.scan import (
    FailureReason,
    ReaderKind,
    ScanContext,
    ScanOutcome,
    SimConfig,
    scan_barcode,
    scan_nfc,
    sweep_angles,
)
from nfcinv.store import CarrierKind, InventoryItem, Receipt, Store, StoreEvent
from nfcinv.tags import Type2Tag, blank_tag, mint_uid, read_tag, write_tag

__version__ = "0.1.0"

__all__ = [
    "ACCELERATED",
    "IMPLEMENTATION",
    "BarcodeLabel",
    "CarrierKind",
    "Damage",
    "FailureReason",
    "InventoryItem",
    "ProductRecord",
    "Readability",
    "ReaderKind",
    "Receipt",
    "ScanContext",
    "ScanOutcome",
    "SimConfig",
    "Store",
    "StoreEvent",
    "Symbology",
    "Type2Tag",
    "blank_tag",
    "code39_check_char",
    "decode_record",
    "ean_check_digit",
    "encode_record",
    "hex_dump",
    "mint_uid",
    "read_tag",
    "readability_class",
    "scan_barcode",
    "scan_nfc",
    "sweep_angles",
    "validate",
    "width_model",
    "write_tag",
]

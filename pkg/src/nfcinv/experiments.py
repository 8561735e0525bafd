"""Reproducible comparison tables for the two carrier technologies.

All output is CSV with LF endings and fixed 2-decimal formatting
(C-locale decimal point), so repeated runs are byte-identical and can
be pinned as golden files.
"""

from nfcinv.barcodes import Readability, readability_class, width_model
from nfcinv.scan import (
    NFC_FOOTPRINT_MM,
    ReaderKind,
    ScanContext,
    scan_barcode,
    scan_nfc,
    _reference_label,
)
from nfcinv.tags import Type2Tag, mint_uid
from nfcinv import _kernels

BARCODE_TABLE_COUNTS = (8, 12, 20, 30)
NFC_TABLE_COUNTS = (8, 20, 128)
LATENCY_PAYLOAD_BYTES = 125  # largest payload the TLV frame can carry


def angle_table_csv(step_deg: int = 1) -> str:
    """Full-circle readability for both technologies.

    Barcode tilts above 180 are evaluated through the symmetric fold
    (352..359 read like 8..1) and carry folded=true so the mirrored
    band is distinguishable from the directly measured 0..172 range.
    """
    if step_deg < 1:
        raise ValueError(f"step must be >= 1, got {step_deg}")
    label = _reference_label()
    lines = ["technology,angle_deg,readable,folded"]
    for angle in range(0, 360, step_deg):
        ctx = ScanContext(reader=ReaderKind.BARCODE_READER, tilt_deg=angle)
        readable = scan_barcode(label, ctx).success
        folded = angle > 180
        lines.append(f"barcode,{angle},{_b(readable)},{_b(folded)}")
    tag = _latency_tag()
    for angle in range(0, 360, step_deg):
        ctx = ScanContext(reader=ReaderKind.NFC_READER, tilt_deg=angle,
                          distance_cm=5.0)
        readable = scan_nfc(tag, ctx).success
        lines.append(f"nfc,{angle},{_b(readable)},false")
    return "\n".join(lines) + "\n"


def size_table_csv() -> str:
    """Width and readability class per character count.

    Barcode width follows the measured width model; the tag footprint
    is constant, so its class never degrades with capacity.
    """
    lines = ["technology,char_count,size_mm,readability"]
    for count in BARCODE_TABLE_COUNTS:
        width = width_model(count)
        lines.append(
            f"barcode,{count},{width:.2f},{readability_class(width).value}")
    for count in NFC_TABLE_COUNTS:
        lines.append(
            f"nfc,{count},{NFC_FOOTPRINT_MM:.2f},{Readability.EASY.value}")
    return "\n".join(lines) + "\n"


def latency_compare_csv(n_items: int) -> str:
    """Mean per-item scan latency for a lane of n identical items."""
    if n_items < 1:
        raise ValueError(f"n_items must be >= 1, got {n_items}")
    label = _reference_label()
    tag = _latency_tag()
    barcode_total = 0.0
    nfc_total = 0.0
    for _ in range(n_items):
        ctx = ScanContext(reader=ReaderKind.BARCODE_READER)
        barcode_total += scan_barcode(label, ctx).latency_ms
        ctx = ScanContext(reader=ReaderKind.NFC_READER, distance_cm=4.0)
        nfc_total += scan_nfc(tag, ctx).latency_ms
    lines = [
        "technology,items,mean_latency_ms",
        f"barcode,{n_items},{barcode_total / n_items:.2f}",
        f"nfc,{n_items},{nfc_total / n_items:.2f}",
    ]
    return "\n".join(lines) + "\n"


def _latency_tag() -> Type2Tag:
    payload = bytes(range(LATENCY_PAYLOAD_BYTES))
    return Type2Tag(uid=mint_uid(2), data=_kernels.tlv_wrap(payload))


def _b(value: bool) -> str:
    return "true" if value else "false"

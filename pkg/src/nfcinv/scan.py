"""Deterministic read-attempt simulation for both carrier technologies.

The model captures the measured contrasts between the two links:

* barcode reads need alignment (readable band 0..8 degrees of reader
  tilt, folded symmetrically around the label), fail on any physical
  damage, and degrade as the printed label gets wider;
* the short-range link reads at any angle and any damage state, and
  only fails out of range (10 cm); its latency is a 10 ms setup cost
  plus payload bits at 424 kbps.

Everything is pure given its inputs. Stochastic behaviour (DIFFICULT
labels succeeding with some probability) exists behind SimConfig and
requires an explicitly seeded generator; the default mode is fully
deterministic and is what every experiment and test uses.
"""

import enum
import math
import random
from dataclasses import dataclass

from nfcinv.barcodes import (
    BarcodeLabel,
    Damage,
    Readability,
    Symbology,
    readability_class,
)
from nfcinv.errors import BlankTag, MalformedTlv
from nfcinv.records import ProductRecord
from nfcinv.tags import Type2Tag, blank_tag, mint_uid, tag_payload, write_tag

BARCODE_MAX_TILT_DEG = 8
BARCODE_SWEEP_MAX_DEG = 172
BARCODE_TRIGGER_MS = 300.0  # synthetic fixed trigger-and-decode time

NFC_RANGE_CM = 10.0
NFC_SETUP_MS = 10.0  # synthetic instant-pairing setup cost
NFC_RATE_KBPS = 424.0
NFC_FOOTPRINT_MM = 35.0  # fixed tag footprint, size-independent


class ReaderKind(str, enum.Enum):
    BARCODE_READER = "BARCODE_READER"
    NFC_READER = "NFC_READER"


class FailureReason(str, enum.Enum):
    ANGLE = "ANGLE"
    RANGE = "RANGE"
    DAMAGE = "DAMAGE"
    SIZE = "SIZE"
    MISMATCH = "MISMATCH"


@dataclass(frozen=True)
class ScanContext:
    """One read attempt: reader pose and label condition."""

    reader: ReaderKind
    tilt_deg: int = 0
    distance_cm: float = 0.0
    damage: Damage = Damage.NONE

    def __post_init__(self):
        object.__setattr__(self, "tilt_deg", int(self.tilt_deg) % 360)
        if not math.isfinite(self.distance_cm) or self.distance_cm < 0:
            raise ValueError(f"distance must be finite and >= 0, got {self.distance_cm}")


@dataclass(frozen=True)
class ScanOutcome:
    success: bool
    failure_reason: FailureReason | None = None
    latency_ms: float = 0.0
    payload: bytes | str | None = None

    def __post_init__(self):
        if self.success == (self.failure_reason is not None):
            raise ValueError("exactly one of success / failure_reason required")
        if self.success and self.latency_ms <= 0:
            raise ValueError("successful scans must report positive latency")


@dataclass(frozen=True)
class SimConfig:
    """Scan model configuration.

    Deterministic by default. In stochastic mode, DIFFICULT-width
    labels succeed with `difficult_success_prob`, drawn from the
    explicitly provided generator; there is no hidden global state.
    """

    stochastic: bool = False
    difficult_success_prob: float = 0.5
    rng: random.Random | None = None

    def __post_init__(self):
        if self.stochastic and self.rng is None:
            raise ValueError("stochastic mode requires an explicitly seeded rng")

    @classmethod
    def seeded(cls, seed: int, difficult_success_prob: float = 0.5) -> "SimConfig":
        return cls(stochastic=True,
                   difficult_success_prob=difficult_success_prob,
                   rng=random.Random(seed))


_DETERMINISTIC = SimConfig()


def effective_tilt(tilt_deg: int) -> int:
    """Fold a [0, 360) tilt into [0, 180]: a flat label looks the same
    from both sides, so 352 degrees reads like 8."""
    tilt_deg %= 360
    return tilt_deg if tilt_deg <= 180 else 360 - tilt_deg


def nfc_read_latency_ms(payload_bytes: int) -> float:
    """Setup cost plus payload transfer time at the link rate."""
    return NFC_SETUP_MS + payload_bytes * 8 / NFC_RATE_KBPS


def _failure(reason: FailureReason) -> ScanOutcome:
    return ScanOutcome(success=False, failure_reason=reason)


def scan_barcode(label: BarcodeLabel, ctx: ScanContext,
                 sim: SimConfig = _DETERMINISTIC) -> ScanOutcome:
    """Attempt an optical read. Checks run in the order MISMATCH,
    DAMAGE, ANGLE, SIZE and the first failure wins."""
    if ctx.reader is not ReaderKind.BARCODE_READER:
        return _failure(FailureReason.MISMATCH)
    damage = ctx.damage if ctx.damage is not Damage.NONE else label.damage
    if damage is not Damage.NONE:
        return _failure(FailureReason.DAMAGE)
    if effective_tilt(ctx.tilt_deg) > BARCODE_MAX_TILT_DEG:
        return _failure(FailureReason.ANGLE)
    klass = readability_class(label.width_mm)
    if klass is Readability.VERY_DIFFICULT:
        return _failure(FailureReason.SIZE)
    if klass is Readability.DIFFICULT and sim.stochastic:
        if sim.rng.random() >= sim.difficult_success_prob:
            return _failure(FailureReason.SIZE)
    return ScanOutcome(success=True, latency_ms=BARCODE_TRIGGER_MS,
                       payload=label.chars)


def scan_nfc(tag: Type2Tag, ctx: ScanContext) -> ScanOutcome:
    """Attempt a short-range read: succeeds at any tilt and any damage
    state as long as the tag is within range. The payload is the raw
    TLV content; blank or damaged frames yield success with no payload
    (decoding problems surface at checkout, not at the link)."""
    if ctx.reader is not ReaderKind.NFC_READER:
        return _failure(FailureReason.MISMATCH)
    if ctx.distance_cm > NFC_RANGE_CM:
        return _failure(FailureReason.RANGE)
    try:
        payload = tag_payload(tag)
    except (BlankTag, MalformedTlv):
        payload = None
    latency = nfc_read_latency_ms(len(payload) if payload is not None else 0)
    return ScanOutcome(success=True, latency_ms=latency, payload=payload)


def _reference_label() -> BarcodeLabel:
    # 8 characters -> 33 mm -> EASY; the sweep isolates the angle effect
    return BarcodeLabel(Symbology.CODE39, "SWEEPREF")


def _reference_tag() -> Type2Tag:
    record = ProductRecord(product_id=1, name="sweep reference", price_minor=0)
    return write_tag(blank_tag(mint_uid(1)), record)


def sweep_angles(technology: str, step_deg: int = 1) -> list[tuple[int, bool]]:
    """Readability over the angle domain for one technology.

    Barcode covers [0, 172]; when the step does not land exactly on
    172 the last sample overshoots so the whole interval is covered
    (step 173 yields angles 0 and 173). NFC covers [0, 360).
    """
    if step_deg < 1:
        raise ValueError(f"step must be >= 1, got {step_deg}")
    technology = technology.lower()
    rows = []
    if technology == "barcode":
        label = _reference_label()
        for angle in range(0, BARCODE_SWEEP_MAX_DEG + step_deg, step_deg):
            ctx = ScanContext(reader=ReaderKind.BARCODE_READER, tilt_deg=angle)
            rows.append((angle, scan_barcode(label, ctx).success))
    elif technology == "nfc":
        tag = _reference_tag()
        for angle in range(0, 360, step_deg):
            ctx = ScanContext(reader=ReaderKind.NFC_READER, tilt_deg=angle,
                              distance_cm=5.0)
            rows.append((angle, scan_nfc(tag, ctx).success))
    else:
        raise ValueError(f"unknown technology {technology!r}")
    return rows


def sweep_csv(technology: str, step_deg: int = 1) -> str:
    """Angle sweep as CSV: technology,angle_deg,readable with LF endings."""
    lines = ["technology,angle_deg,readable"]
    for angle, readable in sweep_angles(technology, step_deg):
        lines.append(f"{technology.lower()},{angle},{'true' if readable else 'false'}")
    return "\n".join(lines) + "\n"

"""Barcode symbologies, check characters and the label width model.

Code 39 uses the standard 43-character alphabet with a mod-43 check
character; EAN-8/EAN-13 use the weighted parity check digit. Geometry
is reduced to a label width in millimetres: printed width grows with
character count (piecewise-linear through measured anchors) and wider
labels fall into worse readability classes.
"""

import enum
from dataclasses import dataclass

from nfcinv import _kernels
from nfcinv.errors import BarcodeError, NonDigit, OutOfRange, WrongLength

CODE39_ALPHABET = _kernels.CODE39_ALPHABET
CODE39_MAX_CHARS = 30

# (char_count, width_mm) anchors; below the first the width clamps,
# above the last it extrapolates with the final 2.8 mm/char slope.
WIDTH_ANCHORS = ((8, 33.0), (12, 35.0), (20, 66.0), (30, 94.0))
WIDTH_MAX_CHARS = 60

EASY_MAX_MM = 50.0
DIFFICULT_MAX_MM = 80.0


class Symbology(str, enum.Enum):
    CODE39 = "CODE39"
    EAN8 = "EAN8"
    EAN13 = "EAN13"


class Damage(str, enum.Enum):
    NONE = "NONE"
    SCRATCHED = "SCRATCHED"
    WRINKLED = "WRINKLED"


class Readability(str, enum.Enum):
    EASY = "EASY"
    DIFFICULT = "DIFFICULT"
    VERY_DIFFICULT = "VERY_DIFFICULT"


def code39_check_char(payload: str) -> str:
    """Mod-43 check character over the standard value table."""
    if not payload:
        raise WrongLength("payload must have at least one character")
    return CODE39_ALPHABET[_kernels.code39_value_sum(payload) % 43]


def ean_check_digit(digits: str) -> int:
    """Check digit for a 7-digit (EAN-8) or 12-digit (EAN-13) payload."""
    if len(digits) not in (7, 12):
        raise WrongLength(f"payload must be 7 or 12 digits, got {len(digits)}")
    return (10 - _kernels.ean_weighted_sum(digits) % 10) % 10


def ean_code(payload: str) -> str:
    """Full EAN code: payload plus computed check digit."""
    return payload + str(ean_check_digit(payload))


def ean13_code_for_product(product_id: int) -> str:
    """EAN-13 code for a product id, zero-padded to 12 digits."""
    if not 0 <= product_id <= 999999999999:
        raise OutOfRange(f"product id {product_id} does not fit 12 digits")
    return ean_code(f"{product_id:012d}")


@dataclass(frozen=True)
class BarcodeLabel:
    """A printed label. Construction derives the physical width from
    the character count; content validity is checked by validate(),
    so labels with a bad check digit are representable (they model
    misprints)."""

    symbology: Symbology
    chars: str
    damage: Damage = Damage.NONE
    width_mm: float = 0.0

    def __post_init__(self):
        if self.width_mm <= 0.0:
            object.__setattr__(self, "width_mm", width_model(len(self.chars)))


def why_invalid(label: BarcodeLabel, require_check_char: bool = False):
    """Reason code for an invalid label, or None if it is valid.

    Reasons: "length", "charset", "check_digit", "check_char".
    """
    chars = label.chars
    if label.symbology is Symbology.CODE39:
        if not 1 <= len(chars) <= CODE39_MAX_CHARS:
            return "length"
        if any(ch not in CODE39_ALPHABET for ch in chars):
            return "charset"
        if require_check_char:
            if len(chars) < 2:
                return "length"
            if code39_check_char(chars[:-1]) != chars[-1]:
                return "check_char"
        return None

    expected = 8 if label.symbology is Symbology.EAN8 else 13
    if len(chars) != expected:
        return "length"
    if not chars.isascii() or not chars.isdigit():
        return "charset"
    if ean_check_digit(chars[:-1]) != int(chars[-1]):
        return "check_digit"
    return None


def validate(label: BarcodeLabel, require_check_char: bool = False) -> bool:
    """True iff alphabet/length invariants hold and the embedded check
    digit (EAN) or trailing check character (Code 39, when requested)
    matches."""
    return why_invalid(label, require_check_char) is None


def width_model(char_count: int) -> float:
    """Printed label width in mm for a given character count."""
    if not 1 <= char_count <= WIDTH_MAX_CHARS:
        raise OutOfRange(
            f"char count {char_count} outside 1..{WIDTH_MAX_CHARS}")
    first_count, first_width = WIDTH_ANCHORS[0]
    if char_count <= first_count:
        return first_width
    for (x0, y0), (x1, y1) in zip(WIDTH_ANCHORS, WIDTH_ANCHORS[1:]):
        if char_count <= x1:
            return y0 + (char_count - x0) * (y1 - y0) / (x1 - x0)
    last_count, last_width = WIDTH_ANCHORS[-1]
    slope = 2.8  # mm/char, slope of the final measured segment
    return last_width + (char_count - last_count) * slope


def readability_class(width_mm: float) -> Readability:
    """Readability class from label width; wider is harder to read."""
    if width_mm <= 0:
        raise OutOfRange(f"width must be positive, got {width_mm}")
    if width_mm <= EASY_MAX_MM:
        return Readability.EASY
    if width_mm <= DIFFICULT_MAX_MM:
        return Readability.DIFFICULT
    return Readability.VERY_DIFFICULT


def parse_ean13(code: str) -> int:
    """Product id from a full EAN-13 code; raises on any defect."""
    if len(code) != 13:
        raise WrongLength(f"EAN-13 code must be 13 digits, got {len(code)}")
    if not code.isascii() or not code.isdigit():
        raise NonDigit("EAN-13 code must be all digits")
    if ean_check_digit(code[:-1]) != int(code[-1]):
        raise BarcodeError(f"bad check digit in {code}")
    return int(code[:12])

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nfcinv.barcodes import (
    CODE39_ALPHABET,
    BarcodeLabel,
    Readability,
    Symbology,
    code39_check_char,
    ean13_code_for_product,
    ean_check_digit,
    ean_code,
    parse_ean13,
    readability_class,
    validate,
    why_invalid,
    width_model,
)
from nfcinv.errors import (
    BarcodeError,
    InvalidCharacter,
    NonDigit,
    OutOfRange,
    WrongLength,
)

# Independent check oracles: hand-written value table and explicit
# per-position weights, no shared code with the implementation.

CODE39_ORACLE_VALUES = {
    "0": 0, "1": 1, "2": 2, "3": 3, "4": 4, "5": 5, "6": 6, "7": 7,
    "8": 8, "9": 9, "A": 10, "B": 11, "C": 12, "D": 13, "E": 14,
    "F": 15, "G": 16, "H": 17, "I": 18, "J": 19, "K": 20, "L": 21,
    "M": 22, "N": 23, "O": 24, "P": 25, "Q": 26, "R": 27, "S": 28,
    "T": 29, "U": 30, "V": 31, "W": 32, "X": 33, "Y": 34, "Z": 35,
    "-": 36, ".": 37, " ": 38, "$": 39, "/": 40, "+": 41, "%": 42,
}
CODE39_ORACLE_CHARS = {v: k for k, v in CODE39_ORACLE_VALUES.items()}


def code39_oracle(payload):
    return CODE39_ORACLE_CHARS[sum(CODE39_ORACLE_VALUES[c] for c in payload) % 43]


def ean_oracle(digits):
    # weights listed per position from the LEFT; rightmost gets 3
    weights = [3 if (len(digits) - 1 - i) % 2 == 0 else 1
               for i in range(len(digits))]
    total = sum(int(d) * w for d, w in zip(digits, weights))
    return (10 - total % 10) % 10


code39_payloads = st.text(alphabet=CODE39_ALPHABET, min_size=1, max_size=30)
# leave room for a trailing check character within the 30-char limit
code39_payloads_with_room = st.text(alphabet=CODE39_ALPHABET, min_size=1,
                                    max_size=29)


class TestCode39:
    def test_single_zero(self):
        assert code39_check_char("0") == "0"

    def test_hello_is_b(self):
        # H17 + E14 + L21 + L21 + O24 = 97; 97 mod 43 = 11 -> 'B'
        assert code39_check_char("HELLO") == "B"
        assert code39_oracle("HELLO") == "B"

    def test_lowercase_rejected(self):
        with pytest.raises(InvalidCharacter):
            code39_check_char("hello")

    def test_empty_rejected(self):
        with pytest.raises(WrongLength):
            code39_check_char("")

    @given(code39_payloads)
    def test_matches_oracle(self, payload):
        assert code39_check_char(payload) == code39_oracle(payload)

    @given(code39_payloads_with_room)
    def test_appending_check_char_validates(self, payload):
        label = BarcodeLabel(Symbology.CODE39,
                             payload + code39_check_char(payload))
        assert validate(label, require_check_char=True)

    @given(code39_payloads_with_room, st.data())
    def test_substitution_is_always_caught(self, payload, data):
        # a single substitution shifts the value sum by a nonzero delta
        # in [-42, 42], so the mod-43 check char always changes
        position = data.draw(st.integers(0, len(payload) - 1))
        replacement = data.draw(st.sampled_from(CODE39_ALPHABET))
        mutated = payload[:position] + replacement + payload[position + 1:]
        if mutated == payload:
            return
        original_check = code39_check_char(payload)
        assert code39_check_char(mutated) != original_check
        label = BarcodeLabel(Symbology.CODE39, mutated + original_check)
        assert not validate(label, require_check_char=True)


class TestEan:
    def test_all_zero_payload(self):
        assert ean_check_digit("0000000") == 0

    def test_known_ean13_payload(self):
        assert ean_check_digit("400638133393") == 1

    def test_known_ean8_payload(self):
        assert ean_check_digit("7351353") == 7

    def test_padded_product_id(self):
        # only the rightmost digit 4 is nonzero; weight 3 -> sum 12 -> check 8
        assert ean_check_digit("000000000004") == 8
        assert ean13_code_for_product(4) == "0000000000048"

    def test_wrong_length(self):
        with pytest.raises(WrongLength):
            ean_check_digit("123456")

    def test_non_digit(self):
        with pytest.raises(NonDigit):
            ean_check_digit("12345a7")

    @given(st.text(alphabet="0123456789", min_size=7, max_size=7))
    def test_ean8_matches_oracle(self, digits):
        assert ean_check_digit(digits) == ean_oracle(digits)

    @given(st.text(alphabet="0123456789", min_size=12, max_size=12))
    def test_ean13_matches_oracle(self, digits):
        assert ean_check_digit(digits) == ean_oracle(digits)

    @given(st.text(alphabet="0123456789", min_size=12, max_size=12),
           st.data())
    def test_single_digit_mutation_fails_validate(self, digits, data):
        code = ean_code(digits)
        position = data.draw(st.integers(0, 12))
        replacement = data.draw(st.sampled_from(
            [d for d in "0123456789" if d != code[position]]))
        mutated = code[:position] + replacement + code[position + 1:]
        assert not validate(BarcodeLabel(Symbology.EAN13, mutated))

    def test_parse_ean13(self):
        assert parse_ean13("4006381333931") == 400638133393
        with pytest.raises(WrongLength):
            parse_ean13("12345678")
        with pytest.raises(NonDigit):
            parse_ean13("400638133393x")
        with pytest.raises(BarcodeError):
            parse_ean13("4006381333932")


class TestValidate:
    def test_valid_ean13(self):
        assert validate(BarcodeLabel(Symbology.EAN13, "4006381333931"))

    def test_mutated_ean13(self):
        label = BarcodeLabel(Symbology.EAN13, "4006381333932")
        assert not validate(label)
        assert why_invalid(label) == "check_digit"

    def test_ean8_wrong_length(self):
        label = BarcodeLabel(Symbology.EAN8, "1234567")
        assert not validate(label)
        assert why_invalid(label) == "length"

    def test_valid_ean8(self):
        assert validate(BarcodeLabel(Symbology.EAN8, "73513537"))

    def test_code39_charset(self):
        label = BarcodeLabel(Symbology.CODE39, "abc")
        assert why_invalid(label) == "charset"

    def test_code39_plain(self):
        assert validate(BarcodeLabel(Symbology.CODE39, "HELLO"))

    def test_code39_with_check(self):
        assert validate(BarcodeLabel(Symbology.CODE39, "HELLOB"),
                        require_check_char=True)
        assert why_invalid(BarcodeLabel(Symbology.CODE39, "HELLOC"),
                           require_check_char=True) == "check_char"


class TestWidthModel:
    @pytest.mark.parametrize("count,expected", [
        (8, 33.0), (12, 35.0), (20, 66.0), (30, 94.0),
    ])
    def test_measured_anchors(self, count, expected):
        assert width_model(count) == expected

    def test_interpolation(self):
        # 35 + (16-12)/(20-12) * (66-35) = 50.5
        assert width_model(16) == pytest.approx(50.5)

    def test_clamp_below_first_anchor(self):
        assert width_model(1) == 33.0
        assert width_model(7) == 33.0

    def test_extrapolation_slope(self):
        assert width_model(31) == pytest.approx(94.0 + 2.8)
        assert width_model(40) == pytest.approx(94.0 + 10 * 2.8)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            width_model(0)
        with pytest.raises(OutOfRange):
            width_model(61)

    @given(st.integers(1, 59))
    def test_monotone_nondecreasing(self, count):
        assert width_model(count + 1) >= width_model(count)


class TestReadabilityClass:
    @pytest.mark.parametrize("width,expected", [
        (33.0, Readability.EASY),
        (50.0, Readability.EASY),
        (50.5, Readability.DIFFICULT),
        (66.0, Readability.DIFFICULT),
        (80.0, Readability.DIFFICULT),
        (94.0, Readability.VERY_DIFFICULT),
    ])
    def test_thresholds(self, width, expected):
        assert readability_class(width) is expected

    def test_positive_width_required(self):
        with pytest.raises(OutOfRange):
            readability_class(0.0)

    @pytest.mark.parametrize("count,expected", [
        (8, Readability.EASY), (12, Readability.EASY),
        (20, Readability.DIFFICULT), (30, Readability.VERY_DIFFICULT),
    ])
    def test_reproduces_measured_classes(self, count, expected):
        assert readability_class(width_model(count)) is expected


class TestLabel:
    def test_width_derived_from_length(self):
        label = BarcodeLabel(Symbology.EAN13, "4006381333931")
        assert label.width_mm == width_model(13)

    def test_labels_are_immutable(self):
        label = BarcodeLabel(Symbology.EAN8, "73513537")
        with pytest.raises(AttributeError):
            label.chars = "00000000"

import numpy as np
import pytest

from skewsaw.codec import (
    DecodeError,
    decode,
    encode,
    pack_half,
    parse_record_line,
    unpack_half,
)
from skewsaw.core import energy, expand_skew
from skewsaw.published import BEST_KNOWN


def test_decode_trivial():
    assert decode("0x0", 1).tolist() == [1]


def test_encode_examples():
    assert encode([1, 1, 1]) == "0x0"
    assert encode([-1, 1, 1]) == "0x4"


def test_encode_pads_to_whole_nibbles():
    assert encode([1] * 5) == "0x00"
    assert encode([-1] + [1] * 8) == "0x100"


def test_round_trip_random():
    rng = np.random.default_rng(11)
    for _ in range(200):
        d = int(rng.integers(1, 129))
        half = rng.choice([-1, 1], size=d)
        length = 2 * d - 1
        again = decode(encode(half), length)
        assert np.array_equal(again, half)


def test_round_trip_published_rows_exact():
    for row in BEST_KNOWN:
        half = decode(row.hex, row.L)
        assert encode(half) == row.hex


def test_decode_polarity_does_not_change_energy():
    row = BEST_KNOWN[0]
    half = decode(row.hex, row.L)
    assert energy(expand_skew(half)).E == energy(expand_skew(-half)).E


def test_decode_errors():
    with pytest.raises(DecodeError):
        decode("0xZZ", 5)
    with pytest.raises(DecodeError):
        decode("0x", 5)
    with pytest.raises(DecodeError):
        decode("0x4", 4)  # even length
    with pytest.raises(DecodeError):
        decode("0xFF", 5)  # 8 significant bits, D = 3


def test_pack_unpack():
    rng = np.random.default_rng(12)
    for _ in range(50):
        d = int(rng.integers(1, 100))
        half = rng.choice([-1, 1], size=d)
        value = pack_half(half)
        assert value == int(encode(half), 16)
        assert np.array_equal(unpack_half(value, d), half)
    with pytest.raises(ValueError):
        unpack_half(8, 3)


def test_parse_record_line():
    assert parse_record_line("171 0x07F018C27F3C01849035B3") == (
        171,
        "0x07F018C27F3C01849035B3",
        None,
        None,
    )
    assert parse_record_line("5 0x3 2") == (5, "0x3", 2, None)
    assert parse_record_line("5 0x3 2 6.25") == (5, "0x3", 2, 6.25)
    for bad in ["", "5", "x 0x3", "5 0x3 two", "5 0x3 2 f", "5 0x3 2 6.25 extra"]:
        with pytest.raises(ValueError):
            parse_record_line(bad)

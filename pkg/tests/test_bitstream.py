import pytest
from hypothesis import given
from hypothesis import strategies as st

from enumcode.bitstream import (
    BitReader,
    BitstreamError,
    BitWriter,
    elias_delta_bit_length,
)


def test_msb_first_packing():
    w = BitWriter()
    w.write(0b101, 3)
    w.write(0b01, 2)
    assert w.bit_length == 5
    assert w.getvalue() == bytes([0b10101000])


def test_single_high_bit():
    w = BitWriter()
    w.write(1, 1)
    assert w.getvalue() == b"\x80"


def test_zero_width_is_noop():
    w = BitWriter()
    w.write(0, 0)
    assert w.bit_length == 0
    assert w.getvalue() == b""
    r = BitReader(b"")
    assert r.read(0) == 0


def test_value_must_fit():
    w = BitWriter()
    with pytest.raises(ValueError):
        w.write(4, 2)
    with pytest.raises(ValueError):
        w.write(-1, 2)


def test_getvalue_is_non_destructive():
    w = BitWriter()
    w.write(0b11, 2)
    first = w.getvalue()
    w.write(0b00, 2)
    assert first == b"\xc0"
    assert w.getvalue() == b"\xc0"


def test_reader_exhaustion():
    r = BitReader(b"\xff")
    r.read(8)
    with pytest.raises(BitstreamError):
        r.read(1)


def test_wide_field_spanning_bytes():
    w = BitWriter()
    w.write(0xABCDE, 20)
    w.write(0x3, 4)
    data = w.getvalue()
    r = BitReader(data)
    assert r.read(20) == 0xABCDE
    assert r.read(4) == 0x3


@pytest.mark.parametrize(
    "value,bits",
    [
        (1, "1"),
        (2, "0100"),
        (3, "0101"),
        (4, "01100"),
        (7, "01111"),
        (17, "001010001"),
        (500, "000100111110100"),
    ],
)
def test_elias_delta_codewords(value, bits):
    w = BitWriter()
    w.write_elias_delta(value)
    assert w.bit_length == len(bits)
    assert elias_delta_bit_length(value) == len(bits)
    padded = bits + "0" * (-len(bits) % 8)
    assert w.getvalue() == int(padded, 2).to_bytes(len(padded) // 8, "big")


def test_elias_delta_rejects_zero():
    w = BitWriter()
    with pytest.raises(ValueError):
        w.write_elias_delta(0)


@given(st.lists(st.integers(1, 10**12), max_size=50))
def test_elias_delta_round_trip(values):
    w = BitWriter()
    for v in values:
        w.write_elias_delta(v)
    r = BitReader(w.getvalue())
    assert [r.read_elias_delta() for _ in values] == values
    assert r.bits_remaining < 8


@given(
    st.lists(
        st.integers(0, 40).flatmap(
            lambda width: st.tuples(st.integers(0, 2**width - 1), st.just(width))
        ),
        max_size=60,
    )
)
def test_field_round_trip(fields):
    w = BitWriter()
    for value, width in fields:
        w.write(value, width)
    total = sum(width for _, width in fields)
    assert w.bit_length == total
    r = BitReader(w.getvalue())
    for value, width in fields:
        assert r.read(width) == value
    assert r.position == total

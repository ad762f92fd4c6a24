import struct

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pfa36.complex_core import ComplexSample
from pfa36.wire import (
    FRAME_BYTES, StreamDecoder, chunk_plan, decode_frame, decode_stream, encode_frame, iter_chunks,
)

C = ComplexSample.of
ZERO_FRAME = [C(0, 0)] * 36

finite32 = st.floats(allow_nan=False, allow_infinity=False, width=32)
frames = st.lists(st.builds(ComplexSample.of, finite32, finite32), min_size=36, max_size=36)


def bits(frame):
    return [(struct.pack("<f", s.re), struct.pack("<f", s.im)) for s in frame]


def test_frame_size():
    assert FRAME_BYTES == 288
    assert len(encode_frame(ZERO_FRAME)) == 288


def test_zero_frame_is_zero_bytes():
    assert encode_frame(ZERO_FRAME) == bytes(288)


def test_little_endian_interleaved_layout():
    frame = [C(1.0, 0)] + [C(0, 0)] * 34 + [C(-2.0, 0.5)]
    payload = encode_frame(frame)
    assert payload[:4] == bytes.fromhex("0000803f")
    assert payload[4:8] == bytes(4)
    assert payload[-8:] == struct.pack("<ff", -2.0, 0.5)


def test_encode_rejects_wrong_length():
    with pytest.raises(ValueError):
        encode_frame(ZERO_FRAME[:35])
    with pytest.raises(ValueError):
        decode_frame(bytes(287))


@given(frames)
def test_round_trip_bit_exact(frame):
    assert bits(decode_frame(encode_frame(frame))) == bits(frame)


def test_round_trip_special_values():
    tiny = np.float32(1e-45)  # smallest subnormal
    frame = [ComplexSample(np.float32(-0.0), tiny), ComplexSample(-tiny, np.float32(3.4e38))]
    frame += [C(0, -0.0)] * 34
    back = decode_frame(encode_frame(frame))
    assert bits(back) == bits(frame)
    assert np.signbit(back[0].re) and not np.signbit(back[0].im)


def test_nan_payload_survives():
    raw = bytearray(288)
    raw[0:4] = bytes.fromhex("0100c07f")  # quiet NaN with a payload bit
    frame = decode_frame(bytes(raw))
    assert np.isnan(frame[0].re)
    assert encode_frame(frame) == bytes(raw)


@pytest.mark.parametrize("n, plan", [(288, (4, 32)), (64, (1, 0)), (0, (0, 0)), (63, (0, 63))])
def test_chunk_plan(n, plan):
    assert chunk_plan(n) == plan


def test_chunk_plan_negative():
    with pytest.raises(ValueError):
        chunk_plan(-1)


@given(st.integers(min_value=0, max_value=5000))
def test_chunks_cover_payload(n):
    chunks = list(iter_chunks(bytes(range(256)) * (n // 256) + bytes(n % 256)))
    plan = chunk_plan(n)
    assert sum(map(len, chunks)) == n
    assert all(len(c) == 64 for c in chunks[:plan.full_chunks])
    assert len(chunks) == plan.full_chunks + (1 if plan.residual_bytes else 0)
    if plan.residual_bytes:
        assert len(chunks[-1]) == plan.residual_bytes < 64


def test_288_byte_frame_goes_out_in_five_writes():
    assert [len(c) for c in iter_chunks(encode_frame(ZERO_FRAME))] == [64, 64, 64, 64, 32]


@pytest.mark.parametrize("n, count, leftover", [(288, 1, 0), (600, 2, 24), (100, 0, 100), (0, 0, 0)])
def test_decode_stream(n, count, leftover):
    data = bytes(n)
    got, rest = decode_stream(data)
    assert len(got) == count
    assert rest == bytes(leftover)
    if count:
        assert got[0] == ZERO_FRAME


@given(st.lists(frames, max_size=4))
def test_concatenated_frames(seq):
    got, rest = decode_stream(b"".join(encode_frame(f) for f in seq))
    assert rest == b""
    assert [bits(f) for f in got] == [bits(f) for f in seq]


def test_incremental_decoder_with_skip():
    a = [C(i, -i) for i in range(36)]
    b = [C(0.5 * i, 1) for i in range(36)]
    stream = b"\xaa\xbb\xcc" + encode_frame(a) + encode_frame(b) + b"\x01\x02"
    dec = StreamDecoder(skip_bytes=3)
    out = []
    for pos in range(0, len(stream), 50):
        out += dec.feed(stream[pos:pos + 50])
    assert out == [a, b]
    assert dec.leftover == b"\x01\x02"


def test_decoder_skip_larger_than_first_read():
    dec = StreamDecoder(skip_bytes=10)
    assert dec.feed(b"\xff" * 4) == []
    assert dec.feed(b"\xff" * 6 + encode_frame(ZERO_FRAME)) == [ZERO_FRAME]

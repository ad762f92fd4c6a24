"""Raw binary frame format.

A frame on the wire is the in-memory image of 36 complex single-precision
values: 72 little-endian IEEE-754 binary32 numbers, interleaved re, im in
index order, 288 bytes in all.  There is no header or checksum, so a
stream is just frames back to back and decoding assumes alignment.

The serial link moves at most 64 bytes per write; :func:`chunk_plan`
splits a payload into full 64-byte writes plus a residual.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .complex_core import ComplexSample, as_samples

FRAME_SIZE = 36
FRAME_BYTES = 4 * 2 * FRAME_SIZE
CHUNK_BYTES = 64

_WIRE_DTYPE = np.dtype("<f4")


class ChunkPlan(NamedTuple):
    full_chunks: int
    residual_bytes: int


def encode_frame(frame: Sequence) -> bytes:
    if len(frame) != FRAME_SIZE:
        raise ValueError(f"a wire frame carries {FRAME_SIZE} samples, got {len(frame)}")
    if not all(isinstance(s, ComplexSample) for s in frame):
        frame = as_samples(frame)
    flat = np.empty(2 * FRAME_SIZE, dtype=_WIRE_DTYPE)
    # assign from float32 scalars directly so NaN payloads keep their bits
    flat[0::2] = np.array([s.re for s in frame], dtype=np.float32)
    flat[1::2] = np.array([s.im for s in frame], dtype=np.float32)
    return flat.tobytes()


def decode_frame(payload: bytes) -> list[ComplexSample]:
    if len(payload) != FRAME_BYTES:
        raise ValueError(f"a wire frame is {FRAME_BYTES} bytes, got {len(payload)}")
    flat = np.frombuffer(payload, dtype=_WIRE_DTYPE).astype(np.float32)
    return [ComplexSample(flat[i], flat[i + 1]) for i in range(0, 2 * FRAME_SIZE, 2)]


def chunk_plan(payload_len: int) -> ChunkPlan:
    if payload_len < 0:
        raise ValueError("payload length cannot be negative")
    return ChunkPlan(*divmod(payload_len, CHUNK_BYTES))


def iter_chunks(payload: bytes) -> Iterator[bytes]:
    """Yield the writes for one payload: full 64-byte chunks, then the residual."""
    for pos in range(0, len(payload), CHUNK_BYTES):
        yield payload[pos:pos + CHUNK_BYTES]


def decode_stream(data: bytes) -> tuple[list[list[ComplexSample]], bytes]:
    """Split ``data`` into whole frames; return them and the trailing partial bytes."""
    whole = len(data) - len(data) % FRAME_BYTES
    frames = [decode_frame(data[pos:pos + FRAME_BYTES]) for pos in range(0, whole, FRAME_BYTES)]
    return frames, bytes(data[whole:])


class StreamDecoder:
    """Incremental decoder that carries partial-frame bytes between reads.

    Not thread-safe; one consumer per instance.
    """

    def __init__(self, skip_bytes: int = 0):
        if skip_bytes < 0:
            raise ValueError("skip_bytes cannot be negative")
        self._skip = skip_bytes
        self._pending = b""

    def feed(self, data: bytes) -> list[list[ComplexSample]]:
        if self._skip:
            dropped = min(self._skip, len(data))
            data = data[dropped:]
            self._skip -= dropped
        frames, self._pending = decode_stream(self._pending + data)
        return frames

    @property
    def leftover(self) -> bytes:
        return self._pending

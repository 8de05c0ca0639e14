"""Deterministic, splittable random bit streams.

A stream is BLAKE2b-512 in counter mode: block ``i`` of stream
``(seed, path)`` is the keyed hash of ``i`` (8 bytes, little-endian), keyed
with ``seed`` followed by each element of ``path`` (8 bytes each,
little-endian).  Blocks are concatenated and consumed in whole bytes.  The
sampler uses ``path = (l,)`` for iteration ``l`` of a circuit; the CLI
derives one seed per circuit with :func:`derive_seed`.
"""

from __future__ import annotations

from hashlib import blake2b

SEED_MASK = (1 << 64) - 1
MAX_PATH = 7  # key is at most 64 bytes: seed plus seven path elements

_STREAM = b"cliffsample-bits"
_DERIVE = b"cliffsample-seed"


def _check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not hasattr(seed, "__index__"):
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    seed = seed.__index__()
    if not 0 <= seed <= SEED_MASK:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return seed


def _word(v: int) -> bytes:
    return _check_seed(v).to_bytes(8, "little")


class RngStream:
    """An independent stream of uniform bits identified by ``(seed, stream_id)``.

    ``stream_id`` may be an int or a tuple of up to seven ints.
    ``bits_consumed`` counts every bit handed out, which the streaming tests
    rely on.
    """

    def __init__(self, seed: int, stream_id: int | tuple[int, ...] = ()):
        self.seed = _check_seed(seed)
        if hasattr(stream_id, "__index__"):
            stream_id = (stream_id,)
        self.stream_id = tuple(int(i) for i in stream_id)
        if len(self.stream_id) > MAX_PATH:
            raise ValueError(f"stream id has more than {MAX_PATH} elements")
        self._key = _word(self.seed) + b"".join(map(_word, self.stream_id))
        self._counter = 0
        self._buf = b""
        self.bits_consumed = 0

    def _blocks(self, count: int) -> bytes:
        c = self._counter
        self._counter = c + count
        key = self._key
        return b"".join(
            blake2b(i.to_bytes(8, "little"), key=key, person=_STREAM).digest() for i in range(c, c + count)
        )

    def bits(self, nbits: int) -> int:
        """Return ``nbits`` uniform bits packed into a non-negative int."""
        if nbits <= 0:
            return 0
        self.bits_consumed += nbits
        nbytes = (nbits + 7) >> 3
        buf = self._buf
        if len(buf) < nbytes:
            buf += self._blocks((nbytes - len(buf) + 63) >> 6)
        self._buf = buf[nbytes:]
        return int.from_bytes(buf[:nbytes], "little") & ((1 << nbits) - 1)

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"


def derive_seed(seed: int, index: int) -> int:
    """64-bit seed for item ``index`` of a run seeded with ``seed``.

    Computed as an 8-byte BLAKE2b digest of ``index`` keyed by ``seed``, with
    its own personalization so it never coincides with stream output.
    """
    h = blake2b(_word(index), key=_word(seed), person=_DERIVE, digest_size=8)
    return int.from_bytes(h.digest(), "little")

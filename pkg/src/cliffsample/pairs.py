"""Rejection sampling of anticommuting signed Pauli pairs."""

from __future__ import annotations

from typing import Iterator

from .rng import RngStream
from .tableau import PauliRow, UsageError


def sample_pauli(k: int, rng: RngStream) -> PauliRow:
    """Uniform unsigned Pauli on ``k`` qubits (``x`` bits first, then ``z``)."""
    if k < 1:
        raise UsageError(f"k must be positive, got {k}")
    r = rng.bits(2 * k)
    mask = (1 << k) - 1
    return PauliRow(k, r & mask, r >> k)


def sample_anticommuting_pair_counted(k: int, rng: RngStream) -> tuple[PauliRow, PauliRow, int]:
    """Like :func:`sample_anticommuting_pair` but also returns the number of trials."""
    if k < 1:
        raise UsageError(f"k must be positive, got {k}")
    mask = (1 << k) - 1
    trials = 0
    while True:
        trials += 1
        # one draw of 4k bits: x_a | z_a | x_b | z_b
        r = rng.bits(4 * k)
        xa = r & mask
        za = (r >> k) & mask
        xb = (r >> 2 * k) & mask
        zb = r >> 3 * k
        if ((xa & zb) ^ (za & xb)).bit_count() & 1:
            break
    s = rng.bits(2)
    a = PauliRow(k, xa, za, s & 1)
    b = PauliRow(k, xb, zb, s >> 1)
    return a, b, trials


def sample_anticommuting_pair(k: int, rng: RngStream) -> tuple[PauliRow, PauliRow]:
    """Uniformly random anticommuting pair of signed Paulis on ``k`` qubits.

    Both rows are redrawn until they anticommute; the two sign bits are drawn
    once afterwards.  Each of the ``2**(2k+1) * (4**k - 1)`` signed pairs is
    equally likely.
    """
    a, b, _ = sample_anticommuting_pair_counted(k, rng)
    return a, b


def acceptance_probability(k: int) -> float:
    """Probability that one draw of two rows anticommutes."""
    return (1 - 4.0**-k) / 2


def count_signed_pairs(k: int) -> int:
    return 2 ** (2 * k + 1) * (4**k - 1)


def enumerate_signed_pairs(k: int) -> Iterator[tuple[PauliRow, PauliRow]]:
    """Every signed anticommuting pair on ``k`` qubits, by brute force."""
    size = 1 << k
    for xa in range(size):
        for za in range(size):
            for xb in range(size):
                for zb in range(size):
                    if not ((xa & zb) ^ (za & xb)).bit_count() & 1:
                        continue
                    for sa in (0, 1):
                        for sb in (0, 1):
                            yield PauliRow(k, xa, za, sa), PauliRow(k, xb, zb, sb)

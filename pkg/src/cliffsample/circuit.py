"""Circuit model and the top-level sampling loop."""

from __future__ import annotations

from array import array
from concurrent.futures import Executor, ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence

from .gates import (
    A_SHIFT,
    B_SHIFT,
    CODE,
    KIND_MASK,
    KINDS,
    MAX_QUBITS,
    QUBIT_MASK,
    Gate,
    decode_gate,
    encode_gate,
)
from .pairs import sample_anticommuting_pair
from .rng import RngStream
from .sweep import GateSink, sweep_unchecked
from .tableau import PauliRow, UsageError, WorkTableau, anticommutes

__all__ = [
    "Circuit",
    "Gate",
    "GateBuffer",
    "Segment",
    "adjoint",
    "circuit_from_pairs",
    "depth",
    "depth_bound",
    "gate_count_bound",
    "sample_clifford",
    "stream_clifford",
]


class Segment(NamedTuple):
    """Gates ``start:stop`` of a circuit were emitted by iteration ``ell``."""

    ell: int
    start: int
    stop: int


class GateBuffer:
    """Gate sink that stores packed gate codes, with optional segment marks."""

    def __init__(self):
        self.codes = array("Q")
        self.segments: list[Segment] = []
        self._open: Optional[tuple[int, int]] = None

    def extend(self, codes: Iterable[int]) -> None:
        self.codes.extend(codes)

    def __len__(self):
        return len(self.codes)

    def begin_segment(self, ell: int) -> None:
        self._open = (ell, len(self.codes))

    def end_segment(self) -> None:
        ell, start = self._open
        self.segments.append(Segment(ell, start, len(self.codes)))
        self._open = None

    def absorb(self, other: GateBuffer) -> None:
        """Append ``other``'s gates and segments, shifting segment offsets."""
        off = len(self.codes)
        self.codes.extend(other.codes)
        self.segments.extend(Segment(s.ell, s.start + off, s.stop + off) for s in other.segments)

    def to_circuit(self, n: int, seed: Optional[int] = None) -> Circuit:
        return Circuit._from_codes(n, self.codes, tuple(self.segments) or None, seed)


def _check_gate(n: int, g: Gate) -> None:
    if g.kind not in CODE:
        raise UsageError(f"unknown gate kind {g.kind!r}")
    two = g.kind == "CX"
    if two != (g.b is not None):
        raise UsageError(f"wrong number of qubits for {g}")
    for q in g.qubits:
        if not (isinstance(q, int) and 1 <= q <= n):
            raise UsageError(f"qubit {q!r} of {g} outside 1..{n}")
    if two and g.a == g.b:
        raise UsageError(f"CX control equals target in {g}")


class Circuit:
    """Immutable gate sequence on ``n`` qubits.

    ``segments`` records which iteration emitted which slice of gates and
    ``seed`` the seed a sampled circuit came from.  Both are metadata and
    do not take part in equality.
    """

    __slots__ = ("n", "_codes", "segments", "seed")

    def __init__(
        self,
        n: int,
        gates: Iterable[Gate | tuple] = (),
        segments: Optional[Sequence[Segment]] = None,
        seed: Optional[int] = None,
    ):
        if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
            raise UsageError(f"qubit count must be in 1..{MAX_QUBITS}, got {n!r}")
        codes = array("Q")
        for g in gates:
            g = Gate(*g)
            _check_gate(n, g)
            codes.append(encode_gate(*g))
        self.n = n
        self._codes = codes
        self.segments = tuple(Segment(*s) for s in segments) if segments else None
        self.seed = seed
        if self.segments and self.segments[-1].stop > len(codes):
            raise UsageError("segment extends past the end of the circuit")

    @classmethod
    def _from_codes(cls, n, codes, segments=None, seed=None) -> Circuit:
        c = object.__new__(cls)
        c.n = n
        c._codes = codes
        c.segments = segments
        c.seed = seed
        return c

    @property
    def codes(self) -> array:
        """Packed gate codes (read-only by convention)."""
        return self._codes

    def __len__(self):
        return len(self._codes)

    def __iter__(self) -> Iterator[Gate]:
        return map(decode_gate, self._codes)

    def __getitem__(self, i: int) -> Gate:
        return decode_gate(self._codes[i])

    @property
    def gates(self) -> list[Gate]:
        return list(self)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.n == other.n and self._codes == other._codes

    def __repr__(self):
        return f"Circuit(n={self.n}, gates={len(self)})"

    def segment(self, ell: int) -> list[Gate]:
        """Gates emitted by iteration ``ell``."""
        for s in self.segments or ():
            if s.ell == ell:
                return [decode_gate(code) for code in self._codes[s.start : s.stop]]
        raise UsageError(f"no segment {ell}")

    def count(self, kind: str) -> int:
        code = CODE[kind]
        return sum(1 for c in self._codes if c & KIND_MASK == code)


def gate_count_bound(n: int) -> int:
    return 5 * n + 2 * n * n


def sweep_depth_bound(k: int) -> int:
    """Depth allowed for one sweep over ``k`` qubits: 8 + 2 ceil(log2 k)."""
    return 8 + 2 * (k - 1).bit_length()


def depth_bound(n: int) -> int:
    return sum(sweep_depth_bound(k) for k in range(1, n + 1))


def depth(c: Circuit) -> int:
    """ASAP layer count on a fully connected device."""
    level = [0] * (c.n + 1)
    best = 0
    for code in c._codes:
        a = (code >> A_SHIFT) & QUBIT_MASK
        b = code >> B_SHIFT
        if b:
            d = max(level[a], level[b]) + 1
            level[b] = d
        else:
            d = level[a] + 1
        level[a] = d
        if d > best:
            best = d
    return best


_ADJOINT_KIND = list(range(len(KINDS)))
_ADJOINT_KIND[CODE["S"]] = CODE["SDG"]
_ADJOINT_KIND[CODE["SDG"]] = CODE["S"]


def adjoint(c: Circuit) -> Circuit:
    """Inverse circuit: reversed order, S and SDG exchanged."""
    flip = _ADJOINT_KIND
    codes = array("Q", [code & ~KIND_MASK | flip[code & KIND_MASK] for code in reversed(c._codes)])
    segments = None
    if c.segments:
        m = len(c)
        segments = tuple(Segment(s.ell, m - s.stop, m - s.start) for s in reversed(c.segments))
    return Circuit._from_codes(c.n, codes, segments, c.seed)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
        raise UsageError(f"qubit count must be a positive integer, got {n!r}")


def sweep_pair(t: WorkTableau, ell: int, row_a: PauliRow, row_b: PauliRow, sink: GateSink) -> None:
    """Load one sampled pair into window ``ell`` of ``t`` and sweep it."""
    t.load(ell, row_a, row_b)
    sweep_unchecked(t, sink)


def stream_clifford(
    n: int,
    seed: int,
    sink: GateSink,
    on_segment: Optional[Callable[[int, bool], None]] = None,
    rng_factory: Callable[[int, int], RngStream] = RngStream,
) -> None:
    """Sample a Clifford on ``n`` qubits, pushing gates to ``sink`` as they appear.

    Iteration ``l`` draws only from ``rng_factory(seed, l)``, and its gates
    reach the sink before iteration ``l + 1`` starts.  ``on_segment(l, True)``
    fires before iteration ``l`` and ``on_segment(l, False)`` after it.
    """
    _check_n(n)
    t = WorkTableau(n)
    for ell in range(1, n + 1):
        if on_segment:
            on_segment(ell, True)
        row_a, row_b = sample_anticommuting_pair(n + 1 - ell, rng_factory(seed, ell))
        sweep_pair(t, ell, row_a, row_b, sink)
        if on_segment:
            on_segment(ell, False)


def sample_segments(n: int, seed: int, ells: Sequence[int]) -> GateBuffer:
    """Generate the listed iterations of the circuit for ``(n, seed)`` on their own."""
    _check_n(n)
    buf = GateBuffer()
    t = WorkTableau(n)
    for ell in ells:
        buf.begin_segment(ell)
        row_a, row_b = sample_anticommuting_pair(n + 1 - ell, RngStream(seed, ell))
        sweep_pair(t, ell, row_a, row_b, buf)
        buf.end_segment()
    return buf


def _segment_groups(n: int, chunks: int) -> list[list[int]]:
    chunks = max(1, min(n, chunks))
    bounds = [round(i * n / chunks) for i in range(chunks + 1)]
    return [list(range(lo + 1, hi + 1)) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


def sample_clifford(
    n: int,
    seed: int,
    parallel: bool = False,
    executor: Optional[Executor] = None,
    chunks: int = 8,
) -> Circuit:
    """Uniformly random ``n``-qubit Clifford as a circuit over H, S, CX, X, Y, Z.

    With ``parallel=True`` the iterations are split into ``chunks``
    contiguous groups generated on ``executor`` (a thread pool if omitted)
    and concatenated in order; the result equals the serial one.
    """
    _check_n(n)
    if not parallel:
        buf = GateBuffer()

        def mark(ell, start):
            buf.begin_segment(ell) if start else buf.end_segment()

        stream_clifford(n, seed, buf, on_segment=mark)
        return buf.to_circuit(n, seed)

    groups = _segment_groups(n, chunks)
    own = executor is None
    pool = executor or ThreadPoolExecutor(max_workers=len(groups))
    try:
        parts = list(pool.map(sample_segments, [n] * len(groups), [seed] * len(groups), groups))
    finally:
        if own:
            pool.shutdown()
    buf = GateBuffer()
    for part in parts:
        buf.absorb(part)
    return buf.to_circuit(n, seed)


def circuit_from_pairs(pairs: Sequence[tuple[PauliRow, PauliRow]]) -> Circuit:
    """Deterministic circuit for explicitly chosen pairs.

    ``pairs[l - 1]`` is the pair for iteration ``l`` and acts on
    ``n + 1 - l`` qubits, where ``n = len(pairs)``.
    """
    n = len(pairs)
    _check_n(n)
    buf = GateBuffer()
    t = WorkTableau(n)
    for ell, (row_a, row_b) in enumerate(pairs, start=1):
        if not anticommutes(row_a, row_b):
            raise UsageError(f"pair {ell} does not anticommute")
        buf.begin_segment(ell)
        sweep_pair(t, ell, row_a, row_b, buf)
        buf.end_segment()
    return buf.to_circuit(n)

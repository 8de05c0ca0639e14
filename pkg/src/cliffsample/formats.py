"""Text serializations of circuits: OpenQASM 2.0, JSON lines, plain text.

All three can be written incrementally through :class:`CircuitWriter`,
which doubles as a gate sink for :func:`~cliffsample.circuit.stream_clifford`,
and all three parse back with :func:`parse`.  A stream may hold several
circuits back to back.

QASM::

    OPENQASM 2.0;
    include "qelib1.inc";
    // seed 7                 (only when the seed is known)
    qreg q[2];
    // segment 1              (only with segments=True)
    h q[0];
    cx q[0],q[1];

Qubits are 0-based in QASM and 1-based in the other two formats.

JSONL: a header ``{"n": 2, "seed": 7}`` (seed may be null), then one object
per gate ``{"g": "CX", "q": [1, 2]}`` and optionally ``{"segment": 1}``
markers.

TEXT: a header ``# n=2 seed=7`` (``seed=-`` if unknown), optional
``# segment 1`` lines, then one gate per line such as ``H(1)`` or
``CX(1,2)``.
"""

from __future__ import annotations

import io
import json
import re
from typing import IO, Iterable, Optional

from .circuit import Circuit, GateBuffer, Segment
from .gates import CODE, Gate, decode_gate, encode_gate
from .tableau import UsageError

FORMATS = ("qasm", "jsonl", "text")


class ParseError(ValueError):
    pass


def _check_format(fmt: str) -> str:
    fmt = fmt.lower()
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return fmt


def _qasm_gate(g: Gate) -> str:
    if g.b is None:
        return f"{g.kind.lower()} q[{g.a - 1}];\n"
    return f"{g.kind.lower()} q[{g.a - 1}],q[{g.b - 1}];\n"


def _jsonl_gate(g: Gate) -> str:
    return json.dumps({"g": g.kind, "q": list(g.qubits)}) + "\n"


def _text_gate(g: Gate) -> str:
    return f"{g}\n"


_GATE_LINE = {"qasm": _qasm_gate, "jsonl": _jsonl_gate, "text": _text_gate}


class CircuitWriter:
    """Writes one or more circuits to a text stream as gates arrive.

    Call :meth:`begin` per circuit, then feed gates through :meth:`extend`
    (packed codes, so the writer is a gate sink) or :meth:`write_gates`.
    """

    def __init__(self, stream: IO[str], fmt: str, segments: bool = False):
        self.stream = stream
        self.fmt = _check_format(fmt)
        self.segments = segments
        self._line = _GATE_LINE[self.fmt]

    def begin(self, n: int, seed: Optional[int] = None) -> None:
        w = self.stream.write
        if self.fmt == "qasm":
            w('OPENQASM 2.0;\ninclude "qelib1.inc";\n')
            if seed is not None:
                w(f"// seed {seed}\n")
            w(f"qreg q[{n}];\n")
        elif self.fmt == "jsonl":
            w(json.dumps({"n": n, "seed": seed}) + "\n")
        else:
            w(f"# n={n} seed={'-' if seed is None else seed}\n")

    def mark(self, ell: int, start: bool = True) -> None:
        """Segment marker; signature matches ``stream_clifford``'s ``on_segment``."""
        if not (self.segments and start):
            return
        if self.fmt == "qasm":
            self.stream.write(f"// segment {ell}\n")
        elif self.fmt == "jsonl":
            self.stream.write(json.dumps({"segment": ell}) + "\n")
        else:
            self.stream.write(f"# segment {ell}\n")

    def extend(self, codes: Iterable[int]) -> None:
        line = self._line
        self.stream.write("".join(line(decode_gate(code)) for code in codes))

    def write_gates(self, gates: Iterable[Gate]) -> None:
        line = self._line
        self.stream.write("".join(line(Gate(*g)) for g in gates))

    def write_circuit(self, c: Circuit) -> None:
        self.begin(c.n, c.seed)
        if self.segments and c.segments:
            for s in c.segments:
                self.mark(s.ell)
                self.extend(c.codes[s.start : s.stop])
        else:
            self.extend(c.codes)


def serialize(c: Circuit, fmt: str, segments: bool = False) -> bytes:
    buf = io.StringIO()
    CircuitWriter(buf, fmt, segments).write_circuit(c)
    return buf.getvalue().encode()


def dump(c: Circuit, stream: IO[str], fmt: str, segments: bool = False) -> None:
    CircuitWriter(stream, fmt, segments).write_circuit(c)


class _Builder:
    def __init__(self, n: int, seed: Optional[int]):
        self.n = n
        self.seed = seed
        self.buf = GateBuffer()
        self.segments: list[tuple[int, int]] = []

    def add(self, kind: str, qubits: list[int], where: str) -> None:
        if kind not in CODE:
            raise ParseError(f"{where}: unknown gate {kind!r}")
        want = 2 if kind == "CX" else 1
        if len(qubits) != want:
            raise ParseError(f"{where}: {kind} takes {want} qubit(s), got {len(qubits)}")
        for q in qubits:
            if not 1 <= q <= self.n:
                raise ParseError(f"{where}: qubit {q} outside 1..{self.n}")
        if want == 2 and qubits[0] == qubits[1]:
            raise ParseError(f"{where}: CX control equals target")
        self.buf.codes.append(encode_gate(kind, *qubits))

    def mark(self, ell: int) -> None:
        self.segments.append((ell, len(self.buf)))

    def build(self) -> Circuit:
        marks = self.segments
        stops = [start for _, start in marks[1:]] + [len(self.buf)]
        segs = tuple(Segment(ell, start, stop) for (ell, start), stop in zip(marks, stops))
        return Circuit._from_codes(self.n, self.buf.codes, segs or None, self.seed)


_QASM_GATE = re.compile(r"^([a-z]+)\s+q\[(\d+)\]\s*(?:,\s*q\[(\d+)\]\s*)?;$")
_QASM_QREG = re.compile(r"^qreg\s+q\[(\d+)\]\s*;$")


def parse_qasm(text: str) -> list[Circuit]:
    """Parse the QASM subset written by :class:`CircuitWriter`."""
    circuits = []
    cur: Optional[_Builder] = None
    seed = None
    header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        where = f"line {lineno}"
        if not line:
            continue
        if line.startswith("OPENQASM"):
            if line != "OPENQASM 2.0;":
                raise ParseError(f"{where}: unsupported version {line!r}")
            if cur is not None:
                circuits.append(cur.build())
            cur, seed, header = None, None, True
            continue
        if line.startswith("//"):
            words = line[2:].split()
            if len(words) == 2 and words[0] == "seed":
                seed = int(words[1])
            elif len(words) == 2 and words[0] == "segment" and cur is not None:
                cur.mark(int(words[1]))
            continue
        if line.startswith("include"):
            continue
        m = _QASM_QREG.match(line)
        if m:
            if not header or cur is not None:
                raise ParseError(f"{where}: unexpected qreg")
            cur = _Builder(int(m.group(1)), seed)
            continue
        m = _QASM_GATE.match(line)
        if not m or cur is None:
            raise ParseError(f"{where}: cannot parse {line!r}")
        qubits = [int(g) + 1 for g in m.groups()[1:] if g is not None]
        cur.add(m.group(1).upper(), qubits, where)
    if header and cur is None:
        raise ParseError("missing qreg declaration")
    if cur is not None:
        circuits.append(cur.build())
    return circuits


def parse_jsonl(text: str) -> list[Circuit]:
    circuits = []
    cur: Optional[_Builder] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        where = f"line {lineno}"
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{where}: {exc}") from None
        if "n" in obj:
            if cur is not None:
                circuits.append(cur.build())
            cur = _Builder(int(obj["n"]), obj.get("seed"))
        elif cur is None:
            raise ParseError(f"{where}: gate before header")
        elif "segment" in obj:
            cur.mark(int(obj["segment"]))
        elif "g" in obj and "q" in obj:
            cur.add(obj["g"], [int(q) for q in obj["q"]], where)
        else:
            raise ParseError(f"{where}: unrecognised object {obj!r}")
    if cur is not None:
        circuits.append(cur.build())
    return circuits


_TEXT_HEADER = re.compile(r"^#\s*n=(\d+)\s+seed=(\d+|-)$")
_TEXT_GATE = re.compile(r"^([A-Z]+)\((\d+)(?:,(\d+))?\)$")


def parse_text(text: str) -> list[Circuit]:
    circuits = []
    cur: Optional[_Builder] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        where = f"line {lineno}"
        if not line:
            continue
        m = _TEXT_HEADER.match(line)
        if m:
            if cur is not None:
                circuits.append(cur.build())
            seed = None if m.group(2) == "-" else int(m.group(2))
            cur = _Builder(int(m.group(1)), seed)
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if len(words) == 2 and words[0] == "segment" and cur is not None:
                cur.mark(int(words[1]))
                continue
            raise ParseError(f"{where}: unexpected comment {line!r}")
        m = _TEXT_GATE.match(line)
        if not m or cur is None:
            raise ParseError(f"{where}: cannot parse {line!r}")
        cur.add(m.group(1), [int(g) for g in m.groups()[1:] if g is not None], where)
    if cur is not None:
        circuits.append(cur.build())
    return circuits


_PARSERS = {"qasm": parse_qasm, "jsonl": parse_jsonl, "text": parse_text}


def parse(data: str | bytes, fmt: str) -> list[Circuit]:
    """Every circuit in ``data``, in order."""
    if isinstance(data, bytes):
        data = data.decode()
    return _PARSERS[_check_format(fmt)](data)


def parse_one(data: str | bytes, fmt: str) -> Circuit:
    circuits = parse(data, fmt)
    if len(circuits) != 1:
        raise ParseError(f"expected one circuit, found {len(circuits)}")
    return circuits[0]


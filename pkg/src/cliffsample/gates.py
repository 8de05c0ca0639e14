"""Gate values and their packed integer form.

Inside the sampler gates travel as single integers: bits 0-2 hold the kind
index into :data:`KINDS`, bits 3-26 the first qubit and bits 27-50 the CX
target (0 for single-qubit gates).  Qubits are 1-based.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

KINDS = ("H", "S", "SDG", "CX", "X", "Y", "Z")
CODE = {k: i for i, k in enumerate(KINDS)}

A_SHIFT = 3
B_SHIFT = 27
KIND_MASK = 0b111
QUBIT_MASK = (1 << 24) - 1
MAX_QUBITS = QUBIT_MASK

H, S, SDG, CX, X, Y, Z = range(7)


class Gate(NamedTuple):
    """A gate on 1-based qubits; ``b`` is the CX target, else ``None``."""

    kind: str
    a: int
    b: Optional[int] = None

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.a,) if self.b is None else (self.a, self.b)

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.qubits))})"


def encode_gate(kind: str, a: int, b: Optional[int] = None) -> int:
    return CODE[kind] | a << A_SHIFT | (b or 0) << B_SHIFT


def decode_gate(code: int) -> Gate:
    b = code >> B_SHIFT
    return Gate(KINDS[code & KIND_MASK], (code >> A_SHIFT) & QUBIT_MASK, b if b else None)

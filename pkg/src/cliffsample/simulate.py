"""Replay circuits on the basis tableau and cross-check with dense matrices."""

from __future__ import annotations

import struct
from functools import lru_cache, reduce

import numpy as np

from .circuit import Circuit
from .gates import A_SHIFT, B_SHIFT, CODE, KIND_MASK, KINDS, QUBIT_MASK
from .tableau import SINGLE_QUBIT_UPDATES, TWO_QUBIT_UPDATES, CliffordTableau, PauliRow, UsageError

KEY_MAGIC = b"CLT1"
DENSE_MAX_QUBITS = 3
DENSE_ATOL = 1e-9


def simulate(c: Circuit) -> CliffordTableau:
    """Tableau of the Clifford implemented by ``c``.

    Row ``2j - 2`` is ``U X_j U^dag`` and row ``2j - 1`` is ``U Z_j U^dag``
    where ``U`` applies the gates of ``c`` in order.
    """
    t = CliffordTableau.basis(c.n)
    updates = [SINGLE_QUBIT_UPDATES.get(k) for k in KINDS]
    updates[CODE["CX"]] = None
    cx = TWO_QUBIT_UPDATES["CX"]
    for code in c.codes:
        a = ((code >> A_SHIFT) & QUBIT_MASK) - 1
        f = updates[code & KIND_MASK]
        if f is None:
            cx(t, a, (code >> B_SHIFT) - 1)
        else:
            f(t, a)
    return t


def canonical_key(t: CliffordTableau) -> bytes:
    """Injective byte encoding of a Clifford tableau.

    Layout: ``b"CLT1"``, ``n`` as little-endian uint32, then for each of the
    ``2n`` rows in order its x bits, its z bits (each ``ceil(n/8)`` bytes,
    little-endian, qubit 1 in the lowest bit) and one sign byte.
    """
    width = (t.n + 7) // 8
    parts = [KEY_MAGIC, struct.pack("<I", t.n)]
    for row in t.rows():
        parts.append(row.x.to_bytes(width, "little"))
        parts.append(row.z.to_bytes(width, "little"))
        parts.append(bytes((row.sign,)))
    return b"".join(parts)


_I2 = np.eye(2, dtype=complex)
_PAULI = {
    "I": _I2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_ONE_QUBIT = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.diag([1, 1j]),
    "SDG": np.diag([1, -1j]),
    "X": _PAULI["X"],
    "Y": _PAULI["Y"],
    "Z": _PAULI["Z"],
}


def _kron_all(ops):
    return reduce(np.kron, ops)


def pauli_matrix(p: PauliRow) -> np.ndarray:
    """Dense matrix of a signed Pauli; qubit 1 is the leftmost tensor factor."""
    m = _kron_all([_PAULI[p.component(j)] for j in range(1, p.n + 1)])
    return -m if p.sign else m


def gate_matrix(n: int, kind: str, a: int, b: int | None = None) -> np.ndarray:
    if kind == "CX":
        p0 = np.diag([1, 0]).astype(complex)
        p1 = np.diag([0, 1]).astype(complex)
        keep = [p0 if q == a else _I2 for q in range(1, n + 1)]
        flip = [p1 if q == a else _PAULI["X"] if q == b else _I2 for q in range(1, n + 1)]
        return _kron_all(keep) + _kron_all(flip)
    return _kron_all([_ONE_QUBIT[kind] if q == a else _I2 for q in range(1, n + 1)])


def unitary(c: Circuit) -> np.ndarray:
    if c.n > DENSE_MAX_QUBITS:
        raise UsageError(f"dense simulation limited to {DENSE_MAX_QUBITS} qubits, got {c.n}")
    u = np.eye(2**c.n, dtype=complex)
    for g in c:
        u = gate_matrix(c.n, g.kind, g.a, g.b) @ u
    return u


@lru_cache(maxsize=None)
def _pauli_basis(n: int) -> tuple[list[PauliRow], np.ndarray]:
    rows = [PauliRow(n, x, z) for x in range(2**n) for z in range(2**n)]
    return rows, np.stack([pauli_matrix(p) for p in rows])


def decode_pauli(m: np.ndarray, n: int, atol: float = DENSE_ATOL) -> PauliRow | None:
    """Signed Pauli equal to ``m``, or ``None`` if ``m`` is not one."""
    rows, mats = _pauli_basis(n)
    coeffs = np.einsum("kij,ij->k", mats.conj(), m) / 2**n
    hits = np.flatnonzero(np.abs(np.abs(coeffs) - 1) < atol)
    if len(hits) != 1:
        return None
    p = rows[hits[0]]
    coeff = coeffs[hits[0]]
    for sign, val in ((0, 1), (1, -1)):
        if abs(coeff - val) < atol and np.allclose(m, val * mats[hits[0]], atol=atol):
            return PauliRow(n, p.x, p.z, sign)
    return None


def dense_images(c: Circuit) -> list[PauliRow | None]:
    """``U P U^dag`` for the interleaved basis ``X_1, Z_1, ..., X_n, Z_n``."""
    u = unitary(c)
    out = []
    for j in range(1, c.n + 1):
        for kind in "XZ":
            p = pauli_matrix(PauliRow.single(c.n, kind, j))
            out.append(decode_pauli(u @ p @ u.conj().T, c.n))
    return out


def dense_oracle_check(c: Circuit) -> bool:
    """True iff the dense conjugation of every basis Pauli matches :func:`simulate`."""
    if c.n > DENSE_MAX_QUBITS:
        raise UsageError(f"dense oracle limited to {DENSE_MAX_QUBITS} qubits, got {c.n}")
    return dense_images(c) == simulate(c).rows()

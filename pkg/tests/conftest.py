from functools import lru_cache, reduce
from itertools import product

import numpy as np
from hypothesis import settings

from cliffsample import PauliRow

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# Independent dense-matrix ground truth; shares nothing with the package.
I2 = np.eye(2, dtype=complex)
PAULIS = {
    "I": I2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
ONE = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.array([[1, 0], [0, 1j]]),
    "SDG": np.array([[1, 0], [0, -1j]]),
    "X": PAULIS["X"],
    "Y": PAULIS["Y"],
    "Z": PAULIS["Z"],
}


def dense_label(label):
    """Matrix for a label like "-XZI" (first letter acts on qubit 1)."""
    sign = -1 if label.startswith("-") else 1
    body = label.lstrip("+-")
    return sign * reduce(np.kron, [PAULIS[c] for c in body])


@lru_cache(maxsize=None)
def dense_gate(n, kind, a, b=None):
    if kind == "CX":
        u = np.zeros((2**n, 2**n), dtype=complex)
        for i in range(2**n):
            bits = [(i >> (n - q)) & 1 for q in range(1, n + 1)]
            if bits[a - 1]:
                bits[b - 1] ^= 1
            j = sum(bit << (n - q) for q, bit in zip(range(1, n + 1), bits))
            u[j, i] = 1
        return u
    return reduce(np.kron, [ONE[kind] if q == a else I2 for q in range(1, n + 1)])


def dense_unitary(n, gates):
    u = np.eye(2**n, dtype=complex)
    for g in gates:
        u = dense_gate(n, *g) @ u
    return u


@lru_cache(maxsize=None)
def _unsigned_paulis(n):
    bodies = ["".join(b) for b in product("IXYZ", repeat=n)]
    return bodies, np.stack([dense_label(b) for b in bodies])


def decode_dense(m, n):
    """Label of the signed Pauli equal to ``m``, via trace overlaps."""
    bodies, stack = _unsigned_paulis(n)
    coeffs = np.einsum("pij,ji->p", stack, m) / 2**n
    p = int(np.argmax(np.abs(coeffs)))
    c = coeffs[p]
    sign = 1 if c.real > 0 else -1
    if not np.allclose(m, sign * stack[p], atol=1e-9):
        raise AssertionError("not a signed Pauli")
    return ("-" if sign < 0 else "+") + bodies[p]


def all_signed_labels(n):
    return [s + "".join(b) for b in product("IXYZ", repeat=n) for s in "+-"]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def row(label):
    return PauliRow.from_label(label)

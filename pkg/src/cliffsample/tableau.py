"""Signed Pauli rows and tableau conjugation updates.

A Pauli row on ``n`` qubits is a pair of bit vectors ``(x, z)`` plus a sign
bit; component ``j`` is I, X, Z, Y for ``(x_j, z_j)`` equal to (0,0), (1,0),
(0,1), (1,1) and the row stands for ``(-1)**sign`` times the tensor product
of those components.  Qubits are numbered from 1 in every public function;
bit ``j - 1`` of a packed vector holds qubit ``j``.

Tableaus store their bits column-major: ``xs[j]`` is an integer whose bit
``r`` is the x-bit of row ``r`` at qubit ``j + 1``, and ``signs`` packs the
row signs the same way.  Every gate touches one or two columns, so a gate
update is a handful of integer operations no matter how many rows there are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


_COMPONENTS = "IXZY"  # index = x | z << 1


class UsageError(ValueError):
    """Raised when an operation is called outside its preconditions."""


@dataclass(frozen=True)
class PauliRow:
    """One signed Pauli operator with packed ``x``/``z`` bits."""

    n: int
    x: int = 0
    z: int = 0
    sign: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise UsageError(f"qubit count must be positive, got {self.n}")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise UsageError(f"x/z bits do not fit in {self.n} qubits")
        if self.sign not in (0, 1):
            raise UsageError(f"sign must be 0 or 1, got {self.sign}")

    @classmethod
    def from_label(cls, label: str) -> PauliRow:
        """Parse ``"XZI"``, ``"-YXI"`` or ``"+Z"``; the first letter is qubit 1."""
        sign = 0
        if label[:1] in "+-":
            sign = int(label[0] == "-")
            label = label[1:]
        if not label:
            raise UsageError("empty Pauli label")
        x = z = 0
        for j, ch in enumerate(label.upper()):
            try:
                code = _COMPONENTS.index(ch)
            except ValueError:
                raise UsageError(f"bad Pauli component {ch!r}") from None
            x |= (code & 1) << j
            z |= (code >> 1) << j
        return cls(len(label), x, z, sign)

    @classmethod
    def single(cls, n: int, kind: str, a: int, sign: int = 0) -> PauliRow:
        """``X_a``, ``Y_a`` or ``Z_a`` on ``n`` qubits."""
        _check_qubit(n, a)
        code = _COMPONENTS.index(kind.upper())
        bit = 1 << (a - 1)
        return cls(n, bit if code & 1 else 0, bit if code & 2 else 0, sign)

    @property
    def label(self) -> str:
        body = "".join(self.component(j) for j in range(1, self.n + 1))
        return ("-" if self.sign else "+") + body

    def component(self, j: int) -> str:
        _check_qubit(self.n, j)
        return _COMPONENTS[((self.x >> (j - 1)) & 1) | (((self.z >> (j - 1)) & 1) << 1)]

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __str__(self):
        return self.label


def anticommutes(p: PauliRow, q: PauliRow) -> bool:
    """True iff ``p`` and ``q`` anticommute (odd symplectic inner product)."""
    if p.n != q.n:
        raise UsageError(f"qubit counts differ: {p.n} != {q.n}")
    return bool(((p.x & q.z) ^ (p.z & q.x)).bit_count() & 1)


@lru_cache(maxsize=64)
def _ascii_zeros(k: int) -> int:
    return 0x30 * ((1 << 8 * k) - 1) // 255


def _columns(lo: int, hi: int, k: int) -> list[int]:
    """Per-qubit values ``lo_j + 2 hi_j`` for ``j < k``.

    The binary strings of ``lo`` and ``hi`` are added as big integers, one
    byte per qubit, which keeps the whole conversion out of Python loops.
    """
    a = int.from_bytes(format(lo, f"0{k}b").encode(), "big")
    b = int.from_bytes(format(hi, f"0{k}b").encode(), "big")
    return list((a + 2 * b - 3 * _ascii_zeros(k)).to_bytes(k, "little"))


def _check_qubit(n: int, a: int) -> None:
    if not (isinstance(a, int) and 1 <= a <= n):
        raise UsageError(f"qubit index {a!r} outside 1..{n}")


class PauliTableau:
    """A list of signed Pauli rows on ``n`` qubits, stored column-major."""

    def __init__(self, n: int, nrows: int):
        if n < 1:
            raise UsageError(f"qubit count must be positive, got {n}")
        self.n = n
        self.nrows = nrows
        self.xs = [0] * n
        self.zs = [0] * n
        self.signs = 0

    @classmethod
    def from_rows(cls, rows: Iterable[PauliRow]) -> PauliTableau:
        rows = list(rows)
        if not rows:
            raise UsageError("need at least one row")
        t = PauliTableau(rows[0].n, len(rows))
        for r, row in enumerate(rows):
            t.set_row(r, row)
        return t

    def set_row(self, r: int, row: PauliRow) -> None:
        """Overwrite row ``r`` (0-based)."""
        if row.n != self.n:
            raise UsageError(f"row has {row.n} qubits, tableau has {self.n}")
        bit = 1 << r
        keep = ~bit
        xs, zs = self.xs, self.zs
        for j in range(self.n):
            xs[j] = (xs[j] & keep) | (bit if (row.x >> j) & 1 else 0)
            zs[j] = (zs[j] & keep) | (bit if (row.z >> j) & 1 else 0)
        self.signs = (self.signs & keep) | (bit if row.sign else 0)

    def row(self, r: int) -> PauliRow:
        """Row ``r`` (0-based) as a :class:`PauliRow`."""
        if not 0 <= r < self.nrows:
            raise UsageError(f"row {r} outside 0..{self.nrows - 1}")
        x = z = 0
        for j in range(self.n):
            x |= ((self.xs[j] >> r) & 1) << j
            z |= ((self.zs[j] >> r) & 1) << j
        return PauliRow(self.n, x, z, (self.signs >> r) & 1)

    def rows(self) -> list[PauliRow]:
        return [self.row(r) for r in range(self.nrows)]

    def copy(self):
        other = object.__new__(type(self))
        other.__dict__.update(self.__dict__)
        other.xs = list(self.xs)
        other.zs = list(self.zs)
        return other

    def __eq__(self, other):
        if not isinstance(other, PauliTableau):
            return NotImplemented
        return (
            self.n == other.n
            and self.nrows == other.nrows
            and self.xs == other.xs
            and self.zs == other.zs
            and self.signs == other.signs
        )

    def __repr__(self):
        labels = ", ".join(r.label for r in self.rows())
        return f"{type(self).__name__}(n={self.n}, rows=[{labels}])"


class WorkTableau(PauliTableau):
    """Two-row tableau (rows A and B) with an active column window.

    Columns before ``window`` are identity in both rows.
    """

    A = 0
    B = 1

    def __init__(self, n: int):
        super().__init__(n, 2)
        self.window = 1

    def load(self, window: int, row_a: PauliRow, row_b: PauliRow) -> None:
        """Clear the tableau and place ``row_a``/``row_b`` on columns ``window..n``.

        The rows are given on ``k = n + 1 - window`` qubits; their qubit 1
        lands on column ``window``.
        """
        k = self.n + 1 - window
        if not 1 <= window <= self.n:
            raise UsageError(f"window {window} outside 1..{self.n}")
        if row_a.n != k or row_b.n != k:
            raise UsageError(f"rows must act on {k} qubits")
        off = window - 1
        self.xs[off:] = _columns(row_a.x, row_b.x, k)
        self.zs[off:] = _columns(row_a.z, row_b.z, k)
        if off:
            self.xs[:off] = self.zs[:off] = [0] * off
        self.signs = row_a.sign | (row_b.sign << 1)
        self.window = window

    @property
    def row_a(self) -> PauliRow:
        return self.row(0)

    @property
    def row_b(self) -> PauliRow:
        return self.row(1)


class CliffordTableau(PauliTableau):
    """Images of the basis Paulis under a Clifford operator.

    Rows are interleaved: row ``2j - 2`` holds the image of ``X_j`` and row
    ``2j - 1`` the image of ``Z_j`` (0-based row numbers).
    """

    def __init__(self, n: int):
        super().__init__(n, 2 * n)

    @classmethod
    def basis(cls, n: int) -> CliffordTableau:
        t = cls(n)
        for j in range(n):
            t.xs[j] = 1 << (2 * j)
            t.zs[j] = 1 << (2 * j + 1)
        return t

    def x_image(self, j: int) -> PauliRow:
        _check_qubit(self.n, j)
        return self.row(2 * j - 2)

    def z_image(self, j: int) -> PauliRow:
        _check_qubit(self.n, j)
        return self.row(2 * j - 1)

    def is_symplectic(self) -> bool:
        """Paired rows anticommute, all other pairs commute, no identity rows."""
        rows = self.rows()
        for r, p in enumerate(rows):
            if p.is_identity():
                return False
            for s in range(r + 1, len(rows)):
                paired = r % 2 == 0 and s == r + 1
                if anticommutes(p, rows[s]) != paired:
                    return False
        return True


# Unchecked updates on 0-based columns.  Sign rules follow the usual
# stabilizer-simulator conventions and are pinned by the dense-matrix tests.

def _h(t: PauliTableau, a: int) -> None:
    x = t.xs[a]
    z = t.zs[a]
    t.signs ^= x & z
    t.xs[a] = z
    t.zs[a] = x


def _s(t: PauliTableau, a: int) -> None:
    x = t.xs[a]
    z = t.zs[a]
    t.signs ^= x & z
    t.zs[a] = z ^ x


def _sdg(t: PauliTableau, a: int) -> None:
    x = t.xs[a]
    z = t.zs[a]
    t.signs ^= x & ~z
    t.zs[a] = z ^ x


def _cx(t: PauliTableau, a: int, b: int) -> None:
    xa = t.xs[a]
    za = t.zs[a]
    xb = t.xs[b]
    zb = t.zs[b]
    t.signs ^= xa & zb & ~(xb ^ za)
    t.xs[b] = xb ^ xa
    t.zs[a] = za ^ zb


def _x(t: PauliTableau, a: int) -> None:
    t.signs ^= t.zs[a]


def _y(t: PauliTableau, a: int) -> None:
    t.signs ^= t.xs[a] ^ t.zs[a]


def _z(t: PauliTableau, a: int) -> None:
    t.signs ^= t.xs[a]


SINGLE_QUBIT_UPDATES = {"H": _h, "S": _s, "SDG": _sdg, "X": _x, "Y": _y, "Z": _z}
TWO_QUBIT_UPDATES = {"CX": _cx}


def apply_h(t: PauliTableau, a: int) -> None:
    """Conjugate every row by a Hadamard on qubit ``a``."""
    _check_qubit(t.n, a)
    SINGLE_QUBIT_UPDATES["H"](t, a - 1)


def apply_s(t: PauliTableau, a: int) -> None:
    """Conjugate every row by the phase gate on qubit ``a``."""
    _check_qubit(t.n, a)
    SINGLE_QUBIT_UPDATES["S"](t, a - 1)


def apply_sdg(t: PauliTableau, a: int) -> None:
    _check_qubit(t.n, a)
    SINGLE_QUBIT_UPDATES["SDG"](t, a - 1)


def apply_cx(t: PauliTableau, a: int, b: int) -> None:
    """Conjugate every row by CX with control ``a`` and target ``b``."""
    _check_qubit(t.n, a)
    _check_qubit(t.n, b)
    if a == b:
        raise UsageError(f"CX control and target coincide ({a})")
    TWO_QUBIT_UPDATES["CX"](t, a - 1, b - 1)


def apply_pauli_gate(t: PauliTableau, g: str, a: int) -> None:
    """Apply Pauli gate ``g`` (X, Y or Z) on qubit ``a``.

    Only signs change: a row flips sign iff its component at ``a``
    anticommutes with ``g``.
    """
    g = g.upper()
    if g not in ("X", "Y", "Z"):
        raise UsageError(f"not a Pauli gate: {g!r}")
    _check_qubit(t.n, a)
    SINGLE_QUBIT_UPDATES[g](t, a - 1)


def apply_gate(t: PauliTableau, kind: str, a: int, b: int | None = None) -> None:
    """Dispatch on the gate name; ``b`` is the CX target."""
    if kind in TWO_QUBIT_UPDATES:
        if b is None:
            raise UsageError(f"{kind} needs two qubits")
        _check_qubit(t.n, a)
        _check_qubit(t.n, b)
        if a == b:
            raise UsageError(f"{kind} control and target coincide ({a})")
        TWO_QUBIT_UPDATES[kind](t, a - 1, b - 1)
    elif kind in SINGLE_QUBIT_UPDATES:
        if b is not None:
            raise UsageError(f"{kind} acts on one qubit")
        _check_qubit(t.n, a)
        SINGLE_QUBIT_UPDATES[kind](t, a - 1)
    else:
        raise UsageError(f"unknown gate {kind!r}")

"""Sweeping a two-row tableau to the basis pair ``(X_l, Z_l)``.

Every step applies its tableau updates and hands the matching gates, packed
as integers (see :mod:`cliffsample.gates`), to ``sink.extend`` in the order
the updates were applied.  A plain list works as a sink.

The updates are written out inline rather than going through
:mod:`cliffsample.tableau` because this loop dominates sampling time; the
tests replay the emitted gates through the tableau module to check them.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import compress
from typing import Iterable, Protocol

from .gates import A_SHIFT, B_SHIFT, CX, H, S, X, Y, Z
from .tableau import UsageError, WorkTableau

A = WorkTableau.A
B = WorkTableau.B


class GateSink(Protocol):
    def extend(self, codes: Iterable[int]) -> None: ...


@lru_cache(maxsize=8)
def _qubit_fields(n: int) -> tuple[list[int], list[int]]:
    """Column ``j`` shifted into the first and second qubit fields of a code."""
    return [(j + 1) << A_SHIFT for j in range(n)], [(j + 1) << B_SHIFT for j in range(n)]


def _check_row(row: int) -> int:
    if row not in (A, B):
        raise UsageError(f"row must be WorkTableau.A or WorkTableau.B, got {row!r}")
    return 1 << row


def clear_z_block(t: WorkTableau, row: int, sink: GateSink) -> None:
    """Zero the z bits of ``row`` in the window with H (on Z) or S (on Y)."""
    _clear_z(t, _check_row(row), sink)


def _clear_z(t: WorkTableau, bit: int, sink: GateSink) -> None:
    off = t.window - 1
    xs, zs = t.xs, t.zs
    qa = _qubit_fields(t.n)[0]
    signs = t.signs
    out = []
    emit = out.append
    for j in compress(range(off, t.n), map(bit.__and__, zs[off:])):
        x = xs[j]
        z = zs[j]
        signs ^= x & z
        if x & bit:
            zs[j] = z ^ x
            emit(S | qa[j])
        else:
            xs[j] = z
            zs[j] = x
            emit(H | qa[j])
    t.signs = signs
    sink.extend(out)


def cx_reduction_tree(t: WorkTableau, row: int, sink: GateSink) -> int:
    """Fold the x bits of ``row`` onto its first nonzero column.

    Neighbouring entries of the sorted index list are combined with CX in
    rounds, ``k - 1`` gates at most in ``ceil(log2 k)`` layers.  Returns the
    surviving qubit.
    """
    bit = _check_row(row)
    off = t.window - 1
    if any(map(bit.__and__, t.zs[off:])):
        raise UsageError("row still has nonzero z bits in the window")
    if not any(map(bit.__and__, t.xs[off:])):
        raise UsageError("row is the identity on the active window")
    return _tree(t, bit, sink)


def _tree(t: WorkTableau, bit: int, sink: GateSink) -> int:
    off = t.window - 1
    xs, zs = t.xs, t.zs
    qa, qb = _qubit_fields(t.n)
    J = list(compress(range(off, t.n), map(bit.__and__, xs[off:])))
    signs = t.signs
    out = []
    emit = out.append
    while len(J) > 1:
        for a, b in zip(J[::2], J[1::2]):
            xa = xs[a]
            zb = zs[b]
            xb = xs[b]
            za = zs[a]
            if xa & zb:
                signs ^= xa & zb & ~(xb ^ za)
            xs[b] = xb ^ xa
            zs[a] = za ^ zb
            emit(CX | qa[a] | qb[b])
        J = J[::2]
    t.signs = signs
    sink.extend(out)
    return J[0] + 1


def _cx(t: WorkTableau, a: int, b: int) -> int:
    xs, zs = t.xs, t.zs
    xa = xs[a]
    za = zs[a]
    xb = xs[b]
    zb = zs[b]
    t.signs ^= xa & zb & ~(xb ^ za)
    xs[b] = xb ^ xa
    zs[a] = za ^ zb
    return CX | (a + 1) << A_SHIFT | (b + 1) << B_SHIFT


def move_to_front(t: WorkTableau, j: int, sink: GateSink) -> None:
    """Swap columns ``j`` and ``window`` with three CX gates (none if equal)."""
    l = t.window
    if not l <= j <= t.n:
        raise UsageError(f"qubit {j} outside active window {l}..{t.n}")
    if j == l:
        return
    a, b = l - 1, j - 1
    sink.extend([_cx(t, a, b), _cx(t, b, a), _cx(t, a, b)])


def _h(t: WorkTableau, c: int) -> int:
    x = t.xs[c]
    z = t.zs[c]
    t.signs ^= x & z
    t.xs[c] = z
    t.zs[c] = x
    return H | (c + 1) << A_SHIFT


# anticommuting-component parity of one column, indexed by x | z << 2
_COLUMN_PARITY = [((s & 1) & (s >> 3)) ^ ((s >> 2) & (s >> 1) & 1) for s in range(16)]


def _check_sweep_input(t: WorkTableau) -> None:
    off = t.window - 1
    if any(t.xs[:off]) or any(t.zs[:off]):
        raise UsageError("columns before the window must be identity")
    states = [x | z << 2 for x, z in zip(t.xs[off:], t.zs[off:])]
    if not sum(map(_COLUMN_PARITY.__getitem__, states)) & 1:
        raise UsageError("rows A and B commute")


def sweep(t: WorkTableau, sink: GateSink) -> None:
    """Reduce anticommuting rows A, B to ``X_l`` and ``Z_l`` with zero signs.

    ``l`` is ``t.window``; columns before it are never touched.
    """
    _check_sweep_input(t)
    sweep_unchecked(t, sink)


def sweep_unchecked(t: WorkTableau, sink: GateSink) -> None:
    """:func:`sweep` without the input scan, for rows known to anticommute."""
    l = t.window
    c = l - 1
    xs, zs = t.xs, t.zs

    _clear_z(t, 1, sink)
    j = _tree(t, 1, sink)
    move_to_front(t, j, sink)
    assert zs[c] & 2, "row B must have a Y or Z component at the front"

    # row B is +-Z_l iff its x bits vanish and its only z bit is at c;
    # column values are 0..3 with row B in bit 1, so "< 2" means row B clear
    b_is_z = max(xs[c:]) < 2 and max(zs[c + 1:], default=0) < 2
    if not b_is_z:
        sink.extend([_h(t, c)])
        _clear_z(t, 2, sink)
        survivor = _tree(t, 2, sink)
        assert survivor == l, "second reduction must end on the window column"
        sink.extend([_h(t, c)])

    s = t.signs
    if s:
        # (s_a, s_b) = (0, 1) -> X, (1, 0) -> Z, (1, 1) -> Y
        gate, flips = ((Z, xs[c]), (X, zs[c]), (Y, xs[c] ^ zs[c]))[s - 1]
        t.signs = s ^ flips
        sink.extend([gate | l << A_SHIFT])
    assert t.signs == 0 and xs[c] == 1 and zs[c] == 2

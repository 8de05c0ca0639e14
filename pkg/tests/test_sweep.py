import pytest
from conftest import row
from hypothesis import given
from hypothesis import strategies as st

from cliffsample import (
    Circuit,
    PauliRow,
    PauliTableau,
    RngStream,
    UsageError,
    WorkTableau,
    apply_gate,
    decode_gate,
    depth,
)
from cliffsample.circuit import sweep_depth_bound
from cliffsample.pairs import enumerate_signed_pairs, sample_anticommuting_pair
from cliffsample.sweep import A, B, clear_z_block, cx_reduction_tree, move_to_front, sweep
from cliffsample.verify import sweep_and_replay


def work(a, b, window=1):
    a, b = row(a), row(b)
    t = WorkTableau(a.n + window - 1)
    t.load(window, a, b)
    return t


def gates(codes):
    return [str(decode_gate(c)) for c in codes]


class TestClearZBlock:
    def test_z_becomes_x(self):
        t = work("IZI", "III")
        out = []
        clear_z_block(t, A, out)
        assert gates(out) == ["H(2)"]
        assert t.row_a.label == "+IXI"

    def test_y_uses_s(self):
        t = work("IIY", "III")
        out = []
        clear_z_block(t, A, out)
        assert gates(out) == ["S(3)"]
        assert t.row_a.label[1:] == "IIX"

    def test_nothing_to_do(self):
        t = work("XXI", "ZZZ")
        out = []
        clear_z_block(t, A, out)
        assert out == []

    def test_row_b_and_depth_one(self):
        t = work("III", "YZY")
        out = []
        clear_z_block(t, B, out)
        assert gates(out) == ["S(1)", "H(2)", "S(3)"]
        assert t.row_b.z == 0

    def test_bad_row(self):
        with pytest.raises(UsageError):
            clear_z_block(work("X", "Z"), 2, [])


class TestReductionTree:
    def test_three_columns_fold_to_first(self):
        t = work("IXIXX", "IIIII")
        out = []
        assert cx_reduction_tree(t, A, out) == 2
        assert gates(out) == ["CX(2,4)", "CX(2,5)"]
        assert t.row_a.label == "+IXIII"

    def test_singleton(self):
        out = []
        assert cx_reduction_tree(work("IIX", "III"), A, out) == 3
        assert out == []

    def test_four_columns_two_layers(self):
        t = work("XXXX", "IIII")
        out = []
        assert cx_reduction_tree(t, A, out) == 1
        assert gates(out) == ["CX(1,2)", "CX(3,4)", "CX(1,3)"]
        assert depth(Circuit(4, [decode_gate(c) for c in out])) == 2

    @given(st.integers(1, 2**12 - 1))
    def test_gate_and_layer_counts(self, x):
        k = 12
        t = WorkTableau(k)
        t.load(1, PauliRow(k, x), PauliRow(k))
        out = []
        j = cx_reduction_tree(t, A, out)
        ones = bin(x).count("1")
        assert len(out) == ones - 1
        assert j == (x & -x).bit_length()
        assert t.row_a == PauliRow(k, 1 << (j - 1))
        assert depth(Circuit(k, [decode_gate(c) for c in out])) <= (ones - 1).bit_length()

    def test_identity_rejected(self):
        with pytest.raises(UsageError):
            cx_reduction_tree(work("II", "XX"), A, [])

    def test_z_bits_rejected(self):
        with pytest.raises(UsageError):
            cx_reduction_tree(work("XZ", "II"), A, [])


class TestMoveToFront:
    def test_in_place(self):
        out = []
        move_to_front(work("XI", "ZI"), 1, out)
        assert out == []

    def test_swap(self):
        t = work("IX", "IZ")
        out = []
        move_to_front(t, 2, out)
        assert gates(out) == ["CX(1,2)", "CX(2,1)", "CX(1,2)"]
        assert [r.label for r in t.rows()] == ["+XI", "+ZI"]
        # replaying the three CX updates on the original rows gives the same
        replay = PauliTableau.from_rows([row("IX"), row("IZ")])
        for g in map(decode_gate, out):
            apply_gate(replay, g.kind, g.a, g.b)
        assert replay.rows() == t.rows()

    def test_outside_window(self):
        with pytest.raises(UsageError):
            move_to_front(work("X", "Z", window=2), 1, [])


class TestSweep:
    def test_basis_pair_needs_nothing(self):
        t = work("XII", "ZII")
        out = []
        sweep(t, out)
        assert out == []

    def test_negative_x(self):
        t = work("-XI", "ZI")
        out = []
        sweep(t, out)
        assert gates(out) == ["Z(1)"]

    def test_sign_cases(self):
        assert gates(_swept("X", "-Z")) == ["X(1)"]
        assert gates(_swept("-X", "-Z")) == ["Y(1)"]

    @pytest.mark.parametrize("seed", range(20))
    def test_random_k8(self, seed):
        a, b = sample_anticommuting_pair(8, RngStream(seed, 8))
        ok, out = sweep_and_replay(a, b)
        assert ok
        assert len(out) <= 35
        assert depth(Circuit(8, [decode_gate(c) for c in out])) <= 14

    @pytest.mark.parametrize("window", [2, 5])
    def test_window_untouched(self, window):
        n = 9
        k = n + 1 - window
        for s in range(20):
            a, b = sample_anticommuting_pair(k, RngStream(s, window))
            t = WorkTableau(n)
            t.load(window, a, b)
            out = []
            sweep(t, out)
            assert all(q >= window for g in map(decode_gate, out) for q in g.qubits)
            assert t.row_a == PauliRow.single(n, "X", window)
            assert t.row_b == PauliRow.single(n, "Z", window)

    def test_commuting_rejected(self):
        with pytest.raises(UsageError):
            sweep(work("XI", "XZ"), [])

    def test_dirty_prefix_rejected(self):
        t = work("X", "Z", window=2)
        t.xs[0] = 1
        with pytest.raises(UsageError):
            sweep(t, [])


def _swept(a, b):
    out = []
    sweep(work(a, b), out)
    return out


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sweep_exhaustive(k):
    hs_max = 0
    for a, b in enumerate_signed_pairs(k):
        ok, out = sweep_and_replay(a, b)
        assert ok, (a, b)
        gs = [decode_gate(c) for c in out]
        n_cx = sum(g.kind == "CX" for g in gs)
        n_pauli = sum(g.kind in ("X", "Y", "Z") for g in gs)
        n_hs = len(gs) - n_cx - n_pauli
        hs_max = max(hs_max, n_hs)
        assert n_hs <= 2 * k + 2
        assert n_pauli <= 1
        assert n_cx <= 2 * (k - 1) + 3
        assert len(gs) <= 4 * k + 3
        assert depth(Circuit(k, gs)) <= sweep_depth_bound(k)
    # the H/S bound is tight; the sign-fixing Pauli comes on top of it
    assert hs_max == 2 * k + 2

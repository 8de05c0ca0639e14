"""Self-checks of the sampler, shared by ``cliffsample verify`` and the tests."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product

from scipy.stats import chi2

from .circuit import (
    Circuit,
    circuit_from_pairs,
    depth,
    depth_bound,
    gate_count_bound,
    sample_clifford,
    sweep_depth_bound,
)
from .gates import decode_gate
from .pairs import count_signed_pairs, enumerate_signed_pairs
from .rng import derive_seed
from .simulate import canonical_key, dense_oracle_check, simulate
from .sweep import sweep
from .tableau import PauliRow, PauliTableau, WorkTableau, apply_gate


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def clifford_group_order(n: int) -> int:
    """Number of n-qubit Cliffords modulo global phase, signs included."""
    return 2 ** (n * n + 2 * n) * math.prod(4**j - 1 for j in range(1, n + 1))


def sampled_circuits(n: int, count: int, seed: int):
    for i in range(count):
        yield sample_clifford(n, derive_seed(seed, i))


def check_dense_oracle(ns=(1, 2, 3), count: int = 1000, seed: int = 0) -> CheckResult:
    failures = []
    for n in ns:
        for i, c in enumerate(sampled_circuits(n, count, seed)):
            if not dense_oracle_check(c):
                failures.append((n, i))
    detail = f"{count} circuits each at n={list(ns)}, {len(failures)} mismatches"
    if failures:
        detail += f" (first: n={failures[0][0]} index {failures[0][1]})"
    return CheckResult("dense-oracle", not failures, detail)


def chi2_critical(df: int, alpha: float = 0.001) -> float:
    return float(chi2.ppf(1 - alpha, df))


def check_uniformity_n1(samples: int = 24000, seed: int = 0, alpha: float = 0.001) -> CheckResult:
    counts = Counter(canonical_key(simulate(c)) for c in sampled_circuits(1, samples, seed))
    order = clifford_group_order(1)
    expected = samples / order
    stat = sum((counts.get(k, 0) - expected) ** 2 / expected for k in counts)
    stat += (order - len(counts)) * expected  # unseen operators
    crit = chi2_critical(order - 1, alpha)
    ok = len(counts) == order and stat < crit
    return CheckResult(
        "uniformity-n1",
        ok,
        f"{len(counts)} distinct of {order}, chi2={stat:.2f} (critical {crit:.2f}, df={order - 1})",
    )


def injectivity_keys(n: int = 2) -> tuple[int, int]:
    """(settings enumerated, distinct Cliffords produced) over every sampler outcome."""
    per_level = [list(enumerate_signed_pairs(n + 1 - ell)) for ell in range(1, n + 1)]
    keys = set()
    total = 0
    for pairs in product(*per_level):
        keys.add(canonical_key(simulate(circuit_from_pairs(pairs))))
        total += 1
    return total, len(keys)


def check_injectivity_n2() -> CheckResult:
    total, distinct = injectivity_keys(2)
    order = clifford_group_order(2)
    ok = total == distinct == order
    return CheckResult("injectivity-n2", ok, f"{total} settings -> {distinct} distinct Cliffords (group order {order})")


@dataclass
class SweepStats:
    pairs: int = 0
    failures: int = 0
    max_single: int = 0
    max_cx: int = 0
    max_depth: int = 0


def sweep_and_replay(a: PauliRow, b: PauliRow) -> tuple[bool, list[int]]:
    """Sweep ``(a, b)`` and independently replay the emitted gates.

    Returns whether both the swept tableau and the replayed copy end as
    ``(+X_1, +Z_1)``, and the emitted gate codes.
    """
    k = a.n
    t = WorkTableau(k)
    t.load(1, a, b)
    out: list[int] = []
    sweep(t, out)
    target = [PauliRow.single(k, "X", 1), PauliRow.single(k, "Z", 1)]
    replay = PauliTableau.from_rows([a, b])
    for g in map(decode_gate, out):
        apply_gate(replay, g.kind, g.a, g.b)
    return t.rows() == target and replay.rows() == target, out


def check_sweep_totality(ks=(1, 2, 3)) -> CheckResult:
    stats = {}
    for k in ks:
        st = SweepStats()
        for a, b in enumerate_signed_pairs(k):
            ok, codes = sweep_and_replay(a, b)
            gates = [decode_gate(c) for c in codes]
            n_cx = sum(g.kind == "CX" for g in gates)
            d = depth(Circuit(k, gates))
            st.pairs += 1
            st.max_single = max(st.max_single, len(gates) - n_cx)
            st.max_cx = max(st.max_cx, n_cx)
            st.max_depth = max(st.max_depth, d)
            if not ok or len(gates) > 4 * k + 3 or d > sweep_depth_bound(k):
                st.failures += 1
        stats[k] = st
    ok = all(s.failures == 0 and s.pairs == count_signed_pairs(k) for k, s in stats.items())
    detail = "; ".join(
        f"k={k}: {s.pairs} pairs, {s.failures} failures, max gates {s.max_single}+{s.max_cx}cx, max depth {s.max_depth}"
        for k, s in stats.items()
    )
    return CheckResult("sweep-totality", ok, detail)


@dataclass
class BoundStats:
    n: int
    count: int
    gates_min: int
    gates_mean: float
    gates_max: int
    depth_min: int
    depth_mean: float
    depth_max: int

    @property
    def gate_bound(self) -> int:
        return gate_count_bound(self.n)

    @property
    def depth_bound(self) -> int:
        return depth_bound(self.n)

    @property
    def passed(self) -> bool:
        return self.gates_max <= self.gate_bound and self.depth_max <= self.depth_bound


def bound_stats(n: int, count: int, seed: int) -> BoundStats:
    sizes = []
    depths = []
    for c in sampled_circuits(n, count, seed):
        sizes.append(len(c))
        depths.append(depth(c))
    return BoundStats(
        n,
        count,
        min(sizes),
        sum(sizes) / count,
        max(sizes),
        min(depths),
        sum(depths) / count,
        max(depths),
    )


def check_bounds(ns=(1, 2, 4, 8), count: int = 200, seed: int = 0) -> CheckResult:
    stats = [bound_stats(n, count, seed) for n in ns]
    detail = "; ".join(
        f"n={s.n}: gates<={s.gates_max}/{s.gate_bound} depth<={s.depth_max}/{s.depth_bound}" for s in stats
    )
    return CheckResult("bounds", all(s.passed for s in stats), detail)


def run_checks(level: str = "quick", seed: int = 0) -> list[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    results = [check_dense_oracle(seed=seed), check_uniformity_n1(seed=seed)]
    if level == "full":
        results += [check_injectivity_n2(), check_sweep_totality(), check_bounds(seed=seed)]
    return results

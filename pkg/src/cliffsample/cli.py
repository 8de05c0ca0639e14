"""Command-line front end: ``cliffsample sample|stats|verify``.

Exit codes: 0 success, 2 usage error, 3 verification failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from typing import IO, Iterator, Optional, Sequence

from .circuit import sample_clifford, stream_clifford
from .formats import FORMATS, CircuitWriter
from .rng import SEED_MASK, derive_seed
from .verify import bound_stats, run_checks

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_IO = 4


@dataclass
class RunConfig:
    n: int
    count: int = 1
    seed: int = 0
    format: str = "text"
    mode: str = "serial"
    out: Optional[str] = None
    segments: bool = False
    workers: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"--n must be >= 1, got {self.n}")
        if self.count < 1:
            raise ValueError(f"--count must be >= 1, got {self.count}")
        if not 0 <= self.seed <= SEED_MASK:
            raise ValueError("--seed must be an unsigned 64-bit integer")
        if self.format not in FORMATS:
            raise ValueError(f"--format must be one of {FORMATS}")
        if self.mode not in ("serial", "parallel"):
            raise ValueError("--mode must be serial or parallel")

    def circuit_seed(self, i: int) -> int:
        return derive_seed(self.seed, i)


@contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w") as fh:
            yield fh


def cmd_sample(cfg: RunConfig) -> int:
    with _output(cfg.out) as fh:
        writer = CircuitWriter(fh, cfg.format, segments=cfg.segments)
        seeds = [cfg.circuit_seed(i) for i in range(cfg.count)]
        if cfg.mode == "serial":
            for s in seeds:
                writer.begin(cfg.n, s)
                stream_clifford(cfg.n, s, writer, on_segment=writer.mark)
        else:
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                if cfg.count == 1:
                    circuits = [sample_clifford(cfg.n, seeds[0], parallel=True, executor=pool)]
                else:
                    circuits = pool.map(sample_clifford, [cfg.n] * cfg.count, seeds)
                for c in circuits:
                    writer.write_circuit(c)
    return EXIT_OK


def cmd_stats(n: int, count: int, seed: int, as_json: bool = False, out: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    st = bound_stats(n, count, seed)
    report = dict(asdict(st), gate_bound=st.gate_bound, depth_bound=st.depth_bound, passed=st.passed)
    if as_json:
        out.write(json.dumps(report) + "\n")
    else:
        out.write(
            f"n={n} count={count} seed={seed}\n"
            f"gates: min={st.gates_min} mean={st.gates_mean:.2f} max={st.gates_max} bound={st.gate_bound}\n"
            f"depth: min={st.depth_min} mean={st.depth_mean:.2f} max={st.depth_max} bound={st.depth_bound}\n"
            f"bounds: {'PASS' if st.passed else 'FAIL'}\n"
        )
    return EXIT_OK if st.passed else EXIT_VERIFY


def cmd_verify(level: str, seed: int = 0, out: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    results = run_checks(level, seed=seed)
    for r in results:
        out.write(r.line() + "\n")
        out.flush()
    failed = [r.name for r in results if not r.passed]
    if failed:
        out.write(f"verification failed: {', '.join(failed)}\n")
        return EXIT_VERIFY
    return EXIT_OK


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= SEED_MASK:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliffsample", description="Uniformly random Clifford circuits.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sample", help="emit random Clifford circuits")
    s.add_argument("--n", type=int, required=True, help="number of qubits")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--format", choices=FORMATS, default="text")
    s.add_argument("--mode", choices=("serial", "parallel"), default="serial")
    s.add_argument("--out", default=None, help="output file (default: stdout)")
    s.add_argument("--segments", action="store_true", help="mark iteration boundaries")
    s.add_argument("--workers", type=int, default=None, help="processes for --mode parallel")

    t = sub.add_parser("stats", help="gate-count and depth statistics against the bounds")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--count", type=int, default=1000)
    t.add_argument("--seed", type=_seed, default=0)
    t.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run the built-in correctness checks")
    v.add_argument("level", nargs="?", choices=("quick", "full"), default="quick")
    v.add_argument("--seed", type=_seed, default=0)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sample":
            try:
                cfg = RunConfig(
                    args.n, args.count, args.seed, args.format, args.mode, args.out, args.segments, args.workers
                )
            except ValueError as exc:
                parser.error(str(exc))
            return cmd_sample(cfg)
        if args.command == "stats":
            if args.n < 1 or args.count < 1:
                parser.error("--n and --count must be >= 1")
            return cmd_stats(args.n, args.count, args.seed, args.json)
        return cmd_verify(args.level, args.seed)
    except (OSError, BrokenPipeError) as exc:
        print(f"cliffsample: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Wall time per sample as a function of n, with a log-log slope fit.

The two sizes of each doubling step are timed alternately so that drift in
machine load hits both equally.

    python scripts/runtime_scaling.py --sizes 128 256 512 1024 2048 --samples 10
"""

import argparse
import gc
import time

import numpy as np

from cliffsample import derive_seed, sample_clifford


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[128, 256, 512, 1024, 2048])
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    times = {n: [] for n in args.sizes}
    gc.disable()
    for i in range(args.samples):
        for n in args.sizes:
            start = time.perf_counter()
            sample_clifford(n, derive_seed(args.seed, i))
            times[n].append(time.perf_counter() - start)
    gc.enable()

    means = [float(np.mean(times[n])) for n in args.sizes]
    prev = None
    for n, m in zip(args.sizes, means):
        ratio = "" if prev is None else f"  x{m / prev:.2f}"
        print(f"n={n:>6}  {m * 1e3:10.1f} ms/sample{ratio}")
        prev = m
    if len(args.sizes) > 1:
        slope = np.polyfit(np.log(args.sizes), np.log(means), 1)[0]
        print(f"log-log slope {slope:.2f}")


if __name__ == "__main__":
    main()

"""Gate-count and depth of sampled circuits against the worst-case bounds.

    python scripts/bound_stats.py --sizes 1 2 4 8 16 32 64 --count 1000
"""

import argparse
import time

from cliffsample.verify import bound_stats


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[1, 2, 4, 8, 16, 32, 64])
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    print(f"{'n':>4} {'gates mean':>11} {'max':>6} {'bound':>6} {'depth mean':>11} {'max':>5} {'bound':>6} {'secs':>6}")
    for n in args.sizes:
        start = time.perf_counter()
        st = bound_stats(n, args.count, args.seed)
        secs = time.perf_counter() - start
        print(
            f"{n:>4} {st.gates_mean:>11.1f} {st.gates_max:>6} {st.gate_bound:>6}"
            f" {st.depth_mean:>11.1f} {st.depth_max:>5} {st.depth_bound:>6} {secs:>6.2f}"
            + ("" if st.passed else "  BOUND EXCEEDED")
        )


if __name__ == "__main__":
    main()

"""Histogram of sampled Cliffords at small n with a chi-squared test.

    python scripts/uniformity.py --n 1 --samples 24000
    python scripts/uniformity.py --n 2 --samples 200000
"""

import argparse
from collections import Counter

from scipy.stats import chi2, chisquare

from cliffsample import canonical_key, derive_seed, sample_clifford, simulate
from cliffsample.verify import clifford_group_order


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--samples", type=int, default=24000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.001)
    args = p.parse_args()

    order = clifford_group_order(args.n)
    counts = Counter(
        canonical_key(simulate(sample_clifford(args.n, derive_seed(args.seed, i)))) for i in range(args.samples)
    )
    observed = list(counts.values()) + [0] * (order - len(counts))
    stat = chisquare(observed).statistic
    crit = chi2.ppf(1 - args.alpha, order - 1)
    print(f"group order {order}, distinct seen {len(counts)}")
    print(f"expected per element {args.samples / order:.1f}, observed min {min(observed)} max {max(observed)}")
    print(f"chi2 {stat:.2f} vs critical {crit:.2f} (alpha {args.alpha}, df {order - 1})")
    print("consistent with uniform" if stat < crit else "REJECTED")


if __name__ == "__main__":
    main()

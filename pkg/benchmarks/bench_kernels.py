"""Time the enumeration kernels on both backends.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one row per workload with the best-of-N time per backend and the
speedup of the compiled extension.  Both backends must return identical
results; the script exits non-zero otherwise.
"""

import argparse
import random
import sys
import timeit

from whamming import kernels
from whamming.gf import field_from_q


def workloads():
    rng = random.Random(0)
    f4, f5 = field_from_q(4), field_from_q(5)
    rows = [[rng.randrange(4) for _ in range(12)] for _ in range(8)]
    weights = [rng.randint(1, 50) for _ in range(12)]
    yield "codeword_weights q=4 k=8 n=12", lambda b: kernels.codeword_weights(f4, rows, weights, b)
    rows5 = [[rng.randrange(5) for _ in range(10)] for _ in range(7)]
    yield "codeword_weights q=5 k=7 n=10", lambda b: kernels.codeword_weights(f5, rows5, weights[:10], b)
    values = [rng.randint(1, 10**6) for _ in range(20)]
    yield "multiset_sums 20 distinct values", lambda b: kernels.multiset_sums(values, [1] * 20, b)
    yield "multiset_sums 6 values x 8 copies", lambda b: kernels.multiset_sums(values[:6], [8] * 6, b)
    alpha = (1, 2, 3, 1, 2, 3, 1)
    beta = (3, 3, 2, 2, 1, 1, 1)
    yield "monomial search q=4 n=6", lambda b: kernels.count_monomial_matches(f4, alpha[:6], beta[:6], [1] * 6, b)
    yield "monomial search q=2 n=8", lambda b: kernels.count_monomial_matches(
        field_from_q(2), (1,) * 4 + (0,) * 4, (0,) * 4 + (1,) * 4, [1] * 8, b)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if "cython" not in kernels.BACKENDS:
        print("compiled extension not built; only the Python backend is available", file=sys.stderr)
    backends = sorted(kernels.BACKENDS)
    print(f"{'workload':36}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in workloads():
        results = {b: fn(b) for b in backends}
        if len({repr(r) for r in results.values()}) != 1:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        times = {b: min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) for b in backends}
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else f"{'-':>10}"
        print(f"{name:36}" + "".join(f"{times[b]:11.4f}s" for b in backends) + speed)
    return 0


if __name__ == "__main__":
    sys.exit(main())

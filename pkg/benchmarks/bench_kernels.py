"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--n 5] [--repeat 3]
"""

import argparse
import timeit

from kreweras import _purepy, kernels


def cases(mod, n, sample):
    return {
        "enumerate_words": lambda: sum(1 for _ in mod.enumerate_words(n)),
        "promote": lambda: [mod.promote(w) for w in sample],
        "promote_power(3n)": lambda: [mod.promote_power(w, 3 * n) for w in sample],
        "promote_inverse": lambda: [mod.promote_inverse(w) for w in sample],
        "evacuate": lambda: [mod.evacuate(w) for w in sample],
        "orbit_size": lambda: [mod.orbit_size(w) for w in sample],
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--sample", type=int, default=2000)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the Python kernels are available")
    sample = list(_purepy.enumerate_words(args.n))[: args.sample]
    rows = {}
    for name, mod in sorted(backends.items()):
        for label, fn in cases(mod, args.n, sample).items():
            rows.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))

    print(f"n={args.n}, {len(sample)} sample words, best of {args.repeat}")
    print(f"{'kernel':<20}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for label, t in rows.items():
        py = t["python"]
        cy = t.get("cython")
        if cy is None:
            print(f"{label:<20}{py:>12.4f}{'-':>12}{'-':>10}")
        else:
            print(f"{label:<20}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()

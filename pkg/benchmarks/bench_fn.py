"""Compiled vs pure-Python backends of the n-qubit F kernels.

    python3 benchmarks/bench_fn.py [--max-n 7] [--repeat 3]

Both backends are timed on the same random states; the script also checks
that they agree before reporting anything.
"""
import argparse
import time

import numpy as np

from slocc import _kernels
from slocc.nqubit import _integer_components
from slocc.state import random_rational_state


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    names = _kernels.available_backends()
    if "compiled" not in names:
        print("compiled backend not built; only the python backend is available")
    print(f"{'n':>2} {'kernel':<6} " + " ".join(f"{b:>12}" for b in names) + "   speedup")
    rng = np.random.default_rng(args.seed)
    for n in range(args.min_n, args.max_n + 1):
        a = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
        s = random_rational_state(rng, n, max_num=5, max_den=1)
        re, im, _ = _integer_components(s)
        re, im = np.array(re, dtype=np.int64), np.array(im, dtype=np.int64)
        for kernel in ("float", "int"):
            results = {}
            for b in names:
                mod = _kernels.backend(b)
                call = (lambda m=mod: m.fn_float(a, n)) if kernel == "float" else (lambda m=mod: m.fn_int(re, im, n))
                results[b] = best_of(call, args.repeat)
            values = [r[1] for r in results.values()]
            first = values[0] if kernel == "float" else values[0][0]
            for v in values[1:]:
                v = v if kernel == "float" else v[0]
                assert abs(v - first) <= 1e-9 * max(1.0, abs(first)), "backends disagree"
            cols = " ".join(f"{results[b][0] * 1e3:10.2f}ms" for b in names)
            speed = ""
            if len(names) > 1:
                speed = f"{results['python'][0] / results['compiled'][0]:8.1f}x"
            print(f"{n:>2} {kernel:<6} {cols} {speed}")


if __name__ == "__main__":
    main()

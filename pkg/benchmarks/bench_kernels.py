"""Time the numba and numpy kernel backends against each other.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is called once per backend before timing so that JIT
compilation is excluded. The largest difference between the two
backends, relative to the largest output, is printed next to the timings.
"""
import argparse
import timeit

import numpy as np

from squeezespec import _kernels
from squeezespec.specfun import HYP1F1_MAX_TERMS, HYP1F1_TOL


def workloads():
    rng = np.random.default_rng(0)
    lam = rng.uniform(-5, 5, 2000)
    q = rng.uniform(-6, 6, 2000)
    z = rng.uniform(-20, 20, 5000) + 1j * rng.uniform(-20, 20, 5000)
    x = rng.uniform(-30, 30, 2000) + 1j * rng.uniform(-5, 5, 2000)
    return {
        "loggamma (5000 points)": ("loggamma", (z,)),
        "pollaczek_table (n <= 512, 2000 points)": ("pollaczek_table", (512, lam, 0.75)),
        "hermite_functions (n <= 256, 2000 points)": ("hermite_functions", (256, q)),
        "laguerre_table (n <= 256, 2000 points)": ("laguerre_table", (256, 2.0, np.abs(q))),
        "hyp1f1_series (2000 points)": ("hyp1f1_series", (0.5 - 1.3j, 1.0, x, HYP1F1_TOL, HYP1F1_MAX_TERMS)),
        "bessel_i_series (2000 points)": ("bessel_i_series", (2.0, x, HYP1F1_TOL, HYP1F1_MAX_TERMS)),
    }


def _first(out):
    return out[0] if isinstance(out, tuple) else out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    backends = [_kernels.get_backend(n) for n in _kernels.available_backends()]
    names = [b.name for b in backends]
    print(f"{'kernel':<44}" + "".join(f"{n + ' [ms]':>14}" for n in names) + f"{'rel. diff':>14}")
    for label, (kname, kargs) in workloads().items():
        times, outs = [], []
        for b in backends:
            fn = getattr(b, kname)
            outs.append(_first(fn(*kargs)))
            t = min(timeit.repeat(lambda: fn(*kargs), number=1, repeat=args.repeat))
            times.append(t * 1e3)
        diff = float(np.max(np.abs(outs[0] - outs[-1])) / np.max(np.abs(outs[0])))
        print(f"{label:<44}" + "".join(f"{t:14.2f}" for t in times) + f"{diff:14.1e}")


if __name__ == "__main__":
    main()

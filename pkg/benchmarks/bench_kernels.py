"""Time the hot kernels with numba on and with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--skip-slow]

Each mode runs in its own interpreter because ``QDSD_DISABLE_JIT`` is read
at import time.
"""

import argparse
import json
import os
import subprocess
import sys
import time

CASES = {
    "dsd_search GF(2)^4": ("search", 4, 2),
    "dsd_search GF(3)^3": ("search", 3, 3),
    "dsd_search GF(2)^5": ("search", 5, 2),
    "rref 2000x(5x5) mod 3": ("rref", (5, 5), 3),
    "rref 2000x(8x12) mod 2": ("rref", (8, 12), 2),
}
SLOW = {"dsd_search GF(2)^5"}


def _make(kind, size, q):
    import numpy as np

    from qdsd import kernels
    from qdsd.gfenum import _candidates

    if kind == "search":
        n = size
        table = _candidates(n, q)
        accept = table.accept_mask(None)
        dummy = np.zeros((0, n), dtype=np.int64)
        args = (table.bases, table.dims, n, q, table.inv, -1, accept, False, 0, len(table.dims), dummy, False)
        return lambda: int(kernels.dsd_search(*args))
    rng = np.random.default_rng(0)
    mats = [rng.integers(0, q, size=size).astype(np.int64) for _ in range(2000)]
    inv = kernels.inverse_table(q)
    return lambda: sum(int(kernels.rref_mod_p(m, q, inv)[1]) for m in mats)


def worker(names, repeat):
    from qdsd._jit import NUMBA_ENABLED

    results = {"numba": NUMBA_ENABLED}
    for name in names:
        fn = _make(*CASES[name])
        value = fn()  # warm-up / compile
        best = min(_timed(fn) for _ in range(repeat))
        results[name] = [best, value]
    print(json.dumps(results))


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def run_mode(names, repeat, disable_jit):
    env = dict(os.environ, QDSD_DISABLE_JIT="1" if disable_jit else "0")
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat), *names]
    out = subprocess.run(cmd, env=env, check=True, capture_output=True, text=True).stdout
    return json.loads(out.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-slow", action="store_true", help="skip GF(2)^5 on the Python path")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("names", nargs="*")
    args = parser.parse_args()
    if args.worker:
        worker(args.names, args.repeat)
        return

    names = list(CASES)
    jit = run_mode(names, args.repeat, disable_jit=False)
    slow_names = [n for n in names if not (args.skip_slow and n in SLOW)]
    py = run_mode(slow_names, 1, disable_jit=True)
    assert jit["numba"] and not py["numba"]
    print(f"{'case':26s} {'numba [s]':>10s} {'python [s]':>11s} {'speedup':>8s}  result")
    for name in names:
        t_jit, value = jit[name]
        if name not in py:
            print(f"{name:26s} {t_jit:10.4f} {'skipped':>11s} {'':>8s}  {value}")
            continue
        t_py, value_py = py[name]
        assert value == value_py, (name, value, value_py)
        print(f"{name:26s} {t_jit:10.4f} {t_py:11.4f} {t_py / t_jit:7.0f}x  {value}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Compare the compiled kernel backend against the pure-python fallback.

Runs the same three workloads under ALTPRIME_BACKEND=cython and =python in
subprocesses (the backend is fixed at import time), checks that both produce
identical counts, and prints a timing table with speedups.

Usage:
    python3 benchmarks/bench_kernels.py [--batch 200000] [--span 4000000] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workloads(batch, span):
    import numpy as np

    from altprime.kernels import is_prime_batch, sieve_segment, simple_sieve
    from altprime.primes import PrimeStream

    def mr_mixed():
        vals = np.arange(10**12 + 1, 10**12 + 2 * batch, 2, dtype=np.int64)
        return int(is_prime_batch(vals).sum())

    def mr_high():
        base = (1 << 61) + 1
        vals = np.arange(base, base + 2 * batch, 2, dtype=np.int64)
        return int(is_prime_batch(vals).sum())

    def segment():
        lo = 10**9 + 1
        base = simple_sieve(int((lo + span) ** 0.5) + 1)[1:]  # odd primes only
        return int(len(sieve_segment(lo, lo + span, base)))

    def stream():
        return sum(len(block) for block in PrimeStream(2 * 10**7).arrays())

    return {
        "mr_batch @1e12": mr_mixed,
        "mr_batch @2^61": mr_high,
        "sieve_segment @1e9": segment,
        "prime stream to 2e7": stream,
    }


def run_worker(args):
    from altprime.kernels import BACKEND

    results = {}
    for name, fn in workloads(args.batch, args.span).items():
        best = float("inf")
        value = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            value = fn()
            best = min(best, time.perf_counter() - t0)
        results[name] = {"seconds": best, "value": value}
    print(json.dumps({"backend": BACKEND, "results": results}))


def run_backend(backend, args):
    env = dict(os.environ, ALTPRIME_BACKEND=backend)
    cmd = [sys.executable, __file__, "--worker", "--batch", str(args.batch),
           "--span", str(args.span), "--repeat", str(args.repeat)]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--batch", type=int, default=200_000,
                    help="values per Miller-Rabin batch (default 200000)")
    ap.add_argument("--span", type=int, default=4_000_000,
                    help="sieve segment width (default 4000000)")
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions, best-of (default 3)")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)

    if args.worker:
        run_worker(args)
        return 0

    reports = {b: run_backend(b, args) for b in ("python", "cython")}
    for b, rep in reports.items():
        if rep["backend"] != b:
            raise RuntimeError(f"subprocess for {b} picked backend {rep['backend']}")

    py, cy = reports["python"]["results"], reports["cython"]["results"]
    width = max(map(len, py))
    print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}  result")
    for name in py:
        if py[name]["value"] != cy[name]["value"]:
            raise RuntimeError(
                f"backend disagreement on {name}: "
                f"python={py[name]['value']} cython={cy[name]['value']}")
        ps, cs = py[name]["seconds"], cy[name]["seconds"]
        print(f"{name:<{width}}  {ps:>9.3f}s  {cs:>9.3f}s  {ps / cs:>7.1f}x  {py[name]['value']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

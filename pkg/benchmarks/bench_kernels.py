"""Compare the compiled kernels against the pure-Python fallback.

Run as a script:

    python3 benchmarks/bench_kernels.py

Times the three hot paths (free reduction, the Artin substitution loop, and
permutation-set closure) on fixed seeded workloads and prints one line per
kernel with both timings and the speedup. Exits nonzero if the backends
disagree on any output, so the benchmark doubles as a parity smoke test.
"""

from __future__ import annotations

import random
import sys
import time

from commlab import _kernels_py

try:
    from commlab import _kernels
except ImportError:
    print("compiled kernels not built; run: pip install -e . --no-build-isolation")
    sys.exit(2)


def timed(fn, *args, repeat=5):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_reduce(backend, words):
    def run():
        acc = ()
        for w in words:
            acc = backend.multiply_reduced(acc, backend.reduce_letters(w))
        return acc
    return run


def bench_artin(backend, braid_words):
    def run():
        return [backend.artin_images(6, w) for w in braid_words]
    return run


def bench_closure(backend, gen_sets):
    def run():
        return [frozenset(backend.closure_set(gens, 8, 50000)) for gens in gen_sets]
    return run


def main() -> int:
    rng = random.Random(2024)
    words = [
        [rng.choice([c for c in range(-5, 6) if c]) for _ in range(400)]
        for _ in range(200)
    ]
    braid_words = [
        [rng.choice([c for c in range(-5, 6) if c]) for _ in range(60)]
        for _ in range(120)
    ]
    gen_sets = [
        tuple(bytes(rng.sample(range(8), 8)) for _ in range(2)) for _ in range(30)
    ]

    rows = [
        ("reduce+multiply", bench_reduce, (words,)),
        ("artin_images", bench_artin, (braid_words,)),
        ("closure_set", bench_closure, (gen_sets,)),
    ]
    print(f"{'kernel':<16} {'python':>10} {'cython':>10} {'speedup':>8}")
    ok = True
    for name, make, args in rows:
        t_py, out_py = timed(make(_kernels_py, *args))
        t_cy, out_cy = timed(make(_kernels, *args))
        if out_py != out_cy:
            ok = False
            print(f"{name:<16} BACKEND MISMATCH")
            continue
        print(f"{name:<16} {t_py * 1e3:>8.2f}ms {t_cy * 1e3:>8.2f}ms {t_py / t_cy:>7.2f}x")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

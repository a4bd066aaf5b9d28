"""Time the compiled and pure-Python box kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--bound 60] [--repeat 3]
"""

import argparse
import itertools
import math
import random
import time

from toricsing import kernels


def blowup_inputs(bound):
    out = []
    for d in (2, 3):
        top = bound if d == 2 else bound // 4
        for n in itertools.combinations_with_replacement(range(1, top + 1), d):
            if math.gcd(*n) == 1:
                out.append(n)
    return out


def fibration_inputs(bound, count=2000, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(2, 4)
        n = (rng.randint(1, bound),) + tuple(rng.randint(-bound, bound) for _ in range(d - 1))
        if math.gcd(*n) == 1:
            out.append(n)
    return out


def timed(fn, inputs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        results = [fn(n) for n in inputs]
        best = min(best, time.perf_counter() - start)
    return best, results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=60)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not kernels.COMPILED_AVAILABLE:
        raise SystemExit("compiled kernels are not built; run `python3 setup.py build_ext --inplace`")

    suites = [
        ("blowup", kernels.box_min_blowup, blowup_inputs(args.bound)),
        ("fibration", kernels.box_min_fibration, fibration_inputs(args.bound)),
    ]
    previous = kernels.get_backend()
    print(f"{'kernel':<10} {'inputs':>7} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    try:
        for name, fn, inputs in suites:
            timings = {}
            answers = {}
            for backend in ("python", "compiled"):
                kernels.set_backend(backend)
                timings[backend], answers[backend] = timed(fn, inputs, args.repeat)
            if answers["python"] != answers["compiled"]:
                raise SystemExit(f"{name}: backends disagree")
            py, c = timings["python"], timings["compiled"]
            print(f"{name:<10} {len(inputs):>7} {py:>10.3f} {c:>11.3f} {py / c:>7.1f}x")
    finally:
        kernels.set_backend(previous)


if __name__ == "__main__":
    main()

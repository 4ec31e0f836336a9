"""Compare the compiled kernel extension against the pure-Python twin.

Times the scalar hot path (cyclotomic multiplication), matrix powers,
and the heaviest pipeline step (the exact commutant solve), once per
available backend.

    python benchmarks/bench_backends.py [--repeat 5]
"""

import argparse
import random
import time

from qeuclid import kernels
from qeuclid.repmod import build_module, random_module_params
from qeuclid.scalars import CyclotomicField
from qeuclid.verify import commutant_dimension, run_verification


def _random_elements(m, count, seed=1):
    rng = random.Random(seed)
    field = CyclotomicField(m)
    out = []
    for _ in range(count):
        e = field.element([rng.randint(-9, 9) for _ in range(field.degree)],
                          rng.randint(1, 9))
        if not e.is_zero():
            out.append(e)
    return out


def bench_scalar_mul(m):
    elements = _random_elements(m, 400)

    def run():
        acc = elements[0]
        for e in elements:
            acc = acc * e
        return acc
    return run


def bench_matrix_power():
    params = random_module_params("I", 2, 9, 2, seed=5)
    gm = build_module(params)

    def run():
        return gm.mat("x2") ** params.m
    return run


def bench_commutant():
    params = random_module_params("II", 3, 5, 2, seed=6)  # dimension 25
    gm = build_module(params)

    def run():
        return commutant_dimension(gm)
    return run


def bench_full_verification():
    params = random_module_params("III", 3, 3, 1, seed=7)
    gm = build_module(params)

    def run():
        return run_verification(gm)
    return run


SCENARIOS = [
    ("cyclotomic mul, m=9 (400 elems)", lambda: bench_scalar_mul(9)),
    ("cyclotomic mul, m=15 (400 elems)", lambda: bench_scalar_mul(15)),
    ("matrix m-th power (n=2, m=9)", bench_matrix_power),
    ("commutant solve (n=3, m=5, dim 25)", bench_commutant),
    ("full verification (n=3, m=3)", bench_full_verification),
]


def time_best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}\n")
    results = {}
    for backend in backends:
        kernels.set_backend(backend)
        for name, make in SCENARIOS:
            fn = make()
            results[(name, backend)] = time_best(fn, args.repeat)

    width = max(len(name) for name, _ in SCENARIOS)
    header = f"{'scenario'.ljust(width)}  " + "".join(
        f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, _ in SCENARIOS:
        row = name.ljust(width) + "  "
        times = [results[(name, b)] for b in backends]
        row += "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(backends) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()

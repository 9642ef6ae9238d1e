"""Compare the compiled and pure-Python kernel backends.

Runs the raw kernels on random words, then a full 4-cube completion with
each backend in a fresh interpreter (the backend is fixed at import).

    python3 benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import timeit

from metabelian_gs import _pykernels

try:
    from metabelian_gs import _ckernels
except ImportError:
    _ckernels = None


def random_rword(rng, k, n):
    tail = sorted(rng.randrange(k) for _ in range(n - 1))
    head = rng.randrange(tail[0] + 1, k + 1) if tail[0] + 1 < k else None
    return None if head is None or head >= k else (head,) + tuple(tail)


def workload(rng, count=2000, k=12):
    cases = []
    while len(cases) < count:
        w = random_rword(rng, k, rng.randint(2, 8))
        if w is None:
            continue
        t = tuple(sorted(rng.randrange(k) for _ in range(rng.randint(1, 4))))
        cases.append((w, t))
    return cases


def bench_module(mod, cases, repeat=5):
    def run():
        for w, t in cases:
            mod.mul_word_tail(w, t)
            mod.merge(w[1:], t)
            mod.tail_diff(w[1:], t)
            mod.tail_lcm(w[1:], t)
            mod.strict_remove(w, t[0])
            mod.is_subword_tail(w[1:], t)

    return min(timeit.repeat(run, number=1, repeat=repeat))


CUBE = (
    "import time\n"
    "from metabelian_gs import kernels\n"
    "from metabelian_gs.completion import shirshov_complete, reduce_basis\n"
    "from metabelian_gs.presentations import cube, graph_presentation\n"
    "P = graph_presentation(cube(4))\n"
    "t = time.perf_counter()\n"
    "b = reduce_basis(shirshov_complete(P).basis)\n"
    "print(kernels.BACKEND, len(b), time.perf_counter() - t)\n"
)


def bench_cube(pure):
    env = dict(os.environ, METABELIAN_GS_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", CUBE], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], int(out[1]), float(out[2])


def main():
    cases = workload(random.Random(0))
    tp = bench_module(_pykernels, cases)
    print(f"kernels  python  {tp * 1e3:8.2f} ms")
    if _ckernels is not None:
        tc = bench_module(_ckernels, cases)
        print(f"kernels  cython  {tc * 1e3:8.2f} ms   speedup {tp / tc:.2f}x")
    else:
        print("kernels  cython  (extension not built)")
    for pure in (True, False):
        backend, n, dt = bench_cube(pure)
        print(f"cube(4)  {backend:7s} {dt * 1e3:8.1f} ms   basis {n}")


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python kernels.

Micro benchmarks call both kernel modules directly; the end-to-end part
runs a few fixtures in subprocesses, once per backend.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from khovbasis import _kernels_py as py

try:
    from khovbasis import _kernels as cy
except ImportError:
    cy = None

ROWS = ((1, 1, 1, 1), (0, 0, 0, -1), (0, 0, -1, 0), (0, -1, 0, 0))


def rand_terms(rng, k, d=5, n=4):
    return {tuple(rng.randint(0, d) for _ in range(n)): Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 4))
            for _ in range(k)}


def micro(mod, repeat):
    rng = random.Random(1)
    a, b = rand_terms(rng, 40), rand_terms(rng, 40)
    basis = []
    for _ in range(4):
        t = rand_terms(rng, 6, d=2)
        lead = py.leading_exp(t, ROWS)
        basis.append((lead, {k: v / t[lead] for k, v in t.items()}))
    big = mod.mul_terms(a, b)
    cases = {
        "mul_terms 40x40": lambda: mod.mul_terms(a, b),
        "axpy_inplace": lambda: mod.axpy_inplace(dict(a), b, Fraction(-3, 2), (1, 0, 1, 0)),
        "leading_exp": lambda: mod.leading_exp(big, ROWS),
        "reduce_full": lambda: mod.reduce_full(a, basis, ROWS),
    }
    return {name: min(timeit.repeat(fn, number=20, repeat=repeat)) / 20 for name, fn in cases.items()}


END_TO_END = """
import time
from khovbasis import kernels
from khovbasis.cli import parse_problem_file, run_command
names = {names!r}
t = time.perf_counter()
for n in names:
    prob = parse_problem_file(open(n).read())
    run_command("khovanskii" if "block" in n else "muvak", prob)
print(kernels.BACKEND, time.perf_counter() - t)
"""


def end_to_end(pure):
    here = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "problems")
    names = [os.path.join(here, f) for f in ("chain.prob", "squares_torsion.prob", "squares_standard.prob",
                                             "block_standard.prob")]
    env = dict(os.environ)
    env["KHOVBASIS_PURE_PYTHON"] = "1" if pure else "0"
    out = subprocess.run([sys.executable, "-c", END_TO_END.format(names=names)], env=env,
                         capture_output=True, text=True, check=True)
    backend, secs = out.stdout.split()
    return backend, float(secs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled kernels are not built; only the Python backend is available")
    mp = micro(py, args.repeat)
    mc = micro(cy, args.repeat) if cy else {}
    print(f"{'kernel':<18}{'python us':>12}{'cython us':>12}{'speedup':>10}")
    for k in mp:
        c = mc.get(k)
        row = f"{k:<18}{mp[k] * 1e6:>12.1f}"
        row += f"{c * 1e6:>12.1f}{mp[k] / c:>9.2f}x" if c else f"{'-':>12}{'-':>10}"
        print(row)
    print()
    for pure in (True, False):
        backend, secs = end_to_end(pure)
        print(f"fixtures end to end, {backend} backend: {secs:.3f}s")


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from hmknf import kernels
from hmknf.generators import random_dependable_partition, random_kb
from hmknf.unfounded import constraints


def random_cnf(rng, n, m):
    pos, neg = [], []
    for _ in range(m):
        p = q = 0
        for a in rng.sample(range(n), 3):
            if rng.random() < 0.5:
                p |= 1 << a
            else:
                q |= 1 << a
        pos.append(p)
        neg.append(q)
    return pos, neg


def bench_sat(backend, rng_seed=1, n=40, count=20):
    rng = random.Random(rng_seed)
    instances = [random_cnf(rng, n, int(4.26 * n)) for _ in range(count)]
    start = time.perf_counter()
    for pos, neg in instances:
        kernels.clause_set(pos, neg, n, backend).model()
    return time.perf_counter() - start


def bench_closure(backend, rng_seed=2, n=30, count=40):
    rng = random.Random(rng_seed)
    instances = [random_cnf(rng, n, 2 * n) for _ in range(count)]
    start = time.perf_counter()
    for pos, neg in instances:
        cs = kernels.clause_set(pos, neg, n, backend)
        for _ in range(20):
            cs.closure(rng.getrandbits(n) & rng.getrandbits(n), (1 << n) - 1)
    return time.perf_counter() - start


def _unfounded_inputs(rng_seed=3, count=60):
    rng = random.Random(rng_seed)
    out = []
    while len(out) < count:
        kb = random_kb(rng, max_atoms=12, max_rules=7, max_clauses=5, max_head=2)
        p = random_dependable_partition(rng, kb)
        if kb.oracle.dependable(p.tmask, p.fmask):
            out.append((kb, p, constraints(kb, p, "python")))
    return out


def bench_unfounded(backend, inputs):
    start = time.perf_counter()
    for kb, p, cs in inputs:
        width = len(kb.atoms)
        kernels.gus_fixpoint(kb.ka_mask & ~p.tmask, cs, width, backend)
        kernels.unfounded_family(kb.ka_mask, cs, width, backend)
    return time.perf_counter() - start


def bench_headcuts(backend, rng_seed=4, count=10):
    rng = random.Random(rng_seed)
    instances = []
    for _ in range(count):
        rules = 8
        choices = [tuple(1 << a for a in rng.sample(range(20), 3)) for _ in range(rules)]
        bodies = [rng.getrandbits(20) & rng.getrandbits(20) for _ in range(rules)]
        instances.append((choices, bodies))
    start = time.perf_counter()
    for choices, bodies in instances:
        kernels.headcut_constraints(choices, bodies, 20, backend)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python backend is available")
    inputs = _unfounded_inputs()
    cases = {
        "sat (random 3-CNF, 40 vars)": bench_sat,
        "closure (30 vars, 20 queries each)": bench_closure,
        "unfounded family + fixpoint": lambda b: bench_unfounded(b, inputs),
        "head-cut constraints (4^8 cuts)": bench_headcuts,
    }
    print(f"{'kernel':38} " + " ".join(f"{b:>10}" for b in backends) + ("    speedup" if len(backends) > 1 else ""))
    for name, fn in cases.items():
        best = {b: min(fn(b) for _ in range(args.repeat)) for b in backends}
        row = f"{name:38} " + " ".join(f"{best[b]:9.4f}s" for b in backends)
        if len(backends) > 1:
            row += f"  {best['python'] / best['cython']:8.1f}x"
        print(row)


if __name__ == "__main__":
    main()

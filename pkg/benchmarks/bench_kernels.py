"""Time the hot kernels under numba and under the pure Python/numpy fallback.

Each backend runs in its own interpreter because the backend is fixed at
import time by ZAGRAPH_DISABLE_NUMBA.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
import numpy as np
from zagraph import kernels
from zagraph._accel import backend
from zagraph.expr import elaborate
from zagraph.graphs import za_graph
from zagraph.invariants import chromatic_number, clique_number, girth
from zagraph.ring import annihilator_matrix, ring_axiom_audit

repeat = int(sys.argv[1])
m3 = elaborate("M2(Z3)")
z2_6 = elaborate(" x ".join(["Z2"] * 6))
ann = annihilator_matrix(m3, "left")[1:, 1:]
g = za_graph(m3)
cases = {
    "audit M2(Z3)": lambda: ring_axiom_audit(m3),
    "trivial-meet M2(Z3)": lambda: kernels.trivial_meet_matrix(ann),
    "girth ZA(M2(Z3))": lambda: girth(g),
    "omega ZA(Z2^6)": lambda: clique_number(za_graph(z2_6)),
    "chi ZA(M2(Z3))": lambda: chromatic_number(g),
}
out = {"backend": backend()}
for name, fn in cases.items():
    fn()  # warm-up, includes compilation
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out[name] = best * 1000.0
print(json.dumps(out))
"""


def run(disable, repeat):
    env = dict(os.environ)
    env.pop("ZAGRAPH_DISABLE_NUMBA", None)
    if disable:
        env["ZAGRAPH_DISABLE_NUMBA"] = "1"
    proc = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    start = time.perf_counter()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    print(f"{'kernel':<24}{fast['backend'] + ' ms':>12}{slow['backend'] + ' ms':>12}{'speedup':>10}")
    for name in fast:
        if name == "backend":
            continue
        a, b = fast[name], slow[name]
        print(f"{name:<24}{a:>12.3f}{b:>12.3f}{b / a if a else float('inf'):>9.1f}x")
    print(f"(best of {args.repeat}; total {time.perf_counter() - start:.1f} s)")


if __name__ == "__main__":
    main()

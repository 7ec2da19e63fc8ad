"""Compare the compiled kernel with the pure-Python fallback.

Each backend runs in its own interpreter (TQC_PURE selects it at import).
Usage: python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from tqc import kernel
from tqc.exactnum import parse_rational
from tqc.charge import search_charge, t_relator_kword
from tqc.suites import check_k_relations

rep = int(sys.argv[1])
rng = random.Random(7)
pairs = [(rng.randint(-10**6, 10**6), rng.randint(1, 10**6)) for _ in range(20000)]

def best(fn):
    out = []
    for _ in range(rep):
        t = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t)
    return min(out)

def micro():
    for (a, b), (c, d) in zip(pairs, pairs[1:]):
        kernel.reduce_pair(a * 6, b * 6)
        kernel.cyc_cmp(a, b, c, d)
        kernel.mobius(2, 1, 1, 1, a, b)

res = {
    "backend": kernel.BACKEND,
    "kernel ops (60k calls)": best(micro),
    "search alpha^4": best(lambda: search_charge(t_relator_kword("alpha4"))),
    "search (beta alpha)^5": best(lambda: search_charge(t_relator_kword("pentagon"))),
    "relations suite": best(lambda: check_k_relations(seed=0)),
}
print(json.dumps(res))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ, TQC_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    print(f"{'workload':28s} {fast['backend']:>10s} {slow['backend']:>10s}  ratio")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:28s} {fast[key]:9.3f}s {slow[key]:9.3f}s  {slow[key] / fast[key]:5.2f}x")


if __name__ == "__main__":
    main()

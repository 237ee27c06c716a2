"""Compare the compiled and pure-Python kernels, plus one end-to-end workload.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from blowcalc import _kernels_py

try:
    from blowcalc import _ckernels
except ImportError:
    _ckernels = None


def _cases(rng: random.Random):
    seqs = [tuple(rng.randint(-6, 4) for _ in range(rng.randint(2, 12))) for _ in range(200)]
    long_seqs = [tuple(rng.randint(-50, 50) for _ in range(60)) for _ in range(20)]
    mats = []
    for _ in range(50):
        n = rng.randint(4, 14)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = rng.randint(-6, 3)
            if i:
                j = rng.randrange(i)
                m[i][j] = m[j][i] = 1
        mats.append(m)
    return {
        "det_pair (200 short)": lambda k: [k.det_pair(s) for s in seqs],
        "det_pair (20 x len 60)": lambda k: [k.det_pair(s) for s in long_seqs],
        "bareiss_det (50 forests)": lambda k: [k.bareiss_det([r[:] for r in m]) for m in mats],
        "seq_neighbors (200)": lambda k: [k.seq_neighbors(s, True, True) for s in seqs],
    }


def _end_to_end(pure: bool) -> float:
    code = (
        "import time\n"
        "from blowcalc.oracle import SearchBounds, bfs_seq_class\n"
        "t = time.perf_counter()\n"
        "bfs_seq_class((0, 0, 0), SearchBounds(7, -5, 3, budget=10**7))\n"
        "print(time.perf_counter() - t)\n"
    )
    env = dict(os.environ)
    env.pop("BLOWCALC_PURE_PYTHON", None)
    if pure:
        env["BLOWCALC_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    cases = _cases(random.Random(0))
    impls = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':28s}" + "".join(f"{name:>12s}" for name, _ in impls) + ("     speedup" if _ckernels else ""))
    for label, fn in cases.items():
        times = [min(timeit.repeat(lambda: fn(k), number=10, repeat=args.repeat)) / 10 for _, k in impls]
        row = f"{label:28s}" + "".join(f"{t * 1e3:10.3f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)

    py = _end_to_end(pure=True)
    line = f"{'oracle closure of (0,0,0)':28s}{py * 1e3:10.1f}ms"
    if _ckernels:
        cy = _end_to_end(pure=False)
        line += f"{cy * 1e3:10.1f}ms{py / cy:11.1f}x"
    print(line)
    if not _ckernels:
        print("compiled extension not built; only the Python backend was measured")


if __name__ == "__main__":
    main()

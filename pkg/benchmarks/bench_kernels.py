"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints the best-of-N wall time per kernel and backend, the speed-up, and the
largest difference between the two backends' outputs.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from su2particle import _kernels
from su2particle.core import AlgebraElement, algebra_matrix, exp_su2
from su2particle.haar import sample_group
from su2particle.spectra import SpinLabel, build_eigenfunction


def cases():
    rng = np.random.default_rng(0)
    g0 = exp_su2(AlgebraElement(tuple(rng.normal(size=3)))).matrix
    r = np.array([0.4, -1.0, 0.7])
    psi = build_eigenfunction(SpinLabel.of(3, 0, 1)).poly
    gs = sample_group(20_000, seed=0)
    step = exp_su2(AlgebraElement(tuple(1e-3 * r))).matrix
    traj = _kernels.exact_flow(g0, step, 20_000)
    return {
        f"evaluate_many ({len(psi)} terms x 20000 pts)": lambda: _kernels.evaluate_many(psi, gs),
        "exact_flow (20000 steps)": lambda: _kernels.exact_flow(g0, step, 20_000),
        "rk4_projected_flow (20000 steps)": lambda: _kernels.rk4_projected_flow(g0, algebra_matrix(r), 1e-3, 20_000),
        "space_charges (20001 samples)": lambda: _kernels.space_charges(traj, r),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = sorted(_kernels.BACKENDS)
    if "cython" not in backends:
        print("compiled extension not built; only the fallback is timed")
    start = _kernels.BACKEND
    table = {}
    for name in backends:
        _kernels.use_backend(name)
        for label, fn in cases().items():
            best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            table.setdefault(label, {})[name] = (best, fn())
    _kernels.use_backend(start)

    print(f"{'kernel':44s}" + "".join(f"{b:>12s}" for b in backends) + f"{'speed-up':>10s}{'max diff':>11s}")
    for label, row in table.items():
        line = f"{label:44s}" + "".join(f"{row[b][0] * 1e3:10.2f}ms" for b in backends)
        if len(backends) == 2:
            speed = row["python"][0] / row["cython"][0]
            diff = float(np.max(np.abs(row["python"][1] - row["cython"][1])))
            line += f"{speed:9.1f}x{diff:11.1e}"
        print(line)


if __name__ == "__main__":
    main()

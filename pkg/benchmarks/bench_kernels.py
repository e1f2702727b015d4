#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

The workload mirrors the preimage-tree builder: batched Durand-Kerner solves
of degree-3 polynomials and Newton polishing against a composition chain.
Run with ARITHSITE_NO_NUMBA=1 to confirm the fallback selection by env flag.
"""

import time

import numpy as np

from arithsite import kernels


def bench(fn, *args, repeat=5):
    fn(*args)  # warm up (jit compile on the numba path)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    rng = np.random.default_rng(0)
    m = 4000
    coeffs = (rng.normal(size=(m, 4)) + 1j * rng.normal(size=(m, 4))).astype(np.complex128)
    coeffs[:, -1] += 2.0

    chain = np.array([[0.0, 0.0, 3.0, -2.0]] * 8, dtype=np.complex128)
    # polish starts near the preimage cloud of [0, 1], as in the tree builder
    xs = (rng.uniform(-0.5, 1.5, size=2000) + 1e-3j * rng.normal(size=2000)).astype(np.complex128)
    pts = xs[:1500]
    return coeffs, chain, xs, pts


def main():
    coeffs, chain, xs, pts = workloads()
    rows = []

    def run(label, numba_fn, numpy_fn, *args):
        t_np = bench(numpy_fn, *args)
        if kernels.HAS_NUMBA:
            t_nb = bench(numba_fn, *args)
            rows.append((label, t_nb, t_np, t_np / t_nb))
        else:
            rows.append((label, None, t_np, None))

    roots = kernels.initial_roots(coeffs)
    run(
        "dk_batch (4000 cubics)",
        (lambda c, r: kernels._dk_batch_numba(c, r.copy(), 400, 1e-14)) if kernels.HAS_NUMBA else None,
        lambda c, r: kernels._dk_batch_numpy(c, r.copy(), 400, 1e-14),
        coeffs,
        roots,
    )
    dchain = np.zeros_like(chain)
    for c in range(1, chain.shape[1]):
        dchain[:, c - 1] = c * chain[:, c]
    run(
        "newton_chain (depth 8, 2000 pts)",
        (lambda: kernels._newton_chain_numba(chain, dchain, xs.copy(), 0.5 + 0j, 8)) if kernels.HAS_NUMBA else None,
        lambda: kernels._newton_chain_numpy(chain, dchain, xs.copy(), 0.5 + 0j, 8),
    )
    run(
        "min_pairwise_gap (1500 pts)",
        (lambda: kernels._min_gap_numba(pts)) if kernels.HAS_NUMBA else None,
        lambda: kernels._min_gap_numpy(pts),
    )

    print(f"numba available: {kernels.HAS_NUMBA}")
    print(f"{'kernel':<34} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for label, t_nb, t_np, sp in rows:
        nb = f"{t_nb * 1e3:8.2f}ms" if t_nb is not None else "      --"
        s = f"{sp:7.1f}x" if sp is not None else "      --"
        print(f"{label:<34} {nb:>10} {t_np * 1e3:8.2f}ms {s:>8}")


if __name__ == "__main__":
    main()

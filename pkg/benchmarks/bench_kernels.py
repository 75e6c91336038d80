#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Times the two hot paths on one maximal parabolic: the coset-representative
BFS and the Bott cell sums for a sweep of twists.  Run from the repo root:

    python benchmarks/bench_kernels.py            # E7 node 4, ~10k cosets
    python benchmarks/bench_kernels.py --quick    # E6 node 4, ~700 cosets
    python benchmarks/bench_kernels.py --group E8 --node 2 --k -2..4
"""

import argparse
import time

from flagcohom import _kernels_py
from flagcohom.parabolic import build_parabolic
from flagcohom.root_system import LieType, build_root_system

try:
    from flagcohom import _corekernels
except ImportError:
    _corekernels = None


def run_backend(mod, rs, pd, kmin, kmax):
    node = pd.node
    rank = rs.lie_type.rank
    levi = tuple(m for m in range(rank) if m != node - 1)
    t0 = time.perf_counter()
    lengths, _, _, vflat = mod.coset_bfs(rs.reflection_root_mats, rank, levi, 10**7)
    t_bfs = time.perf_counter() - t0

    dim = lengths[-1]
    offsets = [0] * (dim + 2)
    for q in lengths:
        offsets[q + 1] += 1
    for q in range(1, len(offsets)):
        offsets[q] += offsets[q - 1]

    t0 = time.perf_counter()
    checksum = 0
    for k in range(kmin, kmax + 1):
        for q in range(dim + 1):
            h = mod.grade_cohomology(
                vflat,
                offsets[q],
                offsets[q + 1],
                rank,
                rs.pos_coords_flat,
                len(rs.positive_roots),
                rs.halfnorms,
                node - 1,
                pd.c * k,
                rs.delta_pairing_product,
                dim,
            )
            checksum += sum(h)
    t_cells = time.perf_counter() - t0
    return len(lengths), t_bfs, t_cells, checksum


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", default="E7")
    ap.add_argument("--node", type=int, default=4)
    ap.add_argument("--k", default="-4..6", help="inclusive twist range a..b")
    ap.add_argument("--quick", action="store_true", help="small E6 workload")
    args = ap.parse_args()

    if args.quick:
        lt, node = LieType.parse("E6"), 4
    else:
        lt, node = LieType.parse(args.group), args.node
    lo, hi = (int(x) for x in args.k.split(".."))

    rs = build_root_system(lt)
    pd = build_parabolic(rs, node)
    print(f"workload: {lt} node {node}, dim X = {pd.dim_x}, "
          f"twists {lo}..{hi}")

    backends = [("py", _kernels_py)]
    if _corekernels is not None:
        backends.append(("c", _corekernels))
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    results = {}
    for name, mod in backends:
        total, t_bfs, t_cells, checksum = run_backend(mod, rs, pd, lo, hi)
        results[name] = (t_bfs, t_cells, checksum)
        print(f"  {name:>3}: {total} cosets | bfs {t_bfs:8.3f}s | "
              f"cells {t_cells:8.3f}s | checksum {checksum % 10**12}")

    if len(results) == 2:
        assert results["py"][2] == results["c"][2], "backend checksums differ"
        bfs_speedup = results["py"][0] / max(results["c"][0], 1e-9)
        cell_speedup = results["py"][1] / max(results["c"][1], 1e-9)
        print(f"speedup: bfs {bfs_speedup:.1f}x, cells {cell_speedup:.1f}x")


if __name__ == "__main__":
    main()

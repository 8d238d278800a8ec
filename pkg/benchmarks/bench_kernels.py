#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

The same functions run on both paths (outputs are asserted equal), on a
spread of groups where the O(n^2)-and-up table loops dominate: a large
dihedral group, the order-625 witness product, and an order-32 fixture
group.  Run:

    python benchmarks/bench_kernels.py [--repeat 5]

Set CAMINA_NO_NUMBA=1 to confirm the package itself falls back cleanly
(this script always imports both implementations explicitly).
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

import numpy as np

from camina import FamilySpec, build_family, parse_corpus, t_witness_spec
from camina import _kernels
from camina.groups import center, derived_subgroup

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def bench(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def compare(name, fn_jit, fn_np, args, repeat):
    t_np, r_np = bench(fn_np, args, repeat)
    if fn_jit is not None:
        fn_jit(*args)  # compile outside the timing loop
        t_jit, r_jit = bench(fn_jit, args, repeat)
        same = _same(r_jit, r_np)
        ratio = t_np / t_jit if t_jit > 0 else float("inf")
        print(
            f"  {name:<24} numba {t_jit * 1e3:9.3f} ms   numpy {t_np * 1e3:9.3f} ms"
            f"   speedup x{ratio:5.1f}   outputs equal: {same}"
        )
        assert same
    else:
        print(f"  {name:<24} numpy {t_np * 1e3:9.3f} ms   (numba unavailable)")


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def groups_to_bench():
    out = [
        ("dihedral:512", build_family(FamilySpec("dihedral", (512,)))),
        ("T:5,1 (order 625)", build_family(t_witness_spec(5, 1))),
        # a positive verdict, so the pair scans run to completion
        ("extraspecial_p:3,2", build_family(FamilySpec("extraspecial_exp_p", (3, 2)))),
    ]
    path = FIXTURES / "order32.grp"
    if path.exists():
        entries = parse_corpus(path.read_text(), validate=False)
        entry = next(e for e in entries if e.index == 6)
        out.append(("32:6", entry.build()))
    return out


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    jit = _kernels.USING_NUMBA
    print(f"numba path available: {jit}")
    for name, G in groups_to_bench():
        print(f"{name} (order {G.order})")
        class_of, _ = _kernels.conjugacy_partition_np(G.mul, G.inv)
        Z = center(G)
        Gp = derived_subgroup(G)
        N = Z if 1 < Z.order < G.order else Gp
        members = N.members
        outside = np.flatnonzero(~N.mask).astype(np.int32)
        reps = np.unique(class_of, return_index=True)[1].astype(np.int32)

        compare(
            "conjugacy_partition",
            _kernels._conjugacy_partition_jit if jit else None,
            _kernels.conjugacy_partition_np,
            (G.mul, G.inv),
            args.repeat,
        )
        compare(
            "coset_class_check",
            _kernels._coset_class_check_jit if jit else None,
            _kernels.coset_class_check_np,
            (G.mul, class_of, members, outside),
            args.repeat,
        )
        compare(
            "commutator_cover_check",
            _kernels._commutator_cover_check_jit if jit else None,
            _kernels.commutator_cover_check_np,
            (G.mul, G.inv, members, outside),
            args.repeat,
        )
        compare(
            "assoc_violation",
            _kernels._assoc_violation_jit if jit else None,
            _kernels.assoc_violation_np,
            (G.mul,),
            args.repeat,
        )
        if G.order <= 256:
            compare(
                "class_product_counts",
                _kernels._class_product_counts_jit if jit else None,
                _kernels.class_product_counts_np,
                (G.mul, G.inv, class_of, reps),
                args.repeat,
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Compiled vs pure-Python kernels: row reduction mod p and table multiplication.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per workload with the best-of-N time of each backend and the
speedup. Both backends are checked to return identical results first.
"""

from __future__ import annotations

import argparse
import random
import timeit

from grhopf import _pykernels
from grhopf.cli.parser import load_presentation
from grhopf.cli.main import resolve_input
from grhopf.gralg.algebra import build_algebra, tensor_product

try:
    from grhopf import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def rref_workload(n: int, p: int, seed: int = 0):
    rng = random.Random(seed)
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)], n, p


def mul_workload(name: str, pairs: int = 200, seed: int = 0):
    a = build_algebra(load_presentation(resolve_input(name)))
    t = tensor_product(a, a)
    p = t.field.p
    rng = random.Random(seed)
    vecs = [([rng.randrange(p) for _ in range(t.dim)], [rng.randrange(p) for _ in range(t.dim)]) for _ in range(pairs)]
    return t, vecs, p


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the pure-Python backend is available")
        return 1
    rows = []
    for n, p in ((40, 2), (80, 3), (120, 5)):
        m, ncols, p = rref_workload(n, p)
        assert _ckernels.rref_mod_p(m, ncols, p) == _pykernels.rref_mod_p(m, ncols, p)
        py = best(lambda: _pykernels.rref_mod_p(m, ncols, p), args.repeat)
        cy = best(lambda: _ckernels.rref_mod_p(m, ncols, p), args.repeat)
        rows.append((f"rref {n}x{n} mod {p}", py, cy))
    for name in ("a1", "c_ex53", "d_variety"):
        t, vecs, p = mul_workload(name)
        table = t.table
        for u, v in vecs[:5]:
            assert _ckernels.sparse_mul_mod_p(u, v, table, p) == _pykernels.sparse_mul_mod_p(u, v, table, p)
        py = best(lambda: [_pykernels.sparse_mul_mod_p(u, v, table, p) for u, v in vecs], args.repeat)
        cy = best(lambda: [_ckernels.sparse_mul_mod_p(u, v, table, p) for u, v in vecs], args.repeat)
        rows.append((f"mul in {name}^(x2) (dim {t.dim}), {len(vecs)} products", py, cy))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  speedup")
    for label, py, cy in rows:
        print(f"{label:<{width}}  {py * 1e3:>8.2f}ms  {cy * 1e3:>8.2f}ms  {py / cy:>6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

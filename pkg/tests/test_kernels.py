from __future__ import annotations

import importlib
import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grhopf import _pykernels, kernels

from conftest import load
from oracles import rank_mod_p

try:
    from grhopf import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")

matrix = st.tuples(st.integers(1, 7), st.integers(1, 7), st.sampled_from([2, 3, 5, 7, 11])).flatmap(
    lambda t: st.tuples(
        st.lists(st.lists(st.integers(0, t[2] - 1), min_size=t[1], max_size=t[1]), min_size=t[0], max_size=t[0]),
        st.just(t[1]),
        st.just(t[2]),
    )
)


@settings(max_examples=80, deadline=None)
@given(matrix)
def test_python_rref_rank_matches_oracle(m):
    rows, ncols, p = m
    red, piv = _pykernels.rref_mod_p(rows, ncols, p)
    assert len(piv) == rank_mod_p(rows, p)
    for row, c in zip(red, piv):
        assert row[c] == 1
        assert all(x == 0 for x in row[:c])
        assert all(other[c] == 0 for other in red if other is not row)


@needs_ext
@settings(max_examples=80, deadline=None)
@given(matrix)
def test_backends_agree_on_rref(m):
    rows, ncols, p = m
    assert _ckernels.rref_mod_p(rows, ncols, p) == _pykernels.rref_mod_p(rows, ncols, p)


@needs_ext
@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["a1", "c_ex53", "d_variety", "ex2_8", "mu3_f2"]), st.data())
def test_backends_agree_on_multiplication(name, data):
    a = load(name).algebra
    p = a.field.p
    u = data.draw(st.lists(st.integers(0, p - 1), min_size=a.dim, max_size=a.dim))
    v = data.draw(st.lists(st.integers(0, p - 1), min_size=a.dim, max_size=a.dim))
    assert _ckernels.sparse_mul_mod_p(u, v, a.table, p) == _pykernels.sparse_mul_mod_p(u, v, a.table, p)


def test_empty_inputs():
    assert _pykernels.rref_mod_p([], 3, 5) == ([], [])
    if _ckernels is not None:
        assert _ckernels.rref_mod_p([], 3, 5) == ([], [])


def test_backend_selection_reports_a_known_backend():
    assert kernels.BACKEND in ("python", "cython")
    forced = os.environ.get("GRHOPF_PURE_PYTHON", "") in ("1", "true", "yes")
    if _ckernels is not None:
        assert kernels.BACKEND == ("python" if forced else "cython")


def test_pure_python_flag_forces_fallback():
    env = dict(os.environ, GRHOPF_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import grhopf.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_results_identical_under_either_backend():
    code = (
        "from grhopf import load_hopf, verify_hopf;"
        "from grhopf.gralg.decompose import decompose_local;"
        "h = load_hopf('{path}');"
        "print(verify_hopf(h).passed, [h.algebra.format(e) for e in decompose_local(h.algebra).idempotents])"
    )
    from conftest import fixture_path

    path = fixture_path("c_ex53")
    outs = []
    for flag in ("1", "0"):
        env = dict(os.environ, GRHOPF_PURE_PYTHON=flag)
        outs.append(subprocess.run([sys.executable, "-c", code.format(path=path)], env=env,
                                   capture_output=True, text=True, check=True).stdout)
    assert outs[0] == outs[1]
    assert outs[0].startswith("True")


def test_module_reload_keeps_interface():
    mod = importlib.reload(kernels)
    assert callable(mod.rref_mod_p) and callable(mod.sparse_mul_mod_p)


def test_benchmark_script_runs():
    if kernels.BACKEND != "cython":
        pytest.skip("compiled extension not built")
    bench = Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(bench), "--repeat", "1"], capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert "speedup" in out.stdout

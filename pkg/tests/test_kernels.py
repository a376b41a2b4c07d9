import os
import subprocess
import sys

import numpy as np
import pytest

from ripsnerve.homology import BACKEND, _compiled_reduce, kernel

import oracles

needs_compiled = pytest.mark.skipif(_compiled_reduce is None, reason="compiled kernel not built")


def random_csc(rng, n_rows, n_cols, density, p):
    dense = (rng.random((n_rows, n_cols)) < density) * rng.integers(1, p, (n_rows, n_cols))
    indptr, indices, data = [0], [], []
    for j in range(n_cols):
        rows = np.flatnonzero(dense[:, j])
        indices += rows.tolist()
        data += dense[rows, j].tolist()
        indptr.append(len(indices))
    return dense, np.array(indptr), np.array(indices, dtype=np.int64), np.array(data, dtype=np.int64)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("seed", range(20))
def test_python_kernel_rank_matches_dense(p, seed):
    rng = np.random.default_rng(seed)
    n_rows, n_cols = rng.integers(1, 25, 2)
    dense, *csc = random_csc(rng, n_rows, n_cols, rng.uniform(0.05, 0.5), p)
    lows = kernel("python")(*csc, n_rows, p)
    pivots = [x for x in lows if x >= 0]
    assert len(pivots) == len(set(pivots))
    assert len(pivots) == oracles.rank_mod_p(dense, p)


@needs_compiled
@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("seed", range(30))
def test_kernels_agree(p, seed):
    rng = np.random.default_rng(1000 + seed)
    n_rows, n_cols = rng.integers(1, 60, 2)
    _, *csc = random_csc(rng, n_rows, n_cols, rng.uniform(0.02, 0.4), p)
    assert kernel("cython")(*csc, n_rows, p) == kernel("python")(*csc, n_rows, p)


def test_empty_matrix():
    for name in ["python"] + (["cython"] if _compiled_reduce else []):
        assert kernel(name)(np.array([0]), np.array([], dtype=np.int64), np.array([], dtype=np.int64), 0, 2) == []


def test_unknown_kernel():
    with pytest.raises(ValueError):
        kernel("fortran")


def test_backend_reported():
    assert BACKEND in ("cython", "python")


def test_pure_fallback_selected_by_environment():
    env = dict(os.environ, RIPSNERVE_PURE="1")
    code = ("import ripsnerve as r; from ripsnerve.metric import hexagon, rips;"
            "print(r.BACKEND, r.betti_numbers(rips(hexagon(), 1.9, 'open', 3), 2).betti)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python (1, 0, 1)"

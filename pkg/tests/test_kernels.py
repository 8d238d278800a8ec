"""The numba and numpy kernel paths must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest

from camina import _kernels
from camina.groups import center, derived_subgroup


def _groups(q8, s3, heis27, corpus_groups):
    return [q8, s3, heis27, corpus_groups["32:6"], corpus_groups["32:49"]]


needs_numba = pytest.mark.skipif(
    not _kernels.USING_NUMBA, reason="numba path disabled"
)


@needs_numba
def test_conjugacy_partition_agrees(q8, s3, heis27, corpus_groups):
    for G in _groups(q8, s3, heis27, corpus_groups):
        a = _kernels.conjugacy_partition(G.mul, G.inv)
        b = _kernels.conjugacy_partition_np(G.mul, G.inv)
        assert a[1] == b[1]
        assert np.array_equal(a[0], b[0])


@needs_numba
def test_pair_check_kernels_agree(q8, s3, heis27, corpus_groups):
    for G in _groups(q8, s3, heis27, corpus_groups):
        for H in (center(G), derived_subgroup(G)):
            if H.order in (0, G.order):
                continue
            members = H.members
            outside = np.flatnonzero(~H.mask).astype(np.int32)
            class_of, _ = G.conjugacy_data()
            assert _kernels.coset_class_check(
                G.mul, class_of, members, outside
            ) == _kernels.coset_class_check_np(G.mul, class_of, members, outside)
            assert _kernels.commutator_cover_check(
                G.mul, G.inv, members, outside
            ) == _kernels.commutator_cover_check_np(G.mul, G.inv, members, outside)


@needs_numba
def test_assoc_and_class_products_agree(q8, s3, corpus_groups):
    for G in (q8, s3, corpus_groups["32:43"]):
        assert _kernels.assoc_violation(G.mul) == _kernels.assoc_violation_np(G.mul)
        class_of, classes = G.conjugacy_data()
        reps = np.array([int(c[0]) for c in classes], dtype=np.int32)
        a = _kernels.class_product_counts(G.mul, G.inv, class_of, reps)
        b = _kernels.class_product_counts_np(G.mul, G.inv, class_of, reps)
        assert np.array_equal(a, b)


@needs_numba
def test_assoc_kernel_reports_first_violation():
    bad = np.array(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ],
        dtype=np.int32,
    )
    assert _kernels.assoc_violation(bad) == _kernels.assoc_violation_np(bad)


def test_env_flag_selects_numpy_path():
    env = dict(os.environ, CAMINA_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from camina import _kernels; print(_kernels.USING_NUMBA)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "False"


def test_kernel_warm_up_runs():
    _kernels.warm_up()

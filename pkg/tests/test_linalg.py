import random
from itertools import product
from math import prod

import pytest

from simflow import (
    BadModulusError,
    CapExceededError,
    IntMatrix,
    determinant,
    enumerate_kernel_mod_q,
    kernel_count_mod_q,
    rational_rank,
    smith_normal_form,
)
from simflow.complexes import boundary_matrix
from simflow.fixtures import complete, cycle, rp2, simplex_boundary
from simflow.linalg import snf_diagonal


def brute_kernel(mat, q):
    vectors = []
    for v in product(range(q), repeat=mat.cols):
        if all(sum(c * x for c, x in zip(row, v)) % q == 0 for row in mat.data):
            vectors.append(v)
    return vectors


def test_snf_diag_examples():
    assert smith_normal_form(IntMatrix([[6, 0], [0, 4]])).diagonal == (2, 12)
    assert smith_normal_form(IntMatrix([[1, 2], [3, 4]])).diagonal == (1, 2)
    assert smith_normal_form(IntMatrix.zeros(3, 4)).diagonal == ()


def test_snf_divisibility_chain_random():
    rng = random.Random(7)
    for _ in range(150):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        mat = IntMatrix([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        diag = smith_normal_form(mat).diagonal
        assert all(d >= 1 for d in diag)
        assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))
        assert len(diag) <= min(rows, cols)


def test_snf_transforms_random():
    rng = random.Random(11)
    for _ in range(60):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = IntMatrix([[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)])
        res = smith_normal_form(mat, keep_transforms=True)
        assert abs(determinant(res.U)) == 1
        assert abs(determinant(res.V)) == 1
        embedded = res.U @ mat @ res.V
        for i in range(rows):
            for j in range(cols):
                want = res.diagonal[i] if i == j and i < res.rank else 0
                assert embedded.data[i][j] == want


def test_snf_product_is_determinant():
    rng = random.Random(13)
    seen_nonsingular = 0
    for _ in range(80):
        n = rng.randint(1, 5)
        mat = IntMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        det = determinant(mat)
        if det == 0:
            continue
        seen_nonsingular += 1
        assert prod(smith_normal_form(mat).diagonal) == abs(det)
    assert seen_nonsingular > 30


def test_rational_rank_examples():
    assert rational_rank(boundary_matrix(complete(5, 3), 2).matrix) == 6
    assert rational_rank(boundary_matrix(cycle(3), 1).matrix) == 2
    assert rational_rank(IntMatrix.identity(5)) == 5


def test_kernel_count_examples():
    rp2_top = boundary_matrix(rp2(), 2).matrix
    assert kernel_count_mod_q(rp2_top, 2) == 2
    assert kernel_count_mod_q(rp2_top, 3) == 1
    assert kernel_count_mod_q(IntMatrix([[3, 1], [0, 2]]), 1) == 1
    with pytest.raises(BadModulusError):
        kernel_count_mod_q(rp2_top, 0)


def test_kernel_count_vs_brute_random():
    rng = random.Random(17)
    for _ in range(60):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        q = rng.randint(1, 6)
        mat = IntMatrix([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        assert kernel_count_mod_q(mat, q) == len(brute_kernel(mat, q))


def test_enumerate_kernel_cycle():
    mat = boundary_matrix(cycle(3), 1).matrix
    got = sorted(enumerate_kernel_mod_q(mat, 3))
    assert got == [(0, 0, 0), (1, 2, 1), (2, 1, 2)]


def test_enumerate_kernel_sphere():
    mat = boundary_matrix(simplex_boundary(2), 2).matrix
    got = sorted(enumerate_kernel_mod_q(mat, 5))
    assert got == sorted(brute_kernel(mat, 5))
    assert len(got) == 5


def test_enumerate_kernel_zero_matrix():
    got = sorted(enumerate_kernel_mod_q(IntMatrix.zeros(2, 2), 2))
    assert got == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_enumerate_kernel_matches_brute_random():
    rng = random.Random(19)
    for _ in range(40):
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 4)
        q = rng.randint(2, 5)
        mat = IntMatrix([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
        got = sorted(enumerate_kernel_mod_q(mat, q))
        assert got == sorted(set(got)), "duplicates"
        assert got == sorted(brute_kernel(mat, q))


def test_enumerate_kernel_cap():
    with pytest.raises(CapExceededError) as info:
        list(enumerate_kernel_mod_q(IntMatrix.zeros(1, 10), 10, cap=1000))
    assert info.value.needed == 10**10


def test_snf_torsion_of_moore_space():
    diag = snf_diagonal([list(r) for r in boundary_matrix(rp2(), 2).matrix.data])
    assert [d for d in diag if d > 1] == [2]

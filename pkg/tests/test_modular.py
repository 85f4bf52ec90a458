import itertools
import random

import numpy as np
import pytest

from kuniform.modular import (
    count_linear_solutions,
    det_mod_d,
    invertible_mod_d,
    null_space_mod_p,
    rank_mod_p,
)

SIX = [
    [0, 1, 1, 1, 0, 0],
    [1, 0, 0, 1, 0, 1],
    [1, 0, 0, 1, 1, 0],
    [1, 1, 1, 0, 1, 1],
    [0, 0, 1, 1, 0, 1],
    [0, 1, 0, 1, 1, 0],
]


def _span_rank(mat, p):
    """Independent oracle: rank = log_p of the row-span size."""
    rows = [tuple(int(x) % p for x in row) for row in np.atleast_2d(mat)]
    span = {tuple([0] * len(rows[0]))}
    for row in rows:
        new = set()
        for v in span:
            for c in range(1, p):
                new.add(tuple((a + c * b) % p for a, b in zip(v, row)))
        span |= new
    size = len(span)
    r = 0
    while p**r < size:
        r += 1
    assert p**r == size
    return r


def test_rank_examples():
    assert rank_mod_p([[0, 1], [1, 0]], 2) == 2
    assert rank_mod_p(np.zeros((3, 3), dtype=int), 5) == 0
    sub = np.array(SIX)[np.ix_([0, 1, 2], [3, 4, 5])]
    assert rank_mod_p(sub, 2) == 3
    assert _span_rank(sub, 2) == 3
    with pytest.raises(ValueError):
        rank_mod_p([[1]], 4)


def test_rank_matches_span_oracle():
    rng = random.Random(3)
    for _ in range(200):
        p = rng.choice([2, 3, 5])
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
        assert rank_mod_p(m, p) == _span_rank(m, p)


def test_rank_transpose():
    rng = random.Random(4)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        m = np.array([[rng.randrange(p) for _ in range(4)] for _ in range(3)])
        assert rank_mod_p(m, p) == rank_mod_p(m.T, p)


def test_det_examples():
    assert det_mod_d([[0, 1], [1, 0]], 4) == 3
    assert det_mod_d([[2, 0], [0, 2]], 4) == 0
    assert det_mod_d([[1, 2], [3, 4]], 6) == 4
    with pytest.raises(ValueError):
        det_mod_d([[1, 2, 3], [4, 5, 6]], 5)


def test_det_matches_permanent_style_expansion():
    rng = random.Random(5)
    for _ in range(200):
        d = rng.randrange(2, 10)
        n = rng.randrange(1, 5)
        m = [[rng.randrange(d) for _ in range(n)] for _ in range(n)]
        # Leibniz expansion as the oracle
        det = 0
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = sign
            for i in range(n):
                term *= m[i][perm[i]]
            det += term
        assert det_mod_d(m, d) == det % d


def test_invertible_examples():
    assert invertible_mod_d([[0, 1], [1, 0]], 6)
    assert not invertible_mod_d([[2, 1], [1, 2]], 3)
    assert not invertible_mod_d([[3, 1], [1, 3]], 6)


def test_invertible_matches_exhaustive_inverse_search():
    # all square matrices with at most 2 rows, d <= 6
    for d in range(2, 7):
        for a in range(d):
            has_inv = any((a * g) % d == 1 for g in range(d))
            assert invertible_mod_d([[a]], d) == has_inv
    for d in range(2, 7):
        mats = list(itertools.product(range(d), repeat=4))
        arr = np.array(mats, dtype=np.int64).reshape(len(mats), 2, 2)
        eye = np.eye(2, dtype=np.int64)
        products = np.einsum("aij,bjk->abik", arr, arr) % d
        has_inverse = (products == eye).all(axis=(2, 3)).any(axis=1)
        for mat, expect in zip(mats, has_inverse):
            m = [[mat[0], mat[1]], [mat[2], mat[3]]]
            assert invertible_mod_d(m, d) == bool(expect), (d, m)


def test_count_linear_solutions_examples():
    assert count_linear_solutions([2], 4, 0) == 2
    assert count_linear_solutions([1, 1], 3, 2) == 3
    assert count_linear_solutions([2], 4, 1) == 0
    with pytest.raises(ValueError):
        count_linear_solutions([], 4, 0)


def test_count_linear_solutions_vs_enumeration():
    # closed form against direct counting, >= 10^4 random cases
    rng = random.Random(6)
    cache = {}
    for _ in range(10**4):
        d = rng.randrange(2, 9)
        m = rng.randrange(1, 5)
        coeffs = tuple(rng.randrange(d) for _ in range(m))
        target = rng.randrange(d)
        if (d, m) not in cache:
            pts = np.array(list(itertools.product(range(d), repeat=m)), dtype=np.int64)
            cache[(d, m)] = pts
        pts = cache[(d, m)]
        vals = (pts @ np.array(coeffs, dtype=np.int64)) % d
        expect = int((vals == target).sum())
        assert count_linear_solutions(coeffs, d, target) == expect, (coeffs, d, target)


def test_null_space_examples():
    assert null_space_mod_p(np.eye(2, dtype=int), 2).shape == (0, 2)
    basis = null_space_mod_p([[1, 1]], 2)
    assert basis.tolist() == [[1, 1]]
    basis = null_space_mod_p([[1, 0, 1], [0, 1, 1]], 3)
    assert basis.shape == (1, 3)
    # up to scaling: must be a multiple of (2, 2, 1)
    v = basis[0]
    assert ((2 * v[2]) % 3, (2 * v[2]) % 3, v[2] % 3) == (v[0], v[1], v[2])


def test_null_space_property():
    rng = random.Random(7)
    for _ in range(100):
        p = rng.choice([2, 3, 5])
        rows, cols = rng.randrange(1, 4), rng.randrange(1, 6)
        g = np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)])
        ns = null_space_mod_p(g, p)
        assert ns.shape[0] == cols - rank_mod_p(g, p)
        if ns.size:
            assert not ((g @ ns.T) % p).any()

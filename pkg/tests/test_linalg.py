from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from spincalc import linalg

small_entries = st.integers(min_value=-9, max_value=9)


def random_matrix(draw, rows, cols):
    return [[draw(small_entries) for _ in range(cols)] for _ in range(rows)]


@st.composite
def matrices(draw, max_dim=4):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    return [[draw(small_entries) for _ in range(n)] for _ in range(m)]


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_snf_transforms(a):
    u, d, v = linalg.smith_normal_form(a)
    assert linalg.mat_mul(linalg.mat_mul(u, a), v) == d
    assert abs(linalg.det(u)) == 1
    assert abs(linalg.det(v)) == 1
    m, n = len(a), len(a[0])
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0


@given(matrices(max_dim=3), st.integers(2, 6))
@settings(max_examples=80, deadline=None)
def test_solve_mod_matches_brute_force(a, r):
    m, n = len(a), len(a[0])
    for b in [[0] * m, [1] * m]:
        sols = linalg.solve_mod(a, b, r)
        expected = set()
        for x in product(range(r), repeat=n):
            if all(sum(a[i][j] * x[j] for j in range(n)) % r == b[i] % r for i in range(m)):
                expected.add(x)
        if sols is None:
            assert not expected
        else:
            got = set(sols)
            assert got == expected
            assert sols.count == len(expected)


def test_solve_mod_affine_structure():
    # one equation in three unknowns over Z/4: 2x + y = 1
    sols = linalg.solve_mod([[2, 1, 0]], [1], 4)
    assert sols.count == 16
    particular = sols.particular
    assert (2 * particular[0] + particular[1]) % 4 == 1


def test_solve_int():
    assert linalg.solve_int([[2, 0], [0, 3]], [4, 9]) == [2, 3]
    assert linalg.solve_int([[2]], [3]) is None
    assert linalg.solve_int([[1, 1], [1, 1]], [2, 3]) is None


@st.composite
def antisymmetric(draw, max_dim=5):
    n = draw(st.integers(1, max_dim))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = draw(small_entries)
            a[i][j] = x
            a[j][i] = -x
    return a


@given(antisymmetric())
@settings(max_examples=150, deadline=None)
def test_skew_normal_form(a):
    n = len(a)
    p, ds = linalg.skew_normal_form(a)
    assert abs(linalg.det(p)) == 1
    pt = linalg.transpose(p)
    result = linalg.mat_mul(linalg.mat_mul(pt, a), p)
    expected = [[0] * n for _ in range(n)]
    for k, d in enumerate(ds):
        assert d > 0
        expected[2 * k][2 * k + 1] = d
        expected[2 * k + 1][2 * k] = -d
    assert result == expected


def test_skew_normal_form_rejects_symmetric():
    with pytest.raises(ValueError):
        linalg.skew_normal_form([[0, 1], [1, 0]])


def test_elementary_divisors_and_kernel():
    a = [[2, 0], [0, 4]]
    assert linalg.elementary_divisors(a) == [2, 4]
    assert linalg.kernel_rank([[1, 1, 1]]) == 2

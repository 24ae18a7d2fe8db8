from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tdom.errors import InputError
from tdom.generators import gen_stair
from tdom.matrix import (
    BinaryMatrix,
    breadth,
    is_inclusive,
    is_monotone,
    is_t_restricted,
    matrix_local_difference,
    min_restriction,
    region_decomposition,
    sort_to_monotone,
)

from conftest import all_matrices, matrices, matrices_of_shape

M = BinaryMatrix.from_rows


# --- definition-level references --------------------------------------------


@lru_cache(maxsize=None)
def down_closed_sets(m: int, n: int) -> list[frozenset]:
    cells = list(product(range(m), range(n)))
    out = []
    for mask in range(1 << len(cells)):
        s = frozenset(c for k, c in enumerate(cells) if mask >> k & 1)
        if all((i2, j2) in s for (i, j) in s for i2 in range(i + 1) for j2 in range(j + 1)):
            out.append(s)
    return out


def naive_regions(a: BinaryMatrix):
    m, n = a.shape
    e0 = {(i, j) for i in range(m) for j in range(n) if not a[i, j]}
    e1 = {(i, j) for i in range(m) for j in range(n) if a[i, j]}
    x = frozenset().union(*[d for d in down_closed_sets(m, n) if d <= e0])
    # Up-closed sets are complements of down-closed ones.
    full = frozenset(product(range(m), range(n)))
    y = frozenset().union(*[full - d for d in down_closed_sets(m, n) if full - d <= e1])
    return x, y, full - x - y


def naive_breadth(a: BinaryMatrix) -> int:
    _, _, z = naive_regions(a)
    m, n = a.shape
    return max((sum((i, i + c) in z for i in range(m)) for c in range(-m, n + 1)), default=0)


def naive_min_restriction(a: BinaryMatrix) -> int:
    m, n = a.shape
    worst = 0
    for i in range(m):
        for k in range(i + 1, m):
            worst = max(worst, sum(a[i, j] == 1 and a[k, j] == 0 for j in range(n)))
    for j in range(n):
        for l in range(j + 1, n):
            worst = max(worst, sum(a[i, j] == 1 and a[i, l] == 0 for i in range(m)))
    return worst


def naive_reorderable(a: BinaryMatrix) -> bool:
    return any(is_monotone(a.permute(r, c)) for r in permutations(range(a.m)) for c in permutations(range(a.n)))


def naive_matrix_difference(a: BinaryMatrix, b: BinaryMatrix) -> int:
    m, n = a.shape
    rows = [sum(a[i, j] != b[i, j] for j in range(n)) for i in range(m)]
    cols = [sum(a[i, j] != b[i, j] for i in range(m)) for j in range(n)]
    return max(rows + cols, default=0)


# --- construction -----------------------------------------------------------


def test_matrix_rejects_non_binary_entries():
    with pytest.raises(InputError):
        BinaryMatrix([[0, 2]])
    with pytest.raises(InputError):
        M(["01", "1"])


def test_matrix_is_read_only():
    a = M(["01"])
    with pytest.raises(ValueError):
        a.data[0, 0] = True


def test_support():
    assert M(["10", "01"]).support() == {(0, 0), (1, 1)}


# --- regions and breadth ----------------------------------------------------


def test_region_examples():
    r = region_decomposition(M(["10", "01"]))
    assert r.cells("x") == set()
    assert r.cells("y") == {(1, 1)}
    assert r.cells("z") == {(0, 0), (0, 1), (1, 0)}
    r = region_decomposition(BinaryMatrix.zeros(3, 4))
    assert len(r.cells("x")) == 12 and not r.cells("y") and not r.cells("z")
    r = region_decomposition(M(["0011", "0111", "1111"]))
    assert not r.cells("z")


def test_region_decomposition_exhaustive_3x3():
    for a in all_matrices(3, 3):
        r = region_decomposition(a)
        x, y, z = naive_regions(a)
        assert r.cells("x") == x and r.cells("y") == y and r.cells("z") == z
        assert not x & y
        assert all(a[c] == 0 for c in x) and all(a[c] == 1 for c in y)


def test_breadth_examples():
    assert breadth(M(["0011", "0111"])) == 0
    assert breadth(M(["10", "01"])) == 1
    # (0,0) holds a zero with nothing above or left of it, so it lies in X;
    # the remaining three cells sit on three different diagonals.
    assert breadth(M(["01", "10"])) == 1


def test_breadth_exhaustive_3x3():
    for a in all_matrices(3, 3):
        assert breadth(a) == naive_breadth(a)


@given(matrices(max_m=4, max_n=3))
def test_breadth_matches_definition(a):
    assert breadth(a) == naive_breadth(a)


# --- restriction and monotonicity -------------------------------------------


def test_restriction_examples():
    assert min_restriction(M(["0011", "0111", "1111"])) == 0
    assert min_restriction(M(["10", "01"])) == 1
    for n in (4, 6, 10):
        row = BinaryMatrix([[1] * (n // 2) + [0] * (n // 2)])
        assert is_t_restricted(row, 1)
    assert min_restriction(gen_stair(8)) == 1


def test_monotone_iff_0_restricted_iff_breadth_0_exhaustive():
    for a in all_matrices(3, 3):
        mono = is_monotone(a)
        assert mono == (min_restriction(a) == 0) == (breadth(a) == 0)
        assert min_restriction(a) == naive_min_restriction(a)


@given(matrices(max_m=10, max_n=10))
def test_monotone_equivalences_random(a):
    assert is_monotone(a) == (min_restriction(a) == 0) == (breadth(a) == 0)
    assert min_restriction(a) == naive_min_restriction(a)


# --- inclusive --------------------------------------------------------------


def test_inclusive_examples():
    mono = M(["0011", "0111"])
    assert is_inclusive(mono)
    out, rows, cols = sort_to_monotone(mono)
    assert out == mono and rows == [0, 1] and cols == [0, 1, 2, 3]
    assert not is_inclusive(M(["01", "10"]))
    out, rows, cols = sort_to_monotone(M(["10", "11"]))
    assert out == M(["01", "11"])
    assert cols == [1, 0]


def test_sort_to_monotone_rejects_non_inclusive():
    with pytest.raises(InputError):
        sort_to_monotone(M(["01", "10"]))


def test_inclusive_iff_reorderable_exhaustive_3x3():
    for a in all_matrices(3, 3):
        inc = is_inclusive(a)
        assert inc == naive_reorderable(a)
        if inc:
            assert is_monotone(sort_to_monotone(a)[0])
        # Column inclusivity follows from row inclusivity.
        assert inc == is_inclusive(BinaryMatrix(a.data.T))


def test_degenerate_dimensions():
    for a in (BinaryMatrix.zeros(0, 5), BinaryMatrix.zeros(4, 0), BinaryMatrix.zeros(0, 0)):
        assert is_monotone(a) and is_inclusive(a) and min_restriction(a) == 0 and breadth(a) == 0
        assert matrix_local_difference(a, a) == 0


# --- local difference -------------------------------------------------------


def test_matrix_local_difference_examples():
    a = M(["10", "01"])
    assert matrix_local_difference(a, a) == 0
    assert matrix_local_difference(a, M(["00", "01"])) == 1
    assert matrix_local_difference(M(["11", "00"]), M(["00", "00"])) == 2


def test_matrix_local_difference_shape_mismatch():
    with pytest.raises(InputError):
        matrix_local_difference(BinaryMatrix.zeros(2, 2), BinaryMatrix.zeros(2, 3))


@given(st.data())
def test_matrix_local_difference_is_a_metric(data):
    m = data.draw(st.integers(0, 6))
    n = data.draw(st.integers(0, 6))
    a, b, c = (data.draw(matrices_of_shape(m, n)) for _ in range(3))
    assert matrix_local_difference(a, b) == naive_matrix_difference(a, b)
    assert matrix_local_difference(a, b) == matrix_local_difference(b, a)
    assert (matrix_local_difference(a, b) == 0) == (a == b)
    assert matrix_local_difference(a, c) <= matrix_local_difference(a, b) + matrix_local_difference(b, c)

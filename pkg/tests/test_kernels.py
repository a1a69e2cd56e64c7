import random

import pytest

from carlitz import _kernels
from carlitz._kernels import _pure
from carlitz.ffcore import FieldSpec
from carlitz.linalg import _tables, nullspace, rank

native = pytest.mark.skipif(not _kernels.native_available(), reason="compiled kernels not built")


def _matrix(rng, rows, cols, p, density=0.6):
    return [[rng.randrange(p) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def test_pure_rref_small_example():
    # the three rows are dependent mod 3
    assert _pure.rref_modp([[2, 1, 0], [1, 1, 1], [0, 2, 1]], 3, 3) == ([[1, 0, 2], [0, 1, 2]], [0, 1])
    red, piv = _pure.rref_modp([[1, 2], [2, 4]], 2, 5)
    assert red == [[1, 2]] and piv == [0]
    assert _pure.rref_modp([[0, 0]], 2, 7) == ([], [])


def test_pure_conv():
    assert _pure.conv_modp([1, 1], [1, 1], 2) == [1, 0, 1]
    assert _pure.conv_modp([], [1], 3) == []
    assert _pure.conv_modp([2, 3], [4], 5) == [3, 2]


@native
@pytest.mark.parametrize("p", [2, 3, 7, 65521])
def test_native_matches_pure_modp(p):
    from carlitz._kernels import _native

    rng = random.Random(p)
    for _ in range(40):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        M = _matrix(rng, r, c, p, rng.random())
        assert _native.rref_modp(M, c, p) == _pure.rref_modp(M, c, p)
        a = [rng.randrange(p) for _ in range(rng.randint(0, 20))]
        b = [rng.randrange(p) for _ in range(rng.randint(0, 20))]
        assert _native.conv_modp(a, b, p) == _pure.conv_modp(a, b, p)


@native
@pytest.mark.parametrize("dims", [(2, 2, 1), (3, 1, 2), (2, 1, 4)])
def test_native_matches_pure_tables(dims):
    from carlitz._kernels import _native

    F = FieldSpec(*dims).big
    tabs = _tables(F)
    rng = random.Random(F.order)
    for _ in range(30):
        r, c = rng.randint(1, 10), rng.randint(1, 10)
        M = _matrix(rng, r, c, F.order)
        assert _native.rref_table(M, c, *tabs) == _pure.rref_table(M, c, *tabs)


def test_backend_switching():
    start = _kernels.backend()
    with _kernels.use_backend("pure"):
        assert _kernels.backend() == "pure"
    assert _kernels.backend() == start
    with pytest.raises(ValueError):
        _kernels.set_backend("fortran")


@pytest.mark.parametrize("name", ["pure", pytest.param("native", marks=native)])
def test_linalg_on_each_backend(name):
    F = FieldSpec(3).big
    rng = random.Random(4)
    with _kernels.use_backend(name):
        for _ in range(20):
            M = _matrix(rng, 5, 7, 3)
            for v in nullspace(F, M, 7):
                assert all(sum(a * b for a, b in zip(row, v)) % 3 == 0 for row in M)
            assert rank(F, M, 7) + len(nullspace(F, M, 7)) == 7

import random

from hypothesis import given, settings, strategies as st

from multcode.field import PrimeField
from multcode.linsolve import Matrix, kernel_vector, kernel_vector_raw, rref

GF5 = PrimeField(5)


def values(v):
    return None if v is None else [x.value for x in v]


def test_single_equation_kernel():
    assert values(kernel_vector(Matrix.from_rows(GF5, [[1, 1]]))) == [4, 1]


def test_identity_has_no_kernel():
    assert kernel_vector(Matrix.from_rows(GF5, [[1, 0], [0, 1]])) is None


def test_zero_matrix_kernel_is_first_unit_vector():
    assert values(kernel_vector(Matrix.from_rows(GF5, [[0, 0, 0], [0, 0, 0]]))) == [1, 0, 0]


def test_empty_system():
    assert kernel_vector_raw([], 3, 5) == [1, 0, 0]


def test_rref_reports_pivots():
    rows = [[0, 2, 4], [1, 1, 1]]
    assert rref(rows, 3, 5) == [0, 1]
    assert rows == [[1, 0, 4], [0, 1, 2]]


def test_matrix_shape_checked():
    import pytest
    with pytest.raises(ValueError):
        Matrix(GF5, 2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        Matrix.from_rows(GF5, [[1, 2], [3]])


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 13, 10007]), st.integers(0, 7), st.integers(1, 8), st.integers(0, 10 ** 6))
def test_kernel_vector_is_a_nonzero_solution(p, nrows, ncols, seed):
    rng = random.Random(seed)
    F = PrimeField(p)
    rows = [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)]
    if rows and rng.random() < 0.3:
        rows.append([(a + b) % p for a, b in zip(rows[0], rows[-1])])
    M = Matrix.from_rows(F, rows, ncols)
    v = kernel_vector(M)
    if ncols > len(rows):
        assert v is not None
    if v is None:
        # trivial kernel means full column rank
        assert len(rref([r[:] for r in rows], ncols, p)) == ncols
    else:
        vals = values(v)
        assert any(vals)
        assert all(x == 0 for x in M.apply(vals))
        assert values(kernel_vector(M)) == vals  # deterministic

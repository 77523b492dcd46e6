import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from interlacepy.core.algebra.gf2 import Gf2Matrix, gf2_kernel, gf2_rank, popcount
from interlacepy.errors import InvalidIndexError, PivotNotDefinedError, UnsupportedInputError

from .strategies import symmetric_matrices


def test_rank_nullity():
    swap = Gf2Matrix.from_lists(["a", "b"], [[0, 1], [1, 0]])
    assert swap.rank_nullity() == (2, 0)
    assert swap.rank_nullity(["a"]) == (0, 1)
    assert Gf2Matrix.zeros("abc").rank_nullity() == (0, 3)
    assert Gf2Matrix.identity("abc").is_invertible()


def test_rank_of_rows():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([]) == 0


def test_kernel():
    assert gf2_kernel([0b11], 2) == [0b11]
    assert sorted(gf2_kernel([], 2)) == [0b01, 0b10]


def test_rejects_malformed_matrices():
    with pytest.raises(UnsupportedInputError):
        Gf2Matrix.from_lists("ab", [[0, 1], [0, 0]])
    with pytest.raises(UnsupportedInputError):
        Gf2Matrix("aa", [0, 0])
    with pytest.raises(InvalidIndexError):
        Gf2Matrix.zeros("ab").rank_nullity(["c"])


def test_unknown_label_is_a_key_error():
    with pytest.raises(KeyError):
        Gf2Matrix.zeros("ab").index("z")


def test_pivot_on_singular_set():
    with pytest.raises(PivotNotDefinedError) as excinfo:
        Gf2Matrix.zeros("ab").principal_pivot_transform(["a"])
    assert excinfo.value.subset == ("a",)


def test_full_pivot_is_the_inverse():
    matrix = Gf2Matrix.from_lists("abc", [[1, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert matrix.is_invertible()
    inverse = matrix.principal_pivot_transform("abc").to_array()
    product = matrix.to_array().astype(int) @ inverse.astype(int) % 2
    assert np.array_equal(product, np.eye(3, dtype=int))


def test_delete_and_restrict():
    triangle = Gf2Matrix.from_lists("abc", [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert triangle.delete("a") == Gf2Matrix.from_lists("bc", [[0, 1], [1, 0]])
    assert triangle.restrict(["c", "a"]) == Gf2Matrix.from_lists("ac", [[0, 1], [1, 0]])


def test_swap_labels():
    matrix = Gf2Matrix.from_lists("ab", [[1, 0], [0, 0]])
    assert matrix.swap_labels("a", "b") == Gf2Matrix.from_lists("ab", [[0, 0], [0, 1]])


def test_array_views():
    array = np.array([[0, 1], [1, 1]])
    matrix = Gf2Matrix.from_array(array)
    assert matrix.labels == ("0", "1")
    assert matrix.entry("1", "1") == 1
    assert np.array_equal(matrix.to_array(), array)


@given(symmetric_matrices(), st.data())
def test_pivot_is_an_involution(matrix, data):
    subset = data.draw(st.lists(st.sampled_from(matrix.labels), unique=True)) if matrix.labels else []
    assume(matrix.is_invertible(subset))
    pivoted = matrix.principal_pivot_transform(subset)
    assert pivoted.is_invertible(subset)
    assert pivoted.principal_pivot_transform(subset) == matrix


@given(symmetric_matrices())
def test_rank_plus_nullity(matrix):
    for mask in range(1 << matrix.dimension):
        rank = matrix.rank_of_mask(mask)
        assert 0 <= rank <= popcount(mask)

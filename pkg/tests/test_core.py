import math
from itertools import product

import pytest

from modclique import (
    ModFunction,
    difference,
    identity_function,
    is_bijection,
    is_edge,
    mod_function,
    zero_function,
)
from modclique.core import validate_modulus

from conftest import K15_ROWS, K15_ROW3_MINUS_ROW2


class TestModulus:
    def test_degenerate_modulus_rejected(self):
        for bad in (1, 0, -3):
            with pytest.raises(ValueError):
                validate_modulus(bad)
            with pytest.raises(ValueError):
                ModFunction(bad, (0,) * max(bad, 0))

    def test_non_integer_rejected(self):
        with pytest.raises(ValueError):
            validate_modulus(3.0)
        with pytest.raises(ValueError):
            validate_modulus(True)


class TestModFunction:
    def test_wrong_length(self):
        with pytest.raises(ValueError):
            ModFunction(5, (0, 1, 2))

    def test_out_of_range_value(self):
        with pytest.raises(ValueError):
            ModFunction(5, (0, 1, 2, 3, 5))
        with pytest.raises(ValueError):
            ModFunction(5, (0, 1, 2, 3, -1))

    def test_mod_function_reduces(self):
        f = mod_function(5, [7, -1, 10, 3, 4])
        assert f.values == (2, 4, 0, 3, 4)

    def test_hashable_and_iterable(self):
        f = identity_function(4)
        assert list(f) == [0, 1, 2, 3]
        assert f[2] == 2
        assert len({f, identity_function(4), zero_function(4)}) == 2


class TestIsBijection:
    def test_identity(self):
        assert is_bijection(identity_function(5))

    def test_constant_zero(self):
        assert not is_bijection(zero_function(5))

    def test_bundled_k15_row2(self):
        assert is_bijection(ModFunction(15, K15_ROWS[2]))


class TestDifference:
    def test_self_difference_is_zero(self):
        f = ModFunction(5, (3, 1, 4, 0, 2))
        assert difference(f, f) == zero_function(5)

    def test_identity_minus_zero(self):
        rows = [ModFunction(15, r) for r in K15_ROWS]
        assert difference(rows[1], rows[0]) == identity_function(15)

    def test_k15_row3_minus_row2(self):
        rows = [ModFunction(15, r) for r in K15_ROWS]
        d = difference(rows[3], rows[2])
        assert d.values == K15_ROW3_MINUS_ROW2
        assert is_bijection(d)

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            difference(zero_function(5), zero_function(7))


class TestIsEdge:
    def test_zero_identity(self):
        for k in (2, 3, 7, 15):
            assert is_edge(zero_function(k), identity_function(k))

    def test_doubling_not_adjacent_to_zero_mod_4(self):
        f = ModFunction(4, tuple((2 * x) % 4 for x in range(4)))
        assert not is_edge(zero_function(4), f)

    def test_k15_rows_2_3(self):
        rows = [ModFunction(15, r) for r in K15_ROWS]
        assert is_edge(rows[2], rows[3])

    def test_symmetric(self):
        rows = [ModFunction(15, r) for r in K15_ROWS]
        for f in rows:
            for g in rows:
                assert is_edge(f, g) == is_edge(g, f)

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            is_edge(zero_function(5), zero_function(7))


@pytest.mark.parametrize("k", [3, 4])
def test_every_vertex_has_degree_k_factorial(k):
    # brute-force regularity check over all k^k vertices
    verts = [ModFunction(k, v) for v in product(range(k), repeat=k)]
    expected = math.factorial(k)
    for f in verts:
        degree = sum(1 for g in verts if g != f and is_edge(f, g))
        assert degree == expected

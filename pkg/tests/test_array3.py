import json
import math
import random

import pytest

from riordan.algebra import Polynomial, X, Y
from riordan.array2 import RiordanArray
from riordan.array3 import ColumnFamily, RiordanTriple
from riordan.laguerre import (
    biv_explicit,
    signed_pascal_triple,
    uni_explicit,
    y_weighted_pascal_triple,
)
from riordan.series import Series, const_series, geom, neg_t_geom, t_series


def random_triple(rng, order, flavor="ordinary"):
    def series(first_nonzero):
        coeffs = [0] * first_nonzero + [rng.choice([1, -1, 2])]
        coeffs += [rng.randint(-3, 3) for _ in range(order - first_nonzero)]
        return Series(tuple(coeffs))

    return RiordanTriple(series(0), series(1), series(0), flavor)


class TestConstruction:
    def test_component_orders_validated(self):
        with pytest.raises(ValueError):
            RiordanTriple(t_series(4), t_series(4), geom(4))
        with pytest.raises(ValueError):
            RiordanTriple(geom(4), geom(4), geom(4))
        with pytest.raises(ValueError):
            RiordanTriple(geom(4), t_series(4), t_series(4))


class TestEntries:
    def test_ordinary_signed_binomials(self):
        triple = signed_pascal_triple(8, "ordinary")
        assert triple.entry(2, 1, 1) == -3
        for i in range(5):
            for j in range(5):
                for k in range(3):
                    expected = (-1) ** j * math.comb(i + k, j + k) if j <= i else 0
                    assert triple.entry(i, j, k) == expected

    def test_exponential_entry(self):
        assert signed_pascal_triple(8, "exponential").entry(3, 1, 1) == -36

    def test_y_weighted_entry(self):
        assert y_weighted_pascal_triple(8).entry(3, 1, 2) == -60 * Y


class TestLayers:
    def test_layer_zero_is_the_pair(self):
        triple = signed_pascal_triple(8, "ordinary")
        assert triple.layer(0).matrix(5, 5) == [
            [1, 0, 0, 0, 0],
            [1, -1, 0, 0, 0],
            [1, -2, 1, 0, 0],
            [1, -3, 3, -1, 0],
            [1, -4, 6, -4, 1],
        ]

    def test_layer_two_exponential_rows(self):
        triple = signed_pascal_triple(8, "exponential")
        assert triple.layer(2).matrix(4, 4) == [
            [1, 0, 0, 0],
            [3, -1, 0, 0],
            [12, -8, 1, 0],
            [60, -60, 15, -1],
        ]

    def test_entry_consistent_with_layer(self):
        rng = random.Random(3)
        triple = random_triple(rng, 10)
        for _ in range(20):
            i, j, k = rng.randint(0, 8), rng.randint(0, 8), rng.randint(0, 4)
            assert triple.entry(i, j, k) == triple.layer(k).entry(i, j)


class TestGroupLaw:
    def test_identity_element(self):
        triple = signed_pascal_triple(8, "ordinary")
        product = triple * RiordanTriple.identity(8)
        assert product.g == triple.g.truncated(8)
        assert product.f == triple.f.truncated(8)
        assert product.h == triple.h.truncated(8)

    def test_layer_homomorphism_random(self):
        rng = random.Random(11)
        for _ in range(5):
            a = random_triple(rng, 12)
            b = random_triple(rng, 12)
            ab = a * b
            for k in range(5):
                lhs = [
                    [
                        sum(a.layer(k).entry(i, x) * b.layer(k).entry(x, j) for x in range(i + 1))
                        for j in range(6)
                    ]
                    for i in range(6)
                ]
                assert lhs == ab.layer(k).matrix(6, 6)

    def test_pascal_triple_self_inverse(self):
        triple = signed_pascal_triple(12, "ordinary")
        inverse = triple.inverse()
        product = triple * inverse
        identity = RiordanTriple.identity(12)
        assert product.g == identity.g
        assert product.f == identity.f
        assert product.h == identity.h

    def test_inverse_of_random_triple(self):
        rng = random.Random(5)
        triple = random_triple(rng, 10)
        product = triple * triple.inverse()
        identity = RiordanTriple.identity(10)
        assert product.g == identity.g
        assert product.f == identity.f
        assert product.h == identity.h

    def test_flavor_mismatch(self):
        with pytest.raises(ValueError):
            signed_pascal_triple(8, "ordinary") * signed_pascal_triple(8, "exponential")

    def test_associativity_random(self):
        rng = random.Random(13)
        a, b, c = (random_triple(rng, 10) for _ in range(3))
        left = (a * b) * c
        right = a * (b * c)
        assert left.g == right.g
        assert left.f == right.f
        assert left.h == right.h


class TestTwoOneProduct:
    def test_identity_squares_to_kronecker(self):
        identity = RiordanTriple.identity(8)
        for i in range(4):
            for j in range(4):
                assert identity.prod21(identity, i, j, 2) == (1 if i == j else 0)

    def test_matches_group_product_entry(self):
        triple = signed_pascal_triple(10, "ordinary")
        squared = triple * triple
        for i in range(5):
            for j in range(5):
                for k in range(3):
                    assert triple.prod21(triple, i, j, k) == squared.entry(i, j, k)

    def test_layer_zero_reduces_to_pair_product(self):
        rng = random.Random(17)
        a = random_triple(rng, 10)
        b = random_triple(rng, 10)
        pair_product = RiordanArray(a.g, a.f) * RiordanArray(b.g, b.f)
        for i in range(5):
            for j in range(5):
                assert a.prod21(b, i, j, 0) == pair_product.entry(i, j)


class TestBullet:
    def test_powers_of_x_produce_the_family(self):
        triple = signed_pascal_triple(8, "exponential")
        family = ColumnFamily.constant([X**j for j in range(5)], 5)
        table = triple.bullet(family, rows=5, cols=5)
        assert table[2][2] == 12 - 8 * X + X**2
        for n in range(5):
            for k in range(5):
                assert table[n][k] == uni_explicit(n, k).value

    def test_identity_triple_returns_columns(self):
        identity = RiordanTriple.identity(8)
        family = ColumnFamily([[1, 2, 3], [4, 5, 6]])
        assert identity.bullet(family, rows=3, cols=2) == [[1, 4], [2, 5], [3, 6]]

    def test_transposed_family_reaches_bivariate_members(self):
        triple = y_weighted_pascal_triple(10)
        # column 2 is the degree-2 slice of the univariate table
        columns = [[uni_explicit(k, j).value for j in range(3)] for k in range(3)]
        table = triple.bullet(ColumnFamily(columns), rows=3, cols=3)
        for i in range(3):
            assert table[i][2] == biv_explicit(2, i).value

    def test_row_by_row_dot_product_oracle(self):
        rng = random.Random(19)
        triple = random_triple(rng, 8, "exponential")
        columns = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(4)]
        table = triple.bullet(ColumnFamily(columns), rows=5, cols=4)
        for k in range(4):
            layer = triple.layer(k).matrix(5, 5)
            for i in range(5):
                assert table[i][k] == sum(layer[i][j] * columns[k][j] for j in range(5))

    def test_missing_column(self):
        with pytest.raises(ValueError):
            ColumnFamily([[1, 2]]).column(1)

    def test_short_column(self):
        identity = RiordanTriple.identity(8)
        with pytest.raises(ValueError):
            identity.bullet(ColumnFamily([[1]]), rows=3, cols=1)


class TestLayerFundamentalTheorem:
    def test_pascal_layers_on_exponential_column(self):
        triple = signed_pascal_triple(10, "exponential")
        column = (t_series(10) * X).exp()
        for k in range(4):
            image = triple.apply_layer(column, k)
            expected = geom(10, k + 1) * neg_t_geom(10, scale=X).exp()
            assert image == expected

    def test_identity_layer(self):
        identity = RiordanTriple.identity(8)
        column = geom(8, 2)
        assert identity.apply_layer(column, 3) == column

    def test_symbolic_column_expansion(self):
        # layer k of the y-weighted triple applied to the e.g.f. of the
        # order-indexed family, against the hand-built truncated sum
        order = 10
        triple = y_weighted_pascal_triple(order)
        k = 2
        column = Series(tuple(uni_explicit(k, i).value / math.factorial(i) for i in range(order + 1)))
        image = triple.apply_layer(column, k)
        inner = neg_t_geom(order, scale=Y)
        expected = const_series(0, order)
        for i in range(order + 1):
            expected = expected + inner**i * (uni_explicit(k, i).value / math.factorial(i))
        expected = geom(order, k + 1) * expected
        assert image == expected


class TestColumnFamily:
    def test_from_series_ordinary(self):
        family = ColumnFamily.from_series([geom(6), geom(6, 2)], rows=4)
        assert family.column(0) == [1, 1, 1, 1]
        assert family.column(1) == [1, 2, 3, 4]

    def test_from_series_exponential(self):
        family = ColumnFamily.from_series([(t_series(6) * X).exp()], rows=4, flavor="exponential")
        assert family.column(0) == [Polynomial.constant(1), X, X**2, X**3]

    def test_from_series_needs_enough_order(self):
        with pytest.raises(ValueError):
            ColumnFamily.from_series([geom(2)], rows=5)


class TestExports:
    def test_layers_json(self):
        payload = json.loads(signed_pascal_triple(8, "exponential").layers_json(2, 3, 3))
        assert payload == {
            "layers": [
                [[1, 0, 0], [1, -1, 0], [2, -4, 1]],
                [[1, 0, 0], [2, -1, 0], [6, -6, 1]],
            ]
        }

    def test_layer_latex(self):
        text = y_weighted_pascal_triple(8).layer_latex(2, 2, 2)
        assert text.splitlines() == [
            r"\begin{pmatrix}",
            r"1 & 0 \\",
            r"3 & -y \\",
            r"\end{pmatrix}",
        ]

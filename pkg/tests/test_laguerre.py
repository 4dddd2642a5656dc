import math

import pytest

from riordan.algebra import Polynomial, X, Y
from riordan.laguerre import (
    binomial,
    biv_explicit,
    biv_riordan_table,
    biv_rodrigues,
    biv_via_uni,
    uni_explicit,
    uni_recurrence,
    uni_riordan,
    uni_rodrigues,
)

TABLE_GOLDENS = {
    (1, 1): 2 - 2 * X - 2 * Y + X * Y,
    (2, 1): 6 - 6 * Y - 12 * X + 6 * X * Y + 3 * X**2 - X**2 * Y,
    (1, 2): 6 - 6 * X - 12 * Y + 6 * X * Y + 3 * Y**2 - X * Y**2,
    (2, 2): 24 - 48 * X + 12 * X**2 - 48 * Y + 48 * X * Y - 8 * X**2 * Y
    + 12 * Y**2 - 8 * X * Y**2 + X**2 * Y**2,
}


class TestBinomial:
    def test_vanishes_outside_range(self):
        assert binomial(3, -1) == 0
        assert binomial(3, 4) == 0

    def test_plain_values(self):
        assert binomial(5, 2) == 10


class TestUnivariateRoutes:
    def test_degree_zero(self):
        assert uni_explicit(0, 3).value == Polynomial.constant(1)

    def test_degree_one(self):
        for alpha in range(4):
            assert uni_explicit(1, alpha).value == (alpha + 1) - X

    def test_reducible_member(self):
        assert uni_explicit(2, 2).value == (X - 2) * (X - 6)

    def test_recurrence_values(self):
        assert uni_recurrence(2, 0).value == 2 - 4 * X + X**2
        assert uni_recurrence(4, 0).value == 24 - 96 * X + 72 * X**2 - 16 * X**3 + X**4
        assert uni_recurrence(1, 3).value == 4 - X

    def test_riordan_values(self):
        assert uni_riordan(2, 2).value == 12 - 8 * X + X**2
        assert uni_riordan(3, 1).value == 24 - 36 * X + 12 * X**2 - X**3
        assert uni_riordan(0, 5).value == Polynomial.constant(1)

    def test_rodrigues_values(self):
        assert uni_rodrigues(1, 0).value == 1 - X
        assert uni_rodrigues(2, 0).value == 2 - 4 * X + X**2
        assert uni_rodrigues(0, 5).value == Polynomial.constant(1)

    def test_route_equivalence(self):
        for n in range(7):
            for alpha in range(5):
                reference = uni_explicit(n, alpha).value
                assert uni_recurrence(n, alpha).value == reference
                assert uni_riordan(n, alpha).value == reference
                assert uni_rodrigues(n, alpha).value == reference

    def test_leading_coefficient_alternates(self):
        for n in range(8):
            assert uni_explicit(n, 2).value.coefficient(n, 0) == (-1) ** n

    def test_constant_term(self):
        for n in range(8):
            for alpha in range(4):
                expected = math.factorial(n) * binomial(n + alpha, n)
                assert uni_explicit(n, alpha).value.constant_term() == expected

    def test_metadata(self):
        member = uni_explicit(3, 2)
        assert member.indices == (3, 2)
        assert member.route == "explicit"


class TestBivariateRoutes:
    def test_table_goldens_every_route(self):
        table = biv_riordan_table(2, 2)
        for (n, m), expected in TABLE_GOLDENS.items():
            assert biv_explicit(n, m).value == expected
            assert biv_via_uni(n, m, "x").value == expected
            assert biv_via_uni(n, m, "y").value == expected
            assert biv_rodrigues(n, m).value == expected
            assert table[n][m].value == expected

    def test_x_boundary(self):
        for n in range(5):
            assert biv_explicit(n, 0).value == uni_explicit(n, 0).value

    def test_y_boundary(self):
        for m in range(5):
            assert biv_explicit(0, m).value == uni_explicit(m, 0).value.substitute(x=Y)

    def test_via_uni_hand_expansion(self):
        # C(2,1) L_1(x) + L_1^(1)(x) (-y)
        expected = 2 * (1 - X) + (2 - X) * (-Y)
        assert biv_via_uni(1, 1, "x").value == expected

    def test_via_uni_rejects_unknown_form(self):
        with pytest.raises(ValueError):
            biv_via_uni(1, 1, "z")

    def test_rodrigues_values(self):
        assert biv_rodrigues(0, 0).value == Polynomial.constant(1)
        assert biv_rodrigues(1, 1).value == TABLE_GOLDENS[(1, 1)]
        assert biv_rodrigues(1, 2).value == TABLE_GOLDENS[(1, 2)]

    def test_route_equivalence(self):
        table = biv_riordan_table(4, 4)
        for n in range(5):
            for m in range(5):
                reference = biv_explicit(n, m).value
                assert biv_via_uni(n, m, "x").value == reference
                assert biv_via_uni(n, m, "y").value == reference
                assert biv_rodrigues(n, m).value == reference
                assert table[n][m].value == reference

    def test_swap_symmetry(self):
        for n in range(5):
            for m in range(5):
                swapped = biv_explicit(n, m).value.substitute(x=Y, y=X)
                assert swapped == biv_explicit(m, n).value

    def test_degrees(self):
        member = biv_explicit(3, 2).value
        assert member.degree_x() == 3
        assert member.degree_y() == 2

    def test_table_needs_enough_truncation(self):
        with pytest.raises(ValueError):
            biv_riordan_table(4, 4, order=3)

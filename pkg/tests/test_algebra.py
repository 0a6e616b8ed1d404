from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.banded import (
    BandedHessenberg,
    BandedLowerTriangular,
    BandedN,
    banded_multiply,
    multiply_chain,
    safe_window,
)
from algebra.errors import BadShape, InvalidScalar, WindowTooLarge, ZeroEdgeBand, ZeroLowBand
from algebra.linalg import SingularMatrixError, determinant, minor, solve
from algebra.polynomial import Polynomial, expand_in_basis, poly_eval
from algebra.scalars import as_scalar, format_scalar

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10 ** 6)


def bidiagonal_lower(size, gamma):
    return BandedLowerTriangular(1, [()] + [(gamma,) for _ in range(size - 1)])


def upper_bidiagonal(size, diagonal):
    return BandedN(1, 1, [(diagonal,) for _ in range(size)])


class TestScalars:
    def test_parses_fraction_strings(self):
        assert as_scalar("3/6") == Fraction(1, 2)
        assert as_scalar("-4") == Fraction(-4)
        assert as_scalar(7) == Fraction(7)

    @pytest.mark.parametrize("value", ["0.5", "1e3", 0.5, True, "x", "1/0", None])
    def test_rejects_inexact_values(self, value):
        with pytest.raises(InvalidScalar):
            as_scalar(value)

    def test_format_is_canonical(self):
        assert format_scalar(Fraction(4, -8)) == "-1/2"
        assert format_scalar(Fraction(6, 3)) == "2"

    @given(fractions, fractions)
    def test_arithmetic_is_exact(self, x, y):
        assert (x + y) - y == x
        if y != 0:
            assert (x * y) / y == x


class TestPolynomial:
    def test_trailing_zeros_are_dropped(self):
        p = Polynomial((1, 2, 0, 0))
        assert p.coefficients == (1, 2)
        assert p.degree == 1
        assert Polynomial((0, 0)).is_zero
        assert Polynomial().degree == -1

    @pytest.mark.parametrize("coefficients, a, expected", [
        (("-1/4", 0, 1), "1/2", 0),
        ((1,), 7, 1),
        ((0, -2, 0, 0, 1), 2, 12),
    ])
    def test_poly_eval(self, coefficients, a, expected):
        assert poly_eval(Polynomial(coefficients), as_scalar(a)) == expected

    def test_product_and_shift(self):
        p = Polynomial.x_minus(1) * Polynomial.x_minus(-1)
        assert p == Polynomial((-1, 0, 1))
        assert p.shift(2) == Polynomial((0, 0, -1, 0, 1))

    def test_string_form(self):
        assert str(Polynomial((0, -2, 0, 0, 1))) == "x^4 - 2*x"
        assert str(Polynomial()) == "0"

    def test_json_uses_strings(self):
        p = Polynomial(("1/3", 0, 1))
        assert p.to_json() == ["1/3", "0", "1"]
        assert Polynomial.from_json(p.to_json()) == p

    @given(st.lists(fractions, min_size=1, max_size=6))
    def test_expand_in_basis_reconstructs(self, coefficients):
        basis = [Polynomial.constant(1)]
        for k in range(1, len(coefficients) + 1):
            basis.append(basis[-1] * Polynomial.x_minus(Fraction(k, 3)))
        p = Polynomial(tuple(coefficients))
        expansion = expand_in_basis(p, basis)
        rebuilt = Polynomial()
        for c, b in zip(expansion, basis):
            rebuilt = rebuilt + b * c
        assert rebuilt == p

    def test_expand_rejects_short_basis(self):
        with pytest.raises(BadShape):
            expand_in_basis(Polynomial((0, 0, 1)), [Polynomial.constant(1)])


class TestLinalg:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n)
    ))
    def test_determinant_matches_sympy(self, rows):
        expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows]).det()
        value = determinant(rows)
        assert sympy.Rational(value.numerator, value.denominator) == expected

    def test_determinant_of_empty_matrix(self):
        assert determinant([]) == 1

    def test_determinant_needs_row_swap(self):
        assert determinant([[0, 1], [1, 0]]) == -1

    def test_solve_and_singular(self):
        x = solve([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]], [Fraction(3), Fraction(5)])
        assert x == [Fraction(4, 5), Fraction(7, 5)]
        with pytest.raises(SingularMatrixError):
            solve([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]], [Fraction(1), Fraction(2)])

    def test_minor(self):
        assert minor([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 1, 0) == [[2, 3], [8, 9]]


class TestBanded:
    def test_hessenberg_entries(self):
        J = BandedHessenberg(1, [["1"], ["2", "3"], ["4", "5"]])
        assert J.dense() == [[1, 1, 0], [3, 2, 1], [0, 5, 4]]
        assert J.shifted(1).dense() == [[0, 1, 0], [3, 1, 1], [0, 5, 3]]

    def test_hessenberg_rejects_zero_low_band(self):
        with pytest.raises(ZeroLowBand) as info:
            BandedHessenberg(2, [[0], [0, 0], [0, 0, 1], [0, 0, 0]])
        assert info.value.n == 3

    def test_hessenberg_rejects_wrong_row_length(self):
        with pytest.raises(BadShape):
            BandedHessenberg(1, [[0, 1]])

    @pytest.mark.parametrize("rows", [
        [0, 1, 2],
        ["0", "01", "01"],
        [["0"], {"0": "1"}],
    ])
    def test_hessenberg_rejects_rows_that_are_not_lists(self, rows):
        with pytest.raises(BadShape):
            BandedHessenberg(1, rows)

    def test_hessenberg_json(self):
        J = BandedHessenberg(1, [["1/2"], ["0", "1/4"]])
        data = J.to_dict()
        assert data == {"kind": "hessenberg", "size": 2, "d": 1, "bands": [["1/2"], ["0", "1/4"]]}
        assert BandedHessenberg.from_dict(data) == J
        with pytest.raises(BadShape):
            BandedHessenberg.from_dict(data, d=2)

    def test_lower_identity_and_edge(self):
        assert BandedLowerTriangular.identity(3).dense() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        with pytest.raises(ZeroEdgeBand):
            BandedLowerTriangular(1, [(), (1,), (0,)]).require_edge_band()

    def test_upper_bidiagonal_needs_nonzero_diagonal(self):
        with pytest.raises(ZeroEdgeBand):
            BandedN(1, 1, [(1,), (0,)])

    def test_bidiagonal_product(self):
        product = banded_multiply(bidiagonal_lower(5, 1), upper_bidiagonal(5, 1), 3)
        assert [list(row) for row in product.rows] == [[1, 1, 0], [1, 2, 1], [0, 1, 2]]

    def test_identity_product(self):
        J = BandedHessenberg(1, [["1"], ["2", "3"], ["4", "5"], ["6", "7"]])
        product = banded_multiply(BandedLowerTriangular.identity(4), J, 3)
        assert [list(row) for row in product.rows] == J.dense(3)

    def test_window_limit(self):
        with pytest.raises(WindowTooLarge):
            banded_multiply(bidiagonal_lower(5, 1), upper_bidiagonal(5, 1), 5)

    def test_product_agrees_with_dense_multiplication(self):
        A = BandedN(2, 0, [(1,), (2, 3), (4, 5, 6), (7, 8, 9), (1, 2, 3), (4, 5, 6)])
        B = upper_bidiagonal(6, 2)
        window = 4
        product = banded_multiply(A, B, window)
        a, b = A.dense(), B.dense()
        for i in range(window):
            for j in range(window):
                assert product.entry(i, j) == sum(a[i][k] * b[k][j] for k in range(6))
        assert product.lower == 2 and product.upper == 2

    def test_chain_is_left_to_right(self):
        L = bidiagonal_lower(6, 2)
        U = upper_bidiagonal(6, 3)
        direct = banded_multiply(banded_multiply(L, U, 5), L, 4)
        assert multiply_chain([L, U, L], 4).rows == direct.rows

    def test_safe_window(self):
        assert safe_window(16, 2) == 14

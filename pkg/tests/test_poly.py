"""Polynomial arithmetic, monomial orders and the text grammar."""

from fractions import Fraction

import pytest

from germglue import (DimensionMismatchError, MonomialOrder, Polynomial,
                      PolynomialParseError, format_polynomial,
                      parse_polynomial)


class TestOrders:
    def test_local_lower_degree_wins(self):
        o = MonomialOrder.local(1)
        assert o.compare((2,), (1,)) == -1

    def test_equal_monomials(self):
        o = MonomialOrder.local(1)
        assert o.compare((1,), (1,)) == 0

    def test_global_higher_degree_wins(self):
        o = MonomialOrder.global_(1)
        assert o.compare((2,), (1,)) == 1

    def test_local_one_beats_variables(self):
        o = MonomialOrder.local(3)
        one = (0, 0, 0)
        for i in range(3):
            m = tuple(1 if j == i else 0 for j in range(3))
            assert o.compare(one, m) == 1

    def test_global_variables_beat_one(self):
        o = MonomialOrder.global_(2)
        assert o.compare((1, 0), (0, 0)) == 1

    def test_revlex_tiebreak(self):
        # earlier variables dominate within a fixed degree
        o = MonomialOrder.global_(2)
        assert o.compare((1, 0), (0, 1)) == 1
        lo = MonomialOrder.local(2)
        assert lo.compare((1, 0), (0, 1)) == 1

    def test_block_elimination_dominance(self):
        o = MonomialOrder.elimination(1, 2)
        with_tag = (1, 0, 0)
        without = (0, 5, 5)
        assert o.compare(with_tag, without) == 1

    def test_length_mismatch(self):
        o = MonomialOrder.local(2)
        with pytest.raises(DimensionMismatchError):
            o.compare((1,), (1, 0))

    def test_total_order_on_sample(self):
        o = MonomialOrder.local(2)
        monos = [(i, j) for i in range(4) for j in range(4)]
        keys = [o.key(m) for m in monos]
        assert len(set(keys)) == len(keys)


class TestGrammar:
    def test_example_from_the_interface(self):
        p = parse_polynomial("x2^2 - x1^3", ["x1", "x2"])
        assert p.terms == {(0, 2): Fraction(1), (3, 0): Fraction(-1)}

    def test_rational_coefficients(self):
        p = parse_polynomial("1/2*x + 3", ["x"])
        assert p.terms == {(1,): Fraction(1, 2), (0,): Fraction(3)}

    def test_implicit_products_and_powers(self):
        p = parse_polynomial("2*x*y^2", ["x", "y"])
        assert p.terms == {(1, 2): Fraction(2)}

    def test_whitespace_insignificant(self):
        a = parse_polynomial("x^2-  y", ["x", "y"])
        b = parse_polynomial("x^2 - y", ["x", "y"])
        assert a == b

    def test_unknown_variable(self):
        with pytest.raises(PolynomialParseError):
            parse_polynomial("z", ["x"])

    def test_dangling_operator(self):
        with pytest.raises(PolynomialParseError):
            parse_polynomial("x +", ["x"])

    def test_roundtrip_is_canonical(self):
        names = ["x", "y"]
        order = MonomialOrder.local(2)
        for text in ["x*y + y^3", "x^2 - 2*y", "1/3*x^2*y - y^2 + x"]:
            p = parse_polynomial(text, names)
            printed = format_polynomial(p, names, order)
            again = parse_polynomial(printed, names)
            assert again == p
            assert format_polynomial(again, names, order) == printed

    def test_zero_prints_as_zero(self):
        z = Polynomial.zero(2)
        assert format_polynomial(z, ["x", "y"]) == "0"


class TestArithmetic:
    def test_product(self):
        x = parse_polynomial("x", ["x", "y"])
        y = parse_polynomial("y", ["x", "y"])
        assert (x + y) * (x - y) == parse_polynomial("x^2 - y^2", ["x", "y"])

    def test_substitute(self):
        p = parse_polynomial("x^2 + y", ["x", "y"])
        z = parse_polynomial("z", ["z"])
        img = p.substitute([z, z * z])
        assert img == parse_polynomial("2*z^2", ["z"])

    def test_linear_coefficients(self):
        p = parse_polynomial("3*x - 1/2*y + x*y", ["x", "y"])
        assert p.linear_coefficients() == [Fraction(3), Fraction(-1, 2)]

    def test_embed_restrict_roundtrip(self):
        p = parse_polynomial("x^2 - y", ["x", "y"])
        q = p.embed([1, 2], 3)
        assert q.restrict([1, 2]) == p

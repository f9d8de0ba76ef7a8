"""Mora normal forms and standard bases: examples, properties, randomized
idempotence and confluence sweeps."""

import random
from fractions import Fraction

import pytest

from germglue import (Ideal, MonomialOrder, Polynomial, ideal_membership,
                      mora_normal_form, parse_polynomial, spoly)
from germglue.ideals import compute_standard_basis, normal_form
from germglue.linalg import rank, rref
from germglue.ideals import JetSpace


def P(text, names):
    return parse_polynomial(text, names)


class TestMoraNormalForm:
    def test_local_unit_multiple_reduces_to_zero(self):
        o = MonomialOrder.local(1)
        r = mora_normal_form(P("x", ["x"]), [P("x - x^2", ["x"])], o)
        assert r.is_zero()

    def test_unrelated_leading_terms(self):
        o = MonomialOrder.local(2)
        r = mora_normal_form(P("y^2", ["x", "y"]), [P("x*y", ["x", "y"])], o)
        assert r == P("y^2", ["x", "y"])

    def test_multiple_of_generator(self):
        o = MonomialOrder.local(1)
        r = mora_normal_form(P("x^3 + x^5", ["x"]), [P("x^3", ["x"])], o)
        assert r.is_zero()

    def test_empty_reducers(self):
        o = MonomialOrder.local(1)
        f = P("x + x^2", ["x"])
        assert mora_normal_form(f, [], o) == f

    def test_idempotence_randomized(self):
        rng = random.Random(20240817)
        names = ["x", "y"]
        o = MonomialOrder.local(2)
        for _ in range(120):
            f = _random_poly(rng, 2, maxdeg=4)
            gens = [_random_poly(rng, 2, maxdeg=3, vanish=True)
                    for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_zero()]
            r1 = mora_normal_form(f, gens, o)
            r2 = mora_normal_form(r1, gens, o)
            assert r1 == r2


def _random_poly(rng, nvars, maxdeg, vanish=False):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        m = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
        if sum(m) > maxdeg or (vanish and sum(m) == 0):
            continue
        terms[m] = Fraction(rng.randint(-3, 3))
    return Polynomial(terms, nvars)


class TestStandardBasis:
    def test_principal_ideal(self):
        o = MonomialOrder.local(2)
        I = Ideal([P("x*y", ["x", "y"])], o)
        assert I.standard_basis() == [P("x*y", ["x", "y"])]

    def test_unit_multiple_gives_variable_lead(self):
        o = MonomialOrder.local(1)
        I = Ideal([P("x - x^2", ["x"])], o)
        sb = I.standard_basis()
        assert [g.leading_monomial(o) for g in sb] == [(1,)]

    def test_completion_example(self):
        # <x^2, xy + y^3> has leading ideal <x^2, xy, y^5>: the quotient is
        # spanned by 1, x, y, y^2, y^3, y^4 (checked below by jets).
        o = MonomialOrder.local(2)
        I = Ideal([P("x^2", ["x", "y"]), P("x*y + y^3", ["x", "y"])], o)
        sb = I.standard_basis()
        leads = sorted(g.leading_monomial(o) for g in sb)
        assert leads == [(0, 5), (1, 1), (2, 0)]
        jet = JetSpace(sb, 2, 8)
        assert jet.quotient_dimension() == 6 - 1  # constants not counted

    def test_confluence_all_spolys_reduce(self):
        o = MonomialOrder.local(2)
        I = Ideal([P("x^2", ["x", "y"]), P("x*y + y^3", ["x", "y"])], o)
        sb = I.standard_basis()
        for i in range(len(sb)):
            for j in range(i):
                s = spoly(sb[i], sb[j], o)
                assert normal_form(s, sb, o).is_zero()

    def test_confluence_randomized(self):
        rng = random.Random(99173)
        names = ["x", "y"]
        o = MonomialOrder.local(2)
        cases = 0
        while cases < 100:
            gens = [_random_poly(rng, 2, maxdeg=3, vanish=True)
                    for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            cases += 1
            sb = compute_standard_basis(gens, o)
            for i in range(len(sb)):
                for j in range(i):
                    s = spoly(sb[i], sb[j], o)
                    assert normal_form(s, sb, o).is_zero()

    def test_membership_of_generators_randomized(self):
        rng = random.Random(5151)
        o = MonomialOrder.local(2)
        for _ in range(40):
            gens = [_random_poly(rng, 2, maxdeg=3, vanish=True)
                    for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            I = Ideal(gens, o)
            for g in gens:
                assert ideal_membership(g, I)
            combo = Polynomial.zero(2)
            for g in gens:
                combo = combo + _random_poly(rng, 2, maxdeg=2) * g
            assert ideal_membership(combo, I)

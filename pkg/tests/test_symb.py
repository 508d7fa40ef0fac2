from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from stiefeldeg.errors import DomainError
from stiefeldeg.symb import (MultiPoly, alt_poly, alt_value, as_terms, integral_alternating,
                             integral_product_simplex, integrate_poly, integrate_simplex,
                             iterated_alternating_integral, lam_vars)


def partitions(size, r):
    """Partitions with at most r parts and sum <= size, padded to length r."""
    out = []

    def rec(prefix, left, cap):
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for x in range(min(left, cap), -1, -1):
            rec(prefix + [x], left - x, x)
    rec([], size, size)
    return out


x, y = MultiPoly.var("x"), MultiPoly.var("y")


def test_arithmetic():
    p = (x + y) ** 2
    assert p == x * x + 2 * x * y + y * y
    assert p - p == MultiPoly.constant(0)
    assert (x + 1).evaluate({"x": 3}) == 4
    assert str(x * y * Fraction(1, 6) - y) == "1/6*x*y - y"


def test_degree_queries():
    p = x ** 3 * y + y ** 2
    assert p.total_degree() == 4
    assert p.degree_in("y") == 2


def test_integrate_poly():
    assert integrate_poly(x ** 2, "x", 0, 1) == MultiPoly.constant(Fraction(1, 3))
    assert integrate_poly(x, "x", y, 2 * y).drop_unused() == Fraction(3, 2) * y ** 2
    with pytest.raises(DomainError):
        integrate_poly(x, "x", 0, x)


def test_alt_poly_small():
    l1, l2 = MultiPoly.var("l1"), MultiPoly.var("l2")
    assert alt_poly((0, 0), 2) == (l1 - l2).extend(lam_vars(2))
    assert alt_poly((0,), 1) == MultiPoly.constant(1, ("l1",))


def test_alt_value_matches_poly():
    pt = (Fraction(5), Fraction(3, 2), Fraction(-1))
    for mu in partitions(3, 3):
        p = alt_poly(mu, 3)
        assert p.evaluate(dict(zip(lam_vars(3), pt))) == alt_value(mu, pt)


def test_rejects_non_partitions():
    with pytest.raises(DomainError):
        alt_poly((0, 1), 2)
    with pytest.raises(DomainError):
        alt_poly((1,), 2)


@pytest.mark.parametrize("r", range(1, 5))
def test_antisymmetry(r):
    vs = lam_vars(r)
    for mu in partitions(3, r):
        p = alt_poly(mu, r)
        for i in range(r):
            for j in range(i + 1, r):
                swapped = list(vs)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                q = alt_poly(mu, r, swapped)
                assert as_terms(q, vs) == as_terms(-p, vs)


@pytest.mark.parametrize("r", range(1, 4))
def test_restriction_to_zero(r):
    for pi in partitions(4, r):
        big = alt_poly(pi + (0,), r + 1)
        restricted = big.substitute(f"l{r + 1}", 0).drop_unused()
        plus_one = alt_poly(tuple(p + 1 for p in pi), r)
        assert as_terms(restricted, lam_vars(r)) == as_terms(plus_one, lam_vars(r))


@pytest.mark.parametrize("r", range(1, 4))
def test_iterated_integral_lemma(r):
    for pi in partitions(3, r):
        c, padded = integral_alternating(pi, r)
        expect = alt_poly(padded, r + 1) * c
        assert as_terms(iterated_alternating_integral(pi, r), lam_vars(r + 1)) == \
            as_terms(expect, lam_vars(r + 1))


def test_simplex_integral_direct():
    assert integrate_simplex(MultiPoly.constant(1), ("a", "b")) == Fraction(1, 2)
    a = MultiPoly.var("a")
    assert integrate_simplex(a, ("a", "b")) == Fraction(1, 6)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_product_lemma_matches_direct_integration(r):
    bound = 2 if r <= 2 else 1
    for mu in partitions(bound, r):
        for nu in partitions(bound, r):
            direct = integrate_simplex(alt_poly(mu, r) * alt_poly(nu, r), lam_vars(r))
            assert integral_product_simplex(mu, nu, r) == direct, (mu, nu)


@given(st.integers(1, 3).flatmap(lambda r: st.tuples(
    st.just(r), st.sampled_from(partitions(3, r)), st.sampled_from(partitions(3, r)))))
def test_product_lemma_symmetric(args):
    r, mu, nu = args
    assert integral_product_simplex(mu, nu, r) == integral_product_simplex(nu, mu, r)


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=5).map(
    lambda t: MultiPoly(("x", "y"), t))


@given(polys, polys, coeffs, coeffs)
def test_evaluation_is_a_ring_map(p, q, a, b):
    pt = {"x": a, "y": b}
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


@given(polys, coeffs)
def test_fundamental_theorem(p, c):
    # d/dx of the integral from 0 to x recovers p: check by integrating over [0, c] twice ways
    whole = integrate_poly(p, "x", 0, c)
    split = integrate_poly(p, "x", 0, c / 2) + integrate_poly(p, "x", c / 2, c)
    assert whole == split

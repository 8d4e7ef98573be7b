import pytest
from hypothesis import given, strategies as st

from lgmult.intpoly import (
    IntPoly,
    compress_palindrome,
    cyclotomic,
    div_exact,
    divides,
    gcd,
    parse_poly_json,
    poly_from_json,
    poly_to_json,
    product,
    squarefree_decomposition,
    squarefree_part,
)

P = IntPoly.from_coeffs


def test_constructors_and_queries():
    f = P([1, 0, -3, 2])
    assert f.degree == 3 and f.leading == 2 and not f.is_monic
    assert P([0, 0]).is_zero and P([0, 0]).degree == -1
    assert IntPoly.x() == P([0, 1])
    assert IntPoly.one()(17) == 1


def test_arithmetic_and_eval():
    f, g = P([1, 2]), P([-1, 1])
    assert f * g == P([-1, -1, 2])
    assert f + g == P([0, 3])
    assert (f - f).is_zero
    assert f(3) == 7
    assert P([2, 4, 6]).content() == 2
    assert P([2, 4, 6]).primitive() == P([1, 2, 3])
    assert P([0, 0, 1]).derivative() == P([0, 2])


def test_shift_multiplies_by_power_of_x():
    f = P([1, -1, 1])
    assert f.shift(2) == P([0, 0, 1, -1, 1])
    assert f.shift(0) == f
    assert IntPoly.zero().shift(3).is_zero


def test_div_exact_and_divides():
    f = P([-1, 0, 1])  # (x-1)(x+1)
    assert div_exact(f, P([1, 1])) == P([-1, 1])
    assert divides(P([1, 1]), f)
    assert not divides(P([1, 0, 1]), f)
    with pytest.raises(ValueError):
        div_exact(f, P([1, 0, 1]))
    with pytest.raises(ZeroDivisionError):
        div_exact(f, IntPoly.zero())


def test_gcd_examples():
    f = P([-1, 0, 1]) * P([2, 1])
    g = P([-1, 1]) * P([2, 1])
    assert gcd(f, g) == P([-2, 1, 1])  # (x-1)(x+2)


def test_cyclotomic_small_orders():
    assert cyclotomic(1) == P([-1, 1])
    assert cyclotomic(2) == P([1, 1])
    assert cyclotomic(4) == P([1, 0, 1])
    assert cyclotomic(10) == P([1, -1, 1, -1, 1])
    assert cyclotomic(12) == P([1, 0, -1, 0, 1])


def test_cyclotomic_product_recovers_xn_minus_1():
    for n in (6, 12, 15):
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        lhs = product(cyclotomic(d) for d in divisors)
        rhs = P([-1] + [0] * (n - 1) + [1])
        assert lhs == rhs


def test_compress_palindrome_recovers_chebyshev_like_identity():
    # psi(y) with y = x + 1/x satisfies x^(deg psi) psi(x + 1/x) = f(x)
    for n in (5, 8, 12):
        f = cyclotomic(n)
        psi = compress_palindrome(f)
        assert psi.degree == f.degree // 2
        for x in (2, 3, -2):
            lhs = sum(
                c * (x * x + 1) ** i * x ** (psi.degree - i)
                for i, c in enumerate(psi.coeffs)
            )
            assert lhs == f(x)


def _pow(p, e):
    out = IntPoly.one()
    for _ in range(e):
        out = out * p
    return out


def test_squarefree_decomposition_reconstructs():
    f = P([1, 1]) * _pow(P([-1, 1]), 2) * _pow(P([-2, 0, 1]), 3)
    parts = squarefree_decomposition(f)
    rebuilt = product(_pow(p, e) for p, e in parts)
    assert rebuilt.primitive() == f.primitive()
    assert {e for _, e in parts} == {1, 2, 3}
    assert squarefree_part(f) == (P([1, 1]) * P([-1, 1]) * P([-2, 0, 1])).primitive()


small_polys = st.lists(st.integers(-4, 4), min_size=1, max_size=5).map(P)
nonzero_polys = small_polys.filter(lambda f: not f.is_zero)


@given(nonzero_polys, nonzero_polys)
def test_product_division_round_trip(f, g):
    assert div_exact(f * g, g) == f
    assert divides(g, f * g)


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(f, g):
    d = gcd(f, g)
    assert divides(d, f) and divides(d, g)


@given(nonzero_polys)
def test_squarefree_part_divides(f):
    s = squarefree_part(f)
    assert divides(s, f.primitive())
    # squaring any nontrivial factor of s must leave the squarefree part fixed
    assert squarefree_part(s) == s


def test_poly_json_round_trip():
    f = P([10 ** 30, -2, 0, 7])
    data = poly_to_json(f)
    assert data == [str(10 ** 30), "-2", "0", "7"]
    assert poly_from_json(data) == f
    assert parse_poly_json('["1", "0", "-1"]') == P([1, 0, -1])

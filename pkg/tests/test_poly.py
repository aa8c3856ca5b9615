import pytest
from hypothesis import given, strategies as st

from polyface.errors import FormulaError
from polyface.poly import (
    FPolynomial,
    LaurentPolynomial,
    binom,
    check_f_polynomial,
    laurent_normalize,
    multinom,
    poly_add,
    poly_mul,
    poly_scale,
)

coeff_lists = st.lists(st.integers(-10**20, 10**20), max_size=8)
polys = coeff_lists.map(FPolynomial)


@pytest.mark.parametrize("n,k,want", [(5, 2, 10), (4, -1, 0), (13, 2, 78), (3, 5, 0), (-2, 1, 0), (0, 0, 1)])
def test_binom(n, k, want):
    assert binom(n, k) == want


@pytest.mark.parametrize("total,i,j,want", [(3, 1, 1, 6), (2, 0, 0, 1), (3, 1, 0, 3), (3, 2, 2, 0), (4, -1, 0, 0)])
def test_multinom(total, i, j, want):
    assert multinom(total, i, j) == want


def test_multinom_factorises():
    for total in range(12):
        for i in range(-1, total + 2):
            for j in range(-1, total + 2):
                want = binom(total, i) * binom(total - i, j) if i >= 0 and j >= 0 else 0
                assert multinom(total, i, j) == want


def test_big_coefficients_stay_exact():
    assert binom(200, 100) == 90548514656103281165404177077484163874504589675413336841320
    p = FPolynomial((2**70, 1))
    assert (p * p)[0] == 2**140


def test_trailing_zeros_stripped():
    assert FPolynomial((1, 2, 0, 0)) == FPolynomial((1, 2))
    assert FPolynomial((0, 0)).coeffs == ()
    assert FPolynomial((1, 2))[5] == 0


def test_square_is_product_of_segments():
    seg = FPolynomial((2, 1))
    assert seg * seg == FPolynomial((4, 4, 1))
    assert poly_mul(seg, seg) == FPolynomial((4, 4, 1))


def test_identity_on_u_example():
    u = FPolynomial((1, 9, 9, 0, -1))
    assert u * 1 == u
    assert u * FPolynomial.constant(1) == u


def test_helpers():
    assert poly_add(FPolynomial((1, 2)), FPolynomial((3,))) == FPolynomial((4, 2))
    assert poly_scale(FPolynomial((1, -2)), -3) == FPolynomial((-3, 6))
    assert laurent_normalize(-2, (0, 0, 3, 0)) == (0, (3,))


def test_laurent_division_pattern():
    one_plus_t = LaurentPolynomial(0, (1, 1))
    cube = one_plus_t * one_plus_t * one_plus_t
    q = (cube - LaurentPolynomial(0, (1, 3))).shift(-1)
    assert q.min_exponent == 1
    assert q.to_fpolynomial() == FPolynomial((0, 3, 1))


def test_laurent_negative_exponent_rejected():
    with pytest.raises(FormulaError):
        LaurentPolynomial(-1, (1, 1)).to_fpolynomial()


def test_laurent_normalizes_both_ends():
    p = LaurentPolynomial(-3, (0, 0, 5, 0, 7, 0))
    assert (p.min_exponent, p.coeffs) == (-1, (5, 0, 7))


def test_check_f_polynomial():
    check_f_polynomial(FPolynomial((3, 3, 1)), 2)
    with pytest.raises(FormulaError):
        check_f_polynomial(FPolynomial((3, 4, 1)))
    with pytest.raises(FormulaError):
        check_f_polynomial(FPolynomial((3, 3, 1)), 3)
    with pytest.raises(FormulaError):
        check_f_polynomial(FPolynomial((2, 0, 1, 2, 1)))


@given(polys, polys, polys)
def test_ring_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)


@given(polys, polys, polys)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_commutativity_and_inverse(a, b):
    assert a * b == b * a
    assert a - a == FPolynomial()
    assert (a + b) - b == a


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(coeff_lists, st.integers(-6, 6), coeff_lists, st.integers(-6, 6))
def test_laurent_product_matches_fpolynomial(ca, ea, cb, eb):
    a = LaurentPolynomial(ea, ca)
    b = LaurentPolynomial(eb, cb)
    lifted = (a.shift(6) * b.shift(6)).to_fpolynomial()
    assert lifted == (a * b).shift(12).to_fpolynomial()

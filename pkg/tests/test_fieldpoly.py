import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fflat.fieldpoly import (
    FpPoly,
    PrimeField,
    is_squarefree,
    legendre_symbol,
    poly_ext_gcd,
    poly_eval,
    poly_gcd,
    roots_in_fp,
)

F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)
F11 = PrimeField(11)
PAPER_F11_COEFFS = (9, 0, 2, 4, 9, 3, 5, 1)

SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_prime_field_rejects_composites_and_two():
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(2)


def test_legendre_examples():
    assert legendre_symbol(0, F7) == 0
    assert legendre_symbol(4, F7) == 1
    assert legendre_symbol(6, F7) == -1


def test_legendre_against_square_enumeration():
    squares = sorted({y * y % 7 for y in range(1, 7)})
    assert squares == [1, 2, 4]
    for a in range(1, 7):
        assert legendre_symbol(a, F7) == (1 if a in squares else -1)


def test_legendre_multiplicative_all_small_primes():
    for p in SMALL_PRIMES:
        fld = PrimeField(p)
        for a in range(1, p):
            for b in range(1, p):
                assert legendre_symbol(a * b % p, fld) == legendre_symbol(
                    a, fld
                ) * legendre_symbol(b, fld)


def test_poly_eval_examples():
    x5_minus_x = F5.poly((0, 4, 0, 0, 0, 1))
    assert poly_eval(x5_minus_x, 2) == 0
    paper_f = F11.poly(PAPER_F11_COEFFS)
    root = roots_in_fp(paper_f)[0]
    assert poly_eval(paper_f, root) == 0
    assert poly_eval(F3.poly((1, 0, 1)), 1) == 2


def test_poly_gcd_examples():
    f = F5.poly((3, 1, 2))
    assert poly_gcd(f, F5.zero_poly()) == f.monic()
    assert poly_gcd(F5.poly((4, 0, 1)), F5.poly((4, 1))) == F5.poly((4, 1))
    x5_minus_x = F5.poly((0, 4, 0, 0, 0, 1))
    assert poly_gcd(x5_minus_x, x5_minus_x.derivative()) == F5.one_poly()
    with pytest.raises(ValueError):
        poly_gcd(F5.zero_poly(), F5.zero_poly())


def test_squarefree_examples():
    assert is_squarefree(F5.poly((0, 4, 0, 0, 0, 1)))
    assert not is_squarefree(F7.x_minus(1) * F7.x_minus(1))
    assert is_squarefree(F11.poly(PAPER_F11_COEFFS))
    with pytest.raises(ValueError):
        is_squarefree(F5.one_poly())


def _has_square_factor(f: FpPoly) -> bool:
    # Oracle: search for g of degree >= 1 with g^2 | f, by exhaustive scan.
    p = f.field.p
    for dg in range(1, f.degree // 2 + 1):
        import itertools

        for lower in itertools.product(range(p), repeat=dg):
            g = f.field.poly(lower + (1,))
            if (f % (g * g)).is_zero:
                return True
    return False


def test_squarefree_against_square_divisor_oracle():
    import itertools

    for p in (3, 5, 7):
        fld = PrimeField(p)
        for deg in (2, 3, 4):
            for lower in itertools.product(range(p), repeat=deg):
                f = fld.poly(lower + (1,))
                assert is_squarefree(f) == (not _has_square_factor(f))


def test_roots_examples():
    assert roots_in_fp(F5.poly((0, 4, 0, 0, 0, 1))) == [0, 1, 2, 3, 4]
    assert len(roots_in_fp(F11.poly(PAPER_F11_COEFFS))) == 7
    assert roots_in_fp(F3.poly((1, 0, 1))) == []
    with pytest.raises(ValueError):
        roots_in_fp(F5.zero_poly())


small_poly = st.lists(st.integers(min_value=0, max_value=6), min_size=0, max_size=6)


@given(small_poly, small_poly, small_poly)
@settings(max_examples=200, deadline=None)
def test_poly_ring_laws(a, b, c):
    fa, fb, fc = F7.poly(a), F7.poly(b), F7.poly(c)
    assert fa + fb == fb + fa
    assert fa * fb == fb * fa
    assert (fa + fb) * fc == fa * fc + fb * fc
    if not fb.is_zero:
        q, r = divmod(fa, fb)
        assert q * fb + r == fa
        assert r.is_zero or r.degree < fb.degree


@given(small_poly, small_poly)
@settings(max_examples=200, deadline=None)
def test_ext_gcd_bezout(a, b):
    fa, fb = F7.poly(a), F7.poly(b)
    if fa.is_zero and fb.is_zero:
        return
    d, s, t = poly_ext_gcd(fa, fb)
    assert s * fa + t * fb == d
    assert d.is_zero or d.leading == 1
    if not fa.is_zero:
        assert (fa % d).is_zero
    if not fb.is_zero:
        assert (fb % d).is_zero


@given(st.lists(st.integers(min_value=0, max_value=10), min_size=1, max_size=8))
@settings(max_examples=200, deadline=None)
def test_root_count_bounded_by_degree(coeffs):
    f = F11.poly(coeffs)
    if f.is_zero:
        return
    assert len(roots_in_fp(f)) <= max(f.degree, 0)


def test_poly_string_round_trip():
    f = FpPoly.from_string(F11, "9,0,2,4,9,3,5,1")
    assert f.coeffs == PAPER_F11_COEFFS
    assert f.to_string() == "9,0,2,4,9,3,5,1"
    assert f.degree == 7

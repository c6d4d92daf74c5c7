"""Fixed-point arithmetic against Fraction and math.isqrt oracles."""
import math
import random
from fractions import Fraction

import pytest

from capbound.fixedpoint import BigFixed, icbrt_newton, isqrt_newton, pi


def test_isqrt_matches_math_isqrt():
    rng = random.Random(1)
    values = [0, 1, 2, 3, 4, 8, 9, 10**40, 10**40 + 1]
    values += [rng.randrange(10**rng.randint(1, 60)) for _ in range(200)]
    for v in values:
        assert isqrt_newton(v) == math.isqrt(v)
    for k in range(1, 50):
        assert isqrt_newton(k * k) == k
        assert isqrt_newton(k * k - 1) == k - 1


def test_icbrt_floor_property():
    rng = random.Random(2)
    values = [0, 1, 2, 7, 8, 9, 26, 27, 28]
    values += [rng.randrange(10**rng.randint(1, 60)) for _ in range(200)]
    for v in values:
        r = icbrt_newton(v)
        assert r**3 <= v < (r + 1) ** 3
    for k in range(1, 50):
        assert icbrt_newton(k**3) == k
        assert icbrt_newton(k**3 - 1) == k - 1


def test_negative_roots_rejected():
    with pytest.raises(ValueError):
        isqrt_newton(-1)
    with pytest.raises(ValueError):
        icbrt_newton(-8)


def as_fraction(bf):
    return Fraction(bf.mantissa, 10**bf.scale)


def test_arithmetic_against_fractions():
    rng = random.Random(3)
    scale = 30
    ulp = Fraction(1, 10**scale)
    for _ in range(200):
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        fa = BigFixed.from_ratio(a.numerator, a.denominator, scale)
        fb = BigFixed.from_ratio(b.numerator, b.denominator, scale)
        assert abs(as_fraction(fa + fb) - (a + b)) <= 2 * ulp
        assert abs(as_fraction(fa - fb) - (a - b)) <= 2 * ulp
        assert abs(as_fraction(fa * fb) - a * b) <= (abs(a) + abs(b) + 2) * ulp
        if b != 0:
            assert abs(as_fraction(fa / fb) - a / b) <= \
                (abs(a / b) + abs(1 / b) + 2) * ulp


def test_decimal_string_roundtrip():
    for text in ("3.1415", "-0.001", "20.912901011846452219", "7", "-12.50"):
        bf = BigFixed.from_decimal(text)
        assert bf.decimal() == text.lstrip("+")
    assert BigFixed.from_decimal("2.75").mantissa == 275
    assert BigFixed.from_decimal("-2.75").mantissa == -275
    with pytest.raises(ValueError):
        BigFixed.from_decimal("12,5")


def test_to_scale_rounding():
    bf = BigFixed.from_decimal("1.23456")
    assert bf.to_scale(3).decimal() == "1.235"
    assert bf.to_scale(8).decimal() == "1.23456000"
    assert BigFixed.from_decimal("-1.5").to_scale(0).mantissa == -1


def test_sqrt_cbrt_and_powers():
    rng = random.Random(4)
    scale = 40
    for _ in range(50):
        value = BigFixed.from_ratio(rng.randint(1, 10**8),
                                    rng.randint(1, 10**4), scale)
        sq = value.pow_int(2)
        assert abs(as_fraction(sq.sqrt()) - as_fraction(value)) \
            <= Fraction(2, 10**scale)
        cb = value.pow_int(3)
        assert abs(as_fraction(cb.cbrt()) - as_fraction(value)) \
            <= Fraction(2, 10**scale)
        k = rng.randint(0, 6)
        repeated = BigFixed.from_int(1, scale)
        for _ in range(k):
            repeated = repeated * value
        assert abs(as_fraction(value.pow_int(k)) - as_fraction(repeated)) \
            <= Fraction(k + 1, 10**scale) * max(1, abs(as_fraction(repeated)))


def test_comparisons():
    a = BigFixed.from_decimal("1.5")
    b = BigFixed.from_decimal("1.50000001")
    assert a < b and b > a and a <= a and a >= a
    assert not a > b


def test_pi_digits():
    # rounded (not truncated) at the 40th decimal
    want = "3.1415926535897932384626433832795028841972"
    assert pi(40).decimal() == want
    assert float(pi(20)) == pytest.approx(math.pi, abs=1e-15)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skcurve.exact import Cmp, DomainError, Dyadic, ExactRatio, cmp_ratio, dyadic, parse_dyadic

ints = st.integers(min_value=-(10**30), max_value=10**30)
exps = st.integers(min_value=0, max_value=200)
dyadics = st.builds(Dyadic, ints, exps)
positive = st.builds(Dyadic, st.integers(min_value=1, max_value=10**30), exps)


@pytest.mark.parametrize(
    "m, e, stored",
    [(2, 2, (1, 1)), (0, 5, (0, 0)), (3, 2, (3, 2)), (-12, 3, (-3, 1)), (8, 1, (4, 0))],
)
def test_dyadic_normalization(m, e, stored):
    d = dyadic(m, e)
    assert (d.num, d.exp) == stored


def test_negative_exponent_rejected():
    with pytest.raises(DomainError):
        dyadic(1, -1)


@given(ints, exps)
def test_value_matches_fraction(m, e):
    assert dyadic(m, e).to_fraction() == Fraction(m, 2**e)


@given(ints, exps, st.integers(min_value=0, max_value=50))
def test_normal_form_is_unique(m, e, k):
    a, b = dyadic(m, e), dyadic(m << k, e + k)
    assert a == b and (a.num, a.exp) == (b.num, b.exp) and hash(a) == hash(b)
    assert a.num % 2 == 1 or (a.num == 0 and a.exp == 0) or a.exp == 0


@given(dyadics, dyadics)
def test_ring_operations_are_exact(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)


@given(dyadics)
def test_text_round_trip(d):
    assert parse_dyadic(str(d)) == d


@pytest.mark.parametrize("text, value", [("3/2^2", Fraction(3, 4)), ("-5", -5), ("7/8", Fraction(7, 8)), (" 1 / 2^1 ", Fraction(1, 2))])
def test_parse(text, value):
    assert parse_dyadic(text).to_fraction() == value


@pytest.mark.parametrize("text", ["1/3", "x", "1.5", "1/0"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        parse_dyadic(text)


def test_huge_values_do_not_wrap():
    big = Dyadic(2**200 + 1, 0)
    assert (big * big).to_fraction() == Fraction(2**200 + 1) ** 2


@pytest.mark.parametrize(
    "num, den, bound, expected",
    [
        (Dyadic(2), Dyadic(1, 1), Dyadic(4), Cmp.EQUAL),
        (Dyadic(1), Dyadic(1), Dyadic(4), Cmp.LESS),
        (Dyadic(9, 2), Dyadic(1, 1), Dyadic(4), Cmp.GREATER),
    ],
)
def test_cmp_ratio_examples(num, den, bound, expected):
    assert cmp_ratio(num, den, bound) is expected


@pytest.mark.parametrize("den", [Dyadic(0), Dyadic(-1)])
def test_cmp_ratio_domain(den):
    with pytest.raises(DomainError):
        cmp_ratio(1, den, 4)


@given(dyadics, positive, dyadics, positive)
def test_cmp_ratio_scale_invariance(x, y, b, a):
    x = abs(x)
    assert cmp_ratio(a * x, a * y, b) is cmp_ratio(x, y, b)
    want = Cmp.of(x.to_fraction() / y.to_fraction(), b.to_fraction())
    assert cmp_ratio(x, y, b) is want


@given(dyadics, positive, dyadics, positive)
def test_exact_ratio_ordering(n1, d1, n2, d2):
    r1, r2 = ExactRatio(abs(n1), d1), ExactRatio(abs(n2), d2)
    q1, q2 = r1.to_fraction(), r2.to_fraction()
    assert (r1 == r2) == (q1 == q2)
    assert (r1 < r2) == (q1 < q2)
    assert (r1 == r2) <= (hash(r1) == hash(r2))


def test_exact_ratio_against_integers():
    r = ExactRatio(Dyadic(2), Dyadic(1, 1))
    assert r == 4 and r == Dyadic(4) and not r < 4 and str(r) == "4"
    assert ExactRatio(Dyadic(40), Dyadic(9)) > 4
    with pytest.raises(DomainError):
        ExactRatio(1, 0)

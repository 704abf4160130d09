import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from wittquant.rings import (
    QQ,
    RingMismatchError,
    TPoly,
    binom_int,
    gf,
    multi_binom,
    multi_binom_mod_p,
    t_quotient,
    t_series,
    tpoly_mul,
)


def test_binom_int_examples():
    assert binom_int(5, 0) == 1
    assert binom_int(-1, 2) == 1  # (-1)(-2)/2
    assert binom_int(2, 2) == 1
    assert binom_int(-2, 3) == -4
    assert binom_int(7, 3) == 35


def test_binom_int_pascal():
    for a in range(-50, 51):
        for r in range(1, 11):
            assert binom_int(a, r) == binom_int(a - 1, r) + binom_int(a - 1, r - 1)


def test_binom_int_negative_r_rejected():
    with pytest.raises(ValueError):
        binom_int(3, -1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_multi_binom_mod_p_matches_integer_binomial(p):
    rng = range(0, 2 * p + 1)
    for a1 in rng:
        for b1 in rng:
            expected = binom_int(a1 + b1, a1) % p
            assert multi_binom_mod_p((a1,), (b1,), p) == expected


def test_multi_binom_mod_p_examples():
    assert multi_binom_mod_p((1,), (1,), 3) == 2
    assert multi_binom_mod_p((2,), (2,), 3) == 0
    assert multi_binom_mod_p((0, 0, 0), (2, 4, 1), 5) == 1


def test_multi_binom_multidim():
    assert multi_binom((1, 2), (1, 1)) == binom_int(2, 1) * binom_int(3, 2)
    assert multi_binom_mod_p((1, 2), (1, 1), 5) == (binom_int(2, 1) * binom_int(3, 2)) % 5


def test_gf_basics():
    F = gf(5)
    assert F.add(3, 4) == 2
    assert F.mul(3, 4) == 2
    assert F.inv(2) == 3
    assert F.neg(1) == 4
    assert F.from_int(-1) == 4


def test_p_equal_2_rejected():
    with pytest.raises(ValueError):
        gf(2)
    with pytest.raises(ValueError):
        gf(9)


def _tp(ring, terms):
    return TPoly.from_terms(ring, terms)


def test_tpoly_mul_examples():
    Rq1 = t_quotient(3, 1)
    assert tpoly_mul(_tp(Rq1, {2: 1}), _tp(Rq1, {1: 1})) == _tp(Rq1, {1: 1})  # t^3 -> t

    Rs = t_series(QQ, 3)
    f = _tp(Rs, {0: Fraction(1), 1: Fraction(1)})
    assert tpoly_mul(f, f) == _tp(Rs, {0: 1, 1: 2, 2: 1})

    Rq0 = t_quotient(3, 0)
    assert not tpoly_mul(_tp(Rq0, {2: 1}), _tp(Rq0, {2: 1}))  # t^4 -> 0*t^2 = 0


def test_tpoly_series_truncation():
    Rs = t_series(QQ, 3)
    f = _tp(Rs, {2: Fraction(1)})
    assert not f * f  # t^4 dies at cap 3


def test_tpoly_quotient_relation_vanishes():
    for q in (0, 1, 2):
        R = t_quotient(3, q)
        rel = _tp(R, {0: 0, 1: -q % 3})
        tp = TPoly(R, R.t_power(3))
        assert tp == _tp(R, {1: q})
        assert TPoly(R, R.sub(R.t_power(3), R.scale_int(R.t_power(1), q))).value == ()


def test_tpoly_ring_mismatch():
    f = _tp(t_series(QQ, 3), {1: Fraction(1)})
    g = _tp(t_series(QQ, 4), {1: Fraction(1)})
    with pytest.raises(RingMismatchError):
        tpoly_mul(f, g)
    with pytest.raises(RingMismatchError):
        tpoly_mul(f, _tp(t_quotient(3, 0), {1: 1}))


@st.composite
def _quot_polys(draw, p=5, q=1):
    R = t_quotient(p, q)
    terms = draw(st.dictionaries(st.integers(0, p - 1), st.integers(0, p - 1), max_size=p))
    return _tp(R, terms)


@given(_quot_polys(), _quot_polys(), _quot_polys())
def test_tpoly_quotient_assoc_comm(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@st.composite
def _series_polys(draw, cap=4):
    R = t_series(QQ, cap)
    fracs = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 5))
    terms = draw(st.dictionaries(st.integers(0, cap - 1), fracs, max_size=cap))
    return _tp(R, terms)


@given(_series_polys(), _series_polys(), _series_polys())
def test_tpoly_series_assoc_comm(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


@pytest.mark.parametrize("p,q", [(3, 0), (3, 1), (5, 2)])
def test_quotient_reduction_is_ring_hom_from_series(p, q):
    # polynomial inputs of degree < p in a big-cap series ring over GF(p):
    # reducing after multiplication equals multiplying the reductions.
    Rs = t_series(gf(p), 2 * p)
    Rq = t_quotient(p, q)

    def reduce(v):
        return Rq._reduce([c for c in v])

    import random

    rnd = random.Random(7)
    for _ in range(60):
        f = tuple(rnd.randrange(p) for _ in range(p))
        g = tuple(rnd.randrange(p) for _ in range(p))
        fs, gs = Rs._reduce(list(f)), Rs._reduce(list(g))
        lhs = reduce(list(Rs.mul(fs, gs)))
        rhs = Rq.mul(reduce(list(fs)), reduce(list(gs)))
        assert lhs == rhs


def test_t_power_folding():
    R = t_quotient(3, 1)
    assert R.t_power(3) == R.t_power(1)
    assert R.t_power(4) == R.t_power(2)
    assert R.t_power(5) == R.t_power(3) == (0, 1)
    R0 = t_quotient(3, 0)
    assert R0.t_power(3) == ()


def test_tpoly_coefficients_view():
    R = t_series(QQ, 5)
    f = _tp(R, {0: Fraction(1, 2), 3: Fraction(-2)})
    assert f.coefficients == {0: Fraction(1, 2), 3: Fraction(-2)}

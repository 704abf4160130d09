import itertools
import random
from fractions import Fraction

import pytest

from wittquant.liealg import (
    JacobsonWitt,
    WittAlgebra,
    WPlusAlgebra,
    basic_pair_jw,
    basic_pair_wplus,
)
from wittquant.rings import QQ, binom_int, gf
from wittquant.uea import (
    EnvelopingAlgebra,
    TensorElement,
    UEAElement,
    ad_divided_power,
    antipode0_counit0,
    coproduct0,
    factorial_element,
    pbw_normalize,
    tensor_mul,
    uea_mul,
)


# -- fixtures ---------------------------------------------------------------------


def u31():
    alg = JacobsonWitt(1, 3)
    return EnvelopingAlgebra(alg, gf(3), restricted=True)


def uw_plus(n=1):
    return EnvelopingAlgebra(WPlusAlgebra(n), QQ)


def uwitt(n=1):
    return EnvelopingAlgebra(WittAlgebra(n), QQ)


# -- normalization ------------------------------------------------------------------


def test_pbw_normalize_examples_char0():
    U = uw_plus()
    h, e = basic_pair_wplus(U.alg, QQ, 1)
    hg, eg = next(iter(h.terms)), next(iter(e.terms))
    # e then h rewrites to h*e - e since [e, h] = -e
    got = pbw_normalize(U, [eg, hg])
    assert got == U.gen(hg) * U.gen(eg) - U.gen(eg)
    assert pbw_normalize(U, [hg]) == U.gen(hg)


def test_pbw_normalize_restricted_cube():
    U = u31()
    H = U.alg.basis_symbol((1,), 1)
    assert pbw_normalize(U, [H, H, H]) == U.gen(H)
    D = U.alg.basis_symbol((0,), 1)
    assert not pbw_normalize(U, [D, D, D])


def test_uea_mul_examples():
    U = uw_plus()
    h, e = basic_pair_wplus(U.alg, QQ, 1)
    H, E = U.lift(h), U.lift(e)
    assert uea_mul(H, U.one()) == H
    assert uea_mul(E, H) == H * E - E
    assert (H * E).terms  # already ordered, single monomial
    assert len((H * E).terms) == 1


def _random_word(rng, pool, max_len=5):
    return tuple(rng.choice(pool) for _ in range(rng.randint(1, max_len)))


def _random_normalize(uea, word, rng):
    """Normalize by randomly chosen redexes; independent strategy oracle."""
    state = {tuple(word): 1}
    result = {}
    p = uea.alg.p if uea.restricted else None
    while state:
        w = rng.choice(sorted(state))
        c = state.pop(w)
        if not c:
            continue
        redexes = [("swap", i) for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if p is not None:
            run = 1
            for i in range(1, len(w) + 1):
                if i < len(w) and w[i] == w[i - 1]:
                    run += 1
                else:
                    if run >= p:
                        redexes.append(("cap", i - run))
                    run = 1
        if not redexes:
            m = uea._mono_of_sorted_word(w)
            if m is not None:
                result[m] = result.get(m, 0) + c
            continue
        kind, i = rng.choice(redexes)
        if kind == "swap":
            sw = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
            state[sw] = state.get(sw, 0) + c
            for bd, k in uea.alg.bracket_basis(w[i], w[i + 1]).items():
                w2 = w[:i] + (bd,) + w[i + 2 :]
                state[w2] = state.get(w2, 0) + c * k
        else:
            sub = uea.alg.p_power(w[i])
            if sub is not None:
                w2 = w[:i] + (sub,) + w[i + p :]
                state[w2] = state.get(w2, 0) + c
    return result


def _fold(uea, int_terms):
    rint = uea.ring.from_int
    return {m: rint(c) for m, c in int_terms.items() if rint(c)}


@pytest.mark.parametrize(
    "make,pool_kind,seed",
    [
        (u31, "jw", 11),
        (lambda: uw_plus(2), "wplus", 12),
        (uwitt, "witt", 13),
    ],
)
def test_confluence_random_strategies(make, pool_kind, seed):
    U = make()
    rng = random.Random(seed)
    if pool_kind == "jw":
        pool = U.alg.basis()
    elif pool_kind == "wplus":
        alphas = [a for a in itertools.product(range(3), repeat=U.alg.n) if sum(a) <= 2]
        pool = [U.alg.basis_symbol(a, i) for a in alphas for i in range(1, U.alg.n + 1)]
    else:
        pool = [U.alg.basis_symbol((a,), 1) for a in range(-2, 3)]
    for _ in range(200):
        word = _random_word(rng, pool)
        want = _fold(U, U.normalize_word(word))
        got = _fold(U, _random_normalize(U, word, rng))
        assert got == want, word


# -- standard Hopf structure ----------------------------------------------------------


def test_coproduct0_examples():
    U = uw_plus()
    h, _ = basic_pair_wplus(U.alg, QQ, 1)
    H = U.lift(h)
    assert coproduct0(H) == TensorElement.of(H, U.one()) + TensorElement.of(U.one(), H)
    assert coproduct0(U.one()) == TensorElement.unit(U)

    h2 = factorial_element(H, 0, 2, "falling")  # h(h-1)
    want = (
        TensorElement.of(h2, U.one())
        + TensorElement.of(H, H).scale_int(2)
        + TensorElement.of(U.one(), h2)
    )
    assert coproduct0(h2) == want


def test_antipode0_counit0_examples():
    U = u31()
    g = U.gen(U.alg.basis_symbol((2,), 1))
    s, eps = antipode0_counit0(g)
    assert s == -g and not eps

    UW = uw_plus()
    h, e = basic_pair_wplus(UW.alg, QQ, 1)
    H, E = UW.lift(h), UW.lift(e)
    s, eps = antipode0_counit0(H * E)
    assert s == E * H and s == H * E - E and not eps

    s, eps = antipode0_counit0(UW.one())
    assert s == UW.one() and eps == Fraction(1)


def _random_element(uea, rng, pool, nterms=3, max_exp=2):
    terms = {}
    for _ in range(nterms):
        gens = sorted(rng.sample(pool, rng.randint(1, 2)))
        mono = tuple((g, rng.randint(1, max_exp)) for g in gens)
        terms[mono] = uea.ring.from_int(rng.randint(1, 4))
    return UEAElement(uea, {m: c for m, c in terms.items() if c})


def _delta0_tensor(uea, mono):
    rint = uea.ring.from_int
    return TensorElement(uea, 2, {k: rint(c) for k, c in uea._delta0_mono(mono).items() if rint(c)})


def _s0_elem(uea, mono):
    return uea.antipode0(UEAElement(uea, {mono: uea.ring.one}))


@pytest.mark.parametrize("cfg,seed", [("u31", 21), ("u51", 22), ("wplus", 23)])
def test_coassoc_counit_antipode_on_random_elements(cfg, seed):
    if cfg == "u31":
        U = u31()
        pool = U.alg.basis()
    elif cfg == "u51":
        alg = JacobsonWitt(1, 5)
        U = EnvelopingAlgebra(alg, gf(5), restricted=True)
        pool = alg.basis()
    else:
        U = uw_plus(2)
        alphas = [a for a in itertools.product(range(3), repeat=2) if sum(a) <= 2]
        pool = [U.alg.basis_symbol(a, i) for a in alphas for i in (1, 2)]
    rng = random.Random(seed)
    for _ in range(50):
        x = _random_element(U, rng, pool)
        d = U.coproduct0(x)
        lhs = d.expand_slot(0, lambda m: _delta0_tensor(U, m))
        rhs = d.expand_slot(1, lambda m: _delta0_tensor(U, m))
        assert lhs == rhs
        # counit law
        eps = lambda m: U.ring.one if not m else U.ring.zero
        assert d.contract(0, eps).to_element() == x
        assert d.contract(1, eps).to_element() == x
        # antipode axiom
        want = U.one().scale(U.counit0(x))
        assert d.map_slot(0, lambda m: _s0_elem(U, m)).multiply_out() == want
        assert d.map_slot(1, lambda m: _s0_elem(U, m)).multiply_out() == want


@pytest.mark.parametrize("which", ["wplus", "witt"])
def test_falling_factorial_coproduct_binomial_expansion(which):
    # Delta0 of the falling factorial of a primitive element, with shifts
    if which == "wplus":
        U = uw_plus()
        h, _ = basic_pair_wplus(U.alg, QQ, 1)
        H = U.lift(h)
    else:
        U = uwitt()
        H = U.gen(U.alg.basis_symbol((0,), 1))
    for r in range(0, 7):
        for s in (-2, -1, 0, 1, 2):
            lhs = coproduct0(factorial_element(H, 0, r, "falling"))
            rhs = TensorElement(U, 2, {})
            for i in range(r + 1):
                a = factorial_element(H, -s, i, "falling")
                b = factorial_element(H, s, r - i, "falling")
                rhs = rhs + TensorElement.of(a, b).scale_int(binom_int(r, i))
            assert lhs == rhs, (r, s)


def test_factorial_element_examples():
    U = uw_plus()
    h, _ = basic_pair_wplus(U.alg, QQ, 1)
    H = U.lift(h)
    assert factorial_element(H, 0, 2, "falling") == H * H - H
    assert factorial_element(H, 1, 1, "rising") == H + U.one()
    assert factorial_element(H, Fraction(7, 2), 0, "rising") == U.one()
    assert factorial_element(H, Fraction(7, 2), 0, "falling") == U.one()


def test_ad_divided_power_basics():
    U = u31()
    h, e = basic_pair_jw(U.alg, gf(3), 1)
    x = U.gen(U.alg.basis_symbol((2,), 1))
    assert ad_divided_power(e, 0, x) == x
    # d^(1)(h) = [e, h] = -e
    assert ad_divided_power(e, 1, U.lift(h)) == -U.lift(e)
    with pytest.raises(ValueError):
        ad_divided_power(e, 3, x)  # 1/3! missing in char 3


def test_ad_divided_power_off_direction_vanishes():
    alg = JacobsonWitt(2, 3)
    U = EnvelopingAlgebra(alg, gf(3), restricted=True)
    _, e1 = basic_pair_jw(alg, gf(3), 1)
    h2 = U.gen(alg.basis_symbol((0, 1), 2))
    assert not ad_divided_power(e1, 1, h2)  # i != k kills the correction


@pytest.mark.parametrize("p", [3, 5])
def test_leibniz_expansion_of_divided_ad_powers(p):
    alg = JacobsonWitt(1, p)
    U = EnvelopingAlgebra(alg, gf(p), restricted=True)
    _, e = basic_pair_jw(alg, gf(p), 1)
    gens = [U.gen(b) for b in alg.basis()]
    pairs = [(a, b) for a in gens for b in gens][:9]
    for ell in range(p):
        for a, b in pairs:
            lhs = ad_divided_power(e, ell, a * b)
            rhs = U.zero()
            for l1 in range(ell + 1):
                rhs = rhs + ad_divided_power(e, l1, a) * ad_divided_power(e, ell - l1, b)
            assert lhs == rhs, (ell,)
    # triples, smaller sweep
    trip = gens[:3]
    for ell in range(p):
        for a, b, c in itertools.product(trip, repeat=3):
            lhs = ad_divided_power(e, ell, a * b * c)
            rhs = U.zero()
            for l1 in range(ell + 1):
                for l2 in range(ell - l1 + 1):
                    l3 = ell - l1 - l2
                    rhs = rhs + (
                        ad_divided_power(e, l1, a)
                        * ad_divided_power(e, l2, b)
                        * ad_divided_power(e, l3, c)
                    )
            assert lhs == rhs


@pytest.mark.parametrize(
    "make,pool_kind,seed",
    [
        (u31, "jw", 31),
        (lambda: EnvelopingAlgebra(JacobsonWitt(1, 5), gf(5), restricted=True), "jw", 32),
        (lambda: uw_plus(2), "wplus", 33),
        (uwitt, "witt", 34),
    ],
)
def test_multiplication_is_associative(make, pool_kind, seed):
    U = make()
    rng = random.Random(seed)
    if pool_kind == "jw":
        pool = U.alg.basis()
    elif pool_kind == "wplus":
        alphas = [a for a in itertools.product(range(3), repeat=U.alg.n) if sum(a) <= 2]
        pool = [U.alg.basis_symbol(a, i) for a in alphas for i in range(1, U.alg.n + 1)]
    else:
        pool = [U.alg.basis_symbol((a,), 1) for a in range(-2, 3)]
    for _ in range(40):
        x, y, z = (_random_element(U, rng, pool, nterms=2) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_confluence_long_words():
    alg = JacobsonWitt(1, 5)
    U = EnvelopingAlgebra(alg, gf(5), restricted=True)
    rng = random.Random(41)
    pool = alg.basis()
    for _ in range(60):
        word = tuple(rng.choice(pool) for _ in range(rng.randint(5, 8)))
        want = _fold(U, U.normalize_word(word))
        got = _fold(U, _random_normalize(U, word, rng))
        assert got == want, word


def test_pbw_normalize_rejects_foreign_symbols():
    U = u31()
    other = JacobsonWitt(2, 3)
    with pytest.raises(ValueError):
        U.pbw_normalize([other.basis_symbol((1, 0), 1)])
    UW = uw_plus(1)
    with pytest.raises(ValueError):
        U.pbw_normalize([UW.alg.basis_symbol((1,), 1)])


def test_cross_context_operations_rejected():
    U1, U2 = u31(), u31()  # distinct contexts over the same data
    x = U1.gen(U1.alg.basis_symbol((1,), 1))
    y = U2.gen(U2.alg.basis_symbol((1,), 1))
    with pytest.raises(ValueError):
        U1.mul(x, y)
    with pytest.raises(ValueError):
        x + y
    with pytest.raises(ValueError):
        TensorElement.of(x, x) * TensorElement.of(y, y)


def test_tensor_mul_examples():
    U = uw_plus()
    h, e = basic_pair_wplus(U.alg, QQ, 1)
    H, E = U.lift(h), U.lift(e)
    X = TensorElement.of(H, E)
    assert tensor_mul(TensorElement.unit(U), X) == X
    assert tensor_mul(TensorElement.of(H, U.one()), TensorElement.of(U.one(), E)) == X
    assert tensor_mul(TensorElement.of(U.one(), E), TensorElement.of(H, U.one())) == X


@pytest.mark.parametrize("p,n,seed", [(3, 1, 51), (3, 2, 52), (5, 1, 53)])
def test_uea_reduction_is_a_hopf_algebra_map(p, n, seed):
    # x^a D_i -> a! x^(a) D_i respects products, coproducts, and antipodes
    from wittquant.uea import reduce_element_mod_p, reduce_tensor_mod_p

    rng = random.Random(seed)
    WU = uw_plus(n)
    alg = JacobsonWitt(n, p)
    MU = EnvelopingAlgebra(alg, gf(p), restricted=False)
    alphas = [a for a in itertools.product(range(p + 1), repeat=n)]
    pool = [WU.alg.basis_symbol(a, i) for a in alphas for i in range(1, n + 1)]
    for _ in range(25):
        x = _random_element(WU, rng, pool, nterms=2)
        y = _random_element(WU, rng, pool, nterms=2)
        rx, ry = reduce_element_mod_p(x, MU), reduce_element_mod_p(y, MU)
        assert reduce_element_mod_p(x * y, MU) == rx * ry
        assert reduce_tensor_mod_p(WU.coproduct0(x), MU) == MU.coproduct0(rx)
        assert reduce_element_mod_p(WU.antipode0(x), MU) == MU.antipode0(rx)


def test_restricted_dimension_counts():
    assert sum(1 for _ in u31().enumerate_restricted_basis()) == 27
    alg = JacobsonWitt(1, 5)
    U = EnvelopingAlgebra(alg, gf(5), restricted=True)
    assert sum(1 for _ in U.enumerate_restricted_basis()) == 3125


def test_restricted_mode_validation():
    with pytest.raises(ValueError):
        EnvelopingAlgebra(WPlusAlgebra(1), QQ, restricted=True)
    with pytest.raises(ValueError):
        EnvelopingAlgebra(JacobsonWitt(1, 3), gf(5), restricted=True)

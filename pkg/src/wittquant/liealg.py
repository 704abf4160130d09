"""The three Lie algebras of derivations and the maps between them.

* ``witt``  -- the generalized-Witt algebra W over the rationals, spanned by
  x^alpha * d_j with alpha in Z^n (d_j the degree operator x_j d/dx_j);
* ``wplus`` -- its positive part W+, spanned by x^alpha * D_i with alpha >= 0
  (D_i = d/dx_i on the polynomial ring);
* ``jw``    -- the Jacobson-Witt algebra W(n;1) over GF(p), spanned by divided
  power symbols x^(alpha) * D_i with 0 <= alpha <= tau = (p-1,...,p-1).

Basis symbols are ``BasisDeriv`` named tuples, ordered by (alpha lex, then
derivation index); sparse linear combinations are ``LieElement`` values over a
pluggable coefficient ring from :mod:`wittquant.rings`.  Structure constants
are computed as plain integers and scaled into the ring at the element level.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .rings import QQ, binom_int, gf, multi_factorial

WITT = "witt"
WPLUS = "wplus"
JW = "jw"


class BasisDeriv(NamedTuple):
    """A basis derivation x^alpha d_j / x^alpha D_i / x^(alpha) D_i."""

    flavor: str
    alpha: tuple
    i: int  # 1-based derivation index


def basis_key(b: BasisDeriv):
    """Canonical PBW sort key: alpha lexicographically, then index."""
    return (b.alpha, b.i)


class ReductionError(ValueError):
    """A coefficient cannot be reduced mod p (p divides a cleared denominator)."""


def pairing(d, alpha) -> Fraction:
    """<d, alpha> = sum_i d_i * alpha_i for a derivation vector and an exponent."""
    if len(d) != len(alpha):
        raise ValueError("length mismatch in pairing")
    return sum((Fraction(a) * b for a, b in zip(d, alpha)), Fraction(0))


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub_unit(a, i):
    # a - epsilon_i (i is 1-based)
    return a[: i - 1] + (a[i - 1] - 1,) + a[i:]


def _choose_multi(top, bot) -> int:
    # componentwise binom(top_m, bot_m); zero when any bot_m > top_m >= 0
    out = 1
    for t, b in zip(top, bot):
        out *= binom_int(t, b)
        if out == 0:
            return 0
    return out


class LieAlgebra:
    """Common interface: flavor tag, dimension n, bracket structure constants."""

    flavor = None

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self._bracket_cache = {}

    def basis_symbol(self, alpha, i: int) -> BasisDeriv:
        b = BasisDeriv(self.flavor, tuple(alpha), i)
        self.validate(b)
        return b

    def validate(self, b: BasisDeriv) -> None:
        if b.flavor != self.flavor or len(b.alpha) != self.n:
            raise ValueError(f"symbol {b} does not belong to {self!r}")
        if not 1 <= b.i <= self.n:
            raise ValueError(f"derivation index out of range in {b}")

    def in_range(self, alpha) -> bool:
        """Whether x^alpha exists in this algebra (dropped-term convention)."""
        raise NotImplementedError

    def bracket_basis(self, a: BasisDeriv, b: BasisDeriv) -> dict:
        """[a, b] as a dict BasisDeriv -> integer structure constant."""
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is None:
            hit = self._bracket_impl(a, b)
            self._bracket_cache[key] = hit
        return hit

    def _bracket_impl(self, a, b):
        raise NotImplementedError


class WittAlgebra(LieAlgebra):
    """W = Der of the Laurent polynomial ring; exponents range over Z^n."""

    flavor = WITT

    def in_range(self, alpha) -> bool:
        return True

    def _bracket_impl(self, a, b):
        # [x^a d_i, x^b d_j] = b_i x^(a+b) d_j - a_j x^(a+b) d_i
        s = _vec_add(a.alpha, b.alpha)
        out: dict = {}
        ci = b.alpha[a.i - 1]
        if ci:
            k = BasisDeriv(WITT, s, b.i)
            out[k] = out.get(k, 0) + ci
        cj = a.alpha[b.i - 1]
        if cj:
            k = BasisDeriv(WITT, s, a.i)
            out[k] = out.get(k, 0) - cj
        return {k: v for k, v in out.items() if v}


class WPlusAlgebra(LieAlgebra):
    """W+ = Der of the polynomial ring; exponents are nonnegative."""

    flavor = WPLUS

    def validate(self, b):
        super().validate(b)
        if any(x < 0 for x in b.alpha):
            raise ValueError(f"negative exponent component in {b}")

    def in_range(self, alpha) -> bool:
        return all(x >= 0 for x in alpha)

    def _bracket_impl(self, a, b):
        # [x^a D_i, x^b D_j] = b_i x^(a+b-e_i) D_j - a_j x^(a+b-e_j) D_i
        s = _vec_add(a.alpha, b.alpha)
        out: dict = {}
        ci = b.alpha[a.i - 1]
        if ci:
            e = _vec_sub_unit(s, a.i)
            if self.in_range(e):
                k = BasisDeriv(WPLUS, e, b.i)
                out[k] = out.get(k, 0) + ci
        cj = a.alpha[b.i - 1]
        if cj:
            e = _vec_sub_unit(s, b.i)
            if self.in_range(e):
                k = BasisDeriv(WPLUS, e, a.i)
                out[k] = out.get(k, 0) - cj
        return {k: v for k, v in out.items() if v}


class JacobsonWitt(LieAlgebra):
    """W(n;1) over GF(p): divided power symbols x^(alpha) D_i, 0 <= alpha <= tau."""

    flavor = JW

    def __init__(self, n: int, p: int):
        gf(p)  # validates the prime
        super().__init__(n)
        self.p = p
        self.tau = (p - 1,) * n

    def validate(self, b):
        super().validate(b)
        if not self.in_range(b.alpha):
            raise ValueError(f"exponent of {b} outside [0, {self.p - 1}]^{self.n}")

    def in_range(self, alpha) -> bool:
        return all(0 <= x <= self.p - 1 for x in alpha)

    def basis(self) -> list:
        """All n*p^n basis symbols in canonical order."""
        alphas = itertools.product(range(self.p), repeat=self.n)
        syms = [BasisDeriv(JW, a, i) for a in alphas for i in range(1, self.n + 1)]
        syms.sort(key=basis_key)
        return syms

    def _bracket_impl(self, a, b):
        # [x^(a) D_i, x^(b) D_j]
        #   = C(a+b-e_i, a) x^(a+b-e_i) D_j - C(a+b-e_j, b) x^(a+b-e_j) D_i
        # with C the componentwise binomial; out-of-range targets are dropped.
        p = self.p
        s = _vec_add(a.alpha, b.alpha)
        out: dict = {}
        e = _vec_sub_unit(s, a.i)
        if self.in_range(e):
            c = _choose_multi(e, a.alpha) % p
            if c:
                k = BasisDeriv(JW, e, b.i)
                out[k] = (out.get(k, 0) + c) % p
        e = _vec_sub_unit(s, b.i)
        if self.in_range(e):
            c = _choose_multi(e, b.alpha) % p
            if c:
                k = BasisDeriv(JW, e, a.i)
                out[k] = (out.get(k, 0) - c) % p
        return {k: v for k, v in out.items() if v}

    def p_power(self, b: BasisDeriv) -> Optional[BasisDeriv]:
        """The restricted p-th power of a basis symbol: H_i for H_i, else 0."""
        self.validate(b)
        eps = tuple(1 if j == b.i - 1 else 0 for j in range(self.n))
        return b if b.alpha == eps else None


class LieElement:
    """A sparse linear combination of one flavor's basis derivations."""

    __slots__ = ("alg", "ring", "terms")

    def __init__(self, alg: LieAlgebra, ring, terms: dict):
        self.alg = alg
        self.ring = ring
        self.terms = terms

    @classmethod
    def zero(cls, alg, ring):
        return cls(alg, ring, {})

    @classmethod
    def from_basis(cls, alg, ring, b: BasisDeriv, coeff=None):
        alg.validate(b)
        c = ring.one if coeff is None else coeff
        return cls(alg, ring, {b: c} if c else {})

    def _same(self, other):
        if other.alg is not self.alg or other.ring is not self.ring:
            raise ValueError("elements from different algebras or rings")

    def __add__(self, other):
        self._same(other)
        radd = self.ring.add
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = radd(out.get(k, self.ring.zero), c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LieElement(self.alg, self.ring, out)

    def __sub__(self, other):
        return self + other.scale(self.ring.from_int(-1))

    def scale(self, c):
        if not c:
            return LieElement(self.alg, self.ring, {})
        rmul = self.ring.mul
        out = {}
        for k, v in self.terms.items():
            nv = rmul(v, c)
            if nv:  # the quotient t-ring has zero divisors
                out[k] = nv
        return LieElement(self.alg, self.ring, out)

    def scale_int(self, n: int):
        return self.scale(self.ring.from_int(n))

    def bracket(self, other) -> "LieElement":
        self._same(other)
        ring = self.ring
        out: dict = {}
        radd, rmul, rint = ring.add, ring.mul, ring.from_int
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                cab = rmul(ca, cb)
                if not cab:
                    continue
                for k, m in self.alg.bracket_basis(a, b).items():
                    v = radd(out.get(k, ring.zero), rmul(cab, rint(m)))
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return LieElement(self.alg, self.ring, out)

    def __eq__(self, other):
        return (
            isinstance(other, LieElement)
            and other.alg is self.alg
            and other.ring is self.ring
            and other.terms == self.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "LieElement(0)"
        bits = [f"{c}*{b.flavor}:x{b.alpha}D{b.i}" for b, c in sorted(self.terms.items(), key=lambda t: basis_key(t[0]))]
        return "LieElement(" + " + ".join(bits) + ")"


def bracket_witt(a: BasisDeriv, b: BasisDeriv, alg: WittAlgebra, ring=QQ) -> LieElement:
    """Bracket of two Witt basis symbols as a LieElement."""
    return LieElement.from_basis(alg, ring, a).bracket(LieElement.from_basis(alg, ring, b))


def bracket_wplus(a: BasisDeriv, b: BasisDeriv, alg: WPlusAlgebra, ring=QQ) -> LieElement:
    """Bracket of two W+ basis symbols as a LieElement."""
    return LieElement.from_basis(alg, ring, a).bracket(LieElement.from_basis(alg, ring, b))


def bracket_jw(a: BasisDeriv, b: BasisDeriv, alg: JacobsonWitt, ring=None) -> LieElement:
    """Bracket of two Jacobson-Witt basis symbols as a LieElement over GF(p)."""
    ring = ring if ring is not None else gf(alg.p)
    return LieElement.from_basis(alg, ring, a).bracket(LieElement.from_basis(alg, ring, b))


def p_power_basis(b: BasisDeriv, alg: JacobsonWitt, ring=None) -> LieElement:
    """The restricted p-power of a basis symbol, as a LieElement."""
    ring = ring if ring is not None else gf(alg.p)
    target = alg.p_power(b)
    if target is None:
        return LieElement.zero(alg, ring)
    return LieElement.from_basis(alg, ring, target)


def witt_deriv(alg: WittAlgebra, ring, alpha, dvec) -> LieElement:
    """The general derivation x^alpha * sum_j dvec_j d_j, expanded over the basis."""
    alpha = tuple(alpha)
    terms = {}
    for j, c in enumerate(dvec, start=1):
        fr = Fraction(c)
        if fr:
            terms[BasisDeriv(WITT, alpha, j)] = from_fraction(ring, fr)
    return LieElement(alg, ring, {k: v for k, v in terms.items() if v})


def from_fraction(ring, fr: Fraction):
    """Embed an exact rational into a coefficient ring (mod p where applicable)."""
    if ring is QQ:
        return fr
    char = ring.char
    if char == 0:
        # t-ring over the rationals
        return ring.scalar(fr)
    if fr.denominator % char == 0:
        raise ReductionError(f"denominator of {fr} not invertible mod {char}")
    base = getattr(ring, "base", ring)
    c = fr.numerator * pow(fr.denominator, char - 2, char) % char
    if base is ring:
        return c
    return ring.scalar(c)


def reduce_wplus_to_jw(x: LieElement, p: int, target: JacobsonWitt = None, ring=None) -> LieElement:
    """Two-step reduction W+_Q -> W(n;1): c*x^a D_i -> (c * a! mod p) x^(a) D_i.

    Terms whose exponent has a component >= p are killed.  Raises
    ``ReductionError`` when a cleared coefficient has a p-divisible denominator.
    """
    if x.alg.flavor != WPLUS:
        raise ValueError("reduction applies to W+ elements")
    alg = target if target is not None else JacobsonWitt(x.alg.n, p)
    ring = ring if ring is not None else gf(p)
    out: dict = {}
    radd = ring.add
    for b, c in x.terms.items():
        if not all(a <= p - 1 for a in b.alpha):
            continue
        fr = c * multi_factorial(b.alpha) if isinstance(c, Fraction) else Fraction(c) * multi_factorial(b.alpha)
        v = from_fraction(ring, fr)
        if not v:
            continue
        k = BasisDeriv(JW, b.alpha, b.i)
        nv = radd(out.get(k, ring.zero), v)
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return LieElement(alg, ring, out)


@dataclass(frozen=True)
class RMatrixData:
    """Triangular r-matrix data (d0, d0p, gamma) with <d0, gamma> != 0.

    The derived pair h = <d0,gamma>^(-1) d0 and e = <d0,gamma> x^gamma d0p
    satisfies [h, e] = e; this is checked at construction.
    """

    d0: tuple
    d0p: tuple
    gamma: tuple
    pairing_value: Fraction = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "d0", tuple(Fraction(c) for c in self.d0))
        object.__setattr__(self, "d0p", tuple(Fraction(c) for c in self.d0p))
        object.__setattr__(self, "gamma", tuple(int(g) for g in self.gamma))
        pv = pairing(self.d0, self.gamma)
        if self.pairing_value is not None and Fraction(self.pairing_value) != pv:
            raise ValueError(f"declared pairing value {self.pairing_value} != <d0,gamma> = {pv}")
        object.__setattr__(self, "pairing_value", pv)
        if not pv:
            raise ValueError("<d0, gamma> must be nonzero")
        alg = WittAlgebra(len(self.gamma))
        h, e = self.h_element(alg, QQ), self.e_element(alg, QQ)
        if h.bracket(e) != e:
            raise ValueError("r-matrix data does not satisfy [h, e] = e")

    @property
    def n(self) -> int:
        return len(self.gamma)

    def h_element(self, alg: WittAlgebra, ring) -> LieElement:
        inv = 1 / self.pairing_value
        return witt_deriv(alg, ring, (0,) * self.n, tuple(inv * c for c in self.d0))

    def e_element(self, alg: WittAlgebra, ring) -> LieElement:
        return witt_deriv(alg, ring, self.gamma, tuple(self.pairing_value * c for c in self.d0p))


def basic_pair_wplus(alg: WPlusAlgebra, ring, k: int):
    """The distinguished pair h(k) = x^{e_k} D_k, e(k) = x^{2e_k} D_k in W+."""
    eps = tuple(1 if j == k - 1 else 0 for j in range(alg.n))
    two = tuple(2 if j == k - 1 else 0 for j in range(alg.n))
    h = LieElement.from_basis(alg, ring, BasisDeriv(WPLUS, eps, k))
    e = LieElement.from_basis(alg, ring, BasisDeriv(WPLUS, two, k))
    return h, e


def basic_pair_jw(alg: JacobsonWitt, ring, k: int):
    """The distinguished pair h(k) = x^(e_k) D_k, e(k) = 2 x^(2e_k) D_k in W(n;1)."""
    eps = tuple(1 if j == k - 1 else 0 for j in range(alg.n))
    two = tuple(2 if j == k - 1 else 0 for j in range(alg.n))
    h = LieElement.from_basis(alg, ring, BasisDeriv(JW, eps, k))
    e = LieElement.from_basis(alg, ring, BasisDeriv(JW, two, k)).scale_int(2)
    return h, e

"""Drinfeld twists and the deformed coproduct/antipode/counit they induce.

Four settings share one code path, differing only in the ambient enveloping
algebra and in the coefficient sequence attached to each twist direction:

* ``char0``    -- U(W)[[t]] over the rationals, one direction built from
  triangular r-matrix data (d0, d0p, gamma); coefficients (A_l, B_l).
* ``integral`` -- the integral form U(W+)[[t]] with the basic direction
  h(k) = x^{e_k} D_k, e(k) = x^{2e_k} D_k; integer coefficients
  C_l = A_l - B_l.
* ``modular``  -- the restricted algebra u(W(n;1)) over GF(p)[t]/(t^p - q t),
  directions selected by eta in {0,1}^n with h(k) = x^(e_k) D_k and
  e(k) = 2 x^(2e_k) D_k; mod-p coefficients Cbar_l.
* ``modular-u`` -- the same coefficients over the unrestricted U(W(n;1)) with
  a truncated series ring, used to exercise the reduction chain.

Every twist is a product of basic one-direction twists

    forward_a = sum_r (-1)^r/r! h_a^[r] (x) e^r t^r,
    inverse_a = sum_r  1/r!    h_a^<r> (x) e^r t^r,

taken in ascending direction order (basic twists in distinct directions
commute).  The closed-form deformed maps are checked against conjugation by
the twist itself via :meth:`QuantizedHopf.conjugation_oracle`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .liealg import (
    WITT,
    BasisDeriv,
    JacobsonWitt,
    RMatrixData,
    WittAlgebra,
    WPlusAlgebra,
    basic_pair_jw,
    basic_pair_wplus,
    from_fraction,
    pairing,
)
from .rings import QQ, binom_int, gf, t_quotient, t_series
from .uea import EnvelopingAlgebra, TensorElement, UEAElement


class NonIntegralExponentError(ValueError):
    """The (1-et)-exponent <d0,alpha>/<d0,gamma> is not an integer."""


@dataclass(frozen=True)
class TwistCoefficients:
    """The scalar sequence attached to one twist direction at order ell.

    For a basic direction k acting on x^alpha D_i (write a = alpha_k and
    d = delta_ik):

        A = (1/ell!) prod_{j<ell} (a - d + j),     B = d * A_{ell-1},
        C = A - B                                  (all integers),

    and, when p is given, the mod-p companions carrying the factorial lift of
    the divided-power identification:

        Abar = ell! * binom(a + ell, ell) * A  (mod p),   likewise Bbar,
        Cbar = Abar - Bbar  (mod p).
    """

    A: Fraction
    B: Fraction
    C: Fraction
    p: int | None = None
    Abar: int | None = None
    Bbar: int | None = None
    Cbar: int | None = None

    def __post_init__(self):
        if self.C != self.A - self.B:
            raise ValueError("C must equal A - B")
        if self.p is not None and self.Cbar != (self.Abar - self.Bbar) % self.p:
            raise ValueError("Cbar must equal Abar - Bbar mod p")

    @classmethod
    def basic(cls, ak: int, dik: int, ell: int, p: int | None = None) -> "TwistCoefficients":
        A = Fraction(1)
        for j in range(ell):
            A *= ak - dik + j
        A /= math.factorial(ell)
        if ell:
            B = Fraction(dik)
            for j in range(ell - 1):
                B *= ak - dik + j
            B /= math.factorial(ell - 1)
        else:
            B = Fraction(0)
        if p is None:
            return cls(A, B, A - B)
        lift = math.factorial(ell) * binom_int(ak + ell, ell)
        Abar, Bbar = lift * A, lift * B
        if Abar.denominator != 1 or Bbar.denominator != 1:
            raise ValueError("lifted coefficients must be integers")
        Abar, Bbar = int(Abar) % p, int(Bbar) % p
        return cls(A, B, A - B, p, Abar, Bbar, (Abar - Bbar) % p)


@dataclass(frozen=True)
class TwistElement:
    """A Drinfeld twist with its inverse, both truncated tensor elements."""

    selector: object  # RMatrixData or eta tuple
    shift: object
    forward: TensorElement
    inverse: TensorElement
    cap: int

    def validate(self):
        uea = self.forward.uea
        unit = TensorElement.unit(uea)
        if self.forward * self.inverse != unit or self.inverse * self.forward != unit:
            raise ValueError("twist inverse does not invert the twist")
        eps = lambda m: uea.ring.one if not m else uea.ring.zero
        one = uea.one()
        # the counit law in the left slot only holds for the unshifted twist:
        # (eps0 (x) Id) forward_a = (1 - et)^a
        slots = (0, 1) if not self.shift else (1,)
        for slot in slots:
            if self.forward.contract(slot, eps).to_element() != one:
                raise ValueError("twist fails the counit condition")
        return self


@dataclass(frozen=True)
class TwistorPair:
    """The antipode twistors u_a = m(S0 (x) Id)(inverse), v_a = m(Id (x) S0)(forward)."""

    u_elem: UEAElement
    v_elem: UEAElement


class QuantizedHopf:
    """A quantization context: ambient enveloping algebra + twist directions.

    Provides the closed-form deformed coproduct, antipode and counit on basis
    symbols, their multiplicative/anti-multiplicative extensions to arbitrary
    elements, the twist and twistor constructions, and the brute-force
    conjugation oracle the closed forms are tested against.
    """

    def __init__(self, kind: str, uea: EnvelopingAlgebra, directions, cap: int, *, rmatrix=None, eta=None, q=None):
        self.kind = kind
        self.uea = uea
        self.directions = list(directions)  # list of (k, h, e); k None for char0
        self.cap = cap
        self.rmatrix = rmatrix
        self.eta = eta
        self.q = q
        self._f_pow_cache: dict = {}
        self._h_fact_cache: dict = {}
        self._e_pow_cache: dict = {}
        self._delta_basis_cache: dict = {}
        self._antipode_basis_cache: dict = {}
        self._delta_mono_cache: dict = {}
        self._antipode_mono_cache: dict = {}
        self._twist_cache: dict = {}
        self._twistor_cache: dict = {}

    # -- direction data -------------------------------------------------------------

    def _h_factorial(self, d: int, a, ell: int, kind: str) -> UEAElement:
        key = (d, a, ell, kind)
        hit = self._h_fact_cache.get(key)
        if hit is None:
            hit = self.uea.factorial_element(self.directions[d][1], a, ell, kind)
            self._h_fact_cache[key] = hit
        return hit

    def _e_power(self, d: int, j: int) -> UEAElement:
        key = (d, j)
        hit = self._e_pow_cache.get(key)
        if hit is None:
            hit = self.uea.power(self.directions[d][2], j)
            self._e_pow_cache[key] = hit
        return hit

    def one_minus_et_power(self, d: int, m: int) -> UEAElement:
        """(1 - e_d t)^m, via binomials for m >= 0, geometric powers for m < 0."""
        key = (d, m)
        hit = self._f_pow_cache.get(key)
        if hit is not None:
            return hit
        uea, ring = self.uea, self.uea.ring
        jmax = self.cap - 1
        if m >= 0:
            out = uea.zero()
            for j in range(0, min(m, jmax) + 1):
                c = binom_int(m, j) * (-1) ** j
                out = out + self._e_power(d, j).scale(ring.mul(ring.from_int(c), ring.t_power(j)))
        else:
            geo = uea.zero()
            for j in range(0, jmax + 1):
                geo = geo + self._e_power(d, j).scale(ring.t_power(j))
            out = uea.power(geo, -m)
        self._f_pow_cache[key] = out
        return out

    # -- per-setting coefficient machinery ---------------------------------------------

    def _ell_cap(self) -> int:
        if self.kind in ("modular", "modular-u"):
            return self.uea.alg.p
        return self.cap

    def _exponent(self, d: int, bd: BasisDeriv):
        """The (1 - e_d t)-exponent of the undeformed tensor factor for bd."""
        if self.kind == "char0":
            r = self.rmatrix.pairing_value
            val = pairing(self.rmatrix.d0, bd.alpha) / r
            if val.denominator != 1:
                raise NonIntegralExponentError(
                    f"<d0,{bd.alpha}>/<d0,gamma> = {val} is not an integer"
                )
            return int(val)
        k = self.directions[d][0]
        return bd.alpha[k - 1] - (1 if bd.i == k else 0)

    def _char0_A(self, alpha, ell: int) -> Fraction:
        r = self.rmatrix.pairing_value
        prod = Fraction(1)
        for j in range(ell):
            shifted = tuple(a + j * g for a, g in zip(alpha, self.rmatrix.gamma))
            prod *= pairing(self.rmatrix.d0p, shifted)
        return r**ell / math.factorial(ell) * prod

    def _integral_C(self, ak: int, dik: int, ell: int) -> Fraction:
        return TwistCoefficients.basic(ak, dik, ell).C

    def _modular_C(self, ak: int, dik: int, ell: int) -> int:
        return TwistCoefficients.basic(ak, dik, ell, self.uea.alg.p).Cbar

    def _raised(self, bd: BasisDeriv, ell) -> UEAElement | None:
        """The ell-fold raised element with its coefficient sequence folded in."""
        uea, ring = self.uea, self.uea.ring
        if self.kind == "char0":
            # x^{alpha + l*gamma} (A_l d - B_l d0p) with d the derivation of bd
            (l,) = ell
            alpha = tuple(a + l * g for a, g in zip(bd.alpha, self.rmatrix.gamma))
            A = self._char0_A(bd.alpha, l)
            if l:
                gamma_i = self.rmatrix.gamma[bd.i - 1]
                B = self.rmatrix.pairing_value * gamma_i * self._char0_A(bd.alpha, l - 1)
            else:
                B = Fraction(0)
            terms: dict = {}
            if A:
                key = ((BasisDeriv(WITT, alpha, bd.i), 1),)
                terms[key] = from_fraction(ring, A)
            if B:
                for j, c in enumerate(self.rmatrix.d0p, start=1):
                    if c:
                        key = ((BasisDeriv(WITT, alpha, j), 1),)
                        cur = terms.get(key, ring.zero)
                        v = ring.sub(cur, from_fraction(ring, B * c))
                        if v:
                            terms[key] = v
                        else:
                            terms.pop(key, None)
            return UEAElement(uea, terms)
        # basic directions: scalar coefficient, shifted exponent
        alpha = list(bd.alpha)
        coeff_q = Fraction(1)
        coeff_int = 1
        for d, l in zip(range(len(self.directions)), ell):
            if not l:
                continue
            k = self.directions[d][0]
            ak, dik = bd.alpha[k - 1], 1 if bd.i == k else 0
            if self.kind == "integral":
                coeff_q *= self._integral_C(ak, dik, l)
            else:
                coeff_int = coeff_int * self._modular_C(ak, dik, l)
            alpha[k - 1] += l
        alpha = tuple(alpha)
        if not self.uea.alg.in_range(alpha):
            return None
        if self.kind == "integral":
            if not coeff_q:
                return None
            return uea.gen(BasisDeriv(bd.flavor, alpha, bd.i), from_fraction(ring, coeff_q))
        c = ring.from_int(coeff_int)
        if not c:
            return None
        return uea.gen(BasisDeriv(bd.flavor, alpha, bd.i), c)

    # -- closed-form deformed structure maps ---------------------------------------------

    def delta_basis(self, bd: BasisDeriv) -> TensorElement:
        """The deformed coproduct of a basis symbol, in closed form."""
        hit = self._delta_basis_cache.get(bd)
        if hit is not None:
            return hit
        uea, ring = self.uea, self.uea.ring
        X = uea.gen(bd)
        right = uea.one()
        for d in range(len(self.directions)):
            right = right * self.one_minus_et_power(d, self._exponent(d, bd))
        out = TensorElement.of(X, right)
        lcap = self._ell_cap()
        for ell in itertools.product(range(lcap), repeat=len(self.directions)):
            tot = sum(ell)
            tpow = ring.t_power(tot)
            if not tpow:
                continue  # truncated away in series mode
            raised = self._raised(bd, ell)
            if raised is None or not raised:
                continue
            left = uea.one()
            invpow = uea.one()
            for d, l in zip(range(len(self.directions)), ell):
                if l:
                    left = left * self._h_factorial(d, 0, l, "rising")
                    invpow = invpow * self.one_minus_et_power(d, -l)
            piece = (invpow * raised).scale(tpow)
            sign = -1 if tot % 2 else 1
            out = out + TensorElement.of(left, piece).scale_int(sign)
        self._delta_basis_cache[bd] = out
        return out

    def antipode_basis(self, bd: BasisDeriv) -> UEAElement:
        """The deformed antipode of a basis symbol, in closed form."""
        hit = self._antipode_basis_cache.get(bd)
        if hit is not None:
            return hit
        uea, ring = self.uea, self.uea.ring
        pre = uea.one()
        for d in range(len(self.directions)):
            pre = pre * self.one_minus_et_power(d, -self._exponent(d, bd))
        acc = uea.zero()
        lcap = self._ell_cap()
        for ell in itertools.product(range(lcap), repeat=len(self.directions)):
            tot = sum(ell)
            tpow = ring.t_power(tot)
            if not tpow:
                continue
            raised = self._raised(bd, ell)
            if raised is None or not raised:
                continue
            piece = raised
            for d, l in zip(range(len(self.directions)), ell):
                if l:
                    piece = piece * self._h_factorial(d, 1, l, "rising")
            acc = acc + piece.scale(tpow)
        out = (pre * acc).scale_int(-1)
        self._antipode_basis_cache[bd] = out
        return out

    def counit_basis(self, bd: BasisDeriv):
        return self.uea.ring.zero

    # -- extensions to arbitrary elements ---------------------------------------------

    def delta_mono(self, mono) -> TensorElement:
        hit = self._delta_mono_cache.get(mono)
        if hit is None:
            hit = TensorElement.unit(self.uea)
            for bd, e in mono:
                db = self.delta_basis(bd)
                for _ in range(e):
                    hit = hit * db
            self._delta_mono_cache[mono] = hit
        return hit

    def delta(self, x: UEAElement) -> TensorElement:
        """Multiplicative extension of the deformed coproduct."""
        out = TensorElement(self.uea, 2, {})
        for mono, c in x.terms.items():
            out = out + self.delta_mono(mono).scale(c)
        return out

    def antipode_mono(self, mono) -> UEAElement:
        hit = self._antipode_mono_cache.get(mono)
        if hit is None:
            hit = self.uea.one()
            for bd, e in mono:
                sb = self.antipode_basis(bd)
                for _ in range(e):
                    hit = self.uea.mul(sb, hit)  # anti-homomorphism: reverse order
            self._antipode_mono_cache[mono] = hit
        return hit

    def antipode(self, x: UEAElement) -> UEAElement:
        """Anti-multiplicative extension of the deformed antipode."""
        out = self.uea.zero()
        for mono, c in x.terms.items():
            out = out + self.antipode_mono(mono).scale(c)
        return out

    def counit(self, x: UEAElement):
        """The deformed counit: kills every generator, keeps scalars."""
        return x.terms.get((), self.uea.ring.zero)

    # -- twists and twistors --------------------------------------------------------------

    def _basic_twist_slot(self, d: int, a, forward: bool) -> TensorElement:
        uea, ring = self.uea, self.uea.ring
        out = TensorElement(uea, 2, {})
        for r in range(self.cap):
            if forward:
                num = Fraction((-1) ** r, math.factorial(r))
                hpart = self._h_factorial(d, a, r, "falling")
            else:
                num = Fraction(1, math.factorial(r))
                hpart = self._h_factorial(d, a, r, "rising")
            if ring.char and num.denominator % ring.char == 0:
                raise ValueError(f"1/{r}! does not exist in characteristic {ring.char}")
            c = ring.mul(from_fraction(ring, num), ring.t_power(r))
            if not c:
                continue
            out = out + TensorElement.of(hpart, self._e_power(d, r)).scale(c)
        return out

    def basic_twist_factor(self, d: int, a=0, forward: bool = True) -> TensorElement:
        """The single-direction twist factor for direction index d."""
        return self._basic_twist_slot(d, self.uea.coerce_scalar(a), forward)

    def build_twist(self, a=0) -> TwistElement:
        """The twist (product of basic twists, ascending direction) and its inverse."""
        if self.cap < 1:
            raise ValueError("cap must be >= 1")
        if not self.directions:
            raise ValueError("at least one twist direction is required (eta != 0)")
        a = self.uea.coerce_scalar(a)
        hit = self._twist_cache
        if a in hit:
            return hit[a]
        fwd = TensorElement.unit(self.uea)
        inv = TensorElement.unit(self.uea)
        for d in range(len(self.directions)):
            fwd = fwd * self._basic_twist_slot(d, a, forward=True)
            inv = inv * self._basic_twist_slot(d, a, forward=False)
        tw = TwistElement(self.rmatrix if self.kind == "char0" else self.eta, a, fwd, inv, self.cap)
        tw.validate()
        hit[a] = tw
        return tw

    def antipode_twistors(self, a=0) -> TwistorPair:
        """u_a and v_a, the antipode twistors of the twist with shift a."""
        uea, ring = self.uea, self.uea.ring
        a = uea.coerce_scalar(a)
        hit = self._twistor_cache
        if a in hit:
            return hit[a]
        neg_a = ring.neg(a)
        u = uea.one()
        v = uea.one()
        for d in range(len(self.directions)):
            ud = uea.zero()
            vd = uea.zero()
            for r in range(self.cap):
                num = Fraction((-1) ** r, math.factorial(r))
                cu = ring.mul(from_fraction(ring, num), ring.t_power(r))
                cv = ring.mul(from_fraction(ring, Fraction(1, math.factorial(r))), ring.t_power(r))
                er = self._e_power(d, r)
                if cu:
                    ud = ud + (self._h_factorial(d, neg_a, r, "falling") * er).scale(cu)
                if cv:
                    vd = vd + (self._h_factorial(d, a, r, "falling") * er).scale(cv)
            u = u * ud
            v = v * vd
        pair = TwistorPair(u_elem=u, v_elem=v)
        if not a and v * u != uea.one():
            raise ValueError("antipode twistors fail v0 * u0 = 1")
        hit[a] = pair
        return pair

    # -- conjugation oracle ------------------------------------------------------------------

    def conjugation_oracle(self, x: UEAElement):
        """(F Delta0(x) F^{-1}, w S0(x) w^{-1}) by brute multiplication, w = v_0."""
        tw = self.build_twist(0)
        pair = self.antipode_twistors(0)
        d0 = self.uea.coproduct0(x)
        delta = tw.forward * d0 * tw.inverse
        s = pair.v_elem * self.uea.antipode0(x) * pair.u_elem
        return delta, s


# -- setting factories ---------------------------------------------------------------------


def char0_general(rmatrix: RMatrixData, cap: int = 5) -> QuantizedHopf:
    """Quantized U(W)[[t]] (truncated at t^cap) from triangular r-matrix data."""
    alg = WittAlgebra(rmatrix.n)
    ring = t_series(QQ, cap)
    uea = EnvelopingAlgebra(alg, ring)
    h = uea.lift(rmatrix.h_element(alg, ring))
    e = uea.lift(rmatrix.e_element(alg, ring))
    return QuantizedHopf("char0", uea, [(None, h, e)], cap, rmatrix=rmatrix)


def integral_eta(eta, n: int, cap: int = 5) -> QuantizedHopf:
    """The integral form of U(W+)[[t]] deformed along the directions selected by eta."""
    eta = tuple(int(bool(x)) for x in eta)
    if len(eta) != n or not any(eta):
        raise ValueError("eta must be a nonzero 0/1 vector of length n")
    alg = WPlusAlgebra(n)
    ring = t_series(QQ, cap)
    uea = EnvelopingAlgebra(alg, ring)
    dirs = []
    for k in range(1, n + 1):
        if eta[k - 1]:
            h, e = basic_pair_wplus(alg, ring, k)
            dirs.append((k, uea.lift(h), uea.lift(e)))
    return QuantizedHopf("integral", uea, dirs, cap, eta=eta)


def integral_basic(k: int, n: int, cap: int = 5) -> QuantizedHopf:
    """The integral form of U(W+)[[t]] deformed along the basic direction k."""
    return integral_eta(tuple(1 if j == k - 1 else 0 for j in range(n)), n, cap)


def modular(p: int, n: int, eta, q: int = 0) -> QuantizedHopf:
    """The restricted quantization u_{t,q}(W(n;1)) for a direction selector eta."""
    eta = tuple(int(bool(x)) for x in eta)
    if len(eta) != n or not any(eta):
        raise ValueError("eta must be a nonzero 0/1 vector of length n")
    alg = JacobsonWitt(n, p)
    ring = t_quotient(p, q)
    uea = EnvelopingAlgebra(alg, ring, restricted=True)
    dirs = []
    for k in range(1, n + 1):
        if eta[k - 1]:
            h, e = basic_pair_jw(alg, ring, k)
            dirs.append((k, uea.lift(h), uea.lift(e)))
    return QuantizedHopf("modular", uea, dirs, p, eta=eta, q=q % p)


def modular_unrestricted(p: int, n: int, eta, cap: int) -> QuantizedHopf:
    """Same coefficients over the unrestricted U(W(n;1)) with a series ring."""
    eta = tuple(int(bool(x)) for x in eta)
    if len(eta) != n or not any(eta):
        raise ValueError("eta must be a nonzero 0/1 vector of length n")
    alg = JacobsonWitt(n, p)
    ring = t_series(gf(p), cap)
    uea = EnvelopingAlgebra(alg, ring, restricted=False)
    dirs = []
    for k in range(1, n + 1):
        if eta[k - 1]:
            h, e = basic_pair_jw(alg, ring, k)
            dirs.append((k, uea.lift(h), uea.lift(e)))
    return QuantizedHopf("modular-u", uea, dirs, cap, eta=eta)


# -- module-level operation wrappers ----------------------------------------------------------


def build_twist(hopf: QuantizedHopf, a=0) -> TwistElement:
    return hopf.build_twist(a)


def antipode_twistors(hopf: QuantizedHopf, a=0) -> TwistorPair:
    return hopf.antipode_twistors(a)


def one_minus_et_power(hopf: QuantizedHopf, k: int, m: int) -> UEAElement:
    """(1 - e(k) t)^m in hopf's ambient algebra (k indexes hopf.directions)."""
    return hopf.one_minus_et_power(k, m)


def quantized_coproduct(hopf: QuantizedHopf, bd: BasisDeriv) -> TensorElement:
    return hopf.delta_basis(bd)


def quantized_antipode(hopf: QuantizedHopf, bd: BasisDeriv) -> UEAElement:
    return hopf.antipode_basis(bd)


def conjugation_oracle(hopf: QuantizedHopf, x: UEAElement):
    return hopf.conjugation_oracle(x)

"""Enveloping-algebra arithmetic over the Witt-type Lie algebras.

Elements are sparse combinations of PBW monomials: ordered products of basis
derivations with positive exponents, strictly increasing in the canonical
order (exponent vector lexicographically, then derivation index).  Words are
normalized by the rewriting

    y x  ->  x y + [y, x]          (y > x),

and, in restricted mode, by replacing p-th powers with the restricted p-power
of the generator (H_i^p -> H_i, all other basis p-th powers -> 0).  The result
is independent of the rewriting order; the test suite exercises randomized
strategies against this implementation.

Tensor powers of the algebra (used for coproducts and twists) share the same
monomial keys, one per slot.  All coefficient arithmetic goes through the ring
descriptors of :mod:`wittquant.rings`; structure constants stay integers until
they are folded into ring values at the element level.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .liealg import JW, BasisDeriv, LieAlgebra, LieElement, from_fraction
from .rings import binom_int, multi_factorial


class EnvelopingAlgebra:
    """Context object: Lie algebra + coefficient ring + Free/Restricted mode.

    Holds the normalization and coalgebra caches; elements are cheap handles
    onto it.  Restricted mode requires the Jacobson-Witt flavor and a ring of
    matching characteristic.
    """

    def __init__(self, alg: LieAlgebra, ring, restricted: bool = False):
        if restricted:
            if alg.flavor != JW:
                raise ValueError("restricted mode requires the Jacobson-Witt flavor")
            if ring.char != alg.p:
                raise ValueError("restricted mode needs a ring of characteristic p")
        self.alg = alg
        self.ring = ring
        self.restricted = restricted
        # memo caches; per-context, results never depend on fill order
        self._mono_mul_cache: dict = {}
        self._delta0_cache: dict = {}
        self._antipode0_cache: dict = {}

    # -- element constructors -------------------------------------------------

    def zero(self) -> "UEAElement":
        return UEAElement(self, {})

    def one(self) -> "UEAElement":
        return UEAElement(self, {(): self.ring.one})

    def gen(self, b: BasisDeriv, coeff=None) -> "UEAElement":
        self.alg.validate(b)
        c = self.ring.one if coeff is None else coeff
        return UEAElement(self, {((b, 1),): c} if c else {})

    def element(self, terms: dict) -> "UEAElement":
        return UEAElement(self, {m: c for m, c in terms.items() if c})

    def lift(self, x: LieElement) -> "UEAElement":
        """Embed a Lie element as a degree-one element of the enveloping algebra."""
        if x.alg is not self.alg and x.alg.flavor != self.alg.flavor:
            raise ValueError("Lie element from a different algebra")
        return UEAElement(self, {((b, 1),): c for b, c in x.terms.items()})

    def scalar(self, c) -> "UEAElement":
        return UEAElement(self, {(): c} if c else {})

    # -- normalization core ----------------------------------------------------

    def _mono_of_sorted_word(self, word):
        """Group a sorted word into a monomial; None when it dies in u."""
        mono = []
        for bd, grp in itertools.groupby(word):
            e = len(tuple(grp))
            if self.restricted:
                p = self.alg.p
                while e >= p:
                    if self.alg.p_power(bd) is None:
                        return None
                    e -= p - 1  # H^p -> H
            if e:
                mono.append((bd, e))
        return tuple(mono)

    def normalize_word(self, word) -> dict:
        """Normal form of a product of basis symbols: dict mono -> int coeff."""
        word = tuple(word)
        out: dict = {}
        work = {word: 1}
        while work:
            w, c = work.popitem()
            idx = -1
            for t in range(len(w) - 1):
                if w[t] > w[t + 1]:
                    idx = t
                    break
            if idx < 0:
                m = self._mono_of_sorted_word(w)
                if m is not None:
                    out[m] = out.get(m, 0) + c
                continue
            swapped = w[:idx] + (w[idx + 1], w[idx]) + w[idx + 2 :]
            work[swapped] = work.get(swapped, 0) + c
            if not work[swapped]:
                del work[swapped]
            for bd, k in self.alg.bracket_basis(w[idx], w[idx + 1]).items():
                w2 = w[:idx] + (bd,) + w[idx + 2 :]
                work[w2] = work.get(w2, 0) + c * k
                if not work[w2]:
                    del work[w2]
        return {m: c for m, c in out.items() if c}

    @staticmethod
    def _expand(mono):
        word = []
        for bd, e in mono:
            word.extend([bd] * e)
        return tuple(word)

    def mono_mul(self, m1, m2) -> dict:
        """Normalized product of two PBW monomials: dict mono -> int coeff."""
        if not m1:
            return {m2: 1}
        if not m2:
            return {m1: 1}
        key = (m1, m2)
        hit = self._mono_mul_cache.get(key)
        if hit is not None:
            return hit
        last, first = m1[-1][0], m2[0][0]
        if last < first:
            out = {m1 + m2: 1}
        elif last == first:
            e = m1[-1][1] + m2[0][1]
            merged = None
            if self.restricted:
                p = self.alg.p
                dead = False
                while e >= p:
                    if self.alg.p_power(last) is None:
                        dead = True
                        break
                    e -= p - 1
                if dead:
                    merged = {}
            if merged is None:
                mid = ((last, e),) if e else ()
                merged = {m1[:-1] + mid + m2[1:]: 1}
            out = merged
        else:
            out = self.normalize_word(self._expand(m1) + self._expand(m2))
        self._mono_mul_cache[key] = out
        return out

    def pbw_normalize(self, word) -> "UEAElement":
        """Normalize a word of basis symbols into an element."""
        word = tuple(word)
        for bd in word:
            self.alg.validate(bd)
        rint = self.ring.from_int
        return UEAElement(self, {m: rint(c) for m, c in self.normalize_word(word).items() if rint(c)})

    # -- products ----------------------------------------------------------------

    def mul(self, x: "UEAElement", y: "UEAElement") -> "UEAElement":
        self._check(x)
        self._check(y)
        ring = self.ring
        radd, rmul, rint, zero = ring.add, ring.mul, ring.from_int, ring.zero
        out: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                c = rmul(c1, c2)
                if not c:
                    continue
                for m, k in self.mono_mul(m1, m2).items():
                    v = c if k == 1 else rmul(c, rint(k))
                    if not v:
                        continue
                    nv = radd(out.get(m, zero), v)
                    if nv:
                        out[m] = nv
                    else:
                        del out[m]
        return UEAElement(self, out)

    def power(self, x: "UEAElement", k: int) -> "UEAElement":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = self.one()
        base = x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base_needed = k >> 1
            if base_needed:
                base = self.mul(base, base)
            k = base_needed
        return out

    def _check(self, x):
        if x.uea is not self:
            raise ValueError("element belongs to a different enveloping algebra")

    # -- standard Hopf structure ---------------------------------------------------

    def _delta0_mono(self, mono) -> dict:
        hit = self._delta0_cache.get(mono)
        if hit is not None:
            return hit
        result = {((), ()): 1}
        for bd, e in mono:
            new: dict = {}
            for (a, b), c in result.items():
                for j in range(e + 1):
                    co = c * binom_int(e, j)
                    ka = a + ((bd, j),) if j else a
                    kb = b + ((bd, e - j),) if e - j else b
                    new[(ka, kb)] = new.get((ka, kb), 0) + co
            result = new
        self._delta0_cache[mono] = result
        return result

    def coproduct0(self, x: "UEAElement") -> "TensorElement":
        """The undeformed coproduct, each generator primitive."""
        self._check(x)
        ring = self.ring
        radd, rmul, rint, zero = ring.add, ring.mul, ring.from_int, ring.zero
        out: dict = {}
        for mono, c in x.terms.items():
            for key, k in self._delta0_mono(mono).items():
                v = c if k == 1 else rmul(c, rint(k))
                if not v:
                    continue
                nv = radd(out.get(key, zero), v)
                if nv:
                    out[key] = nv
                else:
                    del out[key]
        return TensorElement(self, 2, out)

    def _antipode0_mono(self, mono) -> dict:
        hit = self._antipode0_cache.get(mono)
        if hit is not None:
            return hit
        word = tuple(reversed(self._expand(mono)))
        sign = -1 if len(word) % 2 else 1
        out = {m: sign * c for m, c in self.normalize_word(word).items()}
        self._antipode0_cache[mono] = out
        return out

    def antipode0(self, x: "UEAElement") -> "UEAElement":
        """The undeformed antipode: reverse, negate each generator, renormalize."""
        self._check(x)
        ring = self.ring
        radd, rmul, rint, zero = ring.add, ring.mul, ring.from_int, ring.zero
        out: dict = {}
        for mono, c in x.terms.items():
            for m, k in self._antipode0_mono(mono).items():
                v = c if k == 1 else rmul(c, rint(k))
                if not v:
                    continue
                nv = radd(out.get(m, zero), v)
                if nv:
                    out[m] = nv
                else:
                    del out[m]
        return UEAElement(self, out)

    def counit0(self, x: "UEAElement"):
        """The undeformed counit: the unit-monomial coefficient."""
        self._check(x)
        return x.terms.get((), self.ring.zero)

    # -- derived elements ----------------------------------------------------------

    def coerce_scalar(self, a):
        """Turn an int or Fraction shift into a ring scalar (mod p when needed)."""
        if isinstance(a, int):
            return self.ring.from_int(a)
        if isinstance(a, Fraction):
            return from_fraction(self.ring, a)
        return a

    def factorial_element(self, base: "UEAElement", a, r: int, kind: str) -> "UEAElement":
        """Shifted factorial product of a ring element.

        rising:  (x+a)(x+a+1)...(x+a+r-1);  falling: (x+a)(x+a-1)...(x+a-r+1).
        """
        if r < 0:
            raise ValueError("r must be nonnegative")
        if kind not in ("rising", "falling"):
            raise ValueError("kind must be 'rising' or 'falling'")
        step = 1 if kind == "rising" else -1
        a0 = self.coerce_scalar(a)
        out = self.one()
        for j in range(r):
            shift = self.ring.add(a0, self.ring.from_int(step * j))
            out = self.mul(out, base + self.scalar(shift))
        return out

    def ad_divided_power(self, e, ell: int, x: "UEAElement") -> "UEAElement":
        """(1/ell!) (ad e)^ell (x); in characteristic p this needs ell < p."""
        if ell < 0:
            raise ValueError("ell must be nonnegative")
        if self.ring.char and ell >= self.ring.char:
            raise ValueError(f"1/{ell}! does not exist in characteristic {self.ring.char}")
        e_elem = self.lift(e) if isinstance(e, LieElement) else e
        cur = x
        for _ in range(ell):
            cur = self.mul(e_elem, cur) - self.mul(cur, e_elem)
        inv = self.ring.inv(self.ring.from_int(math.factorial(ell)))
        return cur.scale(inv)

    # -- restricted basis enumeration ------------------------------------------------

    def enumerate_restricted_basis(self):
        """All PBW monomials of the restricted algebra (exponents < p), sorted."""
        if not self.restricted:
            raise ValueError("basis enumeration is defined for restricted mode")
        gens = self.alg.basis()
        p = self.alg.p
        for exps in itertools.product(range(p), repeat=len(gens)):
            yield tuple((b, e) for b, e in zip(gens, exps) if e)


class UEAElement:
    """A sparse combination of PBW monomials over the context's ring."""

    __slots__ = ("uea", "terms")

    def __init__(self, uea: EnvelopingAlgebra, terms: dict):
        self.uea = uea
        self.terms = terms

    def __add__(self, other):
        self.uea._check(other)
        radd, zero = self.uea.ring.add, self.uea.ring.zero
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = radd(out.get(m, zero), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return UEAElement(self.uea, out)

    def __sub__(self, other):
        return self + other.scale_int(-1)

    def __mul__(self, other):
        return self.uea.mul(self, other)

    def __pow__(self, k: int):
        return self.uea.power(self, k)

    def scale(self, c):
        if not c:
            return UEAElement(self.uea, {})
        rmul = self.uea.ring.mul
        out = {}
        for m, v in self.terms.items():
            nv = rmul(v, c)
            if nv:
                out[m] = nv
        return UEAElement(self.uea, out)

    def scale_int(self, n: int):
        return self.scale(self.uea.ring.from_int(n))

    def __neg__(self):
        return self.scale_int(-1)

    def __eq__(self, other):
        return (
            isinstance(other, UEAElement)
            and other.uea is self.uea
            and other.terms == self.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __repr__(self):
        try:
            from .grammar import format_element

            return f"<UEA {format_element(self)}>"
        except Exception:
            return f"UEAElement({self.terms!r})"


class TensorElement:
    """A sparse element of the arity-fold tensor power of the algebra.

    Keys are tuples of PBW monomials, one per slot; coefficients live in the
    shared ring (so truncated t-polynomials multiply across slots correctly).
    """

    __slots__ = ("uea", "arity", "terms")

    def __init__(self, uea: EnvelopingAlgebra, arity: int, terms: dict):
        self.uea = uea
        self.arity = arity
        self.terms = terms

    @classmethod
    def unit(cls, uea, arity=2):
        return cls(uea, arity, {((),) * arity: uea.ring.one})

    @classmethod
    def of(cls, *factors: UEAElement):
        """The pure tensor x1 (x) x2 (x) ... of enveloping-algebra elements."""
        uea = factors[0].uea
        ring = uea.ring
        rmul = ring.mul
        keys = [((), ring.one)]
        for f in factors:
            new = []
            for key, c in keys:
                for m, cf in f.terms.items():
                    v = rmul(c, cf)
                    if v:
                        new.append((key + (m,), v))
            keys = new
        agg: dict = {}
        radd, zero = ring.add, ring.zero
        for key, c in keys:
            nv = radd(agg.get(key, zero), c)
            if nv:
                agg[key] = nv
            else:
                agg.pop(key, None)
        return cls(uea, len(factors), agg)

    def _same(self, other):
        if other.uea is not self.uea or other.arity != self.arity:
            raise ValueError("tensor elements from different contexts")

    def __add__(self, other):
        self._same(other)
        radd, zero = self.uea.ring.add, self.uea.ring.zero
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = radd(out.get(k, zero), c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TensorElement(self.uea, self.arity, out)

    def __sub__(self, other):
        return self + other.scale_int(-1)

    def scale(self, c):
        if not c:
            return TensorElement(self.uea, self.arity, {})
        rmul = self.uea.ring.mul
        out = {}
        for k, v in self.terms.items():
            nv = rmul(v, c)
            if nv:
                out[k] = nv
        return TensorElement(self.uea, self.arity, out)

    def scale_int(self, n: int):
        return self.scale(self.uea.ring.from_int(n))

    def __mul__(self, other):
        self._same(other)
        uea = self.uea
        ring = uea.ring
        radd, rmul, rint, zero = ring.add, ring.mul, ring.from_int, ring.zero
        mono_mul = uea.mono_mul
        out: dict = {}
        arity = self.arity
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = rmul(c1, c2)
                if not c:
                    continue
                slot_prods = [mono_mul(k1[s], k2[s]) for s in range(arity)]
                for combo in itertools.product(*(d.items() for d in slot_prods)):
                    k = 1
                    for _, ki in combo:
                        k *= ki
                    v = c if k == 1 else rmul(c, rint(k))
                    if not v:
                        continue
                    key = tuple(m for m, _ in combo)
                    nv = radd(out.get(key, zero), v)
                    if nv:
                        out[key] = nv
                    else:
                        del out[key]
        return TensorElement(self.uea, self.arity, out)

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and other.uea is self.uea
            and other.arity == self.arity
            and other.terms == self.terms
        )

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative tensor powers are not defined here")
        out = TensorElement.unit(self.uea, self.arity)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __bool__(self):
        return bool(self.terms)

    def map_slot(self, slot: int, f) -> "TensorElement":
        """Apply a linear map (mono -> UEAElement) to one slot."""
        ring = self.uea.ring
        radd, rmul, zero = ring.add, ring.mul, ring.zero
        out: dict = {}
        for key, c in self.terms.items():
            img = f(key[slot])
            for m, cf in img.terms.items():
                v = rmul(c, cf)
                if not v:
                    continue
                nk = key[:slot] + (m,) + key[slot + 1 :]
                nv = radd(out.get(nk, zero), v)
                if nv:
                    out[nk] = nv
                else:
                    del out[nk]
        return TensorElement(self.uea, self.arity, out)

    def expand_slot(self, slot: int, f) -> "TensorElement":
        """Replace one slot through a map (mono -> TensorElement of arity 2)."""
        ring = self.uea.ring
        radd, rmul, zero = ring.add, ring.mul, ring.zero
        out: dict = {}
        for key, c in self.terms.items():
            img = f(key[slot])
            for kk, cf in img.terms.items():
                v = rmul(c, cf)
                if not v:
                    continue
                nk = key[:slot] + kk + key[slot + 1 :]
                nv = radd(out.get(nk, zero), v)
                if nv:
                    out[nk] = nv
                else:
                    del out[nk]
        return TensorElement(self.uea, self.arity + 1, out)

    def pad(self, left: int = 0, right: int = 0) -> "TensorElement":
        """Tensor with unit slots added on the left/right (e.g. F (x) 1)."""
        lk, rk = ((),) * left, ((),) * right
        return TensorElement(
            self.uea, self.arity + left + right, {lk + k + rk: c for k, c in self.terms.items()}
        )

    def contract(self, slot: int, functional) -> "TensorElement":
        """Apply a ring-valued functional (mono -> coeff) to one slot."""
        ring = self.uea.ring
        radd, rmul, zero = ring.add, ring.mul, ring.zero
        out: dict = {}
        for key, c in self.terms.items():
            s = functional(key[slot])
            if not s:
                continue
            v = rmul(c, s)
            nk = key[:slot] + key[slot + 1 :]
            nv = radd(out.get(nk, zero), v)
            if nv:
                out[nk] = nv
            else:
                out.pop(nk, None)
        return TensorElement(self.uea, self.arity - 1, out)

    def multiply_out(self) -> UEAElement:
        """The image under slotwise multiplication m: A⊗...⊗A -> A."""
        uea = self.uea
        ring = uea.ring
        radd, rmul, rint, zero = ring.add, ring.mul, ring.from_int, ring.zero
        out: dict = {}
        for key, c in self.terms.items():
            acc = {(): 1}
            for m in key:
                new: dict = {}
                for cur, k in acc.items():
                    for mm, k2 in uea.mono_mul(cur, m).items():
                        new[mm] = new.get(mm, 0) + k * k2
                acc = new
            for m, k in acc.items():
                if not k:
                    continue
                v = c if k == 1 else rmul(c, rint(k))
                if not v:
                    continue
                nv = radd(out.get(m, zero), v)
                if nv:
                    out[m] = nv
                else:
                    del out[m]
        return UEAElement(uea, out)

    def to_element(self) -> UEAElement:
        if self.arity != 1:
            raise ValueError("only arity-1 tensors collapse to elements")
        return UEAElement(self.uea, {k[0]: c for k, c in self.terms.items()})

    def __repr__(self):
        try:
            from .grammar import format_element

            return f"<Tensor {format_element(self)}>"
        except Exception:
            return f"TensorElement({self.terms!r})"


# -- module-level operation wrappers -------------------------------------------------


def pbw_normalize(uea: EnvelopingAlgebra, word) -> UEAElement:
    """Normal form of a word of basis symbols."""
    return uea.pbw_normalize(word)


def uea_mul(x: UEAElement, y: UEAElement) -> UEAElement:
    return x * y


def coproduct0(x: UEAElement) -> TensorElement:
    return x.uea.coproduct0(x)


def antipode0_counit0(x: UEAElement):
    """The pair (S0(x), eps0(x)) of the undeformed Hopf structure."""
    return x.uea.antipode0(x), x.uea.counit0(x)


def factorial_element(base: UEAElement, a, r: int, kind: str) -> UEAElement:
    return base.uea.factorial_element(base, a, r, kind)


def ad_divided_power(e, ell: int, x: UEAElement) -> UEAElement:
    return x.uea.ad_divided_power(e, ell, x)


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    return x * y


# -- reduction of integral-form elements mod p ----------------------------------------


def _coeff_mod_p(src_ring, dst_ring, c):
    """Map a rational(-series) coefficient into the mod-p counterpart ring."""
    if isinstance(c, Fraction):
        return from_fraction(dst_ring, c)
    # zero-trimmed tuple over the rationals -> same shape over GF(p)
    base = dst_ring.base
    out = [from_fraction(base, x) for x in c]
    return dst_ring._reduce(out)


def reduce_element_mod_p(x: UEAElement, target: EnvelopingAlgebra) -> UEAElement:
    """Reduce a W+ enveloping element to the Jacobson-Witt side: x^a D_i -> a! x^(a) D_i.

    Monomial factors with an exponent component >= p die; surviving factors pick
    up the factorial scalars and coefficients are reduced mod p.  The result is
    renormalized in the target (which may be restricted).
    """
    alg = target.alg
    p = alg.p
    ring = target.ring
    out = target.zero()
    for mono, c in x.terms.items():
        scale = 1
        word = []
        dead = False
        for bd, e in mono:
            if any(a > p - 1 for a in bd.alpha):
                dead = True
                break
            scale *= multi_factorial(bd.alpha) ** e
            word.extend([BasisDeriv(JW, bd.alpha, bd.i)] * e)
        if dead:
            continue
        cc = _coeff_mod_p(x.uea.ring, ring, c)
        cc = ring.scale_int(cc, scale)
        if not cc:
            continue
        out = out + target.pbw_normalize(word).scale(cc)
    return out


def reduce_tensor_mod_p(x: TensorElement, target: EnvelopingAlgebra) -> TensorElement:
    """Slotwise reduction of a tensor element (see ``reduce_element_mod_p``)."""
    out = TensorElement(target, x.arity, {})
    for key, c in x.terms.items():
        factors = []
        for m in key:
            src = UEAElement(x.uea, {m: x.uea.ring.one})
            factors.append(reduce_element_mod_p(src, target))
        piece = TensorElement.of(*factors) if x.arity else None
        cc = _coeff_mod_p(x.uea.ring, target.ring, c)
        out = out + piece.scale(cc)
    return out

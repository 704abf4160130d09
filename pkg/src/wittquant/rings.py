"""Exact coefficient arithmetic for the quantization machinery.

Three kinds of coefficient rings are supported, all exact:

* the rationals (stdlib ``Fraction``),
* prime fields GF(p) for odd primes p >= 3 (residues as plain ints),
* truncated t-polynomial rings over either, in two modes:
  ``series`` (degrees >= N are discarded) and ``quotient``
  (t^p is rewritten to q*t, so every value has t-degree < p).

Each ring is a descriptor object with a uniform method API
(``add``, ``mul``, ``neg``, ``sub``, ``inv``, ``from_int``, ...) and the
element values themselves are plain data: ``Fraction`` for the rationals,
an int in ``[0, p)`` for GF(p), and a zero-trimmed tuple of base scalars
(index = t-degree) for the t-rings.  Structural equality of values is
mathematical equality, and the zero of every ring is falsy.  Descriptors
are cached so identity comparison detects ring mismatches.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


class RingMismatchError(ValueError):
    """Raised when two operands do not share a coefficient ring."""


def binom_int(a: int, r: int) -> int:
    """Generalized binomial a(a-1)...(a-r+1)/r!, exact for any integer a."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    num = 1
    for j in range(r):
        num *= a - j
    return num // math.factorial(r)


def multi_factorial(alpha) -> int:
    """alpha! = prod_i alpha_i! for a nonnegative multi-index."""
    out = 1
    for a in alpha:
        out *= math.factorial(a)
    return out


def multi_binom(alpha, beta) -> int:
    """prod_i binom(alpha_i + beta_i, alpha_i) over the integers."""
    out = 1
    for a, b in zip(alpha, beta):
        out *= binom_int(a + b, a)
    return out


def _binom_mod_p_lucas(n: int, k: int, p: int) -> int:
    # per-digit base-p binomials (Lucas); n, k >= 0
    out = 1
    while n or k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * (binom_int(nd, kd) % p) % p
    return out


def multi_binom_mod_p(alpha, beta, p: int) -> int:
    """prod_i binom(alpha_i + beta_i, alpha_i) mod p, via Lucas' theorem."""
    if any(a < 0 for a in alpha) or any(b < 0 for b in beta):
        raise ValueError("multi-indices must be componentwise nonnegative")
    out = 1
    for a, b in zip(alpha, beta):
        out = out * _binom_mod_p_lucas(a + b, a, p) % p
        if out == 0:
            return 0
    return out


def _check_odd_prime(p: int) -> None:
    if p == 2:
        raise ValueError(
            "p = 2 is not supported: the distinguished element 2*x^(2e_k)D_k "
            "vanishes and x^(2e_k) does not exist when tau = (1,...,1); use p >= 3"
        )
    if p < 3 or any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
        raise ValueError(f"p must be an odd prime >= 3, got {p}")


class RationalField:
    """The field of arbitrary-precision rationals."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    @staticmethod
    def scale_int(a, n: int):
        return a * n

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """GF(p) for an odd prime p; values are ints in [0, p)."""

    def __init__(self, p: int):
        _check_odd_prime(p)
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, self.p - 2, self.p)

    def scale_int(self, a, n: int):
        return a * n % self.p

    def __repr__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def gf(p: int) -> PrimeField:
    return PrimeField(p)


def _trim(coeffs: list) -> tuple:
    k = len(coeffs)
    while k and not coeffs[k - 1]:
        k -= 1
    return tuple(coeffs[:k])


class _TRingBase:
    """Shared arithmetic for truncated t-polynomial rings.

    Values are zero-trimmed tuples of base-ring scalars indexed by t-degree.
    Subclasses fix the reduction rule applied after each product.
    """

    base = None
    cap = 0  # all stored degrees are < cap

    def from_int(self, n: int):
        c = self.base.from_int(n)
        return (c,) if c else ()

    def scalar(self, c):
        """Embed a base-ring scalar as a degree-0 value."""
        return (c,) if c else ()

    def t_power(self, r: int):
        """The value t^r, reduced."""
        raise NotImplementedError

    def t_terms(self, v) -> list:
        """Sparse view [(degree, base scalar), ...] of a value."""
        return [(d, c) for d, c in enumerate(v) if c]

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return a
        badd = self.base.add
        out = list(a)
        for d, c in enumerate(b):
            out[d] = badd(out[d], c)
        return _trim(out)

    def neg(self, a):
        bneg = self.base.neg
        return tuple(bneg(c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        badd, bmul = self.base.add, self.base.mul
        zero = self.base.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = badd(out[i + j], bmul(ca, cb))
        return self._reduce(out)

    def scale_int(self, a, n: int):
        c = self.base.from_int(n)
        if not c:
            return ()
        bmul = self.base.mul
        return _trim([bmul(x, c) for x in a])

    def inv(self, a):
        # only degree-0 (scalar) values need inversion here
        if len(a) == 1:
            return (self.base.inv(a[0]),)
        raise ZeroDivisionError("only scalar t-polynomials are inverted")

    def _reduce(self, coeffs: list) -> tuple:
        raise NotImplementedError


class TSeriesRing(_TRingBase):
    """Truncated power series: t^N = 0 for a cap N >= 1."""

    def __init__(self, base, cap: int):
        if cap < 1:
            raise ValueError("series cap must be >= 1")
        self.base = base
        self.cap = cap
        self.char = base.char
        self.zero = ()
        self.one = (base.one,)

    def t_power(self, r: int):
        if r >= self.cap:
            return ()
        return (self.base.zero,) * r + (self.base.one,)

    def _reduce(self, coeffs: list) -> tuple:
        return _trim(coeffs[: self.cap])

    def __repr__(self):
        return f"{self.base}[t]/t^{self.cap}"


class TQuotientRing(_TRingBase):
    """GF(p)[t] modulo t^p - q*t; every value has t-degree < p."""

    def __init__(self, p: int, q: int):
        self.base = gf(p)
        self.p = p
        self.q = q % p
        self.cap = p
        self.char = p
        self.zero = ()
        self.one = (1,)

    def t_power(self, r: int):
        coeffs = [0] * (r + 1)
        coeffs[r] = 1
        return self._reduce(coeffs)

    def _reduce(self, coeffs: list) -> tuple:
        # fold t^(p+k) -> q * t^(1+k), highest degree first
        p, q = self.p, self.q
        for d in range(len(coeffs) - 1, p - 1, -1):
            c = coeffs[d]
            if c:
                coeffs[d - p + 1] = (coeffs[d - p + 1] + q * c) % p
            coeffs[d] = 0
        return _trim(coeffs[:p])

    def __repr__(self):
        return f"GF({self.p})[t]_(t^{self.p}-{self.q}t)"


@lru_cache(maxsize=None)
def t_series(base, cap: int) -> TSeriesRing:
    return TSeriesRing(base, cap)


@lru_cache(maxsize=None)
def t_quotient(p: int, q: int) -> TQuotientRing:
    return TQuotientRing(p, q % p)


class TPoly:
    """A truncated t-polynomial: a raw value paired with its ring descriptor.

    Thin operator wrapper over the descriptor arithmetic; mixing values
    from distinct rings raises ``RingMismatchError``.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring, value=()):
        self.ring = ring
        self.value = value

    @classmethod
    def from_terms(cls, ring, terms: dict) -> "TPoly":
        out = ring.zero
        for deg, c in terms.items():
            out = ring.add(out, ring.mul(ring.t_power(deg), ring.scalar(c)))
        return cls(ring, out)

    @property
    def coefficients(self) -> dict:
        return dict(self.ring.t_terms(self.value))

    def _same(self, other):
        if not isinstance(other, TPoly) or other.ring is not self.ring:
            raise RingMismatchError(f"mixed t-rings: {self.ring} vs {getattr(other, 'ring', type(other))}")
        return other

    def __add__(self, other):
        other = self._same(other)
        return TPoly(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        other = self._same(other)
        return TPoly(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._same(other)
        return TPoly(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self):
        return TPoly(self.ring, self.ring.neg(self.value))

    def __eq__(self, other):
        return (
            isinstance(other, TPoly)
            and other.ring is self.ring
            and other.value == self.value
        )

    def __hash__(self):
        return hash((id(self.ring), self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"TPoly({self.ring}, {dict(self.ring.t_terms(self.value))})"


def tpoly_mul(f: TPoly, g: TPoly) -> TPoly:
    """Exact product of two t-polynomials followed by the mode reduction."""
    return f * g

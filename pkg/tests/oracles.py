"""Independent oracles used by the test suite.

The Jacobson-Witt algebra acts on the restricted divided power algebra
O(n;1) = span{ x^(beta) : 0 <= beta <= tau } by

    x^(alpha) D_i . x^(beta) = C(alpha+beta-e_i, alpha) x^(alpha+beta-e_i)

with C the componentwise binomial.  Realizing basis symbols as p^n x p^n
matrices over GF(p) gives a faithful representation, so brackets must match
matrix commutators and the restricted p-power map must match p-th matrix
powers.  None of this code shares logic with the bracket implementation.
"""
from __future__ import annotations

import itertools

from wittquant.liealg import WITT, BasisDeriv, JacobsonWitt, LieElement
from wittquant.rings import binom_int


def o_basis(p: int, n: int):
    """Sorted exponents of the divided power basis x^(beta), 0 <= beta <= tau."""
    return sorted(itertools.product(range(p), repeat=n))


def op_matrix(alg: JacobsonWitt, b: BasisDeriv):
    """Matrix of x^(alpha) D_i acting on O(n;1), over GF(p)."""
    p, n = alg.p, alg.n
    basis = o_basis(p, n)
    index = {beta: r for r, beta in enumerate(basis)}
    N = len(basis)
    M = [[0] * N for _ in range(N)]
    for c, beta in enumerate(basis):
        target = tuple(
            a + bb - (1 if j == b.i - 1 else 0) for j, (a, bb) in enumerate(zip(b.alpha, beta))
        )
        if any(t < 0 or t > p - 1 for t in target):
            continue
        coeff = 1
        for t, a in zip(target, b.alpha):
            coeff = coeff * binom_int(t, a) % p
        if coeff:
            M[index[target]][c] = coeff
    return M


def mat_mul(A, B, p):
    N = len(A)
    out = [[0] * N for _ in range(N)]
    for i in range(N):
        Ai = A[i]
        for k in range(N):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(N):
                    if Bk[j]:
                        row[j] = (row[j] + a * Bk[j]) % p
    return out


def mat_sub(A, B, p):
    return [[(a - b) % p for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_commutator(A, B, p):
    return mat_sub(mat_mul(A, B, p), mat_mul(B, A, p), p)


def mat_pow(A, k, p):
    N = len(A)
    out = [[1 if i == j else 0 for j in range(N)] for i in range(N)]
    for _ in range(k):
        out = mat_mul(out, A, p)
    return out


def element_matrix(x: LieElement):
    """Matrix of a Jacobson-Witt LieElement (coefficients in GF(p))."""
    alg = x.alg
    p = alg.p
    N = p ** alg.n
    M = [[0] * N for _ in range(N)]
    for b, c in x.terms.items():
        Mb = op_matrix(alg, b)
        for i in range(N):
            for j in range(N):
                if Mb[i][j]:
                    M[i][j] = (M[i][j] + c * Mb[i][j]) % p
    return M


def wplus_to_witt(x: LieElement, witt_alg) -> LieElement:
    """Identification x^alpha D_i -> x^(alpha - e_i) d_i into the Witt algebra."""
    terms = {}
    for b, c in x.terms.items():
        alpha = tuple(a - (1 if j == b.i - 1 else 0) for j, a in enumerate(b.alpha))
        k = BasisDeriv(WITT, alpha, b.i)
        terms[k] = terms.get(k, x.ring.zero) + c
    return LieElement(witt_alg, x.ring, {k: v for k, v in terms.items() if v})

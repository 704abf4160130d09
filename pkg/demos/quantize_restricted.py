"""Walk through the finite-dimensional quantization for p = 3, n = 1.

Builds the restricted enveloping algebra of W(1;1) over GF(3)[t]/(t^3 - q t),
twists it along the single basic direction, and prints the deformed coproduct
and antipode of every basis derivation, together with the relations of the
distinguished primitive/group-like pair.
"""
from wittquant import format_element, modular

hopf = modular(p=3, n=1, eta=(1,), q=0)
U = hopf.uea
alg = U.alg

print(f"ambient: restricted enveloping algebra of W({alg.n};1), p = {alg.p}")
print(f"coefficients: {U.ring!r}")
print()

for bd in alg.basis():
    x = U.gen(bd)
    print(f"generator {format_element(x)}")
    print(f"  Delta = {format_element(hopf.delta_basis(bd))}")
    print(f"  S     = {format_element(hopf.antipode_basis(bd))}")
    print(f"  eps   = {hopf.counit(x)!r}")
print()

h = hopf.directions[0][1]
f = hopf.one_minus_et_power(0, -1)
print("the distinguished pair generates a familiar Hopf subalgebra:")
print(f"  h           = {format_element(h)}")
print(f"  f           = {format_element(f)}")
print(f"  [h, f]      = {format_element(h * f - f * h)}  (equals f^2 - f)")
print(f"  h^p         = {format_element(U.power(h, 3))}")
print(f"  f^p         = {format_element(U.power(f, 3))}")
print(f"  Delta(h)    = {format_element(hopf.delta(h))}")
print(f"  Delta(f)    = {format_element(hopf.delta(f))}  (group-like)")
print(f"  S(h)        = {format_element(hopf.antipode(h))}")

count = sum(1 for _ in U.enumerate_restricted_basis())
print()
print(f"restricted PBW monomials: {count} (= p^(n*p^n)); over the t-ring: {count * alg.p}")

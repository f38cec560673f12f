# Factorizations, kernel equivalence, rigidity, and the dimension count.

import numpy as np

from tkern import (
    BlaschkeProduct,
    RationalFunction,
    as_symbol,
    dim_from_factorization,
    equals,
    includes,
    inner_outer,
    is_equivalent,
    is_rigid,
    kernel,
    monomial,
    wiener_hopf,
)

# Inner-outer: disc zeros go to the Blaschke factor, circle and exterior
# zeros stay outer; the outer factor is positive at the origin.
f = RationalFunction(np.polynomial.polynomial.polyfromroots([0.5, 2.0]))
io = inner_outer(f)
print("f = (z-1/2)(z-2)")
print("  inner zeros:", io.inner.zeros, "constant:", io.inner.constant)
print("  outer:", io.outer)

# Wiener-Hopf: minus carries the inside data, z^k the winding, plus the
# outside data (normalized to plus(0) = 1).
wh = wiener_hopf(as_symbol(RationalFunction([1, 2], [0, 0, 0, 0, 2, 1])))
print("\nWiener-Hopf of (2z+1)/(z^4(2+z)):")
print("  minus:", wh.minus, "| index:", wh.index, "| plus:", wh.plus)

# Two symbols with equal winding are equivalent: an explicit sandwich
# g1 = h_minus g2 h_plus comes out of the factorization of their ratio.
b = RationalFunction([-0.5, 1], [1, -0.5])
g1 = as_symbol((monomial(1) * b).circle_conjugate())
w = is_equivalent(g1, monomial(-2))
print("\nconj(z B(0.5)) ~ 1/z^2 with")
print("  h_minus:", w.h_minus)
print("  h_plus:", w.h_plus)

# Kernel equality through symbol quotients: twisting by a conjugate-outer
# ratio never moves the kernel.
g = as_symbol(monomial(-2))
p = RationalFunction([1, 1 / 3])
print("\nequals(g, g*conj(p)):", equals(g, as_symbol(g.value * p.circle_conjugate())))
print("includes(K_z, K_z2):", includes(monomial(-1), monomial(-2)))

# Rigidity: an outer function spans a one-dimensional kernel exactly when
# its square is rigid; circle zeros break it.
print("\nrigid 1 + z/2:", is_rigid(RationalFunction([1, 0.5])))
print("rigid 1 - z:  ", is_rigid(RationalFunction([1, -1])))

# The dimension count for factored symbols g_minus theta^-N / g_plus.
theta = BlaschkeProduct(1.0, [(0.0, 1), (0.3, 1)])
gp = RationalFunction([1, 0.5])
one = RationalFunction([1.0])
for N in (-1, 0, 1, 2):
    print(f"N = {N:2d}: kernel dimension {dim_from_factorization(one, theta, N, gp)}")
assembled = as_symbol(theta.to_rational() ** (-2) / gp)
print("cross-check against kernel():", kernel(assembled).dimension)

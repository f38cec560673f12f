# Surjective multipliers, their companion inner functions, and image
# kernels.

import numpy as np

from tkern import (
    BlaschkeProduct,
    RationalFunction,
    as_symbol,
    crofoot_companion,
    equals,
    image_kernel,
    is_surjective_multiplier,
    kernel,
    minimal_kernel,
    monomial,
)

# The elementary surjective multiplier w = 1/(1 - conj(a) z) maps the
# one-dimensional model space onto the model space of (z-a)/(1-conj(a)z).
a = 0.5
w = RationalFunction([1.0]) / RationalFunction([1.0, -np.conj(a)])
phi = crofoot_companion(BlaschkeProduct(1.0, [(0.0, 1)]), w)
print("companion of w = 1/(1 - z/2):", phi.to_rational())

h = as_symbol(phi.to_rational().circle_conjugate())
report = is_surjective_multiplier(w, monomial(-1), h)
print("surjective onto the companion space:", report.holds)

# Anatomy of a failure: w = 1+z satisfies the symbol identity from K_z to
# K_z2, but 1/w is not Carleson for the target, and indeed the image
# span{1+z} is a proper subspace of every kernel containing it.
w = RationalFunction([1, 1])
report = is_surjective_multiplier(w, monomial(-1), monomial(-2))
print("\nw = 1+z from K_z to K_z2:")
print("  outer_ok:           ", report.outer_ok)
print("  carleson_forward_ok:", report.carleson_forward_ok)
print("  carleson_inverse_ok:", report.carleson_inverse_ok)
print("  symbol_identity_ok: ", report.symbol_identity_ok)
print("  holds:              ", report.holds)
print("image of K_z under 1+z is a Toeplitz kernel:",
      image_kernel(w, monomial(-1)) is not None)
_, Kmin = minimal_kernel(w)
print("smallest kernel containing 1+z has dimension", Kmin.dimension)

# Invertible-analytic multipliers always transport kernels exactly.
w = RationalFunction([1.0]) / RationalFunction([1, -0.4])
img = image_kernel(w, monomial(-2))
print("\nw = 1/(1-0.4z) transports the kernel of 1/z^2 to dimension",
      img.dimension)
print("image symbol matches g/w:", equals(img.symbol, as_symbol(monomial(-2) / w)))
print("target dimension agrees:", kernel(as_symbol(monomial(-2) / w)).dimension)

# Kernels of Toeplitz operators with rational symbols.
#
# A circle-invertible rational symbol has a finite-dimensional kernel whose
# dimension is minus its winding number (when negative). The package
# produces an explicit basis and the numeric oracle confirms it from the
# symbol's Fourier coefficients alone.

import numpy as np

from tkern import (
    RationalFunction,
    as_symbol,
    fourier_coefficients,
    kernel,
    monomial,
    numeric_kernel,
    principal_angle,
    subspace_from_rationals,
    winding_number,
)

# The model space attached to z^2: kernel of the Toeplitz operator with
# symbol 1/z^2, spanned by 1 and z.
s = as_symbol(monomial(-2))
K = kernel(s)
print("symbol 1/z^2: winding", winding_number(s), "dimension", K.dimension)
print("basis:", [str(b) for b in K.basis])

# A mixed symbol: one zero inside, four poles at the origin, one pole
# outside. Winding -3, so a three-dimensional kernel.
s = as_symbol(RationalFunction([1, 2], [0, 0, 0, 0, 2, 1]))
K = kernel(s)
print("\nsymbol (2z+1)/(z^4(2+z)): winding", winding_number(s))
for b in K.basis:
    print("  basis element:", b)

# Membership is visible in the Fourier coefficients: symbol * element has
# no nonnegative frequencies.
c = fourier_coefficients(s.value * K.basis[0], 8)
print("max |coefficient| at indices >= 0:", float(np.max(np.abs(c[8:]))))

# The numeric oracle builds a tall truncated-Toeplitz matrix and takes its
# SVD null space; it has never seen the factorization.
ns = numeric_kernel(s)
sym = subspace_from_rationals(K.basis, ns.degree_cap)
print("\noracle dimension:", ns.dimension)
print("principal angle between symbolic and numeric kernels:",
      f"{principal_angle(sym, ns):.2e}")
print("SVD gap ratio:", f"{ns.gap_ratio:.2e}")

# Analytic invertible symbols have trivial kernels.
print("\nkernel of z^2 is trivial:", kernel(monomial(2)).dimension == 0)

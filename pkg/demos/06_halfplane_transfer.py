# The Cayley bridge to the upper half-plane.
#
# Vectors move through the weighted isometry V f(z) =
# 2 sqrt(pi) (1+z)^-1 f(i(1-z)/(1+z)); bounded symbols and multiplier
# candidates move through the plain composition. All half-plane questions
# are answered by the disc engine after transfer.

import numpy as np

from tkern import (
    HalfPlaneRational,
    RationalFunction,
    cayley_function,
    cayley_symbol,
    circle_norm_squared,
    halfplane_multiplier_test,
    inverse_cayley_symbol,
    is_maximal,
    line_norm_squared,
)

# Closed-form isometry checks: 1/(s+i) has line norm sqrt(pi) and
# transfers to a constant of the same norm.
f = HalfPlaneRational(RationalFunction([1.0], [1j, 1.0]))
V = cayley_function(f)
print("V(1/(s+i)) =", V)
print("line norm^2:", line_norm_squared(f), " circle norm^2:", circle_norm_squared(V))

f2 = HalfPlaneRational(RationalFunction([1.0], [1j, 1.0]) ** 2)
V2 = cayley_function(f2)
print("\nV(1/(s+i)^2) =", V2)
print("line norm^2:", line_norm_squared(f2), " circle norm^2:", circle_norm_squared(V2))

# The elementary inner function (s-i)/(s+i) becomes -z; its conjugate
# symbol becomes -1/z, whose kernel is the constants.
theta = HalfPlaneRational(RationalFunction([-1j, 1.0], [1j, 1.0]))
G = cayley_symbol(theta.conjugate_on_line())
print("\ntransferred model-space symbol:", G)

# The backward shift (theta(s) - theta(i))/(s - i) = 1/(s+i) transfers to
# a maximal vector of that kernel.
k = HalfPlaneRational(RationalFunction([1.0], [1j, 1.0]))
print("transferred test vector is maximal:", is_maximal(cayley_function(k), G).is_maximal)

# Round trip: pulling the transferred symbol back recovers the original.
back = inverse_cayley_symbol(G.value)
print("round trip recovers the symbol:",
      back.value.is_close(theta.conjugate_on_line().value, 1e-9))

# A half-plane multiplier question, decided entirely by conjugation: the
# pull-back of the disc fact that 1+z maps K_z into K_z2.
w = HalfPlaneRational(RationalFunction([2j], [1j, 1.0]))
g = HalfPlaneRational(RationalFunction([1j, 1.0], [1j, -1.0]))
h = HalfPlaneRational(RationalFunction([1j, 1.0], [1j, -1.0]) ** 2)
print("\nhalf-plane multiplier test (pulled-back power example):",
      halfplane_multiplier_test(w, g, h))

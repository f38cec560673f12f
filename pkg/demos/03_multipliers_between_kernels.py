# Multipliers from one Toeplitz kernel into another.
#
# Membership needs only two ingredients: a Carleson condition (no circle
# poles in any product, at rational scale) and the image of one maximal
# vector. An independent conjugate-Smirnov route cross-checks every
# answer.

from tkern import (
    RationalFunction,
    as_symbol,
    in_kernel,
    is_multiplier,
    monomial,
    multiplier_space,
    multiplier_space_bounded,
    smirnov_multiplier_test,
)

s1 = as_symbol(monomial(-1))
s2 = as_symbol(monomial(-2))

# 1 + z maps the constants into the two-dimensional model space.
w = RationalFunction([1, 1])
print("1+z multiplies K_z into K_z2:", is_multiplier(w, s1, s2))
print("smirnov route agrees:", smirnov_multiplier_test(w, s1, s2))

# z^2 overflows the target degree.
print("z^2 multiplies K_z into K_z2:", is_multiplier(monomial(2), s1, s2))

# 1/(1+bz) repairs its own denominator vector but fails on the rest of
# the space: a one-vector test is not enough without maximality.
for b in (0.3, 0.6, 0.9):
    w = RationalFunction([1.0]) / RationalFunction([1.0, b])
    print(f"1/(1+{b}z): moves 1+{b}z into the space:",
          in_kernel(w * RationalFunction([1.0, b]), s2),
          "| is a multiplier:", is_multiplier(w, s2, s2))

# The whole multiplier space, computed as a Toeplitz kernel of the reduced
# test symbol h/(zg).
print("\nmultiplier spaces between power model spaces:")
for n, m in [(1, 2), (2, 5), (3, 3), (3, 1)]:
    ms = multiplier_space(monomial(-n), monomial(-m))
    print(f"  K_z{n} -> K_z{m}: dimension {ms.dimension}",
          [str(b) for b in ms.basis])

# Bounded multipliers coincide with the square-integrable ones at rational
# scale; the bounded variant re-verifies each element.
mb = multiplier_space_bounded(s1, as_symbol(monomial(-3)))
print("\nbounded multipliers K_z -> K_z3:", [str(b) for b in mb.basis])
print("note:", mb.note)

"""Cayley-transform bridge between the upper half-plane and the disc.

Vectors move through the weighted isometry
``(V f)(z) = 2 sqrt(pi) (1+z)^-1 f(i(1-z)/(1+z))`` which maps L2 of the
line onto L2 of the circle and preserves the Hardy spaces; bounded
symbols move through the unweighted composition. Half-plane multiplier
questions are answered entirely by conjugation with the disc engine:
there is no independent half-plane Toeplitz machinery here.
"""

from __future__ import annotations

import numpy as np

from .errors import NotSquareIntegrable, UnboundedSymbol
from .multipliers import is_multiplier
from .rational import (
    ComplexPolynomial,
    RationalFunction,
    ToeplitzSymbol,
    as_rational,
)

# Imaginary-part tolerance below which a pole counts as real.
_REAL_AXIS_TOL = 1e-9

_SQRT_PI = float(np.sqrt(np.pi))


class HalfPlaneRational:
    """A rational function in the half-plane variable s."""

    __slots__ = ("value",)

    def __init__(self, value, den=None):
        if den is not None:
            value = RationalFunction(value, den)
        object.__setattr__(self, "value", as_rational(value))

    def __setattr__(self, name, value):
        raise AttributeError("HalfPlaneRational is immutable")

    def __call__(self, s):
        return self.value(s)

    def real_poles(self):
        return [
            (p, m)
            for p, m in self.value.poles()
            if abs(p.imag) <= _REAL_AXIS_TOL * (1.0 + abs(p))
        ]

    def decays_at_infinity(self) -> bool:
        return self.value.num.degree < self.value.den.degree

    def bounded_at_infinity(self) -> bool:
        return self.value.num.degree <= self.value.den.degree

    def in_l2_line(self) -> bool:
        """Square-integrable on the real line: no real poles and decay
        at least like 1/s at infinity."""
        return (not self.real_poles()) and (self.value.is_zero or self.decays_at_infinity())

    def in_hardy_plus(self) -> bool:
        """Hardy space of the upper half-plane: square-integrable with all
        poles in the open lower half-plane."""
        if self.value.is_zero:
            return True
        if not self.in_l2_line():
            return False
        return all(p.imag < 0 for p, _ in self.value.poles())

    def conjugate_on_line(self) -> "HalfPlaneRational":
        """The rational function agreeing with conj(f(s)) for real s:
        coefficient-wise conjugation."""
        return HalfPlaneRational(
            RationalFunction(self.value.num.conj_coeffs(), self.value.den.conj_coeffs())
        )

    def __mul__(self, other):
        other = other.value if isinstance(other, HalfPlaneRational) else other
        return HalfPlaneRational(self.value * other)

    def __truediv__(self, other):
        other = other.value if isinstance(other, HalfPlaneRational) else other
        return HalfPlaneRational(self.value / other)

    def __repr__(self):
        return f"HalfPlaneRational({self.value!r})"


def _as_halfplane(f) -> HalfPlaneRational:
    return f if isinstance(f, HalfPlaneRational) else HalfPlaneRational(f)


def _lift(p: ComplexPolynomial, mnum: ComplexPolynomial, mden: ComplexPolynomial, m: int):
    """mden**m * p(mnum/mden) as a polynomial (requires deg p <= m)."""
    acc = ComplexPolynomial([0.0])
    for j, cj in enumerate(p.coeffs):
        acc = acc + cj * (mnum**j) * (mden ** (m - j))
    return acc


def _compose_mobius(r: RationalFunction, mnum, mden) -> RationalFunction:
    """r(M(z)) for the Moebius map M = mnum/mden (both linear)."""
    mnum = ComplexPolynomial._coerce(mnum)
    mden = ComplexPolynomial._coerce(mden)
    if r.is_zero:
        return RationalFunction(0.0)
    m = max(r.num.degree, r.den.degree)
    return RationalFunction(_lift(r.num, mnum, mden, m), _lift(r.den, mnum, mden, m))


# Moebius data of the Cayley map s = i(1-z)/(1+z) and its inverse
# z = (i-s)/(i+s).
_CAYLEY_NUM = ComplexPolynomial([1j, -1j])
_CAYLEY_DEN = ComplexPolynomial([1.0, 1.0])
_INV_NUM = ComplexPolynomial([1j, -1.0])
_INV_DEN = ComplexPolynomial([1j, 1.0])


def cayley_function(f, p: int = 2) -> RationalFunction:
    """Weighted transfer of a line function to the circle.

    Only the square-integrable case p = 2 is implemented:
    2 sqrt(pi) (1+z)^-1 f(i(1-z)/(1+z)), reduced. Isometric from L2 of the
    line (Lebesgue measure) to L2 of the circle (normalized measure).
    """
    if p != 2:
        raise ValueError("only the p = 2 transfer is implemented")
    f = _as_halfplane(f)
    if f.value.is_zero:
        return RationalFunction(0.0)
    if not f.in_l2_line():
        raise NotSquareIntegrable(
            "function has a real pole or insufficient decay at infinity"
        )
    # the decay degree absorbs the (1+z)^-1 weight analytically: lift the
    # numerator one Moebius power short of the denominator
    m = f.value.den.degree
    num = _lift(f.value.num, _CAYLEY_NUM, _CAYLEY_DEN, m - 1)
    den = _lift(f.value.den, _CAYLEY_NUM, _CAYLEY_DEN, m)
    return 2.0 * _SQRT_PI * RationalFunction(num, den)


def cayley_symbol(g) -> ToeplitzSymbol:
    """Unweighted transfer of a bounded line symbol to the circle:
    g(i(1-z)/(1+z)), reduced."""
    g = _as_halfplane(g)
    if g.value.is_zero or g.real_poles() or not g.bounded_at_infinity():
        raise UnboundedSymbol("symbol must be bounded on the real line and nonzero")
    return ToeplitzSymbol(_compose_mobius(g.value, _CAYLEY_NUM, _CAYLEY_DEN))


def transfer_multiplier(w) -> RationalFunction:
    """Unweighted composition used for multiplier candidates; no
    boundedness requirement (integrability defects surface through the
    Carleson checks on the disc)."""
    return _compose_mobius(_as_halfplane(w).value, _CAYLEY_NUM, _CAYLEY_DEN)


def inverse_cayley_symbol(G) -> HalfPlaneRational:
    """Pull a disc function back to the half-plane variable:
    G((i-s)/(i+s)), reduced."""
    return HalfPlaneRational(_compose_mobius(as_rational(G), _INV_NUM, _INV_DEN))


def halfplane_multiplier_test(w, g, h) -> bool:
    """Half-plane multiplier membership, decided by conjugation: transfer
    the symbols and the candidate to the disc and run the disc test."""
    W = transfer_multiplier(w)
    G = cayley_symbol(g)
    H = cayley_symbol(h)
    return is_multiplier(W, G, H)


def line_norm_squared(f, quad_points: int = 4096) -> float:
    """Squared L2 norm on the real line through the circle
    parametrization s = tan(t/2) of the Cayley map itself."""
    f = _as_halfplane(f)
    if f.value.is_zero:
        return 0.0
    if not f.in_l2_line():
        raise NotSquareIntegrable("not square-integrable on the line")
    t = (np.arange(quad_points) + 0.5) * (2.0 * np.pi / quad_points)
    z = np.exp(1j * t)
    s = np.real(1j * (1.0 - z) / (1.0 + z))
    # ds = 2 dt / |1+z|^2 along the parametrization
    weight = 2.0 / np.abs(1.0 + z) ** 2
    vals = np.abs(f.value(s)) ** 2 * weight
    return float(np.sum(vals) * (2.0 * np.pi / quad_points))


def circle_norm_squared(F, quad_points: int = 4096) -> float:
    """Squared L2 norm on the circle with normalized measure."""
    F = as_rational(F)
    t = (np.arange(quad_points) + 0.5) * (2.0 * np.pi / quad_points)
    vals = np.abs(F(np.exp(1j * t))) ** 2
    return float(np.mean(vals))

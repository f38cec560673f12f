"""Inner-outer and Wiener-Hopf factorization of rational functions.

Every rational function in the disc Hardy space splits as a finite
Blaschke product times a rational outer factor. Every circle-invertible
rational symbol splits as ``minus * z**k * plus**-1`` where ``plus`` is
invertible-analytic on the closed disc, ``minus`` is invertible-analytic
on the closed exterior (including infinity), and ``k`` is the winding
number.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BlaschkeParameterOutOfDisc,
    NotInHardySpace,
    NotInvertibleOnCircle,
    ZeroFunction,
)
from .rational import (
    EPS_CIRCLE,
    EPS_ROOT,
    ComplexPolynomial,
    RationalFunction,
    ToeplitzSymbol,
    as_rational,
    as_symbol,
    monomial,
)


class BlaschkeProduct:
    """Finite Blaschke product: unimodular constant times factors
    (z - a)/(1 - conj(a) z) over zeros ``a`` in the open unit disc."""

    __slots__ = ("constant", "zeros")

    def __init__(self, constant=1.0, zeros=()):
        constant = complex(constant)
        if abs(abs(constant) - 1.0) > 1e-12:
            raise ValueError(f"Blaschke constant must be unimodular, got |c| = {abs(constant)}")
        norm = []
        for item in zeros:
            a, m = item if isinstance(item, tuple) else (item, 1)
            a = complex(a)
            if abs(a) >= 1.0 - EPS_CIRCLE:
                raise BlaschkeParameterOutOfDisc(
                    f"Blaschke zero {a:.12g} is not strictly inside the unit disc"
                )
            norm.append((a, int(m)))
        norm.sort(key=lambda am: (am[0].real, am[0].imag))
        object.__setattr__(self, "constant", constant)
        object.__setattr__(self, "zeros", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("BlaschkeProduct is immutable")

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.zeros)

    def to_rational(self) -> RationalFunction:
        num = ComplexPolynomial([self.constant])
        den = ComplexPolynomial([1.0])
        for a, m in self.zeros:
            for _ in range(m):
                num = num * ComplexPolynomial([-a, 1.0])
                den = den * ComplexPolynomial([1.0, -np.conj(a)])
        return RationalFunction(num, den)

    def to_symbol(self) -> ToeplitzSymbol:
        return ToeplitzSymbol(self.to_rational())

    def __call__(self, z):
        return self.to_rational()(z)

    def __repr__(self):
        return f"BlaschkeProduct({self.constant!r}, {list(self.zeros)})"


@dataclass(frozen=True)
class InnerOuterFactorization:
    inner: BlaschkeProduct
    outer: RationalFunction

    def reconstruct(self) -> RationalFunction:
        return self.inner.to_rational() * self.outer


@dataclass(frozen=True)
class WienerHopfFactorization:
    minus: RationalFunction
    index: int
    plus: RationalFunction

    def reconstruct(self) -> RationalFunction:
        return self.minus * monomial(self.index) / self.plus


def inner_outer(f) -> InnerOuterFactorization:
    """Split a rational Hardy-space function into a finite Blaschke product
    and a rational outer factor.

    The inner factor collects exactly the zeros strictly inside the disc;
    circle and exterior zeros, and all poles, stay with the outer factor.
    The unimodular constant is fixed so that the outer factor is positive
    at the origin.
    """
    f = as_rational(f)
    if f.is_zero:
        raise ZeroFunction("cannot factor the zero function")
    pc = f.pole_classification()
    if pc.inside or pc.on_circle:
        raise NotInHardySpace(
            "poles inside or on the unit circle: not in the disc Hardy space"
        )
    zc = f.zero_classification()

    # Outer factor built directly: inside zeros swapped for their
    # reflected denominators, everything else untouched.
    out_num = ComplexPolynomial([f.num.lead])
    for r, m in zc.on_circle + zc.outside:
        for _ in range(m):
            out_num = out_num * ComplexPolynomial([-r, 1.0])
    for a, m in zc.inside:
        for _ in range(m):
            out_num = out_num * ComplexPolynomial([1.0, -np.conj(a)])
    outer0 = RationalFunction(out_num, f.den)

    v = complex(outer0(0.0))
    u = v / abs(v)  # outer0(0) != 0: no inside zeros, no pole at 0
    inner = BlaschkeProduct(u, zc.inside)
    return InnerOuterFactorization(inner, outer0 / u)


def wiener_hopf(s) -> WienerHopfFactorization:
    """Factor a circle-invertible rational symbol as minus * z**k / plus.

    ``plus`` carries the zeros and poles strictly outside the circle and is
    normalized to plus(0) = 1; ``minus`` carries those strictly inside,
    written so that minus is finite and nonzero at infinity; ``k`` is the
    winding number.
    """
    s = as_symbol(s)
    if not s.circle_invertible:
        raise NotInvertibleOnCircle("symbol has a zero or pole on the unit circle")
    zc = s.value.zero_classification()
    pc = s.value.pole_classification()

    lead = s.value.num.lead / s.value.den.lead
    for r, m in zc.outside:
        lead *= (-r) ** m
    for r, m in pc.outside:
        lead /= (-r) ** m

    minus_num = ComplexPolynomial([lead])
    minus_den = ComplexPolynomial([1.0])
    for r, m in zc.inside:
        for _ in range(m):
            minus_num = minus_num * ComplexPolynomial([-r, 1.0])
    for r, m in pc.inside:
        for _ in range(m):
            minus_den = minus_den * ComplexPolynomial([-r, 1.0])
    shift = pc.count_inside() - zc.count_inside()
    minus = RationalFunction(minus_num, minus_den) * monomial(shift)

    plus_num = ComplexPolynomial([1.0])
    plus_den = ComplexPolynomial([1.0])
    for r, m in pc.outside:
        for _ in range(m):
            plus_num = plus_num * ComplexPolynomial([1.0, -1.0 / r])
    for r, m in zc.outside:
        for _ in range(m):
            plus_den = plus_den * ComplexPolynomial([1.0, -1.0 / r])
    plus = RationalFunction(plus_num, plus_den)

    scale = complex(plus(0.0))
    plus = plus / scale
    minus = minus / scale
    return WienerHopfFactorization(minus, s.winding, plus)


def blaschke_divides(alpha: BlaschkeProduct, theta: BlaschkeProduct) -> bool:
    """True when every zero of ``alpha`` appears among ``theta``'s zeros
    with at least the same multiplicity (matched within EPS_ROOT)."""
    remaining = [[a, m] for a, m in theta.zeros]
    for a, m in alpha.zeros:
        for slot in remaining:
            if slot[1] == 0:
                continue
            if abs(a - slot[0]) <= EPS_ROOT * max(1.0, abs(a)):
                take = min(m, slot[1])
                slot[1] -= take
                m -= take
                if m == 0:
                    break
        if m > 0:
            return False
    return True


def blaschke_from_rational(r, tol: float = 1e-8):
    """Recognize a reduced rational function as a finite Blaschke product.

    Returns the BlaschkeProduct, or None when the function is not inner
    (zeros outside the open disc, or boundary modulus away from 1).
    """
    r = as_rational(r)
    if r.is_zero:
        return None
    zc = r.zero_classification()
    if zc.on_circle or zc.outside:
        return None
    try:
        candidate = BlaschkeProduct(1.0, zc.inside)
    except BlaschkeParameterOutOfDisc:
        return None
    ratio = r / candidate.to_rational()
    if not ratio.is_constant:
        return None
    c = ratio.constant_value()
    if abs(abs(c) - 1.0) > tol:
        return None
    samples = np.exp(2j * np.pi * np.arange(64) / 64)
    if np.max(np.abs(np.abs(r(samples)) - 1.0)) > max(tol, 1e-8):
        return None
    return BlaschkeProduct(c / abs(c), zc.inside)

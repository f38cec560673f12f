"""Rational-function arithmetic over complex floating scalars.

Everything downstream (factorizations, kernels, multipliers) is built on
three types defined here: ``ComplexPolynomial`` (coefficient lists in
ascending degree order), ``RationalFunction`` (reduced quotients with a
monic denominator), and ``ToeplitzSymbol`` (a rational function read on the
unit circle, with cached invertibility and winding number).

Conventions:
  * denominators are monic; all scalar freedom lives in the numerator;
  * quotients are reduced by cancelling numerator/denominator roots that
    match within ``EPS_ROOT``;
  * roots are classified against the unit circle with band ``EPS_CIRCLE``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import (
    ClassificationWarning,
    NotInvertibleOnCircle,
    ZeroDenominator,
    ZeroFunction,
    ZeroPolynomial,
)

# Relative trim threshold for floating-point junk in coefficient lists.
EPS_COEFF = 1e-12
# Relative tolerance for clustering roots into multiplicities and for
# cancelling matching numerator/denominator roots.
EPS_ROOT = 1e-7
# Half-width of the "on the unit circle" classification band.
EPS_CIRCLE = 1e-9
# Roots with | |root|-1 | inside [EPS_CIRCLE, NEAR_CIRCLE) trigger a
# ClassificationWarning: the band cannot prove they are off the circle.
NEAR_CIRCLE = 1e-6
# Newton polish is applied only to roots at least this far (relative) from
# their nearest neighbor: polishing members of a split multiple-root
# cluster moves them asymmetrically and ruins re-expanded products.
POLISH_ISOLATION = 1e-5
# Roots closer than this (relative) are treated as one near-multiple group
# whose monic factor is re-derived by Newton refinement on the factor
# coefficients; eigenvalues alone are not backward-stable enough there.
# Genuinely distinct roots caught by the net re-separate when the refined
# factor is re-rooted, so the radius errs on the large side.
COARSE_CLUSTER = 1e-2


def _trim(coeffs) -> np.ndarray:
    """Normalize a coefficient array: drop trailing entries that are
    negligible relative to the largest coefficient. All-zero input trims
    to an empty array (the canonical zero polynomial)."""
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
    if c.size == 0:
        return c
    scale = np.max(np.abs(c))
    if scale == 0.0 or not np.isfinite(scale):
        if not np.isfinite(scale):
            raise ValueError("non-finite polynomial coefficients")
        return c[:0]
    keep = np.abs(c) > EPS_COEFF * scale
    if not keep.any():
        return c[:0]
    return c[: int(np.max(np.nonzero(keep))) + 1].copy()


class ComplexPolynomial:
    """Polynomial with complex coefficients, ascending degree order.

    The zero polynomial has an empty coefficient list and degree -1.
    Instances are immutable values.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, ComplexPolynomial):
            c = coeffs.coeffs
        else:
            c = _trim(coeffs)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexPolynomial is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def lead(self) -> complex:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return complex(self.coeffs[-1])

    def __call__(self, z):
        if self.is_zero:
            return np.zeros_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 0j
        return npoly.polyval(z, self.coeffs)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "ComplexPolynomial":
        if isinstance(other, ComplexPolynomial):
            return other
        if np.isscalar(other) or isinstance(other, complex):
            return ComplexPolynomial([complex(other)])
        return ComplexPolynomial(other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return ComplexPolynomial(npoly.polyadd(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return ComplexPolynomial(-self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return ComplexPolynomial()
        return ComplexPolynomial(npoly.polymul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of a polynomial are rational functions")
        out = ComplexPolynomial([1.0])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "ComplexPolynomial":
        if self.degree < 1:
            return ComplexPolynomial()
        return ComplexPolynomial(npoly.polyder(self.coeffs))

    def conj_coeffs(self) -> "ComplexPolynomial":
        """Coefficient-wise conjugate (same powers of the variable)."""
        return ComplexPolynomial(np.conj(self.coeffs))

    def monic(self) -> "ComplexPolynomial":
        return ComplexPolynomial(self.coeffs / self.lead)

    @staticmethod
    def from_roots(roots, lead: complex = 1.0) -> "ComplexPolynomial":
        flat = []
        for item in roots:
            if isinstance(item, tuple):
                r, m = item
                flat.extend([r] * int(m))
            else:
                flat.append(item)
        if not flat:
            return ComplexPolynomial([complex(lead)])
        return ComplexPolynomial(complex(lead) * npoly.polyfromroots(np.asarray(flat, dtype=complex)))

    # -- comparison / display ----------------------------------------------

    def is_close(self, other, tol: float = 1e-9) -> bool:
        other = self._coerce(other)
        n = max(self.coeffs.size, other.coeffs.size, 1)
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[: self.coeffs.size] = self.coeffs
        b[: other.coeffs.size] = other.coeffs
        scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1.0)
        return bool(np.max(np.abs(a - b)) <= tol * scale)

    def __repr__(self):
        return f"ComplexPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_polynomial(self)


def poly_roots(p: ComplexPolynomial) -> list[tuple[complex, int]]:
    """All roots of ``p`` with multiplicities.

    Companion-matrix eigenvalues; isolated roots get one Newton polish
    step, roots within ``EPS_ROOT`` (relative) cluster into multiplicities,
    and near-multiple groups are re-derived from a Newton-refined monic
    factor so that re-expanded products of the reported roots reproduce
    the coefficients. Output is sorted lexicographically by (real,
    imaginary) part.
    """
    p = ComplexPolynomial._coerce(p)
    if p.is_zero:
        raise ZeroPolynomial("cannot take roots of the zero polynomial")
    c = p.coeffs
    if c.size == 1:
        return []

    # Exact roots at the origin: strip leading near-zero coefficients.
    scale = np.max(np.abs(c))
    k0 = 0
    while k0 < c.size - 1 and abs(c[k0]) <= EPS_COEFF * scale:
        k0 += 1
    out: list[tuple[complex, int]] = []
    if k0:
        out.append((0j, k0))
        c = c[k0:]

    if c.size == 2:
        out.append((complex(-c[0] / c[1]), 1))
        return _sorted_roots(out)
    if c.size < 2:
        return _sorted_roots(out)

    raw = npoly.polyroots(c)
    dp = npoly.polyder(c)
    polished = []
    for i, r in enumerate(raw):
        others = np.delete(raw, i)
        isolated = others.size == 0 or np.min(np.abs(others - r)) > POLISH_ISOLATION * max(
            1.0, abs(r)
        )
        if isolated:
            val = npoly.polyval(r, c)
            der = npoly.polyval(r, dp)
            if der != 0:
                step = val / der
                if abs(step) < 0.5 * (1.0 + abs(r)):
                    cand = r - step
                    if abs(npoly.polyval(cand, c)) < abs(val):
                        r = cand
        polished.append(complex(r))

    clusters = _cluster_roots(polished)
    out.extend(_resolve_near_multiple_groups(clusters, c))
    return _sorted_roots(out)


def _group_points(points, tol_factor):
    """Single-linkage grouping of complex points at a relative tolerance."""
    n = len(points)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            tol = tol_factor * max(1.0, abs(points[i]), abs(points[j]))
            if abs(points[i] - points[j]) <= tol:
                parent[find(i)] = find(j)

    groups: dict[int, list[complex]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(points[i])
    return list(groups.values())


def _cluster_roots(roots) -> list[tuple[complex, int]]:
    return [(complex(np.mean(g)), len(g)) for g in _group_points(roots, EPS_ROOT)]


def _refine_factor(parent: np.ndarray, factor: np.ndarray, rounds: int = 4) -> np.ndarray:
    """Newton refinement of a monic factor of ``parent`` in its own
    coefficients: drive the division remainder to zero. Quadratically
    convergent near a true factor; returns the input unchanged when the
    correction is untrustworthy."""
    m = factor.size - 1
    if m < 1:
        return factor
    scale = float(np.max(np.abs(parent)))
    for _ in range(rounds):
        q, r = npoly.polydiv(parent, factor)
        rvec = np.zeros(m, dtype=complex)
        rvec[: r.size] = r[:m] if r.size > m else r
        if np.max(np.abs(rvec)) <= 1e-15 * scale:
            break
        M = np.zeros((m, m), dtype=complex)
        unit = np.zeros(m, dtype=complex)
        for j in range(m):
            unit[:] = 0.0
            unit[j] = 1.0
            col = npoly.polydiv(npoly.polymul(q, unit[: j + 1]), factor)[1]
            M[: col.size, j] = col[:m] if col.size > m else col
        try:
            delta = np.linalg.lstsq(M, rvec, rcond=None)[0]
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(delta)) or np.max(np.abs(delta)) > 10 * COARSE_CLUSTER * max(
            1.0, float(np.max(np.abs(factor)))
        ):
            break
        factor = factor.copy()
        factor[:m] += delta
    return factor


def _resolve_near_multiple_groups(clusters, coeffs) -> list[tuple[complex, int]]:
    """Re-derive roots inside each coarse near-multiple group from a
    Newton-refined monic factor, so that re-expanded products of reported
    roots reproduce the polynomial's coefficients."""
    points = [r for r, m in clusters for _ in range(m)]
    out: list[tuple[complex, int]] = []
    for group in _group_points(points, COARSE_CLUSTER):
        if len(group) == 1:
            out.append((group[0], 1))
            continue
        m = len(group)
        factor = npoly.polyfromroots(np.asarray(group, dtype=complex))
        factor = _refine_factor(np.asarray(coeffs, dtype=complex), factor)
        sub = npoly.polyroots(factor)
        # noise floor of an m-fold root: below it the subroots are one root
        noise = max(EPS_ROOT, 10.0 * float(np.finfo(float).eps) ** (1.0 / m))
        for sg in _group_points(list(sub), noise):
            out.append((complex(np.mean(sg)), len(sg)))
    return out


def _sorted_roots(pairs):
    return sorted(pairs, key=lambda rm: (rm[0].real, rm[0].imag))


def _deflate(coeffs: np.ndarray, r: complex, times: int) -> np.ndarray:
    """Divide a coefficient array by (z - r) ``times`` times, discarding
    the (near-zero) remainders."""
    for _ in range(times):
        coeffs = npoly.polydiv(coeffs, np.array([-r, 1.0], dtype=complex))[0]
    return coeffs


def _cancel_common_roots(num: ComplexPolynomial, den: ComplexPolynomial):
    """Cancel numerator/denominator root clusters that match within
    EPS_ROOT by synthetic deflation of the original coefficient arrays
    (which keeps the uncancelled structure exact). Returns
    (num_coeffs, den_coeffs, cancelled_any)."""
    nroots = poly_roots(num)
    droots = poly_roots(den)
    num_c, den_c = num.coeffs, den.coeffs
    den_left = [[r, m] for r, m in droots]
    cancelled = False
    for rn, mn in nroots:
        for slot in den_left:
            if slot[1] == 0:
                continue
            tol = EPS_ROOT * max(1.0, abs(rn), abs(slot[0]))
            if abs(rn - slot[0]) <= tol:
                take = min(mn, slot[1])
                # deflate at the better-determined root: the one seen with
                # the smaller multiplicity (simple roots are the sharpest)
                if mn < slot[1]:
                    r = rn
                elif slot[1] < mn:
                    r = slot[0]
                else:
                    r = 0.5 * (rn + slot[0])
                num_c = _deflate(num_c, r, take)
                den_c = _deflate(den_c, r, take)
                slot[1] -= take
                mn -= take
                cancelled = True
                if mn == 0:
                    break
        # leftover numerator multiplicity stays in num_c untouched
    return num_c, den_c, cancelled


class RationalFunction:
    """Reduced quotient of two complex polynomials with monic denominator.

    Construction reduces the quotient: common roots (within ``EPS_ROOT``)
    are cancelled, shared powers of z are stripped exactly, and the
    denominator is normalized to be monic.
    """

    __slots__ = ("num", "den", "_zeros", "_poles")

    def __init__(self, num, den=1.0):
        num = ComplexPolynomial._coerce(num)
        den = ComplexPolynomial._coerce(den)
        if den.is_zero:
            raise ZeroDenominator("denominator is the zero polynomial")
        if num.is_zero:
            num, den = ComplexPolynomial(), ComplexPolynomial([1.0])
        else:
            num, den = _reduce_quotient(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_zeros", None)
        object.__setattr__(self, "_poles", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> complex:
        if not self.is_constant:
            raise ValueError("not a constant rational function")
        return 0j if self.is_zero else complex(self.num.coeffs[0] / self.den.coeffs[0])

    def __call__(self, z):
        if self.is_zero:
            return np.zeros_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 0j
        return self.num(z) / self.den(z)

    def zeros(self) -> list[tuple[complex, int]]:
        if self._zeros is None:
            zs = [] if self.num.degree < 1 else poly_roots(self.num)
            object.__setattr__(self, "_zeros", zs)
        return self._zeros

    def poles(self) -> list[tuple[complex, int]]:
        if self._poles is None:
            ps = [] if self.den.degree < 1 else poly_roots(self.den)
            object.__setattr__(self, "_poles", ps)
        return self._poles

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, ComplexPolynomial):
            return RationalFunction(other)
        return RationalFunction(ComplexPolynomial._coerce(other))

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        # common reduced denominator: add numerators directly instead of
        # manufacturing (and then re-cancelling) its square
        if self.den.is_close(other.den, 1e-12):
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDenominator("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        n = int(n)
        if n == 0:
            return RationalFunction(1.0)
        if n < 0:
            if self.is_zero:
                raise ZeroDenominator("negative power of the zero function")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num**n, self.den**n)

    # -- circle structure ----------------------------------------------------

    def circle_conjugate(self) -> "RationalFunction":
        """The rational function agreeing with conj(self(z)) on |z| = 1.

        For coefficients c_j the result realizes sum conj(c_j) z^(-j),
        cleared to a single reduced quotient. Involution.
        """
        if self.is_zero:
            return self
        m = max(self.num.degree, self.den.degree)

        def rev(p):
            out = np.zeros(m + 1, dtype=complex)
            for j, cj in enumerate(p.coeffs):
                out[m - j] = np.conj(cj)
            return out

        return RationalFunction(rev(self.num), rev(self.den))

    def zero_classification(self) -> "RootClassification":
        return classify_roots(self.zeros())

    def pole_classification(self) -> "RootClassification":
        return classify_roots(self.poles())

    # Structural membership predicates used throughout the package. All of
    # them are exact pole/zero bookkeeping on the reduced form.

    def in_hardy2(self) -> bool:
        """Rational membership in the disc Hardy space: every pole lies
        strictly outside the closed unit disc."""
        pc = self.pole_classification()
        return not pc.inside and not pc.on_circle

    def is_outer(self) -> bool:
        """Outer in the rational sense: in the Hardy space with no zeros
        in the open unit disc (circle zeros are allowed)."""
        return (not self.is_zero) and self.in_hardy2() and not self.zero_classification().inside

    def is_invertible_analytic(self) -> bool:
        """The function and its reciprocal are analytic and bounded on the
        closed disc: no zeros or poles with modulus <= 1."""
        if self.is_zero:
            return False
        zc, pc = self.zero_classification(), self.pole_classification()
        return not (zc.inside or zc.on_circle or pc.inside or pc.on_circle)

    def is_invertible_coanalytic(self) -> bool:
        """The function and its reciprocal are analytic on the closed
        exterior region including infinity: all zeros and poles lie strictly
        inside the disc and the value at infinity is finite and nonzero."""
        if self.is_zero:
            return False
        zc, pc = self.zero_classification(), self.pole_classification()
        interior_only = not (zc.on_circle or zc.outside or pc.on_circle or pc.outside)
        return interior_only and self.num.degree == self.den.degree

    def taylor(self, n: int) -> np.ndarray:
        """Taylor coefficients at 0 up to degree ``n`` (requires no pole
        at the origin)."""
        b = self.den.coeffs
        if abs(b[0]) <= EPS_COEFF * np.max(np.abs(b)):
            raise ZeroDenominator("pole at the origin: no Taylor expansion")
        a = np.zeros(n + 1, dtype=complex)
        take = min(n + 1, self.num.coeffs.size)
        a[:take] = self.num.coeffs[:take]
        c = np.zeros(n + 1, dtype=complex)
        for k in range(n + 1):
            acc = a[k]
            jmax = min(k, b.size - 1)
            if jmax >= 1:
                acc = acc - np.dot(b[1 : jmax + 1], c[k - 1 :: -1][:jmax])
            c[k] = acc / b[0]
        return c

    # -- comparison / display ----------------------------------------------

    def is_close(self, other, tol: float = 1e-9) -> bool:
        """Equality of reduced forms up to coefficient noise."""
        other = self._coerce(other)
        return self.num.is_close(other.num, tol) and self.den.is_close(other.den, tol)

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        return format_rational(self)


def _reduce_quotient(num: ComplexPolynomial, den: ComplexPolynomial):
    # Strip shared powers of z exactly before any root finding.
    nscale, dscale = np.max(np.abs(num.coeffs)), np.max(np.abs(den.coeffs))
    nlead = 0
    while nlead < num.coeffs.size - 1 and abs(num.coeffs[nlead]) <= EPS_COEFF * nscale:
        nlead += 1
    dlead = 0
    while dlead < den.coeffs.size - 1 and abs(den.coeffs[dlead]) <= EPS_COEFF * dscale:
        dlead += 1
    shift = min(nlead, dlead)
    if shift:
        num = ComplexPolynomial(num.coeffs[shift:])
        den = ComplexPolynomial(den.coeffs[shift:])

    if den.degree == 0:
        return ComplexPolynomial(num.coeffs / den.coeffs[0]), ComplexPolynomial([1.0])
    if num.degree == 0:
        lead = den.lead
        return ComplexPolynomial(num.coeffs / lead), ComplexPolynomial(den.coeffs / lead)

    num_c, den_c, cancelled = _cancel_common_roots(num, den)
    if not cancelled:
        lead = den.lead
        return ComplexPolynomial(num.coeffs / lead), ComplexPolynomial(den.coeffs / lead)
    new_num = ComplexPolynomial(num_c)
    new_den = ComplexPolynomial(den_c)
    if new_den.degree == 0:
        return ComplexPolynomial(new_num.coeffs / new_den.coeffs[0]), ComplexPolynomial([1.0])
    lead = new_den.lead
    return ComplexPolynomial(new_num.coeffs / lead), ComplexPolynomial(new_den.coeffs / lead)


@dataclass(frozen=True)
class RootClassification:
    """Roots split by position relative to the unit circle.

    Classification uses the band ``EPS_CIRCLE``: a root with
    | |root| - 1 | < EPS_CIRCLE counts as on the circle. Roots just outside
    the band raise a ClassificationWarning, since floating data cannot
    distinguish them from circle roots.
    """

    inside: tuple
    on_circle: tuple
    outside: tuple

    @property
    def all_roots(self):
        return self.inside + self.on_circle + self.outside

    def count_inside(self) -> int:
        return sum(m for _, m in self.inside)

    def count_on_circle(self) -> int:
        return sum(m for _, m in self.on_circle)

    def count_outside(self) -> int:
        return sum(m for _, m in self.outside)


def classify_roots(roots) -> RootClassification:
    inside, on_circle, outside = [], [], []
    for r, m in roots:
        d = abs(abs(r) - 1.0)
        if d < EPS_CIRCLE:
            on_circle.append((r, m))
            continue
        if d < NEAR_CIRCLE:
            warnings.warn(
                f"root {r:.12g} lies {d:.3g} from the unit circle, just outside "
                f"the classification band ({EPS_CIRCLE:g})",
                ClassificationWarning,
                stacklevel=3,
            )
        (inside if abs(r) < 1.0 else outside).append((r, m))
    return RootClassification(tuple(inside), tuple(on_circle), tuple(outside))


class ToeplitzSymbol:
    """A rational function read as a symbol on the unit circle.

    ``value`` is the reduced quotient (conjugations already lowered to
    powers of 1/z). ``circle_invertible`` is true exactly when the reduced
    value has no zeros and no poles on the circle; the winding number
    (zeros inside minus poles inside, with multiplicity) is defined only
    in that case.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        value = RationalFunction._coerce(value)
        if value.is_zero:
            raise ZeroFunction("the zero symbol is rejected")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ToeplitzSymbol is immutable")

    @property
    def circle_invertible(self) -> bool:
        return (
            not self.value.zero_classification().on_circle
            and not self.value.pole_classification().on_circle
        )

    @property
    def winding(self) -> int:
        if not self.circle_invertible:
            raise NotInvertibleOnCircle(
                "symbol has a zero or pole on the unit circle; winding undefined"
            )
        return (
            self.value.zero_classification().count_inside()
            - self.value.pole_classification().count_inside()
        )

    def conjugate(self) -> "ToeplitzSymbol":
        return ToeplitzSymbol(self.value.circle_conjugate())

    def __mul__(self, other):
        other = as_symbol(other)
        return ToeplitzSymbol(self.value * other.value)

    def __truediv__(self, other):
        other = as_symbol(other)
        return ToeplitzSymbol(self.value / other.value)

    def __call__(self, z):
        return self.value(z)

    def __repr__(self):
        return f"ToeplitzSymbol({self.value!r})"

    def __str__(self):
        return format_rational(self.value)


def as_rational(x) -> RationalFunction:
    if isinstance(x, ToeplitzSymbol):
        return x.value
    return RationalFunction._coerce(x)


def as_symbol(x) -> ToeplitzSymbol:
    if isinstance(x, ToeplitzSymbol):
        return x
    return ToeplitzSymbol(as_rational(x))


def circle_conjugate(r):
    """Free-function form of ``RationalFunction.circle_conjugate``; accepts
    symbols, rationals, polynomials or scalars."""
    if isinstance(r, ToeplitzSymbol):
        return r.conjugate()
    return as_rational(r).circle_conjugate()


def winding_number(s) -> int:
    """Zeros inside the circle minus poles inside, with multiplicity."""
    return as_symbol(s).winding


def monomial(k: int) -> RationalFunction:
    """z**k as a rational function; negative k gives 1/z**(-k)."""
    if k >= 0:
        c = np.zeros(k + 1, dtype=complex)
        c[k] = 1.0
        return RationalFunction(c)
    c = np.zeros(-k + 1, dtype=complex)
    c[-k] = 1.0
    return RationalFunction([1.0], c)


def constant(c) -> RationalFunction:
    return RationalFunction([complex(c)])


Z = monomial(1)


# -- canonical printing ----------------------------------------------------


def format_complex(c, digits: int = 12) -> str:
    """Deterministic complex scalar display: real part before imaginary,
    ``digits`` significant digits, trailing 'i' for the imaginary part."""
    c = complex(c)
    re, im = c.real, c.imag
    scale = max(abs(re), abs(im))
    if scale > 0:
        if abs(re) <= 1e-13 * scale:
            re = 0.0
        if abs(im) <= 1e-13 * scale:
            im = 0.0
    if im == 0.0:
        return f"{re:.{digits}g}"
    if re == 0.0:
        return f"{im:.{digits}g}i"
    sign = "+" if im > 0 else "-"
    return f"{re:.{digits}g}{sign}{abs(im):.{digits}g}i"


def format_polynomial(p: ComplexPolynomial, digits: int = 12) -> str:
    p = ComplexPolynomial._coerce(p)
    if p.is_zero:
        return "0"
    scale = np.max(np.abs(p.coeffs))
    terms = []
    for j, cj in enumerate(p.coeffs):
        if abs(cj) <= EPS_COEFF * scale:
            continue
        cs = format_complex(cj, digits)
        needs_parens = ("+" in cs[1:]) or ("-" in cs[1:]) or cs.endswith("i")
        if j == 0:
            terms.append(f"({cs})" if needs_parens else cs)
            continue
        zpow = "z" if j == 1 else f"z^{j}"
        if cs == "1":
            terms.append(zpow)
        elif cs == "-1":
            terms.append(f"-{zpow}")
        elif needs_parens:
            terms.append(f"({cs})*{zpow}")
        else:
            terms.append(f"{cs}*{zpow}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def format_rational(r: RationalFunction, digits: int = 12) -> str:
    r = RationalFunction._coerce(r)
    num = format_polynomial(r.num, digits)
    if r.den.degree == 0 and abs(r.den.coeffs[0] - 1.0) <= 1e-13:
        return num
    den = format_polynomial(r.den, digits)
    nwrap = f"({num})" if (" " in num) else num
    dwrap = f"({den})" if (" " in den or "*" in den or "^" in den) else f"({den})"
    return f"{nwrap}/{dwrap}"

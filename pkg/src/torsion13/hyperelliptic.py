"""Hyperelliptic models v^2 + h(u)v = f(u) over Q and their reductions mod p.

The affine chart is complemented by the standard smooth-model chart at
infinity, U = 1/u and V = v/u^(g+1), which turns the equation into
V^2 + ht(U)V = ft(U) with ht = U^(g+1) h(1/U) and ft = U^(2g+2) f(1/U).
The U = 0 fiber of that chart carries the points at infinity.

Point counting over F_p and F_{p^2} is exhaustive enumeration; the
genus-2 Jacobian order comes from the zeta-function bookkeeping
N1, N2 -> (s1, s2) -> P(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import BadReductionError, PrimeField, build_quadratic_extension
from .polynomials import (Polynomial, enumerate_rationals, poly_gcd,
                          rat_is_square)


@dataclass(frozen=True)
class ModelPoint:
    """A point in the affine chart ("affine", u, v) or infinity chart ("infinity", 0, V)."""

    chart: str
    u: Fraction
    v: Fraction

    def to_json(self):
        return {
            "u": "inf" if self.chart == "infinity" else _frac_str(self.u),
            "v": _frac_str(self.v),
            "chart": self.chart,
        }


def _frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class HyperellipticModel:
    """Smooth hyperelliptic model (f, h) with genus floor((deg(h^2+4f)-1)/2)."""

    __slots__ = ("f", "h", "genus", "weight")

    def __init__(self, f: Polynomial, h: Polynomial):
        f = f.map_coefficients(Fraction)
        h = h.map_coefficients(Fraction)
        branch = h * h + 4 * f
        if branch.is_zero():
            raise ValueError("h^2 + 4f vanishes identically")
        if poly_gcd(branch, branch.derivative()).degree > 0:
            raise ValueError("h^2 + 4f is not squarefree: singular model")
        genus = (branch.degree - 1) // 2
        if genus < 1:
            raise ValueError("genus must be >= 1")
        if h.degree > genus + 1:
            raise ValueError("deg h exceeds g + 1")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "weight", genus + 1)

    def __setattr__(self, name, value):
        raise AttributeError("HyperellipticModel is immutable")

    def infinity_chart(self):
        """The transformed pair (ft, ht) describing the curve near infinity."""
        ft = self.f.reversed(2 * self.genus + 2)
        ht = self.h.reversed(self.weight)
        return ft, ht

    def points_at_infinity(self):
        """Rational points in the U = 0 fiber of the infinity chart."""
        ft, ht = self.infinity_chart()
        f0, h0 = Fraction(ft[0]), Fraction(ht[0])
        return [ModelPoint("infinity", Fraction(0), v)
                for v in _quadratic_roots(h0, f0)]

    def satisfies(self, point: ModelPoint) -> bool:
        if point.chart == "affine":
            return point.v**2 + self.h(point.u) * point.v == self.f(point.u)
        ft, ht = self.infinity_chart()
        return point.v**2 + ht(point.u) * point.v == ft(point.u)

    def reduce_coefficients(self, field):
        """Both charts' polynomials with coefficients mapped into a finite field."""
        try:
            fbar = self.f.map_coefficients(field)
            hbar = self.h.map_coefficients(field)
            ft, ht = self.infinity_chart()
            ftbar = ft.map_coefficients(field)
            htbar = ht.map_coefficients(field)
        except BadReductionError as exc:
            raise BadReductionError(f"model has bad reduction: {exc}") from exc
        return fbar, hbar, ftbar, htbar

    def __repr__(self):
        return f"HyperellipticModel(f={self.f}, h={self.h}, genus={self.genus})"

    def to_json(self):
        return {"f": self.f.to_json(), "h": self.h.to_json()}

    @classmethod
    def from_json(cls, data) -> HyperellipticModel:
        return cls(Polynomial.from_json(data["f"]), Polynomial.from_json(data["h"]))


def _quadratic_roots(h0: Fraction, f0: Fraction):
    """Rational solutions v of v^2 + h0 v = f0, sorted ascending."""
    ok, s = rat_is_square(h0 * h0 + 4 * f0)
    if not ok:
        return []
    if s == 0:
        return [-h0 / 2]
    return sorted(((-h0 - s) / 2, (-h0 + s) / 2))


def genus(model: HyperellipticModel) -> int:
    return model.genus


def count_points(model: HyperellipticModel, field) -> int:
    """Number of points over a finite field, both charts, by exhaustive enumeration."""
    fbar, hbar, ftbar, htbar = model.reduce_coefficients(field)
    elements = list(field.elements())
    total = 0
    for u in elements:
        fu = fbar(u)
        hu = hbar(u)
        for v in elements:
            if v * v + hu * v == fu:
                total += 1
    zero = field.zero
    f0 = ftbar(zero)
    h0 = htbar(zero)
    for v in elements:
        if v * v + h0 * v == f0:
            total += 1
    return total


def is_smooth_mod_p(model: HyperellipticModel, p: int) -> bool:
    """Good reduction test: no singular point on either chart of the curve mod p.

    A point is singular when F = dF/du = dF/dv = 0 for F = v^2 + hv - f.
    The affine chart is scanned fully; the infinity chart only along U = 0,
    which is exactly the locus the affine chart misses.
    """
    field = PrimeField(p)
    fbar, hbar, ftbar, htbar = model.reduce_coefficients(field)
    if _chart_has_singular_point(fbar, hbar, field, full_scan=True):
        return False
    if _chart_has_singular_point(ftbar, htbar, field, full_scan=False):
        return False
    return True


def _chart_has_singular_point(fbar, hbar, field, full_scan: bool) -> bool:
    fprime = fbar.derivative()
    hprime = hbar.derivative()
    us = list(field.elements()) if full_scan else [field.zero]
    for u in us:
        fu, hu = fbar(u), hbar(u)
        fpu, hpu = fprime(u), hprime(u)
        for v in field.elements():
            if (v * v + hu * v - fu) == field.zero and \
                    (hpu * v - fpu) == field.zero and \
                    (2 * v + hu) == field.zero:
                return True
    return False


def search_rational_points(model: HyperellipticModel, height: int):
    """All rational points whose u-coordinate has height <= height, plus infinity.

    For each candidate u the quadratic in v is solved exactly; a point
    exists iff h(u)^2 + 4f(u) is a rational square.  The output order is
    fixed: infinity points first, then affine points in the height
    enumeration order of u with v ascending.
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    found = list(model.points_at_infinity())
    for u in enumerate_rationals(height):
        h0 = Fraction(model.h(u))
        f0 = Fraction(model.f(u))
        for v in _quadratic_roots(h0, f0):
            found.append(ModelPoint("affine", u, v))
    return found


def jacobian_order_fp(model: HyperellipticModel, p: int) -> int:
    """#J(F_p) for a genus-2 model with good reduction at p.

    With N1 = #C(F_p) and N2 = #C(F_{p^2}), put s1 = p + 1 - N1 and
    s2 = (s1^2 - (p^2 + 1 - N2)) / 2; the Jacobian order is the value of
    the zeta numerator at 1: 1 - s1 + s2 - p*s1 + p^2.
    """
    if model.genus != 2:
        raise ValueError("L-polynomial bookkeeping implemented for genus 2 only")
    if not is_smooth_mod_p(model, p):
        raise BadReductionError(f"bad reduction at {p}")
    n1 = count_points(model, PrimeField(p))
    n2 = count_points(model, build_quadratic_extension(p))
    s1 = p + 1 - n1
    s2_twice = s1 * s1 - (p * p + 1 - n2)
    if s2_twice % 2:
        raise ArithmeticError("inconsistent point counts (odd 2*s2)")
    s2 = s2_twice // 2
    return 1 - s1 + s2 - p * s1 + p * p


def mod_p_residues(model: HyperellipticModel, points, p: int):
    """Reductions mod p of rational model points, as hashable tuples.

    Affine points map to ("affine", u mod p, v mod p); infinity-chart
    points to ("infinity", 0, V mod p).  Raises BadReductionError if any
    coordinate has a denominator divisible by p.
    """
    field = PrimeField(p)
    out = set()
    for pt in points:
        if pt.chart == "affine":
            out.add(("affine", field(Fraction(pt.u)).value, field(Fraction(pt.v)).value))
        else:
            out.add(("infinity", 0, field(Fraction(pt.v)).value))
    return out


def points_mod_p(model: HyperellipticModel, p: int):
    """All points of the reduced curve over F_p, as hashable tuples (same keys as residues)."""
    field = PrimeField(p)
    fbar, hbar, ftbar, htbar = model.reduce_coefficients(field)
    pts = set()
    for u in field.elements():
        fu, hu = fbar(u), hbar(u)
        for v in field.elements():
            if v * v + hu * v == fu:
                pts.add(("affine", u.value, v.value))
    zero = field.zero
    f0, h0 = ftbar(zero), htbar(zero)
    for v in field.elements():
        if v * v + h0 * v == f0:
            pts.add(("infinity", 0, v.value))
    return pts

"""The one-parameter family of curves over Q acquiring a 13-torsion point
over a cyclic cubic field.

For rational t != 0 the curve is

    E_t : y^2 = x^3 - 27 A(t) x + 54 (t^2 + 1) B(t)

and the torsion point P_t lives in Q(w), where w is a root of

    w^3 + (-t^3 + t^2 - 3t + 1) w^2 + (-t^3 + 2t^2 - 2t) w + t^2.

That cubic has discriminant t^4 (t^4 - t^3 + 5t^2 + t + 1)^2, a nonzero
square for every rational t != 0 (the quartic has no rational roots), so
its splitting field is cyclic of degree dividing 3.  The coordinates of
P_t share the denominator t^4 - t^3 + 5t^2 + t + 1:

    x(P_t) = (36 t w + 3 (t^6 - 3t^5 + 4t^4 - 6t^3 - 8t^2 + 3t + 1)) / den
    y(P_t) = 108 t ((t - 1) w + t) / den

This y-coordinate is pinned down (up to sign) by x(P_t) and the curve
equation; both the on-curve identity and order 13 hold for it in
Q(t)[w] / (w-cubic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elliptic import CurvePoint, WeierstrassCurve, point_order
from .fields import NumberField
from .polynomials import (Polynomial, RationalFunction, discriminant_cubic,
                          qpoly, rat_is_square, rational_roots)

DENOMINATOR_QUARTIC = qpoly(1, 1, 5, -1, 1)

A_FUNCTION = RationalFunction(
    qpoly(1, 5, 7, 5, 0, -5, 7, -5, 1),
    DENOMINATOR_QUARTIC)

B_FUNCTION = RationalFunction(
    qpoly(1, 8, 25, 44, 40, -18, -40, 18, 40, -44, 25, -8, 1),
    DENOMINATOR_QUARTIC * DENOMINATOR_QUARTIC)

# w-cubic coefficients as polynomials in t (constant term first per power of w)
W_CUBIC_COEFF_POLYS = (
    qpoly(0, 0, 1),            # t^2
    qpoly(0, -2, 2, -1),       # -t^3 + 2t^2 - 2t
    qpoly(1, -3, 1, -1),       # -t^3 + t^2 - 3t + 1
    qpoly(1),
)

X_NUMERATOR_CONSTANT = qpoly(1, 3, -8, -6, 4, -3, 1)   # t^6 - 3t^5 + 4t^4 - 6t^3 - 8t^2 + 3t + 1


def w_cubic(t) -> Polynomial:
    """The cubic in w at a rational parameter value."""
    t = Fraction(t)
    return Polynomial([c(t) for c in W_CUBIC_COEFF_POLYS])


def w_cubic_discriminant_target() -> Polynomial:
    """t^4 (t^4 - t^3 + 5t^2 + t + 1)^2 as an element of Q[t]."""
    return qpoly(0, 0, 0, 0, 1) * DENOMINATOR_QUARTIC ** 2


def verify_w_disc_identity() -> bool:
    """Exact polynomial identity: disc of the w-cubic equals its stated target."""
    d, c, b, a = W_CUBIC_COEFF_POLYS[0], W_CUBIC_COEFF_POLYS[1], \
        W_CUBIC_COEFF_POLYS[2], W_CUBIC_COEFF_POLYS[3]
    disc = discriminant_cubic(a, b, c, d)
    return disc == w_cubic_discriminant_target()


def jeon_parameter(t) -> Fraction:
    """Translate the parameter to the normalization -7/72 - 1/(36t)."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("parameter must be nonzero")
    return Fraction(-7, 72) - Fraction(1, 1) / (36 * t)


@dataclass(frozen=True)
class FamilyInstance:
    """One member of the family at a rational parameter value.

    status is "cyclic" when the w-cubic is irreducible (the generic case);
    "split" records the degenerate situation where it factors over Q, with
    the torsion-point formulas evaluated componentwise at each root.
    """

    t: Fraction
    a_value: Fraction
    b_value: Fraction
    curve: WeierstrassCurve
    w_minimal: Polynomial
    disc_w: Fraction
    status: str
    field: NumberField | None
    point: CurvePoint | None
    split_points: tuple


def _point_coordinates(t: Fraction, w):
    """Coordinates of the torsion point with w either a field generator or a Fraction."""
    den = DENOMINATOR_QUARTIC(t)
    x = (36 * t * w + 3 * X_NUMERATOR_CONSTANT(t)) / den
    y = (108 * t * ((t - 1) * w + t)) / den
    return x, y


def build_family_instance(t) -> FamilyInstance:
    """Evaluate the family data at a rational t != 0."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("parameter must be nonzero")
    a_value = A_FUNCTION(t)
    b_value = B_FUNCTION(t)
    zero = Fraction(0)
    curve = WeierstrassCurve(zero, zero, zero,
                             -27 * a_value,
                             54 * (t * t + 1) * b_value)
    cubic = w_cubic(t)
    disc_w = Fraction(discriminant_cubic(Fraction(1), cubic[2], cubic[1], cubic[0]))
    roots = rational_roots(cubic)
    if not roots:
        field = NumberField(cubic)
        w = field.generator()
        x, y = _point_coordinates(t, w)
        point = CurvePoint(x, y)
        return FamilyInstance(t, a_value, b_value, curve, cubic, disc_w,
                              "cyclic", field, point, ())
    # square nonzero discriminant: a rational root forces a full split
    split = []
    for root in sorted(roots):
        x, y = _point_coordinates(t, root)
        split.append(CurvePoint(x, y))
    return FamilyInstance(t, a_value, b_value, curve, cubic, disc_w,
                          "split", None, None, tuple(split))


@dataclass(frozen=True)
class FamilyVerification:
    """Structured outcome of the per-instance checks."""

    t: Fraction
    on_curve: bool
    order: int | None
    disc_is_square: bool
    disc_nonzero: bool
    passed: bool
    failures: tuple

    def to_json(self):
        return {
            "t": _frac(self.t),
            "on_curve": self.on_curve,
            "order": self.order,
            "disc_is_square": self.disc_is_square,
            "disc_nonzero": self.disc_nonzero,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def verify_family_instance(instance: FamilyInstance, bound: int = 20) -> FamilyVerification:
    """Assert the defining properties of a cyclic instance.

    Checks, in order: the point satisfies the curve equation over Q(w);
    its order is exactly 13; the w-cubic discriminant is a nonzero
    rational square.  Failures are collected, not raised.
    """
    failures = []
    if instance.status != "cyclic":
        failures.append(f"w-cubic splits at t={instance.t}")
        return FamilyVerification(instance.t, False, None, False, False,
                                  False, tuple(failures))
    on_curve = instance.curve.is_on_curve(instance.point)
    if not on_curve:
        failures.append("point does not satisfy the curve equation")
    order = None
    if on_curve:
        order = point_order(instance.curve, instance.point, bound)
        if order != 13:
            failures.append(f"order {order} != 13")
    square, _ = rat_is_square(instance.disc_w)
    nonzero = instance.disc_w != 0
    if not square or not nonzero:
        failures.append(f"w-cubic discriminant {instance.disc_w} not a nonzero square")
    return FamilyVerification(instance.t, on_curve, order, square, nonzero,
                              not failures, tuple(failures))

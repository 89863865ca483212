"""The sporadic datum: the cyclic cubic field Q(alpha) with
alpha^3 - alpha^2 - 82 alpha + 64 = 0 and the Tate-form curve over it

    E0 : y^2 + (1-c) xy - by = x^3 - bx^2,
    b = (10 alpha^2 + 90 alpha - 1936) / 19773,
    c = (6 alpha^2 + 50 alpha - 208) / 1521,

whose point (0,0) has order 13.  The field is tied to the fiber of the
y-coordinate map above -4/13 by comparing how the two defining cubics
split modulo many primes (evidence of isomorphism, not a proof).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elliptic import point_order, tate_curve, tate_origin
from .fields import NumberField, splitting_fingerprint
from .polynomials import (Polynomial, discriminant_cubic, qpoly, rat_is_square,
                          rational_roots)
from .x13 import FiberMap, fiber_cubic

SPORADIC_MIN_POLY = qpoly(64, -82, -1, 1)

# a different cyclic cubic (disc 13^2); guards the fingerprint test's power
CONTRAST_CUBIC = qpoly(1, -4, 1, 1)

SPORADIC_FIBER_VALUE = Fraction(-4, 13)

B_COORDS = (Fraction(-1936, 19773), Fraction(90, 19773), Fraction(10, 19773))
C_COORDS = (Fraction(-208, 1521), Fraction(50, 1521), Fraction(6, 1521))


def sporadic_field() -> NumberField:
    return NumberField(SPORADIC_MIN_POLY)


def sporadic_parameters(field: NumberField):
    """The Tate parameters (b, c) as elements of the field."""
    return field(*B_COORDS), field(*C_COORDS)


def sporadic_curve():
    """The field, the curve, and its distinguished point (0, 0)."""
    field = sporadic_field()
    b, c = sporadic_parameters(field)
    curve = tate_curve(b, c)
    return field, curve, tate_origin(curve)


@dataclass(frozen=True)
class AssertionResult:
    name: str
    passed: bool
    detail: str

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def verify_sporadic():
    """Run the verifiable properties of the sporadic datum, in order.

    1. the defining cubic has no rational root (irreducible);
    2. its discriminant is 1482^2, and 1482^2 / 247^2 = 36 is a square
       (consistent with field discriminant 247^2);
    3. the curve is nonsingular;
    4. (0,0) has order exactly 13;
    5. j of the curve is irrational, so the curve is not defined over Q.
    """
    results = []

    roots = rational_roots(SPORADIC_MIN_POLY)
    results.append(AssertionResult(
        "minimal_polynomial_irreducible", not roots,
        f"rational roots: {sorted(roots) if roots else 'none'}"))

    disc = discriminant_cubic(Fraction(1), Fraction(-1), Fraction(-82), Fraction(64))
    disc_ok = disc == 2196324 == 1482**2
    index_sq, index_root = rat_is_square(Fraction(disc, 247**2))
    results.append(AssertionResult(
        "polynomial_discriminant", disc_ok and index_sq and index_root == 6,
        f"disc = {disc}, disc/247^2 = {Fraction(disc, 247 ** 2)}"))

    try:
        field, curve, origin = sporadic_curve()
        results.append(AssertionResult("curve_nonsingular", True,
                                       "discriminant is nonzero"))
    except ValueError as exc:
        results.append(AssertionResult("curve_nonsingular", False, str(exc)))
        return results

    order = point_order(curve, origin, 20)
    results.append(AssertionResult("origin_has_order_13", order == 13,
                                   f"order = {order}"))

    j = curve.j
    results.append(AssertionResult("j_invariant_irrational", not j.is_rational(),
                                   f"j coordinates = {j.coords}"))
    return results


def monic_integral_cubic(p: Polynomial) -> Polynomial:
    """Monic integer cubic with the same splitting behavior as a*x^3+b*x^2+c*x+d.

    Substituting x -> x/a and scaling by a^2 gives x^3 + b x^2 + ac x + a^2 d,
    which has the same root counts modulo any prime not dividing a.
    """
    if p.degree != 3:
        raise ValueError("need a cubic")
    d, c, b, a = (Fraction(p[i]) for i in range(4))
    out = Polynomial([a * a * d, a * c, b, Fraction(1)])
    if any(co.denominator != 1 for co in out.coeffs):
        raise ValueError("input cubic was not integral")
    return out


def sporadic_fiber_cubic() -> Polynomial:
    """The fiber cubic of the y-map above -4/13, made monic and integral."""
    cubic = fiber_cubic(FiberMap.Y, SPORADIC_FIBER_VALUE)
    if Fraction(cubic.leading_coefficient) < 0:
        cubic = -cubic
    return monic_integral_cubic(cubic)


@dataclass(frozen=True)
class FingerprintReport:
    """Splitting-fingerprint comparison between the fiber cubic and the field cubic."""

    bound: int
    fiber_cubic: Polynomial
    fiber_disc_square: bool
    field_disc_square: bool
    compared_primes: int
    fingerprints_agree: bool
    first_disagreement: int | None
    contrast_first_disagreement: int | None

    def to_json(self):
        return {
            "bound": self.bound,
            "fiber_cubic": self.fiber_cubic.to_json(),
            "fiber_disc_square": self.fiber_disc_square,
            "field_disc_square": self.field_disc_square,
            "compared_primes": self.compared_primes,
            "fingerprints_agree": self.fingerprints_agree,
            "first_disagreement": self.first_disagreement,
            "contrast_first_disagreement": self.contrast_first_disagreement,
        }


def fiber_field_evidence(bound: int = 1000) -> FingerprintReport:
    """Compare mod-p splitting of the -4/13 fiber cubic with the field cubic.

    Both cubics must be cyclic (square discriminant) and their root counts
    must agree at every common unramified prime up to the bound.  As a
    control, a different cyclic cubic must disagree with the field cubic
    at some prime (the first such prime is recorded); agreement of the
    fingerprints is evidence for, not proof of, a field isomorphism.
    """
    if bound < 50:
        raise ValueError("bound must be >= 50")
    fiber = sporadic_fiber_cubic()
    if rational_roots(fiber):
        raise ArithmeticError("fiber cubic above -4/13 is unexpectedly reducible")

    def cubic_disc(p: Polynomial) -> Fraction:
        return Fraction(discriminant_cubic(p[3], p[2], p[1], p[0]))

    fiber_sq, _ = rat_is_square(cubic_disc(fiber))
    field_sq, _ = rat_is_square(cubic_disc(SPORADIC_MIN_POLY))

    fp_fiber = splitting_fingerprint(fiber, bound)
    fp_field = splitting_fingerprint(SPORADIC_MIN_POLY, bound)
    common = sorted(set(fp_fiber) & set(fp_field))
    first_disagreement = None
    for p in common:
        if fp_fiber[p] != fp_field[p]:
            first_disagreement = p
            break

    contrast_bound = 100
    contrast_first = None
    while contrast_first is None and contrast_bound <= bound:
        fp_contrast = splitting_fingerprint(CONTRAST_CUBIC, contrast_bound)
        for p in sorted(set(fp_contrast) & set(fp_field)):
            if fp_contrast[p] != fp_field[p]:
                contrast_first = p
                break
        if contrast_first is None:
            contrast_bound *= 2
    return FingerprintReport(
        bound=bound,
        fiber_cubic=fiber,
        fiber_disc_square=fiber_sq,
        field_disc_square=field_sq,
        compared_primes=len(common),
        fingerprints_agree=first_disagreement is None,
        first_disagreement=first_disagreement,
        contrast_first_disagreement=contrast_first,
    )

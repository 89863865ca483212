"""The genus-2 curve X with model y^2 + (x^3+x^2+1) y = x^2 + x, its six
rational points, and the two explicit degree-3 maps to the line:

  * the y-coordinate map, with fiber cubic  y*x^3 + (y-1)*x^2 - x + (y^2+y),
  * the map (y+1)/x with parameter t, where y = x*t - 1 substituted into
    the model and divided by the common factor x leaves the fiber cubic
    t*x^3 + (t-1)*x^2 + (t^2-2)*x - (t+1).

The discriminant loci of the two maps are the stored sextic d1(y) and the
degree-9 d2(t); requiring squareness cuts out the auxiliary hyperelliptic
curves searched for rational points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .hyperelliptic import HyperellipticModel, ModelPoint, jacobian_order_fp, is_smooth_mod_p
from .polynomials import (Polynomial, RationalFunction, discriminant_cubic,
                          enumerate_rationals, poly_sqrt, qpoly, rat_is_square,
                          rational_roots)

# model of X: h = x^3 + x^2 + 1, f = x^2 + x
X13_MODEL = HyperellipticModel(f=qpoly(0, 1, 1), h=qpoly(1, 0, 1, 1))

# the six rational points: four affine, two at infinity (V^2 + V = 0)
X13_RATIONAL_POINTS = (
    ModelPoint("infinity", Fraction(0), Fraction(-1)),
    ModelPoint("infinity", Fraction(0), Fraction(0)),
    ModelPoint("affine", Fraction(-1), Fraction(-1)),
    ModelPoint("affine", Fraction(-1), Fraction(0)),
    ModelPoint("affine", Fraction(0), Fraction(-1)),
    ModelPoint("affine", Fraction(0), Fraction(0)),
)

# d1(y) = (y+1)(-27y^5 - 31y^4 - 6y^3 + 6y^2 + 5y + 1), stored expanded
D1_FACTOR_QUINTIC = qpoly(1, 5, 6, -6, -31, -27)
D1_POLY = qpoly(1, 1) * D1_FACTOR_QUINTIC
# d2(t) = t(t+1)^3(-4t^5 + 5t^4 - t^3 - 25t^2 - 23t - 4), stored expanded
D2_FACTOR_QUINTIC = qpoly(-4, -23, -25, -1, 5, -4)
D2_POLY = qpoly(0, 1) * qpoly(1, 1) ** 3 * D2_FACTOR_QUINTIC

# D1: s^2 = d1(y), genus 2
D1_MODEL = HyperellipticModel(f=D1_POLY, h=Polynomial())
# D2: s^2 = d2(t)/(t+1)^2 cleared to s^2 = t(t+1) * quintic, genus 3
D2_RAW_MODEL = HyperellipticModel(f=qpoly(0, 1) * qpoly(1, 1) * D2_FACTOR_QUINTIC,
                                  h=Polynomial())
# minimal model of D2, good reduction at 2
D2_MIN_MODEL = HyperellipticModel(f=qpoly(0, -1, -2, -7, -13, -8, 0, 1),
                                  h=qpoly(0, 0, 1, 1))


class FiberMap(enum.Enum):
    """The two degree-3 maps to the line whose fibers are classified."""

    Y = "y"
    T = "t"


class FiberKind(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT_RATIONAL = "split_rational"
    CYCLIC_CUBIC = "cyclic_cubic"
    NON_CYCLIC_CUBIC = "non_cyclic_cubic"
    DEGENERATE_DEGREE_DROP = "degenerate_degree_drop"


@dataclass(frozen=True)
class FiberClassification:
    """Classification of one fiber, with the witnesses that decided it."""

    map: FiberMap
    value: Fraction
    kind: FiberKind
    cubic: Polynomial
    rational_roots: tuple
    discriminant: Fraction
    discriminant_is_square: bool
    includes_infinity: bool

    def to_json(self):
        return {
            "map": self.map.value,
            "value": _frac(self.value),
            "kind": self.kind.value,
            "cubic": self.cubic.to_json(),
            "rational_roots": [_frac(r) for r in self.rational_roots],
            "discriminant": _frac(self.discriminant),
            "discriminant_is_square": self.discriminant_is_square,
            "includes_infinity": self.includes_infinity,
        }


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _clear_denominators(p: Polynomial) -> Polynomial:
    """Scale by the positive lcm of coefficient denominators."""
    lcm = 1
    for c in p.coeffs:
        c = Fraction(c)
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return p * Fraction(lcm)


def fiber_cubic(fiber_map: FiberMap, value) -> Polynomial:
    """The fiber polynomial in x above a rational value, denominators cleared.

    The y-map fiber is the model equation with y fixed; the t-map fiber is
    the substitution y = x*t - 1 with the base-point factor x removed.
    """
    value = Fraction(value)
    if fiber_map is FiberMap.Y:
        coeffs = [value * value + value, Fraction(-1), value - 1, value]
    else:
        coeffs = [-(value + 1), value * value - 2, value - 1, value]
    return _clear_denominators(Polynomial(coeffs))


def symbolic_fiber_coefficients(fiber_map: FiberMap):
    """The x^0..x^3 coefficients of the fiber polynomial as elements of Q[parameter]."""
    if fiber_map is FiberMap.Y:
        return (qpoly(0, 1, 1), qpoly(-1), qpoly(-1, 1), qpoly(0, 1))
    return (qpoly(-1, -1), qpoly(-2, 0, 1), qpoly(-1, 1), qpoly(0, 1))


def classify_fiber(fiber_map: FiberMap, value) -> FiberClassification:
    """Place one fiber into ramified / split / cyclic / non-cyclic / degenerate.

    A degree drop (vanishing x^3 coefficient) moves one point of the fiber
    to infinity; such fibers are classified from the lower-degree
    polynomial and are ramified as soon as a repeated point appears there
    or the drop is by two or more degrees.
    """
    value = Fraction(value)
    cubic = fiber_cubic(fiber_map, value)
    if cubic.degree == 3:
        d, c, b, a = (Fraction(cubic[i]) for i in range(4))
        disc = Fraction(discriminant_cubic(a, b, c, d))
        roots = tuple(sorted(rational_roots(cubic)))
        square, _ = rat_is_square(disc)
        if disc == 0:
            kind = FiberKind.RAMIFIED
        elif roots:
            kind = FiberKind.SPLIT_RATIONAL
        elif square:
            kind = FiberKind.CYCLIC_CUBIC
        else:
            kind = FiberKind.NON_CYCLIC_CUBIC
        return FiberClassification(fiber_map, value, kind, cubic, roots, disc,
                                   square and disc != 0, False)
    # degree drop: infinity absorbs 3 - deg points of the fiber
    if cubic.is_zero():
        raise ValueError("fiber polynomial vanished identically")
    degree = cubic.degree
    roots = tuple(sorted(rational_roots(cubic)))
    if degree <= 1:
        kind = FiberKind.RAMIFIED
        disc = Fraction(0)
        square = False
    else:
        a2, a1, a0 = Fraction(cubic[2]), Fraction(cubic[1]), Fraction(cubic[0])
        disc = a1 * a1 - 4 * a2 * a0
        square, _ = rat_is_square(disc)
        kind = FiberKind.RAMIFIED if disc == 0 else FiberKind.DEGENERATE_DEGREE_DROP
    return FiberClassification(fiber_map, value, kind, cubic, roots, disc,
                               square and disc != 0, True)


@dataclass(frozen=True)
class DiscIdentityReport:
    """Outcome of checking disc_x(fiber polynomial) against the stored locus."""

    map: FiberMap
    computed: Polynomial
    stored: Polynomial
    quotient: RationalFunction
    quotient_sqrt: RationalFunction
    exact_match: bool

    def to_json(self):
        return {
            "map": self.map.value,
            "computed_discriminant": self.computed.to_json(),
            "stored_locus": self.stored.to_json(),
            "quotient_numerator": self.quotient.numerator.to_json(),
            "quotient_denominator": self.quotient.denominator.to_json(),
            "sqrt_numerator": self.quotient_sqrt.numerator.to_json(),
            "sqrt_denominator": self.quotient_sqrt.denominator.to_json(),
            "exact_match": self.exact_match,
        }


def verify_disc_identity(fiber_map: FiberMap) -> DiscIdentityReport:
    """Certify disc_x(fiber) = stored locus up to a square in the function field.

    The discriminant is computed from the closed cubic formula with
    coefficients in Q[parameter]; the quotient by the stored d1 or d2 must
    be the square of a rational function, and is recorded exactly.
    """
    a0, a1, a2, a3 = symbolic_fiber_coefficients(fiber_map)
    disc = discriminant_cubic(a3, a2, a1, a0)
    stored = D1_POLY if fiber_map is FiberMap.Y else D2_POLY
    quotient = RationalFunction(disc, stored)
    sqrt_num = poly_sqrt(quotient.numerator)
    sqrt_den = poly_sqrt(quotient.denominator)
    if sqrt_num is None or sqrt_den is None:
        raise ArithmeticError(
            f"discriminant locus mismatch for map {fiber_map.value}: "
            f"quotient {quotient} is not a square")
    exact = quotient.numerator == quotient.denominator == qpoly(1)
    return DiscIdentityReport(fiber_map, disc, stored, quotient,
                              RationalFunction(sqrt_num, sqrt_den), exact)


def nineteen_divisibility(primes) -> dict:
    """For each good odd prime, the Jacobian order of X over F_p and whether 19 divides it."""
    out = {}
    for p in primes:
        if p == 13:
            raise ValueError("13 is the bad prime of the model")
        if not is_smooth_mod_p(X13_MODEL, p):
            raise ValueError(f"model has bad reduction at {p}")
        order = jacobian_order_fp(X13_MODEL, p)
        out[p] = {"jacobian_order": order, "divisible_by_19": order % 19 == 0}
    return out


def classify_sweep(fiber_map: FiberMap, height: int):
    """Classification of every fiber over rationals of height <= height."""
    return {v: classify_fiber(fiber_map, v) for v in enumerate_rationals(height)}

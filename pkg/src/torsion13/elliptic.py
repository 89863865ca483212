"""Long-Weierstrass elliptic curves over an exact field.

y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, with the chord-tangent
group law written in characteristic-agnostic form.  Coefficients may be
Fractions or any field element kind from the fields module.  Points are
affine pairs plus a distinguished point at infinity; no projective
coordinates are exposed.
"""

from __future__ import annotations

from fractions import Fraction


class SingularCurveError(ValueError):
    """The requested Weierstrass model has vanishing discriminant."""


class OrderBoundExceededError(ValueError):
    """A point's order exceeds the bound handed to point_order."""


class CurvePoint:
    """Affine point (x, y) or the point at infinity."""

    __slots__ = ("x", "y", "is_infinity")

    def __init__(self, x, y):
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "is_infinity", False)

    def __setattr__(self, name, value):
        raise AttributeError("CurvePoint is immutable")

    @classmethod
    def infinity(cls) -> CurvePoint:
        pt = cls.__new__(cls)
        object.__setattr__(pt, "x", None)
        object.__setattr__(pt, "y", None)
        object.__setattr__(pt, "is_infinity", True)
        return pt

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity:
            return hash("inf")
        return hash((self.x, self.y))

    def __repr__(self):
        if self.is_infinity:
            return "Point(inf)"
        return f"Point({self.x}, {self.y})"

    def to_json(self):
        if self.is_infinity:
            return "inf"
        return [_field_json(self.x), _field_json(self.y)]


INFINITY = CurvePoint.infinity()


def _field_json(v):
    f = getattr(v, "to_json", None)
    if f is not None:
        return f()
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


class WeierstrassCurve:
    """Nonsingular long Weierstrass model with cached standard invariants."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6",
                 "b2", "b4", "b6", "b8", "c4", "c6", "disc", "j")

    def __init__(self, a1, a2, a3, a4, a6):
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * (a2 * a6) - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2 * b2 * b2) + 36 * (b2 * b4) - 216 * b6
        disc = -(b2 * b2) * b8 - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6)
        if not disc:
            raise SingularCurveError("discriminant is zero")
        j = c4 * c4 * c4 / disc
        for name, value in (("a1", a1), ("a2", a2), ("a3", a3), ("a4", a4), ("a6", a6),
                            ("b2", b2), ("b4", b4), ("b6", b6), ("b8", b8),
                            ("c4", c4), ("c6", c6), ("disc", disc), ("j", j)):
            object.__setattr__(self, name, value)
        # standard formulary identities, cheap enough to assert outright
        assert 4 * b8 == b2 * b6 - b4 * b4
        assert 1728 * disc == c4 * c4 * c4 - c6 * c6

    def __setattr__(self, name, value):
        raise AttributeError("WeierstrassCurve is immutable")

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def invariants(self):
        return (self.b2, self.b4, self.b6, self.b8, self.c4, self.c6, self.disc, self.j)

    def is_on_curve(self, point: CurvePoint) -> bool:
        if point.is_infinity:
            return True
        x, y = point.x, point.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * (x * x) + self.a4 * x + self.a6
        return lhs == rhs

    def __eq__(self, other):
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(self.coefficients())

    def __repr__(self):
        return (f"WeierstrassCurve(a1={self.a1}, a2={self.a2}, a3={self.a3}, "
                f"a4={self.a4}, a6={self.a6})")

    def to_json(self):
        return [_field_json(a) for a in self.coefficients()]


def curve_invariants(a1, a2, a3, a4, a6):
    """Standard invariants (b2, b4, b6, b8, c4, c6, disc, j); raises on a singular model."""
    return WeierstrassCurve(a1, a2, a3, a4, a6).invariants()


def negate_point(curve: WeierstrassCurve, point: CurvePoint) -> CurvePoint:
    if point.is_infinity:
        return point
    return CurvePoint(point.x, -point.y - curve.a1 * point.x - curve.a3)


def add_points(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition, valid in every characteristic."""
    if not curve.is_on_curve(p) or not curve.is_on_curve(q):
        raise ValueError("point not on curve")
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    a1, a2, a3, a4, a6 = curve.coefficients()
    x1, y1, x2, y2 = p.x, p.y, q.x, q.y
    if x1 == x2:
        if not (y1 + y2 + a1 * x2 + a3):
            return INFINITY
        num = 3 * (x1 * x1) + 2 * (a2 * x1) + a4 - a1 * y1
        den = 2 * y1 + a1 * x1 + a3
    else:
        num = y2 - y1
        den = x2 - x1
    lam = num / den
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def scalar_mul(curve: WeierstrassCurve, n: int, point: CurvePoint) -> CurvePoint:
    """n*P by double-and-add; 0*P is infinity and (-n)*P = -(n*P)."""
    if n < 0:
        return negate_point(curve, scalar_mul(curve, -n, point))
    result = INFINITY
    addend = point
    while n:
        if n & 1:
            result = add_points(curve, result, addend)
        addend = add_points(curve, addend, addend)
        n >>= 1
    return result


def point_order(curve: WeierstrassCurve, point: CurvePoint, bound: int) -> int:
    """Least n >= 1 with n*P = infinity, found by iterated addition up to bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if not curve.is_on_curve(point):
        raise ValueError("point not on curve")
    acc = point
    for n in range(1, bound + 1):
        if acc.is_infinity:
            return n
        acc = add_points(curve, acc, point)
    raise OrderBoundExceededError(f"order exceeds bound {bound}")


class TateForm:
    """Parameters (b, c) of the Tate normal form y^2 + (1-c)xy - by = x^3 - bx^2."""

    __slots__ = ("b", "c")

    def __init__(self, b, c):
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("TateForm is immutable")

    def curve(self) -> WeierstrassCurve:
        return tate_curve(self.b, self.c)

    def __repr__(self):
        return f"TateForm(b={self.b}, c={self.c})"


def tate_curve(b, c) -> WeierstrassCurve:
    """Tate normal form y^2 + (1-c)xy - by = x^3 - bx^2; (0,0) lies on it by construction."""
    zero = b - b
    curve = WeierstrassCurve(1 - c, -b, -b, zero, zero)
    origin = CurvePoint(zero, zero)
    assert curve.is_on_curve(origin)
    return curve


def tate_origin(curve: WeierstrassCurve) -> CurvePoint:
    """The distinguished point (0, 0) of a Tate-form curve."""
    zero = curve.a2 - curve.a2
    return CurvePoint(zero, zero)

"""Exact univariate polynomial arithmetic over pluggable coefficient rings.

A polynomial is a dense, immutable list of coefficients, constant term
first: Polynomial([1, 0, 2]) is 1 + 2x^2.  Trailing zeros are stripped at
construction, so the leading coefficient of a nonzero polynomial is never
zero; the zero polynomial has an empty coefficient tuple and degree -inf.

Coefficients may be Fractions, ints, finite-field elements, number-field
elements, or Polynomials themselves, as long as they support ring
arithmetic and truthiness (zero is falsy).  Operations that divide
(divmod, gcd, resultants) additionally need field coefficients.
Rational-specific helpers (rational_roots, poly_sqrt, serialization)
expect Fraction coefficients; qpoly() builds those conveniently.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, isqrt

NEG_INFINITY = float("-inf")


def _invert(c):
    """Multiplicative inverse of a coefficient, staying exact."""
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    return c.inverse()


class Polynomial:
    """Dense univariate polynomial, constant term first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self):
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i):
        """Coefficient of x^i (zero beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(a + b for a, b in
                          itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(a - b for a, b in
                          itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Polynomial(out)
        return Polynomial(c * other for c in self.coeffs)

    def __rmul__(self, other):
        return Polynomial(other * c for c in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; the zero polynomial evaluates to plain 0."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def derivative(self) -> Polynomial:
        return Polynomial([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def monic(self) -> Polynomial:
        """Divide through by the leading coefficient."""
        if not self.coeffs:
            return self
        inv = _invert(self.coeffs[-1])
        return Polynomial(c * inv for c in self.coeffs)

    def reversed(self, weight: int) -> Polynomial:
        """x^weight * p(1/x), the reversal used by the infinity chart.

        Requires weight >= degree.
        """
        if self.coeffs and weight < len(self.coeffs) - 1:
            raise ValueError("reversal weight below degree")
        out = [0] * (weight + 1)
        for i, c in enumerate(self.coeffs):
            out[weight - i] = c
        return Polynomial(out)

    def map_coefficients(self, fn) -> Polynomial:
        return Polynomial(fn(c) for c in self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial()"
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)

    def to_json(self):
        """Serialize as a list of "num/den" strings, constant term first."""
        out = []
        for c in self.coeffs:
            f = Fraction(c)
            out.append(f"{f.numerator}/{f.denominator}")
        return out

    @classmethod
    def from_json(cls, data) -> Polynomial:
        return cls([Fraction(s) for s in data])


def qpoly(*coeffs) -> Polynomial:
    """Polynomial over Q from int/Fraction coefficients, constant term first.

    >>> str(qpoly(1, 0, 2))
    '1 + 2*x^2'
    >>> qpoly(1, 2)(Fraction(3))
    Fraction(7, 1)
    """
    return Polynomial([Fraction(c) for c in coeffs])


X = qpoly(0, 1)
ONE = qpoly(1)
ZERO = Polynomial()


def poly_divmod(a: Polynomial, b: Polynomial):
    """Exact division with remainder over a coefficient field: a = q*b + r, deg r < deg b.

    >>> q, r = poly_divmod(qpoly(-1, 0, 1), qpoly(-1, 1))
    >>> str(q), r.is_zero()
    ('1 + 1*x', True)
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.degree < b.degree:
        return Polynomial(), a
    inv_lead = _invert(b.coeffs[-1])
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        coeff = rem[i + db] * inv_lead
        if coeff:
            quo[i] = coeff
            for j, bc in enumerate(b.coeffs):
                rem[i + j] = rem[i + j] - coeff * bc
    return Polynomial(quo), Polynomial(rem[:db])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_ext_gcd(a: Polynomial, b: Polynomial):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = Polynomial([1]), Polynomial()
    t0, t1 = Polynomial(), Polynomial([1])
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = _invert(r0.coeffs[-1])
    return r0 * inv, s0 * inv, t0 * inv


def discriminant_cubic(a, b, c, d):
    """Discriminant of a*X^3 + b*X^2 + c*X + d over any commutative ring.

    18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2.  The caller is responsible
    for degree bookkeeping when a vanishes (the value is then the quantity
    the same formula assigns to the degenerate quadruple, not the
    discriminant of the lower-degree polynomial).
    """
    return (18 * (a * b * c * d) - 4 * (b * b * b * d) + (b * b) * (c * c)
            - 4 * (a * c * c * c) - 27 * (a * a * d * d))


def resultant(a: Polynomial, b: Polynomial):
    """Resultant over a coefficient field, Sylvester-determinant convention.

    Res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over the roots alpha_i of a,
    equivalently det of the Sylvester matrix of (a, b).  In particular
    Res(x - u, x - v) = u - v, and for a cubic p one has
    disc(p) = -Res(p, p') / lc(p).

    >>> resultant(qpoly(-2, 1), qpoly(-3, 1))
    Fraction(-1, 1)
    >>> resultant(qpoly(1, 0, 1), qpoly(0, 1))
    Fraction(1, 1)
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("resultant of two zero polynomials")
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    acc = Fraction(1)
    while b.degree > 0:
        r = poly_divmod(a, b)[1]
        if r.is_zero():
            return 0 * a.coeffs[0]
        da, db, dr = a.degree, b.degree, r.degree
        sign = -1 if (da * db) % 2 else 1
        acc = acc * sign * b.coeffs[-1] ** (da - dr)
        a, b = b, r
    return acc * b.coeffs[-1] ** a.degree


def discriminant(p: Polynomial):
    """Discriminant via resultants: (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree
    if not isinstance(n, int) or n < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) * _invert(p.coeffs[-1])


def rat_is_square(r):
    """Whether a rational is a square; returns (flag, canonical nonnegative root)."""
    r = Fraction(r)
    if r < 0:
        return False, None
    n, d = r.numerator, r.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return True, Fraction(sn, sd)
    return False, None


def poly_sqrt(p: Polynomial):
    """Exact square root of a polynomial over Q, or None.

    The root is normalized to have positive leading coefficient.
    """
    if p.is_zero():
        return Polynomial()
    n = p.degree
    if n % 2:
        return None
    ok, lead = rat_is_square(p.coeffs[-1])
    if not ok:
        return None
    m = n // 2
    root = [Fraction(0)] * (m + 1)
    root[m] = lead
    for k in range(m - 1, -1, -1):
        acc = Fraction(p[m + k])
        for i in range(k + 1, m):
            acc -= root[i] * root[m + k - i]
        root[k] = acc / (2 * lead)
    candidate = Polynomial(root)
    if candidate * candidate == p.map_coefficients(Fraction):
        return candidate
    return None


def _divisors(n: int):
    """All positive divisors of n > 0, by trial-divided factorization."""
    factors = {}
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    divs = [1]
    for prime, e in factors.items():
        divs = [dv * prime**k for dv in divs for k in range(e + 1)]
    return divs


def rational_roots(p: Polynomial):
    """Exact set of rational roots, by the rational-root theorem.

    Denominators are cleared first; a zero constant term contributes the
    root 0.  Raises on the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    coeffs = [Fraction(c) for c in p.coeffs]
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, abs(c))
    ints = [c // content for c in ints]
    poly = Polynomial([Fraction(c) for c in ints])
    for num in _divisors(abs(ints[0])):
        for den in _divisors(abs(ints[-1])):
            if gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and poly(cand) == 0:
                    roots.add(cand)
    return roots


def enumerate_rationals(height: int):
    """Yield every p/q in lowest terms with |p| <= height, 1 <= q <= height.

    Each value appears exactly once, 0 included; the order is fixed
    (denominator ascending, then numerator ascending) so searches are
    reproducible.

    >>> [str(v) for v in enumerate_rationals(2)]
    ['-2', '-1', '0', '1', '2', '-1/2', '1/2']
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if p == 0:
                if q == 1:
                    yield Fraction(0)
                continue
            if gcd(abs(p), q) == 1:
                yield Fraction(p, q)


class RationalFunction:
    """Quotient of polynomials over Q, reduced, with monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        numerator = numerator.map_coefficients(Fraction)
        denominator = denominator.map_coefficients(Fraction)
        g = poly_gcd(numerator, denominator)
        if not g.is_zero() and g.degree > 0:
            numerator = poly_divmod(numerator, g)[0]
            denominator = poly_divmod(denominator, g)[0]
        lead = denominator.coeffs[-1]
        if lead != 1:
            inv = 1 / lead
            numerator = numerator * inv
            denominator = denominator * inv
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __call__(self, x):
        den = self.denominator(x)
        if not den:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return self.numerator(x) / den

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.numerator, self.denominator) == (other.numerator, other.denominator)
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __mul__(self, other):
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    def __repr__(self):
        return f"({self.numerator}) / ({self.denominator})"

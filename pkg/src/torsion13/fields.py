"""Prime fields F_p, quadratic extensions F_{p^2}, and cubic number fields.

All three element kinds share one informal interface: arithmetic operators
with int/Fraction coercion, truthiness (zero is falsy), and inverse().
Curve and model code is generic over it, with Fraction itself serving as
the field Q.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Polynomial, discriminant_cubic, poly_ext_gcd, rational_roots

PRIME_CAP = 2**31


class BadReductionError(ValueError):
    """A denominator was divisible by p while reducing mod p."""


def _check_prime(p: int):
    if p < 2 or p > PRIME_CAP:
        raise ValueError(f"modulus {p} out of range (2 <= p <= 2^31)")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus {p} is not prime")
        d += 1 if d == 2 else 2


class PrimeField:
    """The field F_p for a prime p, checked by trial division."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        _check_prime(p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeField is immutable")

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self.p:
                raise ValueError("element from a different prime field")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise BadReductionError(f"denominator of {value} divisible by {self.p}")
            num = value.numerator % self.p
            den = value.denominator % self.p
            return PrimeFieldElement(self, num * pow(den, -1, self.p) % self.p)
        return PrimeFieldElement(self, value % self.p)

    @property
    def zero(self):
        return PrimeFieldElement(self, 0)

    @property
    def one(self):
        return PrimeFieldElement(self, 1)

    def elements(self):
        for v in range(self.p):
            yield PrimeFieldElement(self, v)

    def order(self) -> int:
        return self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class PrimeFieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.field.p != self.field.p:
                raise ValueError("mixed prime fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.field, (self.value + o.value) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.field, (self.value - o.value) % self.field.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.field, (o.value - self.value) % self.field.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.field, self.value * o.value % self.field.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(self.field, -self.value % self.field.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        return PrimeFieldElement(self.field, pow(self.value, n, self.field.p))

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.field.p}")
        return PrimeFieldElement(self.field, pow(self.value, -1, self.field.p))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self == self.field(other)
            except BadReductionError:
                return False
        return NotImplemented

    def __bool__(self):
        return self.value != 0

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


def reduce_mod_p(x, p: int) -> PrimeFieldElement:
    """Image of a rational in F_p; BadReductionError if p divides the denominator."""
    return PrimeField(p)(Fraction(x))


def least_nonresidue(p: int) -> int:
    """Smallest quadratic non-residue of an odd prime, by linear scan from 2."""
    squares = {i * i % p for i in range(p)}
    n = 2
    while n % p in squares:
        n += 1
    return n


class QuadraticExtensionField:
    """F_{p^2} = F_p(xi) with xi a root of a monic irreducible quadratic.

    Elements are coordinate pairs with respect to the basis {1, xi}.
    """

    __slots__ = ("base", "a0", "a1")

    def __init__(self, base: PrimeField, modulus: tuple):
        # modulus (a0, a1) encodes x^2 + a1 x + a0
        a0, a1 = modulus[0] % base.p, modulus[1] % base.p
        for r in range(base.p):
            if (r * r + a1 * r + a0) % base.p == 0:
                raise ValueError("modulus quadratic is reducible over F_p")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "a1", a1)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticExtensionField is immutable")

    @property
    def p(self):
        return self.base.p

    def modulus_polynomial(self) -> Polynomial:
        return Polynomial([self.base(self.a0), self.base(self.a1), self.base.one])

    def __call__(self, value) -> ExtensionFieldElement:
        if isinstance(value, ExtensionFieldElement):
            if (value.field.p, value.field.a0, value.field.a1) != (self.p, self.a0, self.a1):
                raise ValueError("element from a different extension")
            return value
        if isinstance(value, PrimeFieldElement):
            return ExtensionFieldElement(self, value.value, 0)
        if isinstance(value, Fraction):
            return ExtensionFieldElement(self, self.base(value).value, 0)
        return ExtensionFieldElement(self, value % self.p, 0)

    @property
    def zero(self):
        return ExtensionFieldElement(self, 0, 0)

    @property
    def one(self):
        return ExtensionFieldElement(self, 1, 0)

    def generator(self):
        return ExtensionFieldElement(self, 0, 1)

    def elements(self):
        for c1 in range(self.p):
            for c0 in range(self.p):
                yield ExtensionFieldElement(self, c0, c1)

    def order(self) -> int:
        return self.p * self.p

    def __eq__(self, other):
        return (isinstance(other, QuadraticExtensionField)
                and (self.p, self.a0, self.a1) == (other.p, other.a0, other.a1))

    def __hash__(self):
        return hash(("QuadExt", self.p, self.a0, self.a1))

    def __repr__(self):
        return f"F_{self.p}^2 [xi^2 + {self.a1}*xi + {self.a0} = 0]"


class ExtensionFieldElement:
    __slots__ = ("field", "c0", "c1")

    def __init__(self, field: QuadraticExtensionField, c0: int, c1: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "c0", c0 % field.p)
        object.__setattr__(self, "c1", c1 % field.p)

    def __setattr__(self, name, value):
        raise AttributeError("ExtensionFieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, ExtensionFieldElement):
            if (other.field.p, other.field.a0, other.field.a1) != \
                    (self.field.p, self.field.a0, self.field.a1):
                raise ValueError("mixed quadratic extensions")
            return other
        if isinstance(other, (int, Fraction, PrimeFieldElement)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtensionFieldElement(self.field, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtensionFieldElement(self.field, self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtensionFieldElement(self.field, o.c0 - self.c0, o.c1 - self.c1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        # (c0 + c1 xi)(d0 + d1 xi) with xi^2 = -a1 xi - a0
        cross = self.c1 * o.c1
        c0 = (self.c0 * o.c0 - cross * self.field.a0) % p
        c1 = (self.c0 * o.c1 + self.c1 * o.c0 - cross * self.field.a1) % p
        return ExtensionFieldElement(self.field, c0, c1)

    __rmul__ = __mul__

    def __neg__(self):
        return ExtensionFieldElement(self.field, -self.c0, -self.c1)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> ExtensionFieldElement:
        """Inverse via the norm to F_p: e * conj(e) = c0^2 - a1 c0 c1 + a0 c1^2."""
        if not self:
            raise ZeroDivisionError("inverse of 0 in F_p^2")
        p, a0, a1 = self.field.p, self.field.a0, self.field.a1
        norm = (self.c0 * self.c0 - a1 * self.c0 * self.c1 + a0 * self.c1 * self.c1) % p
        ninv = pow(norm, -1, p)
        return ExtensionFieldElement(self.field,
                                     (self.c0 - a1 * self.c1) * ninv,
                                     -self.c1 * ninv)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.c0, self.c1) == (o.c0, o.c1) and self.field.p == o.field.p

    def __bool__(self):
        return self.c0 != 0 or self.c1 != 0

    def __hash__(self):
        return hash((self.field.p, self.c0, self.c1))

    def __repr__(self):
        return f"({self.c0} + {self.c1}*xi) (mod {self.field.p})"


def build_quadratic_extension(p: int) -> QuadraticExtensionField:
    """Deterministic F_{p^2}: x^2+x+1 for p = 2, x^2 - n for the least non-residue n otherwise."""
    base = PrimeField(p)
    if p == 2:
        return QuadraticExtensionField(base, (1, 1))
    return QuadraticExtensionField(base, (-least_nonresidue(p), 0))


def field_inverse(x):
    """Multiplicative inverse in any of the supported field kinds (and Q)."""
    if isinstance(x, Fraction):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / x
    return x.inverse()


class NumberField:
    """Cubic field Q(theta) defined by a monic irreducible cubic over Q."""

    __slots__ = ("minimal_polynomial", "_theta3", "_theta4")

    def __init__(self, minimal_polynomial: Polynomial):
        mp = minimal_polynomial.map_coefficients(Fraction)
        if mp.degree != 3:
            raise ValueError("minimal polynomial must be a cubic")
        if mp.coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if rational_roots(mp):
            raise ValueError("minimal polynomial is reducible (rational root)")
        object.__setattr__(self, "minimal_polynomial", mp)
        a0, a1, a2 = mp.coeffs[0], mp.coeffs[1], mp.coeffs[2]
        theta3 = (-a0, -a1, -a2)
        # theta^4 = theta * theta^3
        theta4 = (theta3[2] * -a0,
                  theta3[0] + theta3[2] * -a1,
                  theta3[1] + theta3[2] * -a2)
        object.__setattr__(self, "_theta3", theta3)
        object.__setattr__(self, "_theta4", theta4)

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    def __call__(self, c0, c1=0, c2=0) -> NumberFieldElement:
        if isinstance(c0, NumberFieldElement):
            if c0.field.minimal_polynomial != self.minimal_polynomial:
                raise ValueError("element from a different number field")
            return c0
        return NumberFieldElement(self, Fraction(c0), Fraction(c1), Fraction(c2))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def generator(self) -> NumberFieldElement:
        return self(0, 1)

    def from_polynomial(self, poly: Polynomial) -> NumberFieldElement:
        """Reduce a Q-polynomial in theta to coordinates in the basis {1, theta, theta^2}."""
        if poly.degree > 4:
            poly = poly % self.minimal_polynomial
        c = [Fraction(poly[i]) for i in range(5)]
        out = [c[0], c[1], c[2]]
        for k, power in ((3, self._theta3), (4, self._theta4)):
            if c[k]:
                for i in range(3):
                    out[i] += c[k] * power[i]
        return NumberFieldElement(self, out[0], out[1], out[2])

    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and other.minimal_polynomial == self.minimal_polynomial)

    def __hash__(self):
        return hash(("NumberField", self.minimal_polynomial))

    def __repr__(self):
        return f"NumberField({self.minimal_polynomial})"


class NumberFieldElement:
    """Element of a cubic field as coordinates (c0, c1, c2) in {1, theta, theta^2}."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, c0, c1, c2):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", (Fraction(c0), Fraction(c1), Fraction(c2)))

    def __setattr__(self, name, value):
        raise AttributeError("NumberFieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field.minimal_polynomial != self.field.minimal_polynomial:
                raise ValueError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.field, Fraction(other), 0, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        return NumberFieldElement(self.field, a[0] + b[0], a[1] + b[1], a[2] + b[2])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        return NumberFieldElement(self.field, a[0] - b[0], a[1] - b[1], a[2] - b[2])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        # convolution to degree 4, then reduce theta^3 and theta^4
        conv = (a[0] * b[0],
                a[0] * b[1] + a[1] * b[0],
                a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
                a[1] * b[2] + a[2] * b[1],
                a[2] * b[2])
        out = [conv[0], conv[1], conv[2]]
        for k, power in ((3, self.field._theta3), (4, self.field._theta4)):
            if conv[k]:
                for i in range(3):
                    out[i] += conv[k] * power[i]
        return NumberFieldElement(self.field, out[0], out[1], out[2])

    __rmul__ = __mul__

    def __neg__(self):
        a = self.coords
        return NumberFieldElement(self.field, -a[0], -a[1], -a[2])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> NumberFieldElement:
        """Inverse by the extended Euclidean algorithm against the minimal polynomial."""
        if not self:
            raise ZeroDivisionError("inverse of 0 in number field")
        g, s, _ = poly_ext_gcd(Polynomial(self.coords), self.field.minimal_polynomial)
        if g.degree != 0:
            # a nontrivial common factor contradicts irreducibility
            raise ArithmeticError("non-invertible element: reducible modulus")
        return self.field.from_polynomial(s)

    def is_rational(self) -> bool:
        return self.coords[1] == 0 and self.coords[2] == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __bool__(self):
        return any(self.coords)

    def __hash__(self):
        return hash((self.field.minimal_polynomial, self.coords))

    def __repr__(self):
        c0, c1, c2 = self.coords
        return f"({c0} + {c1}*theta + {c2}*theta^2)"

    def to_json(self):
        """JSON form: coordinate triple of rational strings plus the minimal polynomial."""
        return {
            "coordinates": [f"{c.numerator}/{c.denominator}" for c in self.coords],
            "minimal_polynomial": self.field.minimal_polynomial.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> NumberFieldElement:
        field = NumberField(Polynomial.from_json(data["minimal_polynomial"]))
        c0, c1, c2 = (Fraction(s) for s in data["coordinates"])
        return cls(field, c0, c1, c2)


def is_rational(x) -> bool:
    """Whether a number-field element (or plain rational) lies in Q."""
    if isinstance(x, (int, Fraction)):
        return True
    return x.is_rational()


def splitting_fingerprint(f: Polynomial, bound: int):
    """Root counts of a monic irreducible cubic modulo unramified primes up to bound.

    Primes dividing disc(f) or any coefficient denominator are skipped.
    For a cyclic cubic the count is 0 or 3 at every unramified prime.
    """
    f = f.map_coefficients(Fraction)
    if f.degree != 3:
        raise ValueError("fingerprint needs a cubic")
    if rational_roots(f):
        raise ValueError("fingerprint needs an irreducible cubic")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    d, c, b, a = f.coeffs[0], f.coeffs[1], f.coeffs[2], f.coeffs[3]
    disc = discriminant_cubic(a, b, c, d)
    skip = abs(disc.numerator) * disc.denominator
    for coeff in f.coeffs:
        skip *= coeff.denominator
    out = {}
    for p in _primes_upto(bound):
        if skip % p == 0:
            continue
        fp = PrimeField(p)
        coeffs = [fp(coeff).value for coeff in f.coeffs]
        count = 0
        for x in range(p):
            acc = 0
            for cf in reversed(coeffs):
                acc = (acc * x + cf) % p
            if acc == 0:
                count += 1
        out[p] = count
    return out


def _primes_upto(n: int):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    i = 2
    while i * i <= n:
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
        i += 1
    return [i for i in range(2, n + 1) if sieve[i]]

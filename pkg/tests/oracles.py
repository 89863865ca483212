"""Independent oracle implementations used to cross-check library results.

Everything here is deliberately coded from first principles against the
textbook definitions (Sylvester determinants, pseudo-remainder gcd,
double loops over finite fields, Mumford pairs), not by calling the code
paths under test.
"""

from fractions import Fraction
from math import gcd, isqrt


def sylvester_resultant(a, b):
    """Resultant as the determinant of the Sylvester matrix, exact fractions.

    a, b: coefficient lists, constant term first, nonzero.
    """
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        raise ValueError("zero polynomial")
    if m == 0 and n == 0:
        return Fraction(1)
    size = m + n
    rows = []
    desc_a = list(reversed(a))
    desc_b = list(reversed(b))
    for i in range(n):
        rows.append([Fraction(0)] * i + desc_a + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + desc_b + [Fraction(0)] * (size - n - 1 - i))
    # Gaussian elimination with exact arithmetic
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    return det


def _int_poly_divexact_content(p):
    c = 0
    for v in p:
        c = gcd(c, abs(v))
    if c == 0:
        return p
    return [v // c for v in p]


def _pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials (constant first)."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        shift = len(a) - 1 - db
        coef = a[-1]
        a = [v * lead for v in a]
        for i in range(len(b)):
            a[shift + i] -= coef * b[i]
        while a and a[-1] == 0:
            a.pop()
    return a


def primitive_prs_gcd(a, b):
    """Gcd of integer polynomial lists via the primitive pseudo-remainder sequence.

    Returns a primitive integer polynomial (constant first) with positive
    leading coefficient; [c] for coprime inputs.
    """
    a = _int_poly_divexact_content([int(v) for v in a])
    b = _int_poly_divexact_content([int(v) for v in b])
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        r = _int_poly_divexact_content(r)
        a, b = b, r
    if a and a[-1] < 0:
        a = [-v for v in a]
    return a


def count_curve_points(f, h, genus, p, squared=False):
    """#C(F_q) for v^2 + h(u)v = f(u) by an integer double loop, q = p or p^2.

    f, h: integer coefficient lists (constant first) of the Q-model;
    the infinity chart uses the Q-model genus.
    """
    deg_f = 2 * genus + 2
    deg_h = genus + 1
    ft = [0] * (deg_f + 1)
    for i, c in enumerate(f):
        ft[deg_f - i] = c
    ht = [0] * (deg_h + 1)
    for i, c in enumerate(h):
        ht[deg_h - i] = c

    if not squared:
        def mul(x, y):
            return x * y % p

        def add(x, y):
            return (x + y) % p

        def embed(c):
            return c % p

        elements = list(range(p))
        zero = 0
    else:
        if p == 2:
            # xi^2 = xi + 1
            def mul(x, y):
                c0 = x[0] * y[0]
                c1 = x[0] * y[1] + x[1] * y[0]
                c2 = x[1] * y[1]
                return ((c0 + c2) % 2, (c1 + c2) % 2)
        else:
            squares = {i * i % p for i in range(p)}
            nr = 2
            while nr % p in squares:
                nr += 1

            def mul(x, y):
                return ((x[0] * y[0] + nr * x[1] * y[1]) % p,
                        (x[0] * y[1] + x[1] * y[0]) % p)

        def add(x, y):
            return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

        def embed(c):
            return (c % p, 0)

        elements = [(i, j) for i in range(p) for j in range(p)]
        zero = (0, 0)

    def evaluate(coeffs, x):
        acc = zero
        for c in reversed(coeffs):
            acc = add(mul(acc, x), embed(c))
        return acc

    def neg(x):
        if squared:
            return ((-x[0]) % p, (-x[1]) % p)
        return -x % p

    total = 0
    for u in elements:
        fu = evaluate(f, u)
        hu = evaluate(h, u)
        for v in elements:
            if add(add(mul(v, v), mul(hu, v)), neg(fu)) == zero:
                total += 1
    f0 = evaluate(ft, zero)
    h0 = evaluate(ht, zero)
    for v in elements:
        if add(add(mul(v, v), mul(h0, v)), neg(f0)) == zero:
            total += 1
    return total


def divisor_class_count(f, h, p):
    """#J(F_p) for an odd-degree genus-2 model by counting reduced Mumford pairs.

    Counts pairs (a, b) with a monic of degree <= 2, deg b < deg a, and
    a | b^2 + b*h - f; each degree-0 divisor class has exactly one.
    """
    f = [c % p for c in f]
    h = [c % p for c in h]
    if (len(f) - 1) % 2 == 0:
        raise ValueError("odd-degree model expected")

    def evaluate(coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        return acc

    def pmul(x, y):
        out = [0] * (len(x) + len(y) - 1)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                out[i + j] = (out[i + j] + xi * yj) % p
        return out

    def padd(x, y):
        n = max(len(x), len(y))
        return [((x[i] if i < len(x) else 0) + (y[i] if i < len(y) else 0)) % p
                for i in range(n)]

    def prem(x, m):
        x = [c % p for c in x]
        inv = pow(m[-1], -1, p)
        while True:
            while x and x[-1] == 0:
                x.pop()
            if len(x) < len(m):
                return x
            q = x[-1] * inv % p
            shift = len(x) - len(m)
            for i in range(len(m)):
                x[shift + i] = (x[shift + i] - q * m[i]) % p
            x.pop()

    count = 1  # the identity class, a = 1, b = 0
    for r in range(p):
        hr, fr = evaluate(h, r), evaluate(f, r)
        for beta in range(p):
            if (beta * beta + beta * hr - fr) % p == 0:
                count += 1
    for a1 in range(p):
        for a0 in range(p):
            modulus = [a0, a1, 1]
            for b1 in range(p):
                for b0 in range(p):
                    bb = [b0, b1]
                    val = padd(pmul(bb, bb), pmul(bb, h))
                    val = padd(val, [(-c) % p for c in f])
                    if not prem(val, modulus):
                        count += 1
    return count


def primes_upto(n):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    i = 2
    while i * i <= n:
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(range(i * i, n + 1, i)))
        i += 1
    return [i for i in range(2, n + 1) if sieve[i]]


def integer_sqrt_fraction(x):
    """Exact square root of a nonnegative Fraction, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None

"""Exact integer predicates used throughout the package.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""

from fractions import Fraction
from math import gcd, isqrt

Rat = Fraction

__all__ = [
    "Rat",
    "kronecker",
    "is_square",
    "is_squarefree",
    "is_fundamental_discriminant",
    "sqrt_classes_mod",
    "is_prime",
    "primes_up_to",
    "sign",
]


def sign(x):
    return (x > 0) - (x < 0)


def kronecker(a, n):
    """Kronecker symbol (a/n), defined for all integers a and n.

    Conventions: (a/0) = 1 iff a = +-1, (a/-1) = sign(a) for a != 0, and
    (a/2) is 0 for even a, 1 for a = +-1 mod 8 and -1 for a = +-3 mod 8.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out powers of two
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd n > 0
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_square(n):
    if n < 0:
        return False
    t = isqrt(n)
    return t * t == n


def is_squarefree(n):
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


def is_fundamental_discriminant(d):
    """True for 1 and for discriminants of quadratic fields."""
    if d == 1:
        return True
    if d == 0:
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        e = d // 4
        return e % 4 in (2, 3) and is_squarefree(e)
    return False


def sqrt_classes_mod(D, m):
    """All 0 <= r < 2m with r^2 = D mod 4m, ascending."""
    if m < 1:
        raise ValueError("m must be positive, got %r" % (m,))
    mod = 4 * m
    D %= mod
    return [r for r in range(2 * m) if (r * r - D) % mod == 0]


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n):
    return [p for p in range(2, n + 1) if is_prime(p)]


def divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def content(*values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g

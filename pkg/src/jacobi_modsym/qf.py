"""Integral binary quadratic forms, the finite support sets of the
coefficient formula, and the genus character."""

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import content, divisors, is_square, kronecker, sign
from .poly import HomPoly, act

__all__ = [
    "BinaryQF",
    "SupportQuery",
    "sign_at",
    "enumerate_support",
    "sweep_support",
    "genus_character",
    "GenusSearchError",
    "sweep_arrays",
    "genus_character_array",
]

SEARCH_CAP = 2 ** 10


class GenusSearchError(RuntimeError):
    """No represented value coprime to the fundamental discriminant was found."""


@dataclass(frozen=True, order=True)
class BinaryQF:
    """The form ``a X^2 + b XY + c Y^2``."""

    a: int
    b: int
    c: int

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    @property
    def disc(self):
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x, y=1):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __neg__(self):
        return BinaryQF(-self.a, -self.b, -self.c)

    def as_poly(self):
        return HomPoly((self.c, self.b, self.a))

    def act(self, A):
        """``(A.Q)(X, Y) = Q(A^{-1} (X; Y))``, so that ``(A.Q)(A s) = Q(s)`` up to the
        positive factor coming from homogeneous coordinates."""
        c, b, a = act(A, self.as_poly()).coeffs
        return BinaryQF(int(a), int(b), int(c))

    def __str__(self):
        return "[%d,%d,%d]" % (self.a, self.b, self.c)


def sign_at(Q, s):
    """Sign of ``Q`` at the cusp ``s = p/q``, evaluated homogeneously."""
    return sign(Q(s.p, s.q))


@dataclass(frozen=True)
class SupportQuery:
    """Forms ``[m a', b, c]`` of discriminant ``D`` with ``b = r_class mod 2m``,
    ``Q(inf) > 0`` and ``Q(s) < 0``."""

    m: int
    D: int
    r_class: int
    s: object


def _b_range(A, p, q, bound_sq):
    # integers b with (b q + 2 A p)^2 < bound_sq, bound_sq not a perfect square
    T = isqrt(bound_sq)
    if T * T == bound_sq:
        T -= 1
    lo = -((T + 2 * A * p) // q)  # ceil((-T - 2Ap) / q)
    hi = (T - 2 * A * p) // q
    return lo, hi


def enumerate_support(query):
    """All forms in the support described by ``query``, sorted.

    The leading coefficient runs over multiples of ``m`` up to ``D q^2 / 4``;
    for each one, ``b`` runs over the window where ``Q(s) < 0`` is possible,
    restricted to the residue class, and ``c`` is the exact solution of the
    discriminant equation.
    """
    m, D, s = query.m, query.D, query.s
    if s.q == 0:
        raise ValueError("support enumeration needs a finite cusp")
    if D <= 0:
        return []
    if is_square(D):
        raise ValueError("discriminant %d is a perfect square" % D)
    p, q = s.p, s.q
    mod = 2 * m
    rc = query.r_class % mod
    out = []
    for A in range(m, D * q * q // 4 + 1, m):
        lo, hi = _b_range(A, p, q, D * q * q)
        b = lo + (rc - lo) % mod
        fourA = 4 * A
        while b <= hi:
            num = b * b - D
            if num % fourA == 0:
                c = num // fourA
                if A * p * p + b * p * q + c * q * q < 0:
                    out.append(BinaryQF(A, b, c))
            b += mod
    out.sort()
    return out


def sweep_support(m, D_max, s):
    """Every form ``[m a', b, c]`` with ``0 < disc <= D_max``, ``Q(inf) > 0`` and
    ``Q(s) < 0``, in a deterministic order (by leading coefficient, then b, then c).

    Forms with square discriminant are included; callers filter them.
    """
    if s.q == 0:
        raise ValueError("support enumeration needs a finite cusp")
    if D_max <= 0:
        return
    p, q = s.p, s.q
    qq = q * q
    for A in range(m, D_max * qq // 4 + 1, m):
        lo, hi = _b_range(A, p, q, D_max * qq)
        fourA = 4 * A
        App = A * p * p
        for b in range(lo, hi + 1):
            bb = b * b
            # disc <= D_max  <=>  c >= (b^2 - D_max) / 4A
            c_lo = -((D_max - bb) // fourA)
            # q^2 Q(s) < 0  <=>  c q^2 < -(A p^2 + b p q)
            c_hi = (-(App + b * p * q) - 1) // qq
            for c in range(c_lo, c_hi + 1):
                yield A, b, c


def _represented_coprime(forms, modulus):
    # search concentric boxes, trying every candidate form at each size
    B = 1
    while B <= SEARCH_CAP:
        for a, b, c in forms:
            for x in range(-B, B + 1):
                for y in range(-B, B + 1):
                    n = a * x * x + b * x * y + c * y * y
                    if n and gcd(n, modulus) == 1:
                        return n
        B *= 2
    return None


def genus_character(m, D0, Q):
    """The genus character attached to the fundamental discriminant ``D0``
    on ``Q = [m a', b, c]``.

    Zero when ``gcd(a', b, c, D0) > 1``; otherwise ``(D0/n)`` for any ``n``
    coprime to ``D0`` represented by ``[a' m1, b, c m2]`` for some
    factorization ``m = m1 m2``.
    """
    A, b, c = Q
    if A % m:
        raise ValueError("leading coefficient %d of %s is not divisible by %d" % (A, Q, m))
    if D0 == 1:
        return 1
    if (b * b - 4 * A * c) % D0:
        raise ValueError("discriminant of %s is not divisible by %d" % (Q, D0))
    a1 = A // m
    if content(a1, b, c, D0) > 1:
        return 0
    forms = [(a1 * m1, b, c * (m // m1)) for m1 in reversed(divisors(m))]
    n = _represented_coprime(forms, D0)
    if n is not None:
        return kronecker(D0, n)
    raise GenusSearchError("no value coprime to %d represented by %s (m=%d)" % (D0, Q, m))


# -- vectorized sweep -----------------------------------------------------------

# integer sizes above this fall back to the pure Python sweep
_INT64_SAFE = 1 << 28
_PROBES = ((1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (2, -1), (1, -2))


def int64_sweep_safe(D_max, s):
    return D_max * s.q * (abs(s.p) + 1) < _INT64_SAFE


def sweep_arrays(m, D_lo, D_hi, s, block=4096):
    """Like :func:`sweep_support`, restricted to ``D_lo < disc <= D_hi``, but
    yielding ``(A, b, c)`` as int64 numpy arrays, one block of leading
    coefficients at a time."""
    import numpy as np

    if s.q == 0:
        raise ValueError("support enumeration needs a finite cusp")
    if D_hi <= 0 or D_hi <= D_lo:
        return
    if not int64_sweep_safe(D_hi, s):
        raise OverflowError("sweep bounds too large for int64")
    p, q = s.p, s.q
    qq = q * q
    T = isqrt(D_hi * qq)
    if T * T == D_hi * qq:
        T -= 1
    A_all = np.arange(m, D_hi * qq // 4 + 1, m, dtype=np.int64)
    width = 2 * T // q + 3
    j = np.arange(width, dtype=np.int64)
    lo_bound = max(D_lo, 0)
    for start in range(0, len(A_all), block):
        A = A_all[start:start + block, None]
        lo = -((T + 2 * A * p) // q)
        hi = (T - 2 * A * p) // q
        b = lo + j
        keep = b <= hi
        A2 = np.broadcast_to(A, b.shape)[keep]
        b = b[keep]
        bb = b * b
        fourA = 4 * A2
        c_lo = -((D_hi - bb) // fourA)
        c_hi = np.minimum((-(A2 * p * p + b * p * q) - 1) // qq, (bb - lo_bound - 1) // fourA)
        count = np.maximum(c_hi - c_lo + 1, 0)
        total = int(count.sum())
        if not total:
            continue
        idx = np.repeat(np.arange(len(b)), count)
        first = np.cumsum(count) - count
        c = c_lo[idx] + (np.arange(total, dtype=np.int64) - first[idx])
        yield A2[idx], b[idx], c


def genus_character_array(m, D0, A, b, c):
    """Vectorized :func:`genus_character` for forms whose discriminant is
    divisible by ``D0``.  Entries the small probes cannot settle are computed
    one at a time."""
    import numpy as np

    if D0 == 1:
        return np.ones(len(A), dtype=np.int64)
    N = abs(D0)
    table = np.array([kronecker(D0, j) for j in range(N)], dtype=np.int64)
    neg = kronecker(D0, -1)
    a1 = A // m
    g = np.gcd(np.gcd(np.gcd(a1, b), c), N)
    chi = np.zeros(len(A), dtype=np.int64)
    todo = g == 1
    for a_, c_ in ((A, c), (a1, c * m)):
        for x, y in _PROBES:
            if not todo.any():
                return chi
            n = a_ * x * x + b * x * y + c_ * y * y
            hit = todo & (n != 0) & (np.gcd(n, N) == 1)
            val = table[np.abs(n) % N] * np.where(n < 0, neg, 1)
            chi[hit] = val[hit]
            todo &= ~hit
    for i in np.nonzero(todo)[0]:
        chi[i] = genus_character(m, D0, BinaryQF(int(A[i]), int(b[i]), int(c[i])))
    return chi

"""Cusps p/q in P^1(Q) and their equivalence under Gamma_0(N)."""

from dataclasses import dataclass
from math import gcd

__all__ = ["Cusp", "INFINITY", "parse_cusp", "gamma0_equivalent", "gamma0_classes"]


@dataclass(frozen=True, order=True)
class Cusp:
    """A point ``p/q`` of ``P^1(Q)`` in lowest terms; ``Cusp(1, 0)`` is infinity."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a cusp")
        g = gcd(p, q)
        if g != 1:
            raise ValueError("cusp %d/%d is not in lowest terms" % (p, q))
        if q < 0 or (q == 0 and p != 1):
            raise ValueError("cusp %d/%d is not in canonical form" % (p, q))

    @classmethod
    def make(cls, p, q=1):
        """Normalize an arbitrary pair (not both zero) to canonical form."""
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a cusp")
        if q == 0:
            return INFINITY
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0:
            p, q = -p, -q
        return cls(p, q)

    def is_infinity(self):
        return self.q == 0

    def transform(self, A):
        """Image ``A(p/q)`` under a 2x2 integral matrix (Moebius action)."""
        x, y = A.apply(self.p, self.q)
        return Cusp.make(x, y)

    def __str__(self):
        return "inf" if self.q == 0 else "%d/%d" % (self.p, self.q)


INFINITY = Cusp(1, 0)


def parse_cusp(text):
    s = text.strip()
    if s.lower() in ("inf", "oo", "infinity"):
        return INFINITY
    if "/" in s:
        ps, qs = s.split("/", 1)
        p, q = int(ps), int(qs)
    else:
        p, q = int(s), 1
    if q == 0:
        raise ValueError("denominator 0 is only allowed as 'inf', got %r" % text)
    if q < 0:
        p, q = -p, -q
    if gcd(p, q) != 1:
        raise ValueError("cusp %r is not in lowest terms" % text)
    return Cusp(p, q)


def _inverse_mod(a, n):
    if n == 1:
        return 0
    return pow(a, -1, n)


def gamma0_equivalent(c1, c2, N):
    """Decide whether two cusps are Gamma_0(N)-equivalent.

    Uses the criterion: with ``p_j s_j = 1 mod q_j``, the cusps ``p1/q1`` and
    ``p2/q2`` are equivalent iff ``s1 q2 = s2 q1 mod gcd(q1 q2, N)``.
    """
    s1 = 1 if c1.q == 0 else _inverse_mod(c1.p % c1.q, c1.q)
    s2 = 1 if c2.q == 0 else _inverse_mod(c2.p % c2.q, c2.q)
    g = gcd(c1.q * c2.q, N)
    return (s1 * c2.q - s2 * c1.q) % g == 0


def gamma0_classes(cusps, N):
    """Group cusps into Gamma_0(N)-classes; returns a representative per input."""
    reps = []
    out = []
    for c in cusps:
        for r in reps:
            if gamma0_equivalent(c, r, N):
                out.append(r)
                break
        else:
            reps.append(c)
            out.append(c)
    return out

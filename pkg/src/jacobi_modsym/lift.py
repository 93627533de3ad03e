"""Shimura-type lift of a coefficient table to a q-expansion, and Hecke
consistency checks on the result."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import divisors, is_prime, kronecker
from .jacobi import NotApplicable, _simplify

__all__ = ["QExpansion", "LiftError", "Report", "shimura_lift", "eigen_consistency"]


class LiftError(LookupError):
    """A coefficient needed by the lift is missing from the table or NA."""


@dataclass
class QExpansion:
    """``sum_{n >= 1} a(n) q^n`` up to ``q^n_max``."""

    weight: int
    level: int
    coeffs: dict = field(default_factory=dict)

    @property
    def n_max(self):
        return max(self.coeffs, default=0)

    def __getitem__(self, n):
        return self.coeffs[n]

    def to_tsv(self):
        lines = ["# weight=%d level=%d" % (self.weight, self.level)]
        lines += ["%d\t%s" % (n, self.coeffs[n]) for n in sorted(self.coeffs)]
        return "\n".join(lines) + "\n"


def shimura_lift(table, pair, n_max):
    """``a(n) = sum_{d | n} (D0/d) c(n^2 D0 / d^2, (n/d) r0)`` for ``n <= n_max``.

    ``pair`` must be admissible for the table's index; it need not be the
    pair the table was computed with.  Raises :class:`LiftError` naming the
    first entry that is outside the table or NA.
    """
    pair.check(table.m, table.eps)
    coeffs = {}
    for n in range(1, n_max + 1):
        total = 0
        for d in divisors(n):
            chi = kronecker(pair.D0, d)
            if not chi:
                continue
            e = n // d
            D, r = e * e * pair.D0, e * pair.r0
            try:
                total += chi * table.get(D, r)
            except KeyError:
                raise LiftError("a(%d) needs c(%d, %d), beyond |D| <= %d" % (n, D, r, table.D_max)) from None
            except NotApplicable:
                raise LiftError(
                    "a(%d) needs c(%d, %d), which is NA for the table pair %s" % (n, D, r, table.pair)
                ) from None
        coeffs[n] = _simplify(total)
    return QExpansion(2 * table.k - 2, table.m, coeffs)


@dataclass
class Report:
    passed: bool
    checks: int = 0
    violations: list = field(default_factory=list)
    note: str = ""

    def __bool__(self):
        return self.passed


def _prime_power(n):
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            return (p, e) if n == 1 else None
    return None


def eigen_consistency(expansion, k=None, m=None):
    """Check multiplicativity and the prime power recursion of a normalized
    Hecke eigenform on ``a(n) / a(1)``.

    ``k`` is the Jacobi weight (the expansion has weight ``2k - 2``).  With
    ``n_max < 4`` nothing can be checked and the report passes vacuously.
    """
    a = expansion.coeffs
    k = k if k is not None else (expansion.weight + 2) // 2
    m = m if m is not None else expansion.level
    n_max = expansion.n_max
    if 1 not in a or not a[1]:
        return Report(False, 0, [("a(1)", a.get(1), "nonzero")], "a(1) is zero or missing")
    b = {n: Fraction(v) / a[1] for n, v in a.items()}
    w = 2 * k - 3
    report = Report(True)
    for n in range(2, n_max + 1):
        for u in divisors(n):
            v = n // u
            if 1 < u < v and gcd(u, v) == 1:
                report.checks += 1
                if b[n] != b[u] * b[v]:
                    report.violations.append(("a(%d)" % n, _simplify(b[n]), _simplify(b[u] * b[v])))
        pe = _prime_power(n)
        if pe and pe[1] >= 2 and m % pe[0]:
            p, e = pe
            report.checks += 1
            want = b[p] * b[p ** (e - 1)] - p ** w * b[p ** (e - 2)]
            if b[n] != want:
                report.violations.append(("a(%d)" % n, _simplify(b[n]), _simplify(want)))
    if report.checks == 0:
        report.note = "vacuous: no relation within n <= %d" % n_max
    report.passed = not report.violations
    return report

"""Fourier coefficients c(D, r) of the Jacobi form attached to a cuspidal
modular symbol and an admissible pair (D0, r0).

Coefficients come in two normalizations.  ``"raw"`` is the formula output
itself.  ``"primitive"`` divides by the content of the first
``REFERENCE_COUNT`` coefficients the pair computes (scan order) and fixes the
sign so that the first nonzero one is positive; this is the normalization of
printed coefficient tables.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, lcm

from .arith import is_fundamental_discriminant, is_prime, is_square, sign, sqrt_classes_mod
from .poly import bracket_weights
from .qf import SupportQuery, enumerate_support, genus_character

__all__ = [
    "AdmissiblePair",
    "NotApplicable",
    "AnyPairValue",
    "REFERENCE_COUNT",
    "NORMALIZATIONS",
    "find_pairs",
    "default_pair",
    "coefficient_raw",
    "coefficient",
    "coefficient_any_pair",
    "normalization_scale",
    "calibration_ratio",
    "fallback_pair",
    "admissible_indices",
    "symmetry_factor",
    "primitive_scale",
]

log = logging.getLogger(__name__)

REFERENCE_COUNT = 24
NORMALIZATIONS = ("primitive", "raw")


class NotApplicable(ArithmeticError):
    """``D * D0`` is a perfect square, so the formula does not apply."""


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    D0: int
    r0: int

    @classmethod
    def parse(cls, text):
        s = text.strip().strip("()")
        try:
            d0, r0 = (int(t) for t in s.split(","))
        except ValueError:
            raise ValueError("pair must look like D0,r0 (got %r)" % text) from None
        return cls(d0, r0)

    def check(self, m, eps):
        """Raise ``ValueError`` unless this pair is m-admissible with sign ``eps``."""
        if not is_fundamental_discriminant(self.D0):
            raise ValueError("%d is not a fundamental discriminant" % self.D0)
        if sign(self.D0) != eps:
            raise ValueError("sign of D0=%d does not match eps=%+d" % (self.D0, eps))
        if not 0 <= self.r0 < 2 * m:
            raise ValueError("r0=%d is not in [0, %d)" % (self.r0, 2 * m))
        if (self.r0 * self.r0 - self.D0) % (4 * m):
            raise ValueError("%d is not congruent to %d^2 mod %d" % (self.D0, self.r0, 4 * m))
        return self

    def __str__(self):
        return "(%d,%d)" % (self.D0, self.r0)


def symmetry_factor(k, eps):
    """``(-1)^(k-1) eps``, so that ``c(D, -r) = symmetry_factor * c(D, r)``."""
    return (-1) ** (k - 1) * eps


def find_pairs(m, eps, count, include_one=False):
    """Admissible pairs for the ``count`` fundamental discriminants of sign
    ``eps`` of smallest absolute value, each with all its ``r0 < 2m``.

    ``D0 = 1`` (possible only for ``eps = +1``) is skipped unless
    ``include_one``, in which case it comes first.
    """
    if m < 1:
        raise ValueError("m must be positive")
    pairs = []
    found = 0
    n = 1
    while found < count:
        D0 = eps * n
        n += 1
        if D0 == 1 and not include_one:
            continue
        if not is_fundamental_discriminant(D0):
            continue
        roots = sqrt_classes_mod(D0, m)
        if roots:
            pairs.extend(AdmissiblePair(D0, r0) for r0 in roots)
            found += 1
    return pairs


def default_pair(m, eps, include_one=False):
    return find_pairs(m, eps, 1, include_one)[0]


def admissible_indices(m, eps, D_max):
    """All ``(D, r)`` with ``0 < |D| <= D_max``, ``eps*D > 0``, ``0 <= r <= m`` and
    ``D = r^2 mod 4m``, in scan order (by ``|D|``, then ``r``)."""
    out = []
    for n in range(1, D_max + 1):
        D = eps * n
        for r in sqrt_classes_mod(D, m):
            if r <= m:
                out.append((D, r))
    return out


def _check_index(m, eps, D, r):
    if (r * r - D) % (4 * m):
        raise ValueError("D=%d is not congruent to r^2=%d^2 mod %d" % (D, r, 4 * m))
    if eps * D < 0:
        raise ValueError("eps*D must be >= 0 (eps=%+d, D=%d)" % (eps, D))


def _simplify(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


# -- pairing of a term polynomial with powers of a quadratic form -------------

def power_coefficient(a, b, c, e, j):
    """Coefficient of ``X^j Y^(2e - j)`` in ``(a X^2 + b XY + c Y^2)^e``."""
    total = 0
    for i in range(max(0, j - e), j // 2 + 1):
        t = j - 2 * i
        u = e - i - t
        total += comb(e, i) * comb(e - i, t) * a ** i * b ** t * c ** u
    return total


class TermPairing:
    """``[P | Q^e]`` for a fixed ``P``, as an integer numerator over ``denominator``."""

    def __init__(self, P):
        w = P.degree
        if w % 2:
            raise ValueError("odd polynomial degree %d" % w)
        self.e = w // 2
        weights = [Fraction(u) for u in bracket_weights(P)]
        den = lcm(*(u.denominator for u in weights)) if weights else 1
        self.sparse = [(l, int(u * den)) for l, u in enumerate(weights) if u]
        self.denominator = den * factorial(w)

    def numerator(self, a, b, c):
        e = self.e
        if e == 0:
            return self.sparse[0][1] if self.sparse else 0
        return sum(u * power_coefficient(a, b, c, e, 2 * e - l) for l, u in self.sparse)

    def __call__(self, a, b, c):
        return Fraction(self.numerator(a, b, c), self.denominator)


def _terms(sigma):
    out = []
    for n, s, P in sigma.finite_terms():
        tp = TermPairing(P)
        if tp.sparse:
            out.append((n, s, tp))
    return out


# -- per-coefficient path -----------------------------------------------------

def coefficient_raw(sigma, pair, D, r):
    """The one-sided sum ``sum_i n_i sum_Q chi(Q) [P_i | Q^(k-2)]`` over forms
    ``Q`` in ``Q_m(D*D0, r*r0)`` with ``Q(inf) > 0`` and ``Q(s_i) < 0``."""
    m = sigma.level
    _check_index(m, sigma.sign, D, r)
    DD = D * pair.D0
    if is_square(DD):
        raise NotApplicable("D*D0 = %d is a perfect square" % DD)
    total = Fraction(0)
    for n, s, tp in _terms(sigma):
        acc = 0
        for Q in enumerate_support(SupportQuery(m, DD, r * pair.r0, s)):
            chi = genus_character(m, pair.D0, Q)
            if chi:
                acc += chi * tp.numerator(Q.a, Q.b, Q.c)
        total += Fraction(n * acc, tp.denominator)
    return _simplify(total)


def _symmetrized_raw(sigma, pair, D, r):
    eps_k = symmetry_factor(sigma.weight, sigma.sign)
    return _simplify(coefficient_raw(sigma, pair, D, r) + eps_k * coefficient_raw(sigma, pair, D, -r))


def coefficient(sigma, pair, D, r, normalize="primitive"):
    """``c(D, r) = c~(D, r) + (-1)^(k-1) eps c~(D, -r)``, scaled per ``normalize``.

    Raises :class:`NotApplicable` when ``D * D0`` is a square.
    """
    pair.check(sigma.level, sigma.sign)
    value = _symmetrized_raw(sigma, pair, D, r)
    if normalize == "raw":
        return value
    return _simplify(value * normalization_scale(sigma, pair, normalize))


def primitive_scale(values):
    """Scale that makes ``values`` coprime integers with the first nonzero one positive."""
    nonzero = [Fraction(v) for v in values if v]
    if not nonzero:
        return Fraction(1)
    num = 0
    den = 1
    for v in nonzero:
        num = gcd(num, v.numerator)
        den = lcm(den, v.denominator)
    content = Fraction(num, den)
    return sign(nonzero[0]) / content


def reference_indices(m, eps, pair, count=REFERENCE_COUNT):
    """The first ``count`` indices in scan order at which ``pair`` applies."""
    out = []
    D_max = 16
    while True:
        out = [(D, r) for D, r in admissible_indices(m, eps, D_max) if not is_square(D * pair.D0)]
        if len(out) >= count:
            return out[:count]
        D_max *= 2


def normalization_scale(sigma, pair, normalize="primitive", known=None):
    """Factor turning raw output of ``pair`` into the ``normalize`` normalization.

    ``known`` may map indices to already computed raw values.
    """
    if normalize == "raw":
        return Fraction(1)
    if normalize != "primitive":
        raise ValueError("unknown normalization %r (choose from %s)" % (normalize, ", ".join(NORMALIZATIONS)))
    if known is None:
        return _cached_scale(sigma, pair)
    idx = reference_indices(sigma.level, sigma.sign, pair)
    values = [known[i] if i in known else _symmetrized_raw(sigma, pair, *i) for i in idx]
    return primitive_scale(values)


@lru_cache(maxsize=64)
def _cached_scale(sigma, pair):
    idx = reference_indices(sigma.level, sigma.sign, pair)
    return primitive_scale([_symmetrized_raw(sigma, pair, *i) for i in idx])


# -- coefficients the primary pair cannot reach --------------------------------

def fallback_pair(pair, m, D, sigma=None, normalize="primitive", tries=8):
    """An admissible pair ``(p D0, r0)`` with ``D p D0`` not a square, for the
    smallest prime ``p`` that keeps ``p D0`` fundamental and congruent to
    ``D0`` mod ``4m``.

    With ``sigma`` given, candidates whose own coefficient ``c(p D0, r0)`` is 0
    are skipped (their whole table vanishes), for up to ``tries`` candidates.
    """
    first = None
    seen = 0
    p = 2
    while True:
        if is_prime(p) and pair.D0 % p:
            D1 = p * pair.D0
            if (D1 - pair.D0) % (4 * m) == 0 and is_fundamental_discriminant(D1) and not is_square(D * D1):
                cand = AdmissiblePair(D1, pair.r0)
                if sigma is None or not _terms(sigma):
                    return cand
                first = first or cand
                seen += 1
                if coefficient(sigma, pair, D1, pair.r0, normalize):
                    return cand
                if seen >= tries:
                    return first
        p += 1


@dataclass(frozen=True)
class AnyPairValue:
    """Coefficient obtained through :func:`coefficient_any_pair`.

    ``calibrated`` is False when ``value`` is the fallback pair's raw output
    because no common nonzero coefficient was found to rescale it.
    """

    value: object
    pair: AdmissiblePair
    ratio: object = 1
    calibrated: bool = True


def calibration_ratio(sigma, primary, other, normalize="primitive", budget=60):
    """``c_primary / c_other_raw`` at the first index in scan order where both
    pairs apply and the raw value of ``other`` is nonzero, or ``None``."""
    m, eps = sigma.level, sigma.sign
    tried = 0
    D_max = 8
    seen = set()
    while tried < budget and D_max < 1 << 20:
        for D, r in admissible_indices(m, eps, D_max):
            if (D, r) in seen:
                continue
            seen.add((D, r))
            if is_square(D * primary.D0) or is_square(D * other.D0):
                continue
            tried += 1
            c_other = _symmetrized_raw(sigma, other, D, r)
            if c_other:
                return Fraction(coefficient(sigma, primary, D, r, normalize)) / c_other
            if tried >= budget:
                break
        D_max *= 2
    return None


def coefficient_any_pair(sigma, primary, D, r, normalize="primitive", budget=60):
    """``c(D, r)`` in the normalization of ``primary``, switching to a fallback
    pair when ``D * D0`` is a square.  Returns an :class:`AnyPairValue`."""
    m, eps = sigma.level, sigma.sign
    primary.check(m, eps)
    _check_index(m, eps, D, r)
    if not is_square(D * primary.D0):
        return AnyPairValue(coefficient(sigma, primary, D, r, normalize), primary)
    fb = fallback_pair(primary, m, D, sigma, normalize)
    value = _symmetrized_raw(sigma, fb, D, r)
    if not _terms(sigma):
        return AnyPairValue(value, fb)
    ratio = calibration_ratio(sigma, primary, fb, normalize, budget)
    if ratio is None:
        log.warning("calibration between %s and %s failed; value is in the fallback normalization", primary, fb)
        return AnyPairValue(value, fb, None, False)
    return AnyPairValue(_simplify(value * ratio), fb, _simplify(ratio))

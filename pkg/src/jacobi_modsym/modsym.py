"""Modular symbols sum_i n_i {inf, s_i} (x) P_i and their intersection
numbers with binary quadratic forms."""

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import is_square, sign
from .cusps import INFINITY, Cusp, gamma0_classes, parse_cusp
from .poly import HomPoly, act, bracket, format_poly, parse_poly, qf_power
from .qf import BinaryQF, sign_at

__all__ = [
    "ModularSymbol",
    "SymbolParseError",
    "CheckUnavailable",
    "CuspidalityWarning",
    "parse_symbol",
    "read_symbol",
    "format_symbol",
    "intersection_with_line",
    "intersection",
    "boundary_check_weight2",
]


class SymbolParseError(ValueError):
    """Raised for an invalid symbol file; ``kind`` names the failure and
    ``line`` the 1-based line number."""

    def __init__(self, kind, line, message):
        self.kind = kind
        self.line = line
        super().__init__("line %s: %s: %s" % (line, kind, message))


class CheckUnavailable(NotImplementedError):
    """The cuspidality check is only implemented in weight 2."""


class CuspidalityWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ModularSymbol:
    """A modular symbol of weight ``2k - 2`` and level ``m`` in normal form.

    ``terms`` holds triples ``(n, s, P)`` standing for ``n {inf, s} (x) P``
    with ``P`` homogeneous of degree ``2k - 4``.  ``sign`` is the sign
    ``eps`` of the attached Jacobi forms (``-1`` holomorphic, ``+1``
    skew-holomorphic).
    """

    weight: int
    level: int
    sign: int
    terms: tuple = field(default=())

    def __post_init__(self):
        if self.weight < 2:
            raise ValueError("weight k must be >= 2, got %r" % (self.weight,))
        if self.level < 1:
            raise ValueError("level m must be >= 1, got %r" % (self.level,))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1, got %r" % (self.sign,))
        w = self.poly_degree
        terms = []
        for n, s, P in self.terms:
            if not isinstance(s, Cusp):
                s = Cusp.make(*s) if isinstance(s, tuple) else parse_cusp(str(s))
            if not isinstance(P, HomPoly):
                P = HomPoly(tuple(P))
            if P.degree != w:
                raise ValueError("polynomial %s has degree %d, expected %d" % (format_poly(P), P.degree, w))
            terms.append((int(n), s, P))
        object.__setattr__(self, "terms", tuple(terms))

    @property
    def poly_degree(self):
        return 2 * self.weight - 4

    def __add__(self, other):
        self._check_compatible(other)
        return ModularSymbol(self.weight, self.level, self.sign, self.terms + other.terms)

    def __neg__(self):
        return ModularSymbol(self.weight, self.level, self.sign, tuple((-n, s, P) for n, s, P in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def _check_compatible(self, other):
        if (self.weight, self.level, self.sign) != (other.weight, other.level, other.sign):
            raise ValueError("cannot combine symbols with different weight/level/sign")

    def finite_terms(self):
        """Terms with a finite cusp; ``{inf, inf} = 0`` contributes nothing."""
        return [(n, s, P) for n, s, P in self.terms if n and not s.is_infinity()]

    def transform(self, A):
        """``A . sigma`` rewritten in normal form via ``{a, b} = {inf, b} - {inf, a}``."""
        terms = []
        a_inf = INFINITY.transform(A)
        for n, s, P in self.terms:
            AP = act(A, P)
            terms.append((n, s.transform(A), AP))
            terms.append((-n, a_inf, AP))
        return ModularSymbol(self.weight, self.level, self.sign, tuple(terms))

    @classmethod
    def from_paths(cls, weight, level, sign, paths):
        """Build from ``(n, alpha, beta, P)`` meaning ``n {alpha, beta} (x) P``."""
        terms = []
        for n, alpha, beta, P in paths:
            terms.append((n, beta, P))
            terms.append((-n, alpha, P))
        return cls(weight, level, sign, tuple(terms))


_HEADER = re.compile(r"^k\s*=\s*([+-]?\d+)\s+m\s*=\s*([+-]?\d+)\s+eps\s*=\s*([+-]?1)$")
_PATH = re.compile(r"^\{\s*([^,{}]+?)\s*,\s*([^,{}]+?)\s*\}$")


def _parse_cusp_field(text, lineno):
    s = text.strip()
    try:
        if "/" in s:
            p, q = (int(t) for t in s.split("/", 1))
            if q == 0:
                raise SymbolParseError("infinite-denominator", lineno, "use 'inf' rather than %r" % s)
        return parse_cusp(s)
    except SymbolParseError:
        raise
    except ValueError as exc:
        msg = str(exc)
        kind = "not-coprime" if "lowest terms" in msg else "malformed"
        raise SymbolParseError(kind, lineno, msg) from None


def parse_symbol(text):
    """Parse the text symbol format.

    The first non-comment line is ``k=<int> m=<int> eps=<+1|-1>``.  Every
    further line is ``n ; p/q ; [c0,...,c_{2k-4}]`` (``inf`` allowed for the
    cusp); a path ``{alpha,beta}`` may be given in place of the cusp and is
    rewritten as ``{inf,beta} - {inf,alpha}``.  ``#`` starts a comment.
    """
    header = None
    terms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            mo = _HEADER.match(line)
            if not mo:
                raise SymbolParseError("header", lineno, "expected 'k=<int> m=<int> eps=<+1|-1>', got %r" % line)
            header = tuple(int(g) for g in mo.groups())
            k, m, _ = header
            if k < 2 or m < 1:
                raise SymbolParseError("header", lineno, "need k >= 2 and m >= 1")
            continue
        fields_ = [f.strip() for f in line.split(";")]
        if len(fields_) != 3:
            raise SymbolParseError("malformed", lineno, "expected 'n ; cusp ; [coeffs]', got %r" % line)
        try:
            n = int(fields_[0])
        except ValueError:
            raise SymbolParseError("malformed", lineno, "bad multiplicity %r" % fields_[0]) from None
        try:
            P = parse_poly(fields_[2])
        except ValueError as exc:
            raise SymbolParseError("malformed", lineno, str(exc)) from None
        if P.degree != 2 * header[0] - 4:
            raise SymbolParseError("degree", lineno, "polynomial has %d coefficients, weight k=%d needs %d"
                                   % (P.degree + 1, header[0], 2 * header[0] - 3))
        mo = _PATH.match(fields_[1])
        if mo:
            alpha = _parse_cusp_field(mo.group(1), lineno)
            beta = _parse_cusp_field(mo.group(2), lineno)
            terms.append((n, beta, P))
            terms.append((-n, alpha, P))
        else:
            terms.append((n, _parse_cusp_field(fields_[1], lineno), P))
    if header is None:
        raise SymbolParseError("header", 0, "missing header line")
    k, m, eps = header
    return ModularSymbol(k, m, eps, tuple(terms))


def read_symbol(path):
    with open(path, encoding="utf-8") as fh:
        return parse_symbol(fh.read())


def format_symbol(sigma):
    lines = ["k=%d m=%d eps=%+d" % (sigma.weight, sigma.level, sigma.sign)]
    for n, s, P in sigma.terms:
        lines.append("%d ; %s ; %s" % (n, s, format_poly(P)))
    return "\n".join(lines) + "\n"


def intersection_with_line(Q, alpha, beta, P):
    """``C_Q . {alpha, beta} (x) P = (sgn Q(alpha) - sgn Q(beta)) / 2 * [P | Q^(k-2)]``."""
    if P.degree % 2:
        raise ValueError("polynomial degree must be even")
    diff = sign_at(Q, alpha) - sign_at(Q, beta)
    if not diff:
        return 0
    return Fraction(diff, 2) * bracket(P, qf_power(Q, P.degree // 2))


def intersection(Q, sigma):
    """``C_Q . sigma`` for a form of non-square discriminant.

    Only the terms with ``Q(inf) Q(s_i) < 0`` contribute, each with weight
    ``sgn Q(inf) n_i [P_i | Q^(k-2)]``.
    """
    if not isinstance(Q, BinaryQF):
        Q = BinaryQF(*Q)
    if is_square(Q.disc):
        raise ValueError("discriminant of %s is a perfect square" % (Q,))
    s_inf = sign(Q.a)
    total = Fraction(0)
    power = None
    for n, s, P in sigma.terms:
        if s_inf * sign_at(Q, s) < 0:
            if power is None:
                power = qf_power(Q, sigma.weight - 2)
            total += n * bracket(P, power)
    return s_inf * total


def boundary_check_weight2(sigma):
    """True iff ``sum_i n_i ((s_i) - (inf))`` vanishes modulo Gamma_0(m)."""
    if sigma.weight != 2:
        raise CheckUnavailable("cuspidality check is only available in weight 2 (got k=%d)" % sigma.weight)
    cusps = []
    mults = []
    for n, s, P in sigma.terms:
        c = P.coeffs[0]
        cusps += [s, INFINITY]
        mults += [n * c, -n * c]
    reps = gamma0_classes(cusps, sigma.level)
    totals = {}
    for rep, x in zip(reps, mults):
        totals[rep] = totals.get(rep, 0) + x
    return all(v == 0 for v in totals.values())


def check_cuspidal(sigma):
    """Run the weight-2 boundary check, or warn that it was skipped."""
    if sigma.weight == 2:
        return boundary_check_weight2(sigma)
    warnings.warn("boundary map not checked for k=%d; symbol assumed cuspidal" % sigma.weight,
                  CuspidalityWarning, stacklevel=2)
    return None

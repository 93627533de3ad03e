"""Coefficient tables: batch computation, lookup and TSV files."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import is_square
from .jacobi import (
    AdmissiblePair,
    NotApplicable,
    _simplify,
    _terms,
    admissible_indices,
    coefficient_any_pair,
    normalization_scale,
    symmetry_factor,
)
from .qf import genus_character, genus_character_array, int64_sweep_safe, sweep_arrays, sweep_support

__all__ = ["CoefficientTable", "Comparison", "TableFormatError", "compare_tables", "write_table_atomic", "batch_table", "raw_buckets", "parse_table", "read_table"]

log = logging.getLogger(__name__)


class TableFormatError(ValueError):
    def __init__(self, line, msg):
        super().__init__("line %d: %s" % (line, msg))
        self.line = line


@dataclass
class CoefficientTable:
    """Coefficients ``c(D, r)`` for ``0 < |D| <= D_max`` and ``0 <= r <= m``.

    ``entries`` maps ``(D, r)`` to a value or ``None`` (formula not applicable).
    ``sources`` records the pair used for entries computed through a fallback.
    """

    k: int
    m: int
    eps: int
    pair: AdmissiblePair
    entries: dict = field(default_factory=dict)
    sources: dict = field(default_factory=dict)
    normalize: str = "primitive"
    scale: object = 1

    @property
    def D_max(self):
        return max((abs(D) for D, _ in self.entries), default=0)

    @property
    def na(self):
        return {key for key, v in self.entries.items() if v is None}

    def keys(self):
        return sorted(self.entries, key=lambda t: (abs(t[0]), t[1]))

    def reduce_index(self, D, r):
        """Map ``(D, r)`` to its stored representative and the sign relating them."""
        mod = 2 * self.m
        r = r % mod
        if r <= self.m:
            return (D, r), 1
        return (D, mod - r), symmetry_factor(self.k, self.eps)

    def get(self, D, r):
        """Value of ``c(D, r)``; ``KeyError`` if outside the table, ``NotApplicable`` if NA."""
        key, s = self.reduce_index(D, r)
        if key not in self.entries:
            raise KeyError("(%d, %d) is not in the table" % (D, r))
        v = self.entries[key]
        if v is None:
            raise NotApplicable("(%d, %d) is NA for pair %s" % (D, r, self.pair))
        return _simplify(s * v)

    def __contains__(self, index):
        return self.reduce_index(*index)[0] in self.entries

    def header(self):
        return "# k=%d m=%d eps=%+d pair=%s" % (self.k, self.m, self.eps, self.pair)

    def to_tsv(self):
        lines = [self.header(), "# normalize=%s scale=%s" % (self.normalize, self.scale)]
        for key in self.keys():
            v = self.entries[key]
            lines.append("%d\t%d\t%s" % (key[0], key[1], "NA" if v is None else v))
        for key in self.keys():
            if key in self.sources:
                lines.append("# filled %d,%d via pair %s" % (key[0], key[1], self.sources[key]))
        return "\n".join(lines) + "\n"

    def write(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_tsv())


def _parse_header(line, lineno):
    fields = {}
    for tok in line.lstrip("#").split():
        if "=" in tok:
            key, _, val = tok.partition("=")
            fields[key] = val
    try:
        return int(fields["k"]), int(fields["m"]), int(fields["eps"]), AdmissiblePair.parse(fields["pair"])
    except (KeyError, ValueError) as exc:
        raise TableFormatError(lineno, "bad header: %s" % exc) from None


def parse_table(text):
    head = None
    normalize, scale = "primitive", 1
    entries = {}
    sources = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if head is None and "pair=" in line:
                head = _parse_header(line, lineno)
            elif line.startswith("# normalize="):
                parts = dict(t.split("=", 1) for t in line[1:].split())
                normalize = parts.get("normalize", normalize)
                scale = _simplify(Fraction(parts.get("scale", "1")))
            elif line.startswith("# filled "):
                idx, _, p = line[len("# filled "):].partition(" via pair ")
                D, r = (int(t) for t in idx.split(","))
                sources[(D, r)] = AdmissiblePair.parse(p)
            continue
        if head is None:
            raise TableFormatError(lineno, "data before header")
        cols = line.split("\t") if "\t" in line else line.split()
        if len(cols) != 3:
            raise TableFormatError(lineno, "expected 3 columns, got %d" % len(cols))
        try:
            key = (int(cols[0]), int(cols[1]))
            value = None if cols[2] == "NA" else _simplify(Fraction(cols[2]))
        except ValueError:
            raise TableFormatError(lineno, "unreadable row %r" % line) from None
        entries[key] = value
    if head is None:
        raise TableFormatError(0, "missing header")
    k, m, eps, pair = head
    return CoefficientTable(k, m, eps, pair, entries, sources, normalize, scale)


def read_table(path):
    with open(path) as fh:
        return parse_table(fh.read())


# -- batch computation ----------------------------------------------------------

def _bucket_key(DD, b, m):
    return DD, b % (2 * m)


def raw_buckets(sigma, pair, D_lo, D_hi):
    """Raw sums ``sum_i n_i sum_Q chi(Q) [P_i | Q^(k-2)]`` for every
    ``(disc, b mod 2m)`` with ``D_lo < disc <= D_hi`` and ``disc`` a
    non-square multiple of ``D0``, from one sweep per cusp."""
    import numpy as np

    m, D0 = sigma.level, pair.D0
    N = abs(D0)
    out = {}
    for n, s, tp in _terms(sigma):
        acc = {}
        if int64_sweep_safe(D_hi, s):
            for A, b, c in sweep_arrays(m, D_lo, D_hi, s):
                DD = b * b - 4 * A * c
                keep = DD % N == 0
                root = np.floor(np.sqrt(DD.astype(np.float64))).astype(np.int64)
                keep &= root * root != DD
                keep &= (root + 1) * (root + 1) != DD
                A, b, c, DD = A[keep], b[keep], c[keep], DD[keep]
                chi = genus_character_array(m, D0, A, b, c)
                nz = chi != 0
                A, b, c, DD, chi = A[nz], b[nz], c[nz], DD[nz], chi[nz]
                if tp.e == 0:
                    key = DD * (2 * m) + b % (2 * m)
                    uniq, inv = np.unique(key, return_inverse=True)
                    sums = np.zeros(len(uniq), dtype=np.int64)
                    np.add.at(sums, inv, chi)
                    w = tp.sparse[0][1]
                    for kk, v in zip(uniq.tolist(), sums.tolist()):
                        if v:
                            kt = divmod(kk, 2 * m)
                            acc[kt] = acc.get(kt, 0) + w * v
                else:
                    for a_, b_, c_, d_, x in zip(A.tolist(), b.tolist(), c.tolist(), DD.tolist(), chi.tolist()):
                        kt = _bucket_key(d_, b_, m)
                        acc[kt] = acc.get(kt, 0) + x * tp.numerator(a_, b_, c_)
        else:
            from .qf import BinaryQF

            for a_, b_, c_ in sweep_support(m, D_hi, s):
                d_ = b_ * b_ - 4 * a_ * c_
                if d_ <= D_lo or d_ % N or is_square(d_):
                    continue
                x = genus_character(m, D0, BinaryQF(a_, b_, c_))
                if x:
                    kt = _bucket_key(d_, b_, m)
                    acc[kt] = acc.get(kt, 0) + x * tp.numerator(a_, b_, c_)
        for kt, v in acc.items():
            out[kt] = out.get(kt, 0) + Fraction(n * v, tp.denominator)
    return out


def _bucket_worker(args):
    sigma, pair, lo, hi = args
    return raw_buckets(sigma, pair, lo, hi)


def _split(D_total, workers):
    edges = [round(D_total * i / workers) for i in range(workers + 1)]
    return [(edges[i], edges[i + 1]) for i in range(workers) if edges[i + 1] > edges[i]]


def batch_table(sigma, pair=None, D_max=50, workers=1, fill_na=False, normalize="primitive", include_one=False):
    """Compute ``c(D, r)`` for every admissible index with ``0 < |D| <= D_max``.

    The supports of all coefficients are swept once per cusp and bucketed by
    discriminant and ``b mod 2m``.  With ``workers > 1`` the discriminant range
    is split into disjoint slices computed in separate processes; the result
    does not depend on ``workers``.
    """
    from .jacobi import default_pair

    m, eps, k = sigma.level, sigma.sign, sigma.weight
    if pair is None:
        pair = default_pair(m, eps, include_one)
    pair.check(m, eps)
    if pair.D0 == 1 and not include_one:
        raise ValueError("pair with D0 = 1 needs include_one")
    if D_max < 1:
        raise ValueError("D_max must be positive")
    D_total = D_max * abs(pair.D0)
    slices = _split(D_total, max(1, workers))
    buckets = {}
    if workers > 1 and len(slices) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_bucket_worker, [(sigma, pair, lo, hi) for lo, hi in slices]):
                buckets.update(part)
    else:
        for lo, hi in slices:
            buckets.update(raw_buckets(sigma, pair, lo, hi))

    eps_k = symmetry_factor(k, eps)
    mod = 2 * m
    raw = {}
    for D, r in admissible_indices(m, eps, D_max):
        DD = D * pair.D0
        if is_square(DD):
            raw[(D, r)] = None
            continue
        plus = buckets.get((DD, (r * pair.r0) % mod), 0)
        minus = buckets.get((DD, (-r * pair.r0) % mod), 0)
        raw[(D, r)] = _simplify(plus + eps_k * minus)

    known = {key: v for key, v in raw.items() if v is not None}
    scale = _simplify(normalization_scale(sigma, pair, normalize, known=known))
    entries = {key: (None if v is None else _simplify(v * scale)) for key, v in raw.items()}
    table = CoefficientTable(k, m, eps, pair, entries, {}, normalize, scale)
    if fill_na:
        for key in table.keys():
            if entries[key] is None:
                res = coefficient_any_pair(sigma, pair, key[0], key[1], normalize)
                if not res.calibrated:
                    log.warning("(%d, %d) left NA: calibration failed", *key)
                    continue
                entries[key] = res.value
                table.sources[key] = res.pair
    return table


def write_table_atomic(table, path):
    tmp = "%s.tmp%d" % (path, os.getpid())
    table.write(tmp)
    os.replace(tmp, path)


# -- comparison -------------------------------------------------------------------

@dataclass
class Comparison:
    """Result of :func:`compare_tables`.

    ``mismatches`` holds ``(D, r, ours, reference)``; NA rows count as a
    mismatch unless both sides are NA.  ``scalar`` is the solved factor in
    up-to-scalar mode (``reference = scalar * ours``).
    """

    compared: int = 0
    mismatches: list = field(default_factory=list)
    scalar: object = 1
    both_na: int = 0

    @property
    def ok(self):
        return not self.mismatches

    def summary(self):
        if self.ok:
            return "match: %d entries (%d NA on both sides), scalar=%s" % (self.compared, self.both_na, self.scalar)
        D, r, a, b = self.mismatches[0]
        return "mismatch: %d of %d entries differ; first at (%d,%d): table=%s fixture=%s (scalar=%s)" % (
            len(self.mismatches), self.compared, D, r, _fmt(a), _fmt(b), self.scalar)


def _fmt(v):
    return "NA" if v is None else ("missing" if v is _MISSING else str(v))


_MISSING = object()


def _lookup(table, D, r):
    if (D, r) not in table:
        return _MISSING
    try:
        return table.get(D, r)
    except NotApplicable:
        return None


def compare_tables(ours, reference, up_to_scalar=False, keys=None):
    """Compare ``ours`` with ``reference`` on the reference's indices (or ``keys``).

    In up-to-scalar mode a single rational ``scalar`` with
    ``reference = scalar * ours`` is solved from the first entry where both
    are nonzero, then checked everywhere.
    """
    if (ours.m, ours.eps) != (reference.m, reference.eps):
        raise ValueError("tables have different index or sign")
    keys = reference.keys() if keys is None else list(keys)
    res = Comparison()
    pairs = []
    for D, r in keys:
        a, b = _lookup(ours, D, r), _lookup(reference, D, r)
        if a is None and b is None:
            res.both_na += 1
            continue
        pairs.append((D, r, a, b))
    scalar = Fraction(1)
    if up_to_scalar:
        for D, r, a, b in pairs:
            if a not in (None, _MISSING) and b not in (None, _MISSING) and a and b:
                scalar = Fraction(b) / Fraction(a)
                break
    res.scalar = _simplify(scalar)
    for D, r, a, b in pairs:
        res.compared += 1
        if a is None or b is None or a is _MISSING or b is _MISSING or scalar * a != b:
            res.mismatches.append((D, r, a, b))
    return res

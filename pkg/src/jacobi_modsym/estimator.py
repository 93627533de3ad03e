"""scikit-learn style wrapper: fit on a modular symbol, predict coefficients."""

import os

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .jacobi import AdmissiblePair, NotApplicable
from .lift import eigen_consistency, shimura_lift
from .modsym import ModularSymbol, parse_symbol, read_symbol
from .table import batch_table

__all__ = ["JacobiCoefficients", "check_indices"]


def check_indices(X):
    """Validate an ``(n, 2)`` array of integer ``(D, r)`` pairs."""
    X = np.asarray(X, dtype=object)
    if X.ndim == 1 and len(X) == 2:
        X = X.reshape(1, 2)
    if X.ndim != 2 or X.shape[1] != 2:
        raise ValueError("expected an array of shape (n, 2) of (D, r) pairs, got shape %s" % (X.shape,))
    try:
        return [(int(D), int(r)) for D, r in X]
    except (TypeError, ValueError):
        raise ValueError("indices must be integers") from None


def _as_symbol(X):
    if isinstance(X, ModularSymbol):
        return X
    if isinstance(X, os.PathLike):
        return read_symbol(X)
    if isinstance(X, str):
        return parse_symbol(X) if "\n" in X or "=" in X else read_symbol(X)
    raise TypeError("expected a ModularSymbol, symbol text or a path, got %r" % type(X).__name__)


class JacobiCoefficients(BaseEstimator):
    """Coefficient table of the Jacobi form attached to a modular symbol.

    ``fit(symbol)`` computes ``table_`` for ``0 < |D| <= dmax``;
    ``predict(X)`` looks up rows of ``(D, r)`` (any ``r``, reduced mod
    ``2m``), returning an object array of exact values with ``None`` for NA.
    """

    def __init__(self, pair=None, dmax=50, normalize="primitive", fill_na=False, workers=1):
        self.pair = pair
        self.dmax = dmax
        self.normalize = normalize
        self.fill_na = fill_na
        self.workers = workers

    def fit(self, X, y=None):
        sigma = _as_symbol(X)
        pair = self.pair
        if pair is not None and not isinstance(pair, AdmissiblePair):
            pair = AdmissiblePair(*pair)
        self.table_ = batch_table(sigma, pair, int(self.dmax), workers=self.workers,
                                  fill_na=self.fill_na, normalize=self.normalize)
        self.pair_ = self.table_.pair
        self.symbol_ = sigma
        return self

    def predict(self, X):
        check_is_fitted(self, "table_")
        out = []
        for D, r in check_indices(X):
            try:
                out.append(self.table_.get(D, r))
            except NotApplicable:
                out.append(None)
        return np.array(out, dtype=object)

    def transform(self, X):
        return self.predict(X).reshape(-1, 1)

    def lift(self, n_max, pair=None):
        """q-expansion of the lift and its Hecke consistency report."""
        check_is_fitted(self, "table_")
        pair = self.pair_ if pair is None else (pair if isinstance(pair, AdmissiblePair) else AdmissiblePair(*pair))
        expansion = shimura_lift(self.table_, pair, n_max)
        return expansion, eigen_consistency(expansion, self.table_.k, self.table_.m)

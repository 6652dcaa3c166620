"""scikit-learn style wrapper around the cone computation.

``fit`` computes the cone (and optionally the Hilbert basis) for a catalog
pair; ``predict`` tests membership of weight pairs in the cone and
``transform`` returns the slack of every facet inequality.  Rows of ``X``
are concatenated fundamental-weight coordinates ``(nu, nuhat)``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .branching import branch_multiplicity
from .embeddings import builtin_pair
from .exceptions import DimensionError, UnknownPair
from .pipeline import check_saturation, compute_cone


def check_pair_name(name) -> str:
    """Validate a catalog name and return it unchanged."""
    if not isinstance(name, str) or not name:
        raise UnknownPair(repr(name))
    builtin_pair(name)
    return name


def check_weight_array(X, n_features: int) -> np.ndarray:
    """Coerce X to a 2-D integer array with the expected number of columns."""
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != n_features:
        raise DimensionError(f"expected rows of length {n_features}, got shape {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        if isinstance(v, (bool, np.bool_)) or int(v) != v:
            raise DimensionError(f"non-integer entry {v!r}")
        out[idx] = int(v)
    return out


class LRConeEstimator(TransformerMixin, BaseEstimator):
    """Branching cone of a catalog pair as a fitted model.

    Parameters
    ----------
    pair : catalog name such as ``"sl3_g2"`` or ``"sp_sl(3)"``.
    seed : run seed for the Levi-element draws.
    max_attempts : initial attempt budget per candidate.
    allow_long : permit the long-running verifications and Hilbert bases.
    hilbert : also compute the Hilbert basis and saturation verdict.
    """

    def __init__(self, pair="sl3_g2", seed=0, max_attempts=5, allow_long=False, hilbert=False):
        self.pair = pair
        self.seed = seed
        self.max_attempts = max_attempts
        self.allow_long = allow_long
        self.hilbert = hilbert

    def fit(self, X=None, y=None):
        check_pair_name(self.pair)
        self.pair_ = builtin_pair(self.pair)
        self.report_ = compute_cone(self.pair_, self.seed, self.max_attempts, allow_long=self.allow_long)
        self.facets_ = np.array([list(f.coeffs) for f in self.report_.facets], dtype=object)
        self.rays_ = np.array([list(r) for r in self.report_.rays], dtype=object)
        self.n_features_in_ = self.pair_.g.rank + self.pair_.ghat.rank
        self.saturation_ = None
        if self.hilbert:
            self.saturation_ = check_saturation(self.pair_, self.seed, self.allow_long, self.max_attempts, cone=self.report_)
            self.hilbert_basis_ = np.array([list(h) for h in self.saturation_.hilbert], dtype=object)
        return self

    def transform(self, X):
        """Slack -a.x >= 0 of each facet row a (non-negative inside the cone)."""
        check_is_fitted(self, "facets_")
        X = check_weight_array(X, self.n_features_in_)
        return -(X.dot(self.facets_.T))

    def predict(self, X):
        """1 for points of the cone, 0 otherwise."""
        slack = self.transform(X)
        return np.array([int(all(s >= 0 for s in row)) for row in slack])

    def multiplicity(self, X):
        """Branching multiplicity of each (nu, nuhat) row."""
        check_is_fitted(self, "pair_")
        X = check_weight_array(X, self.n_features_in_)
        r = self.pair_.g.rank
        return np.array([branch_multiplicity(self.pair_, tuple(x[:r]), tuple(x[r:])) for x in X])
